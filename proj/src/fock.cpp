#include "sqjc/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sqjc {

namespace {

void check_same_shape(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.basis != b.basis || a.dim() != b.dim()) {
    throw std::invalid_argument("operator basis/dimension mismatch");
  }
}

// Absolute tolerance scaled by the matrix magnitude.
double hermiticity_defect(const Matrix& m) {
  return max_abs_diff(m, m.adjoint());
}

}  // namespace

FockSpace::FockSpace(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) {
    throw std::invalid_argument("Fock cutoff must be nonnegative");
  }
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  check_same_shape(a, b);
  return {a.mat + b.mat, a.basis};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  check_same_shape(a, b);
  return {a.mat - b.mat, a.basis};
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  check_same_shape(a, b);
  return {a.mat * b.mat, a.basis};
}

OperatorMatrix operator*(double s, const OperatorMatrix& a) {
  return {s * a.mat, a.basis};
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) {
  return {s * a.mat, a.basis};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  check_same_shape(a, b);
  return {a.mat * b.mat - b.mat * a.mat, a.basis};
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

OperatorMatrix identity(const FockSpace& space, Basis basis) {
  const int d = basis == Basis::Oscillator ? space.osc_dim() : space.joint_dim();
  return {Matrix::Identity(d, d), basis};
}

OperatorMatrix annihilation(const FockSpace& space) {
  const int d = space.osc_dim();
  Matrix a = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return {std::move(a), Basis::Oscillator};
}

OperatorMatrix creation(const FockSpace& space) {
  return annihilation(space).adjoint();
}

OperatorMatrix number_op(const FockSpace& space) {
  const int d = space.osc_dim();
  Matrix n = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) n(i, i) = static_cast<double>(i);
  return {std::move(n), Basis::Oscillator};
}

PauliOps pauli_ops() {
  PauliOps p;
  const Complex i(0.0, 1.0);
  p.id << 1, 0, 0, 1;
  p.sz << -1, 0, 0, 1;        // ground at index 0, excited at index 1
  p.sp << 0, 0, 1, 0;         // |excited><ground|
  p.sm << 0, 1, 0, 0;
  p.sx = p.sp + p.sm;
  p.sy = -i * (p.sp - p.sm);  // sp = (sx + i sy)/2
  return p;
}

OperatorMatrix tensor(const OperatorMatrix& field_op, const SpinMatrix& spin_op) {
  if (field_op.basis != Basis::Oscillator) {
    throw std::invalid_argument("tensor: field operator must be oscillator-only");
  }
  const int d = field_op.dim();
  Matrix out = Matrix::Zero(2 * d, 2 * d);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const Complex f = field_op.mat(n, m);
      if (f == Complex(0.0, 0.0)) continue;
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          out(2 * n + s, 2 * m + t) = f * spin_op(s, t);
        }
      }
    }
  }
  return {std::move(out), Basis::Joint};
}

EigenResult herm_eigen(const OperatorMatrix& m) {
  const double tol = 1e-10 * std::max(1.0, max_abs(m.mat));
  if (hermiticity_defect(m.mat) > tol) {
    throw std::invalid_argument("herm_eigen: input not Hermitian within tolerance");
  }
  const Matrix sym = 0.5 * (m.mat + m.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eigen: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

OperatorMatrix unitary_exp(const OperatorMatrix& k) {
  const double tol = 1e-10 * std::max(1.0, max_abs(k.mat));
  if (max_abs(k.mat + k.mat.adjoint()) > tol) {
    throw std::invalid_argument("unitary_exp: input not anti-Hermitian within tolerance");
  }
  // iK is Hermitian; exp(K) = V exp(-i diag) V^dagger.
  const Complex i(0.0, 1.0);
  EigenResult eig = herm_eigen({i * k.mat, k.basis});
  const int d = k.dim();
  Eigen::VectorXcd phases(d);
  for (int j = 0; j < d; ++j) {
    phases(j) = std::exp(-i * eig.values(j));
  }
  Matrix u = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  return {std::move(u), k.basis};
}

double interior_block_distance(const OperatorMatrix& m1, const OperatorMatrix& m2,
                               int k) {
  check_same_shape(m1, m2);
  const int per_level = m1.basis == Basis::Joint ? 2 : 1;
  const int block = per_level * k;
  if (k < 1 || block > m1.dim()) {
    throw std::invalid_argument("interior_block_distance: k out of range");
  }
  return max_abs(m1.mat.topLeftCorner(block, block) -
                 m2.mat.topLeftCorner(block, block));
}

int default_interior_levels(const FockSpace& space) {
  return std::max(1, space.cutoff() / 2);
}

}  // namespace sqjc
