#pragma once

#include <Eigen/Dense>

#include <complex>

namespace sqjc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using SpinMatrix = Eigen::Matrix2cd;

// Truncated single-mode Fock space, optionally joined with a two-level atom.
// Joint basis convention everywhere: |n, s> -> index 2n + s, with s = 0 the
// atomic ground state, s = 1 the excited state, n ascending.
class FockSpace {
 public:
  explicit FockSpace(int cutoff);

  int cutoff() const { return cutoff_; }
  int osc_dim() const { return cutoff_ + 1; }
  int joint_dim() const { return 2 * (cutoff_ + 1); }

 private:
  int cutoff_;
};

enum class Basis { Oscillator, Joint };

// Dense complex operator tagged with the basis it lives on.
struct OperatorMatrix {
  Matrix mat;
  Basis basis = Basis::Oscillator;

  int dim() const { return static_cast<int>(mat.rows()); }
  OperatorMatrix adjoint() const { return {mat.adjoint(), basis}; }
};

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(double s, const OperatorMatrix& a);
OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

OperatorMatrix identity(const FockSpace& space, Basis basis);

// Photon ladder: <n-1|a|n> = sqrt(n).
OperatorMatrix annihilation(const FockSpace& space);
OperatorMatrix creation(const FockSpace& space);
OperatorMatrix number_op(const FockSpace& space);

// Atomic operators in the s = 0 (ground) / s = 1 (excited) ordering:
// sz = diag(-1, +1), sp = |excited><ground|, sm = sp^dagger, sx = sp + sm.
struct PauliOps {
  SpinMatrix id, sz, sp, sm, sx, sy;
};
PauliOps pauli_ops();

// Kronecker product with the spin index fast, realizing the 2n + s layout.
OperatorMatrix tensor(const OperatorMatrix& field_op, const SpinMatrix& spin_op);

struct EigenResult {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // orthonormal columns, paired with values
};

// Hermitian eigendecomposition. Input must satisfy
// max_abs(M - M^dagger) <= 1e-10 * max(1, max_abs(M)); it is symmetrized
// as (M + M^dagger)/2 before solving.
EigenResult herm_eigen(const OperatorMatrix& m);

// exp(K) for anti-Hermitian K, via spectral decomposition of the Hermitian
// generator iK. Output is unitary up to eigensolver tolerance.
OperatorMatrix unitary_exp(const OperatorMatrix& k);

// Max-abs entrywise difference restricted to the leading k oscillator
// levels (a k x k block, or 2k x 2k on the joint basis). Excludes the
// truncation edge where conjugation identities break down.
double interior_block_distance(const OperatorMatrix& m1, const OperatorMatrix& m2,
                               int k);

// Default interior size floor(N/2) for truncation-sensitive comparisons.
int default_interior_levels(const FockSpace& space);

}  // namespace sqjc
