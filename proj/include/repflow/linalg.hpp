#pragma once

#include <vector>

#include "repflow/complex_matrix.hpp"

namespace repflow {

// Wrapper certifying ||M - M*||_F <= 1e-12 * (1 + ||M||_F).
// Construction validates; throws NonHermitianInput past the tolerance.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m);

  static HermitianMatrix zero(int n) { return HermitianMatrix(ComplexMatrix(n)); }

  const ComplexMatrix& matrix() const { return m_; }
  int size() const { return m_.size(); }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  friend HermitianMatrix operator*(double s, const HermitianMatrix& x) {
    return HermitianMatrix(Complex(s, 0.0) * x.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& x) { return -1.0 * x; }

 private:
  ComplexMatrix m_;
};

// Eigendecomposition of a Hermitian matrix: M = basis * diag(eigenvalues) * basis*.
// Eigenvalues ascending; basis unitary; each column's first significant entry
// is phase-normalized to be real positive, so the output is deterministic.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix basis;
};

// Cyclic Jacobi with complex rotations. Off-diagonal tolerance
// 1e-13 * ||M||_F, at most 40 sweeps; throws ConvergenceFailure past that.
EigenSystem hermitian_eig(const HermitianMatrix& m);

// exp(X) for Hermitian X; the result is Hermitian positive definite.
ComplexMatrix exp_hermitian(const HermitianMatrix& x);

// Inverse of exp_hermitian on the positive-definite cone. Throws
// NotPositiveDefinite when min eigenvalue <= 1e-14 * max eigenvalue
// (an error, never a clamp), NonHermitianInput when P is not Hermitian.
HermitianMatrix log_posdef(const ComplexMatrix& p);

// P^t := exp(t * log P) for Hermitian positive definite P, any real t.
ComplexMatrix posdef_power(const ComplexMatrix& p, double t);

struct PolarFactors {
  ComplexMatrix unitary;   // U with U*U = I
  ComplexMatrix positive;  // P Hermitian positive definite, g = U P
};

// Polar factorization through the spectrum of g*g (one kernel serves all the
// analytic functions). Throws SingularInput when cond(g) exceeds 1e12.
PolarFactors polar_decompose(const ComplexMatrix& g);

// tr(A* B); the inner product making the conjugation action's compact
// subgroup act by isometries.
Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// sqrt(lambda_max / lambda_min) of g*g. Returns +inf for a numerically
// singular g; estimates saturate around 1e8 in double precision, so the
// 1e12 gates in callers reject conservatively.
double condition_number(const ComplexMatrix& g);

}  // namespace repflow
