#include "repflow/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace repflow {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 40;
constexpr double kPosdefCutoff = 1e-14;
constexpr double kMaxCondition = 1e12;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// basis * diag(d) * basis*
ComplexMatrix recompose(const ComplexMatrix& basis, const std::vector<double>& d) {
  const int n = basis.size();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += basis(i, k) * d[static_cast<std::size_t>(k)] * std::conj(basis(j, k));
      r(i, j) = acc;
    }
  }
  return r;
}

// Shared tail of log/power/polar: spectrum of a positive definite Hermitian
// matrix, rejecting eigenvalues at or below the relative cutoff.
EigenSystem posdef_spectrum(const ComplexMatrix& p) {
  EigenSystem es = hermitian_eig(HermitianMatrix(p));
  const double max_ev = es.eigenvalues.back();
  const double min_ev = es.eigenvalues.front();
  if (min_ev <= kPosdefCutoff * max_ev)
    throw NotPositiveDefinite("matrix is not positive definite");
  return es;
}

}  // namespace

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.all_finite()) throw NonHermitianInput("matrix has non-finite entries");
  const double asym = distance(m_, m_.adjoint());
  if (asym > kHermitianTol * (1.0 + m_.frobenius_norm()))
    throw NonHermitianInput("matrix is not Hermitian within tolerance");
}

EigenSystem hermitian_eig(const HermitianMatrix& input) {
  const int n = input.size();
  ComplexMatrix a = input.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Fold the (certified small) asymmetry so the sweeps see an exactly
  // Hermitian working copy.
  for (int i = 0; i < n; ++i) {
    a(i, i) = Complex(a(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
  }

  const double scale = input.matrix().frobenius_norm();
  const double off_tol = kJacobiOffTol * scale;
  // Rotations below this threshold cannot matter for the sweep-end check.
  const double skip_tol = n > 1 ? off_tol / (4.0 * n * n) : 0.0;

  bool converged = off_diagonal_norm(a) <= off_tol;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= skip_tol) continue;

        // Unitary pivot U: U(p,p)=e*c, U(p,q)=e*s, U(q,p)=-s, U(q,q)=c,
        // with e the phase of a(p,q); conjugating by diag(e,1) makes the
        // 2x2 block real and the classical rotation applies.
        const Complex e = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex ec = e * c;
        const Complex es = e * s;
        const Complex ecc = std::conj(e) * c;
        const Complex ecs = std::conj(e) * s;

        for (int k = 0; k < n; ++k) {  // columns: A <- A U
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * ec - akq * s;
          a(k, q) = akp * es + akq * c;
        }
        for (int k = 0; k < n; ++k) {  // rows: A <- U* A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = ecc * apk - s * aqk;
          a(q, k) = ecs * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int k = 0; k < n; ++k) {  // accumulate V <- V U
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * ec - vkq * s;
          v(k, q) = vkp * es + vkq * c;
        }
      }
    }
    converged = off_diagonal_norm(a) <= off_tol;
  }
  if (!converged) throw ConvergenceFailure("Jacobi sweeps exhausted");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.eigenvalues.resize(static_cast<std::size_t>(n));
  es.basis = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    es.eigenvalues[static_cast<std::size_t>(j)] = a(src, src).real();
    for (int i = 0; i < n; ++i) es.basis(i, j) = v(i, src);
  }

  // Phase-fix each column: first significant entry made real positive.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(es.basis(i, j));
      if (mag > 1e-12) {
        const Complex phase = std::conj(es.basis(i, j)) / mag;
        for (int k = 0; k < n; ++k) es.basis(k, j) *= phase;
        break;
      }
    }
  }
  return es;
}

ComplexMatrix exp_hermitian(const HermitianMatrix& x) {
  EigenSystem es = hermitian_eig(x);
  std::vector<double> d(es.eigenvalues.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::exp(es.eigenvalues[k]);
  return recompose(es.basis, d);
}

HermitianMatrix log_posdef(const ComplexMatrix& p) {
  EigenSystem es = posdef_spectrum(p);
  std::vector<double> d(es.eigenvalues.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::log(es.eigenvalues[k]);
  return HermitianMatrix(recompose(es.basis, d));
}

ComplexMatrix posdef_power(const ComplexMatrix& p, double t) {
  EigenSystem es = posdef_spectrum(p);
  std::vector<double> d(es.eigenvalues.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::exp(t * std::log(es.eigenvalues[k]));
  return recompose(es.basis, d);
}

PolarFactors polar_decompose(const ComplexMatrix& g) {
  const ComplexMatrix h = g.adjoint() * g;
  EigenSystem es = hermitian_eig(HermitianMatrix(h));
  const double max_ev = es.eigenvalues.back();
  const double min_ev = es.eigenvalues.front();
  if (min_ev <= 0.0 || max_ev / min_ev > kMaxCondition * kMaxCondition)
    throw SingularInput("matrix is singular or too ill-conditioned for polar factors");
  std::vector<double> sq(es.eigenvalues.size());
  std::vector<double> isq(es.eigenvalues.size());
  for (std::size_t k = 0; k < sq.size(); ++k) {
    sq[k] = std::sqrt(es.eigenvalues[k]);
    isq[k] = 1.0 / sq[k];
  }
  PolarFactors f;
  f.positive = recompose(es.basis, sq);
  f.unitary = g * recompose(es.basis, isq);
  return f;
}

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
  Complex s = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s;
}

double condition_number(const ComplexMatrix& g) {
  EigenSystem es = hermitian_eig(HermitianMatrix(g.adjoint() * g));
  const double max_ev = es.eigenvalues.back();
  const double min_ev = es.eigenvalues.front();
  if (max_ev == 0.0) return std::numeric_limits<double>::infinity();
  if (min_ev <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(max_ev / min_ev);
}

}  // namespace repflow
