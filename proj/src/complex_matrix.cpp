#include "repflow/complex_matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace repflow {

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
  if (n < 0) throw SizeMismatch("matrix size must be non-negative");
  a_.assign(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.size(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(int n, const std::vector<Complex>& entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw SizeMismatch("entry count does not match matrix size");
  ComplexMatrix m(n);
  m.a_ = entries;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_imag() const {
  double m = 0.0;
  for (const Complex& z : a_) m = std::max(m, std::abs(z.imag()));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

void ComplexMatrix::require_same_size(const ComplexMatrix& other) const {
  if (n_ != other.n_) throw SizeMismatch("matrix sizes differ");
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_size(rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_size(rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : a_) z *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  require_same_size(rhs);
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < n_; ++k) acc += (*this)(i, k) * rhs(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

Complex determinant(const ComplexMatrix& m) {
  const int n = m.size();
  ComplexMatrix a = m;
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int row = col + 1; row < n; ++row) {
      const double cand = std::abs(a(row, col));
      if (cand > best) {
        best = cand;
        pivot = row;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int row = col + 1; row < n; ++row) {
      const Complex f = a(row, col) / a(col, col);
      for (int j = col; j < n; ++j) a(row, j) -= f * a(col, j);
    }
  }
  return det;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  const int n = m.size();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int row = col + 1; row < n; ++row) {
      const double cand = std::abs(a(row, col));
      if (cand > best) {
        best = cand;
        pivot = row;
      }
    }
    if (best < 1e-300) throw SingularInput("matrix is numerically singular");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Complex d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const Complex f = a(row, col);
      if (f == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) {
        a(row, j) -= f * a(col, j);
        inv(row, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace repflow
