#pragma once

#include <complex>
#include <vector>

#include "repflow/errors.hpp"

namespace repflow {

using Complex = std::complex<double>;

// Dense square complex matrix with value semantics, row-major storage.
// Sized for the small-n regime (n <= 16); no attempt at blocking or views.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n);

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);
  // Row-major entries; throws SizeMismatch unless entries.size() == n*n.
  static ComplexMatrix from_rows(int n, const std::vector<Complex>& entries);

  int size() const { return n_; }

  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  ComplexMatrix adjoint() const;  // conjugate transpose
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs_imag() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) {
    lhs *= s;
    return lhs;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) {
    rhs *= s;
    return rhs;
  }
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

 private:
  void require_same_size(const ComplexMatrix& other) const;

  int n_ = 0;
  std::vector<Complex> a_;
};

// Frobenius distance ||a - b||_F.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

// LU with partial pivoting.
Complex determinant(const ComplexMatrix& m);

// Gauss-Jordan with partial pivoting; throws SingularInput on a zero pivot.
ComplexMatrix inverse(const ComplexMatrix& m);

}  // namespace repflow
