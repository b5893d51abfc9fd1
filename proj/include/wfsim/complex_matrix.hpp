#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "wfsim/errors.hpp"

namespace wfsim {

using cd = std::complex<double>;

// Dense complex matrix, row-major. Houses every operator in the model:
// gates, density matrices, memory states, witnesses, Kraus operators and
// POVM effects. Arithmetic routes through the kernel layer.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  cd* data() { return a_.data(); }
  const cd* data() const { return a_.data(); }
  const std::vector<cd>& entries() const { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cd s);

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;

  cd trace() const;
  double max_abs() const;  // largest entry modulus
  double max_abs_diff(const ComplexMatrix& o) const;
  bool is_hermitian(double tol) const;
  bool all_finite() const;

  // Throws input_error when any entry is NaN/Inf; `what` names the operand.
  void require_finite(const char* what) const;

 private:
  std::size_t rows_, cols_;
  std::vector<cd> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cd s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product: (a ⊗ b)[(i*rb+k),(j*cb+l)] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// |v><w| outer product (w conjugated).
ComplexMatrix outer(const std::vector<cd>& v, const std::vector<cd>& w);

}  // namespace wfsim
