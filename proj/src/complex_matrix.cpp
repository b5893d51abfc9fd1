#include "wfsim/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "wfsim/kernels.hpp"

namespace wfsim {

namespace {
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error(std::string(op) + ": shape mismatch " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " vs " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
}
}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, cd{0.0, 0.0}) {
  if (rows == 0 || cols == 0) throw input_error("matrix: zero dimension");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cd> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw input_error("matrix: zero dimension");
  if (a_.size() != rows * cols)
    throw input_error("matrix: entry count " + std::to_string(a_.size()) +
                      " does not match " + std::to_string(rows) + "x" +
                      std::to_string(cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cd{1.0, 0.0};
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "add");
  kernels::active().axpy(a_.size(), cd{1.0, 0.0}, o.data(), data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "sub");
  kernels::active().axpy(a_.size(), cd{-1.0, 0.0}, o.data(), data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cd s) {
  kernels::active().scale(a_.size(), s, data());
  return *this;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = std::conj(a_[i]);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

cd ComplexMatrix::trace() const {
  if (!is_square()) throw input_error("trace: matrix not square");
  cd t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cd& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  require_same_shape(*this, o, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i)
    m = std::max(m, std::abs(a_[i] - o.a_[i]));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
        return false;
  return true;
}

bool ComplexMatrix::all_finite() const {
  for (const cd& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

void ComplexMatrix::require_finite(const char* what) const {
  if (!all_finite())
    throw input_error(std::string(what) + ": non-finite entry");
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(cd s, ComplexMatrix a) {
  a *= s;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw input_error("mul: inner dimensions " + std::to_string(a.cols()) +
                      " vs " + std::to_string(b.rows()));
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active().gemm_acc(a.rows(), a.cols(), b.cols(), a.data(), b.data(),
                             c.data());
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  const auto& k = kernels::active();
  // Each (i,j) entry of a scales a full row of b into the matching block
  // row; the axpy into zeroed storage is a scaled contiguous copy.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cd aij = a(i, j);
      if (aij == cd{0.0, 0.0}) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        k.axpy(b.cols(), aij, b.data() + r * b.cols(),
               c.data() + (i * b.rows() + r) * c.cols() + j * b.cols());
    }
  return c;
}

ComplexMatrix outer(const std::vector<cd>& v, const std::vector<cd>& w) {
  if (v.empty() || w.empty()) throw input_error("outer: empty vector");
  ComplexMatrix m(v.size(), w.size());
  const auto& k = kernels::active();
  std::vector<cd> wconj(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) wconj[j] = std::conj(w[j]);
  for (std::size_t i = 0; i < v.size(); ++i)
    k.axpy(w.size(), v[i], wconj.data(), m.data() + i * w.size());
  return m;
}

}  // namespace wfsim
