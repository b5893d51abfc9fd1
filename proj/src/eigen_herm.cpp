#include "wfsim/eigen_herm.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wfsim {

namespace {

// Deterministic gauge: rotate each column's phase so its first entry with
// modulus above the cutoff is real and positive. Degenerate subspaces then
// admit a well-defined lexicographic tie-break.
void gauge_fix_column(Eigen::MatrixXcd& v, Eigen::Index col) {
  constexpr double cutoff = 1e-12;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const std::complex<double> e = v(i, col);
    if (std::abs(e) > cutoff) {
      v.col(col) *= std::conj(e) / std::abs(e);
      return;
    }
  }
}

bool column_real_less(const Eigen::MatrixXcd& v, Eigen::Index a,
                      Eigen::Index b) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double ra = v(i, a).real(), rb = v(i, b).real();
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw input_error("hermitian_eigen: matrix not square");
  m.require_finite("hermitian_eigen");
  if (!m.is_hermitian(tolerances().herm))
    throw input_error("hermitian_eigen: matrix not Hermitian within 1e-10");

  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) em(i, j) = m(i, j);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  if (solver.info() != Eigen::Success)
    throw numerical_error("hermitian_eigen: eigensolver did not converge");

  Eigen::VectorXd vals = solver.eigenvalues();
  Eigen::MatrixXcd vecs = solver.eigenvectors();
  for (Eigen::Index c = 0; c < n; ++c) gauge_fix_column(vecs, c);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (vals(a) != vals(b)) return vals(a) > vals(b);  // descending
    return column_real_less(vecs, a, b);
  });

  EigenSystem out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = ComplexMatrix(m.rows(), m.rows());
  for (std::size_t c = 0; c < out.values.size(); ++c) {
    out.values[c] = vals(order[c]);
    for (Eigen::Index r = 0; r < n; ++r)
      out.vectors(static_cast<std::size_t>(r), c) = vecs(r, order[c]);
  }

  // Reconstruction check: V diag(λ) V† must reproduce the input.
  ComplexMatrix scaled = out.vectors;
  for (std::size_t c = 0; c < out.values.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      scaled(r, c) *= out.values[c];
  const ComplexMatrix recon = scaled * out.vectors.adjoint();
  if (recon.max_abs_diff(m) > tolerances().recon)
    throw numerical_error(
        "hermitian_eigen: reconstruction error exceeds tolerance");
  return out;
}

double schatten1(const ComplexMatrix& hermitian) {
  const EigenSystem es = hermitian_eigen(hermitian);
  double sum = 0.0;
  for (double v : es.values) sum += std::abs(v);
  return sum;
}

}  // namespace wfsim
