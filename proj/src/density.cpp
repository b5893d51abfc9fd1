#include "wfsim/density.hpp"

#include <algorithm>
#include <cmath>

namespace wfsim {

void validate_pure(const PureState& psi) {
  if (psi.amplitudes.size() != psi.layout.total_dim())
    throw input_error("pure state: amplitude count does not match layout");
  double norm2 = 0.0;
  for (const cd& a : psi.amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw input_error("pure state: non-finite amplitude");
    norm2 += std::norm(a);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
    throw input_error("pure state: norm deviates from 1 beyond 1e-10");
}

DensityMatrix::DensityMatrix(SubsystemLayout layout, ComplexMatrix mat)
    : layout_(std::move(layout)), mat_(std::move(mat)) {
  if (!mat_.is_square() || mat_.rows() != layout_.total_dim())
    throw input_error("density: matrix side does not match layout dimension");
  mat_.require_finite("density");
  const Tolerances& tol = tolerances();
  if (!mat_.is_hermitian(tol.herm))
    throw input_error("density: not Hermitian within tolerance");
  if (std::abs(mat_.trace() - cd{1.0, 0.0}) > tol.trace)
    throw input_error("density: trace deviates from 1 beyond tolerance");
  const EigenSystem es = hermitian_eigen(mat_);
  if (es.values.back() < tol.psd)
    throw input_error("density: negative eigenvalue " +
                      std::to_string(es.values.back()) + " below tolerance");
}

DensityMatrix to_density(const PureState& psi) {
  validate_pure(psi);
  return DensityMatrix(psi.layout, outer(psi.amplitudes, psi.amplitudes));
}

namespace {

std::vector<std::size_t> indices_for(const SubsystemLayout& layout,
                                     const std::vector<std::string>& labels,
                                     const char* op) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) {
    if (!layout.has(l))
      throw input_error(std::string(op) + ": unknown label '" + l + "'");
    const std::size_t i = layout.index_of(l);
    if (std::find(idx.begin(), idx.end(), i) != idx.end())
      throw input_error(std::string(op) + ": label '" + l + "' repeats");
    idx.push_back(i);
  }
  return idx;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep) {
  const SubsystemLayout& layout = rho.layout();
  if (keep.empty()) throw input_error("partial_trace: empty keep set");
  std::vector<std::size_t> keep_idx = indices_for(layout, keep, "partial_trace");
  std::sort(keep_idx.begin(), keep_idx.end());  // original layout order

  std::vector<Subsystem> kept_subs;
  std::vector<std::size_t> traced_idx;
  for (std::size_t i = 0; i < layout.count(); ++i) {
    if (std::binary_search(keep_idx.begin(), keep_idx.end(), i))
      kept_subs.push_back(layout.at(i));
    else
      traced_idx.push_back(i);
  }
  SubsystemLayout out_layout{kept_subs};

  // Enumerate kept row/column digit tuples and sum over the traced diagonal.
  const std::size_t dk = out_layout.total_dim();
  std::size_t dt = 1;
  for (std::size_t i : traced_idx) dt *= layout.at(i).dim;

  ComplexMatrix out(dk, dk);
  std::vector<std::size_t> full_row(layout.count()), full_col(layout.count());
  for (std::size_t rk = 0; rk < dk; ++rk) {
    const auto rk_digits = out_layout.digits(rk);
    for (std::size_t ck = 0; ck < dk; ++ck) {
      const auto ck_digits = out_layout.digits(ck);
      cd sum{0.0, 0.0};
      for (std::size_t td = 0; td < dt; ++td) {
        // Decompose the traced index along traced subsystems.
        std::size_t rem = td;
        for (std::size_t i = traced_idx.size(); i-- > 0;) {
          const std::size_t d = layout.at(traced_idx[i]).dim;
          full_row[traced_idx[i]] = rem % d;
          full_col[traced_idx[i]] = rem % d;
          rem /= d;
        }
        for (std::size_t i = 0; i < keep_idx.size(); ++i) {
          full_row[keep_idx[i]] = rk_digits[i];
          full_col[keep_idx[i]] = ck_digits[i];
        }
        sum += rho.mat()(layout.flat(full_row), layout.flat(full_col));
      }
      out(rk, ck) = sum;
    }
  }
  return DensityMatrix(out_layout, std::move(out));
}

ComplexMatrix partial_transpose(const ComplexMatrix& mat,
                                const SubsystemLayout& layout,
                                const std::vector<std::string>& part) {
  if (!mat.is_square() || mat.rows() != layout.total_dim())
    throw input_error("partial_transpose: matrix side does not match layout");
  const std::vector<std::size_t> idx =
      indices_for(layout, part, "partial_transpose");

  // Pure entry relocation: swap the row/column digits of the listed
  // subsystems. Applying the same map twice is the identity bitwise.
  const std::size_t d = mat.rows();
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    auto rd = layout.digits(r);
    for (std::size_t c = 0; c < d; ++c) {
      auto cdg = layout.digits(c);
      auto rd2 = rd;
      for (std::size_t i : idx) std::swap(rd2[i], cdg[i]);
      out(layout.flat(rd2), layout.flat(cdg)) = mat(r, c);
      for (std::size_t i : idx) std::swap(cdg[i], rd2[i]);  // restore cdg
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                const std::vector<std::string>& part) {
  return partial_transpose(rho.mat(), rho.layout(), part);
}

DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                 const std::vector<std::string>& new_order) {
  const SubsystemLayout& layout = rho.layout();
  if (new_order.size() != layout.count())
    throw input_error("permute: order list must cover every label");
  const std::vector<std::size_t> src =
      indices_for(layout, new_order, "permute");

  std::vector<Subsystem> subs;
  subs.reserve(src.size());
  for (std::size_t i : src) subs.push_back(layout.at(i));
  SubsystemLayout out_layout{subs};

  const std::size_t d = layout.total_dim();
  ComplexMatrix out(d, d);
  std::vector<std::size_t> rd2(src.size()), cd2(src.size());
  for (std::size_t r = 0; r < d; ++r) {
    const auto rd = layout.digits(r);
    for (std::size_t c = 0; c < d; ++c) {
      const auto cdg = layout.digits(c);
      for (std::size_t i = 0; i < src.size(); ++i) {
        rd2[i] = rd[src[i]];
        cd2[i] = cdg[src[i]];
      }
      out(out_layout.flat(rd2), out_layout.flat(cd2)) = rho.mat()(r, c);
    }
  }
  return DensityMatrix(out_layout, std::move(out));
}

DensityMatrix sanitize(const DensityMatrix& rho) {
  const EigenSystem es = hermitian_eigen(rho.mat());
  std::vector<double> clamped = es.values;
  double tracesum = 0.0;
  for (double& v : clamped) {
    if (v < 0.0) {
      if (v < tolerances().psd)
        throw input_error("sanitize: eigenvalue below tolerance; refusing");
      v = 0.0;
    }
    tracesum += v;
  }
  if (tracesum <= 0.0) throw input_error("sanitize: zero spectrum");
  ComplexMatrix scaled = es.vectors;
  for (std::size_t c = 0; c < clamped.size(); ++c)
    for (std::size_t r = 0; r < scaled.rows(); ++r)
      scaled(r, c) *= clamped[c] / tracesum;
  return DensityMatrix(rho.layout(), scaled * es.vectors.adjoint());
}

}  // namespace wfsim
