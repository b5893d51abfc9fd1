#include "wfsim/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "wfsim/kernels.hpp"

namespace wfsim {

namespace {

void require_covering(const DensityMatrix& rho, const Bipartition& bip,
                      const char* op) {
  std::vector<std::string> all = bip.left;
  all.insert(all.end(), bip.right.begin(), bip.right.end());
  for (const auto& l : all)
    if (!rho.layout().has(l))
      throw input_error(std::string(op) + ": unknown label '" + l + "'");
  if (all.size() != rho.layout().count())
    throw input_error(std::string(op) +
                      ": bipartition must cover every subsystem");
}

}  // namespace

double negativity(const DensityMatrix& rho, const Bipartition& bip) {
  require_covering(rho, bip, "negativity");
  const ComplexMatrix pt = partial_transpose(rho, bip.left);
  // (‖ρ^T‖₁−1)/2; the clamp only absorbs −1e-17-scale floating point noise
  // on exactly-PPT states.
  return std::max(0.0, (schatten1(pt) - 1.0) / 2.0);
}

double negativity(const DensityMatrix& rho, const std::string& bip) {
  return negativity(rho, parse_bipartition(bip, rho.layout()));
}

bool is_ppt(const DensityMatrix& rho, const Bipartition& bip) {
  require_covering(rho, bip, "is_ppt");
  const ComplexMatrix pt = partial_transpose(rho, bip.left);
  const EigenSystem es = hermitian_eigen(pt);
  return es.values.back() >= tolerances().psd;
}

bool is_ppt(const DensityMatrix& rho, const std::string& bip) {
  return is_ppt(rho, parse_bipartition(bip, rho.layout()));
}

std::pair<Witness, Witness> build_witnesses(std::size_t d_A,
                                            const ComplexMatrix& up,
                                            const ComplexMatrix& down) {
  if (d_A < 2) throw input_error("build_witnesses: dimension < 2");
  if (up.rows() != d_A || down.rows() != d_A || !up.is_square() ||
      !down.is_square())
    throw input_error("build_witnesses: projector dimension mismatch");
  for (const ComplexMatrix* p : {&up, &down}) {
    if (!p->is_hermitian(tolerances().herm) ||
        p->max_abs_diff((*p) * (*p)) > 1e-10)
      throw input_error("build_witnesses: operator is not a projector");
  }
  if ((up + down).max_abs_diff(ComplexMatrix::identity(d_A)) > 1e-10)
    throw input_error("build_witnesses: projectors must sum to identity");
  if ((up * down).max_abs() > 1e-10)
    throw input_error("build_witnesses: projectors must be orthogonal");

  // |Φ₊> = (|01>+|10>)/√2 on (a,t), then the t-side partial transpose.
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cd> phi(4, cd{0.0});
  phi[1] = cd{s};
  phi[2] = cd{s};
  SubsystemLayout at{{{"a", 2}, {"t", 2}}};
  const ComplexMatrix bell_pt =
      partial_transpose(outer(phi, phi), at, {"t"});

  SubsystemLayout full{{{"a", 2}, {"t", 2}, {"A", d_A}}};
  const std::vector<std::string> parts{"aA|t", "a|tA"};
  Witness w1{kron(bell_pt, up), full, parts};
  Witness w2{kron(bell_pt, down), full, parts};
  return {std::move(w1), std::move(w2)};
}

double witness_expectation(const DensityMatrix& rho, const Witness& w) {
  if (!(rho.layout() == w.layout))
    throw input_error("witness_expectation: layout mismatch");
  // Tr[ρW] = Σ_i <row_i(W), row_i(ρ)> with the W rows conjugated, since W is
  // Hermitian; both rows are contiguous so this stays in the dot kernel.
  const std::size_t d = rho.dim();
  cd acc{0.0};
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < d; ++i)
    acc += k.dotc(d, w.op.data() + i * d, rho.mat().data() + i * d);
  if (std::abs(acc.imag()) > 1e-9)
    throw numerical_error("witness_expectation: non-real expectation");
  return acc.real();
}

double witness_violation(const DensityMatrix& rho, const Witness& w1,
                         const Witness& w2) {
  const double e1 = witness_expectation(rho, w1);
  const double e2 = witness_expectation(rho, w2);
  return std::max(0.0, -std::min(e1, e2));
}

double trace_distance(const ComplexMatrix& tau, const ComplexMatrix& upsilon) {
  if (tau.rows() != upsilon.rows() || tau.cols() != upsilon.cols())
    throw input_error("trace_distance: dimension mismatch");
  return 0.5 * schatten1(tau - upsilon);
}

void validate_povm(const POVM& povm, std::size_t dim) {
  if (povm.effects.empty()) throw input_error("povm: no effects");
  ComplexMatrix sum(dim, dim);
  for (const auto& e : povm.effects) {
    if (e.rows() != dim || e.cols() != dim)
      throw input_error("povm: effect dimension mismatch");
    e.require_finite("povm");
    if (!e.is_hermitian(tolerances().herm))
      throw input_error("povm: effect not Hermitian");
    const EigenSystem es = hermitian_eigen(e);
    if (es.values.back() < tolerances().psd)
      throw input_error("povm: effect has a negative eigenvalue");
    sum += e;
  }
  if (sum.max_abs_diff(ComplexMatrix::identity(dim)) > 1e-9)
    throw input_error("povm: effects do not sum to identity within 1e-9");
}

POVM helstrom_povm(const ComplexMatrix& tau, const ComplexMatrix& upsilon) {
  if (tau.rows() != upsilon.rows() || tau.cols() != upsilon.cols())
    throw input_error("helstrom_povm: dimension mismatch");
  const std::size_t d = tau.rows();
  const EigenSystem es = hermitian_eigen(tau - upsilon);
  ComplexMatrix plus(d, d), minus(d, d);
  const auto& k = kernels::active();
  std::vector<cd> col(d), colconj(d);
  for (std::size_t c = 0; c < es.values.size(); ++c) {
    for (std::size_t r = 0; r < d; ++r) {
      col[r] = es.vectors(r, c);
      colconj[r] = std::conj(col[r]);
    }
    ComplexMatrix& target = es.values[c] >= 0.0 ? plus : minus;
    for (std::size_t r = 0; r < d; ++r)
      k.axpy(d, col[r], colconj.data(), target.data() + r * d);
  }
  return POVM{{std::move(plus), std::move(minus)}};
}

double povm_classical_distance(const ComplexMatrix& tau,
                               const ComplexMatrix& upsilon,
                               const POVM& povm) {
  if (tau.rows() != upsilon.rows() || tau.cols() != upsilon.cols())
    throw input_error("povm_classical_distance: dimension mismatch");
  validate_povm(povm, tau.rows());
  double acc = 0.0;
  for (const auto& e : povm.effects) {
    const cd pt = (e * tau).trace();
    const cd pu = (e * upsilon).trace();
    acc += std::abs(pt.real() - pu.real());
  }
  return 0.5 * acc;
}

bool supports_disjoint(const std::vector<ComplexMatrix>& states) {
  if (states.size() < 2)
    throw input_error("supports_disjoint: need at least two states");
  const std::size_t d = states.front().rows();
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(states.size());
  for (const auto& s : states) {
    if (s.rows() != d || s.cols() != d)
      throw input_error("supports_disjoint: dimension mismatch");
    const EigenSystem es = hermitian_eigen(s);
    ComplexMatrix p(d, d);
    const auto& k = kernels::active();
    std::vector<cd> col(d), colconj(d);
    for (std::size_t c = 0; c < es.values.size(); ++c) {
      if (es.values[c] <= 1e-9) continue;  // support cutoff
      for (std::size_t r = 0; r < d; ++r) {
        col[r] = es.vectors(r, c);
        colconj[r] = std::conj(col[r]);
      }
      for (std::size_t r = 0; r < d; ++r)
        k.axpy(d, col[r], colconj.data(), p.data() + r * d);
    }
    projectors.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      const cd overlap = (projectors[i] * projectors[j]).trace();
      if (std::abs(overlap) > 1e-9) return false;
    }
  return true;
}

}  // namespace wfsim
