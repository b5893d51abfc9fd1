#include "wfsim/channels.hpp"

#include <cmath>

namespace wfsim {

KrausChannel KrausChannel::from_kraus(std::size_t dim,
                                      std::vector<ComplexMatrix> kraus) {
  if (dim < 2) throw input_error("channel: dimension < 2");
  if (kraus.empty()) throw input_error("channel: no Kraus operators");
  ComplexMatrix sum(dim, dim);
  for (const auto& k : kraus) {
    if (k.rows() != dim || k.cols() != dim)
      throw input_error("channel: Kraus operator of wrong dimension");
    k.require_finite("channel");
    sum += k.adjoint() * k;
  }
  if (sum.max_abs_diff(ComplexMatrix::identity(dim)) > 1e-9)
    throw input_error("channel: Kraus completeness violated beyond 1e-9");
  return KrausChannel{dim, std::move(kraus)};
}

KrausChannel make_channel(
    ChannelKind kind, std::size_t dim, double strength,
    const std::optional<std::vector<std::vector<cd>>>& basis,
    const std::optional<std::vector<ComplexMatrix>>& block_projectors) {
  if (dim < 2) throw input_error("make_channel: dimension < 2");
  if (!(strength >= 0.0 && strength <= 1.0))
    throw input_error("make_channel: strength outside [0,1]");

  std::vector<ComplexMatrix> ops;
  const ComplexMatrix eye = ComplexMatrix::identity(dim);
  switch (kind) {
    case ChannelKind::identity:
      ops.push_back(eye);
      break;
    case ChannelKind::dephasing: {
      // ρ → (1−s)ρ + s Σ_k P_k ρ P_k: off-diagonal (cross-projector)
      // elements shrink by (1−s), the projected parts survive.
      ops.push_back(cd{std::sqrt(1.0 - strength)} * eye);
      if (block_projectors) {
        ComplexMatrix check(dim, dim);
        for (const auto& p : *block_projectors) {
          if (p.rows() != dim || p.cols() != dim)
            throw input_error("make_channel: projector of wrong dimension");
          if (p.max_abs_diff(p * p) > 1e-10 || !p.is_hermitian(1e-10))
            throw input_error("make_channel: block is not a projector");
          check += p;
          ops.push_back(cd{std::sqrt(strength)} * p);
        }
        if (check.max_abs_diff(eye) > 1e-9)
          throw input_error("make_channel: projectors must sum to identity");
      } else {
        std::vector<std::vector<cd>> vecs;
        if (basis) {
          vecs = *basis;
          if (vecs.size() != dim)
            throw input_error("make_channel: basis must span the dimension");
        } else {
          vecs.assign(dim, std::vector<cd>(dim, cd{0.0}));
          for (std::size_t i = 0; i < dim; ++i) vecs[i][i] = cd{1.0};
        }
        for (const auto& v : vecs) {
          if (v.size() != dim)
            throw input_error("make_channel: basis vector of wrong dimension");
          ops.push_back(cd{std::sqrt(strength)} * outer(v, v));
        }
      }
      break;
    }
    case ChannelKind::depolarizing: {
      // ρ → (1−s)ρ + s·I/dim via the |i><j| family.
      ops.push_back(cd{std::sqrt(1.0 - strength)} * eye);
      const double w = std::sqrt(strength / static_cast<double>(dim));
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          ComplexMatrix k(dim, dim);
          k(i, j) = cd{w};
          ops.push_back(std::move(k));
        }
      break;
    }
  }
  return KrausChannel::from_kraus(dim, std::move(ops));
}

ComplexMatrix apply_channel_raw(const ComplexMatrix& rho,
                                const KrausChannel& ch) {
  if (rho.rows() != ch.dim || rho.cols() != ch.dim)
    throw input_error("apply_channel: state dimension mismatch");
  ComplexMatrix out(ch.dim, ch.dim);
  for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            const std::string& wire) {
  const SubsystemLayout& layout = rho.layout();
  const std::size_t pos = layout.index_of(wire);
  if (layout.at(pos).dim != ch.dim)
    throw input_error("apply_channel: wire dimension does not match channel");

  // Embed each Kraus operator as I⊗K⊗I by digit bookkeeping and accumulate.
  const std::size_t d = layout.total_dim();
  ComplexMatrix out(d, d);
  for (const auto& k : ch.kraus) {
    ComplexMatrix kr(d, d);  // (I⊗K⊗I) ρ
    for (std::size_t r = 0; r < d; ++r) {
      auto rd = layout.digits(r);
      for (std::size_t w = 0; w < ch.dim; ++w) {
        const cd amp = k(rd[pos], w);
        if (amp == cd{0.0}) continue;
        auto sd = rd;
        sd[pos] = w;
        const std::size_t src = layout.flat(sd);
        for (std::size_t c = 0; c < d; ++c) kr(r, c) += amp * rho.mat()(src, c);
      }
    }
    // (…) (I⊗K⊗I)† from the right.
    for (std::size_t c = 0; c < d; ++c) {
      auto cdg = layout.digits(c);
      for (std::size_t w = 0; w < ch.dim; ++w) {
        const cd amp = std::conj(k(cdg[pos], w));
        if (amp == cd{0.0}) continue;
        auto sd = cdg;
        sd[pos] = w;
        const std::size_t src = layout.flat(sd);
        for (std::size_t r = 0; r < d; ++r) out(r, c) += kr(r, src) * amp;
      }
    }
  }
  return DensityMatrix(layout, std::move(out));
}

MemoryPair memory_pair(double epsilon, std::size_t d_A) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw input_error("memory_pair: epsilon outside [0,1]");
  if (d_A < 2) throw input_error("memory_pair: dimension < 2");
  SubsystemLayout layout{{{"A", d_A}}};
  std::vector<cd> xi(d_A, cd{0.0}), zeta(d_A, cd{0.0});
  xi[0] = cd{1.0};
  // The orthogonal component sits on the first "down" vector so that the
  // up/down question separates the records perfectly at ε = 0.
  zeta[0] = cd{epsilon};
  zeta[d_A / 2] = cd{std::sqrt(std::max(0.0, 1.0 - epsilon * epsilon))};
  return MemoryPair{PureState{layout, std::move(xi)},
                    PureState{layout, std::move(zeta)}};
}

ComplexMatrix up_projector(std::size_t d_A) {
  if (d_A < 2) throw input_error("up_projector: dimension < 2");
  ComplexMatrix p(d_A, d_A);
  for (std::size_t i = 0; i < d_A / 2; ++i) p(i, i) = cd{1.0};
  return p;
}

ComplexMatrix down_projector(std::size_t d_A) {
  if (d_A < 2) throw input_error("down_projector: dimension < 2");
  ComplexMatrix p(d_A, d_A);
  for (std::size_t i = d_A / 2; i < d_A; ++i) p(i, i) = cd{1.0};
  return p;
}

}  // namespace wfsim
