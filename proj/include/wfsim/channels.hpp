#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfsim/density.hpp"

namespace wfsim {

// CPTP map as Kraus operators. Construction checks Σ K†K = I within 1e-9.
struct KrausChannel {
  std::size_t dim;
  std::vector<ComplexMatrix> kraus;

  static KrausChannel from_kraus(std::size_t dim,
                                 std::vector<ComplexMatrix> kraus);
};

enum class ChannelKind { identity, dephasing, depolarizing };

// Dephasing scales off-diagonal elements by (1-strength) in the given basis;
// when `block_projectors` is supplied, coherences are suppressed between
// blocks instead of between individual basis vectors (used for the up/down
// question on the memory). Depolarizing maps ρ to (1-s)ρ + s·I/dim.
KrausChannel make_channel(ChannelKind kind, std::size_t dim, double strength,
                          const std::optional<std::vector<std::vector<cd>>>&
                              basis = std::nullopt,
                          const std::optional<std::vector<ComplexMatrix>>&
                              block_projectors = std::nullopt);

// ρ → Σ (I⊗K⊗I) ρ (I⊗K⊗I)† on the given wire.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            const std::string& wire);

// Applies the channel to a bare d-dimensional operator (no layout), used for
// the single-subsystem memory states.
ComplexMatrix apply_channel_raw(const ComplexMatrix& rho,
                                const KrausChannel& ch);

// Memory record pair on the d_A-dimensional subsystem A: ξ = e₀ lives in the
// "up" half (first ⌊d_A/2⌋ basis vectors), and the component of ζ orthogonal
// to ξ is placed on the first "down" vector e_{⌊d_A/2⌋}, so |<ξ|ζ>| = ε and
// ε = 0 gives records the up/down question distinguishes perfectly.
struct MemoryPair {
  PureState xi;
  PureState zeta;
};
MemoryPair memory_pair(double epsilon, std::size_t d_A);

// The up/down projectors for dimension d_A (first ⌊d_A/2⌋ vs the rest).
ComplexMatrix up_projector(std::size_t d_A);
ComplexMatrix down_projector(std::size_t d_A);

}  // namespace wfsim
