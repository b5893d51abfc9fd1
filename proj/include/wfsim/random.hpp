#pragma once

#include <cstdint>
#include <vector>

#include "wfsim/channels.hpp"
#include "wfsim/metrics.hpp"
#include "wfsim/protocol.hpp"

namespace wfsim {

// Counter-based deterministic generator: draw k is a pure function of
// (seed, k), so streams are reproducible across platforms and runs and
// never depend on call-site ordering elsewhere in the process.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal, Box-Muller
  cd cgaussian();     // independent standard normals as re/im

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Normalized vector of independent complex Gaussians.
std::vector<cd> random_unit_vector(CounterRng& rng, std::size_t dim);

// Mixed state by tracing a pure state on a doubled space (rank defaults to
// dim when 0).
ComplexMatrix random_mixed(CounterRng& rng, std::size_t dim,
                           std::size_t rank = 0);

// Mixed state with real entries (Gram matrix of a real Gaussian square).
ComplexMatrix random_mixed_real(CounterRng& rng, std::size_t dim);

// Unitary from Gram-Schmidt on a complex Gaussian square matrix.
ComplexMatrix random_unitary(CounterRng& rng, std::size_t dim);

// Channel by random isometry compression: Kraus operators are the row
// blocks of an isometry obtained from a (dim·count)×dim Gaussian matrix.
KrausChannel random_channel(CounterRng& rng, std::size_t dim,
                            std::size_t kraus_count);

// Random POVM: Gram matrices G_i symmetrized by S^{-1/2} G_i S^{-1/2}.
POVM random_povm(CounterRng& rng, std::size_t dim, std::size_t n_effects);

// Random sandwich instance: `k` members with qubit pair states and
// dim_z-dimensional shields. With disjoint_shields the shields are rank-1
// projectors onto distinct columns of one random unitary (requires
// k <= dim_z); otherwise they are generic mixed states.
Theorem1Instance random_theorem1_instance(CounterRng& rng, std::size_t k,
                                          std::size_t dim_z,
                                          bool disjoint_shields);

}  // namespace wfsim
