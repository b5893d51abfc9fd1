#include "wfsim/random.hpp"

#include <cmath>

#include "wfsim/eigen_herm.hpp"

namespace wfsim {

namespace {

// splitmix64 finalizer over seed + golden-ratio-stepped counter.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return mix64(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform() {
  // 53 top bits -> [0,1) with full double resolution.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::gaussian() {
  // Box-Muller; guard the log against a zero draw.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

cd CounterRng::cgaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return cd{re, im};
}

std::vector<cd> random_unit_vector(CounterRng& rng, std::size_t dim) {
  std::vector<cd> v(dim);
  double norm_sq = 0.0;
  for (auto& a : v) {
    a = rng.cgaussian();
    norm_sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : v) a *= inv;
  return v;
}

ComplexMatrix random_mixed(CounterRng& rng, std::size_t dim,
                           std::size_t rank) {
  if (rank == 0) rank = dim;
  // Pure state on dim×rank, trace out the rank factor:
  // ρ_{ij} = Σ_r ψ_{i,r} conj(ψ_{j,r}).
  const std::vector<cd> psi = random_unit_vector(rng, dim * rank);
  ComplexMatrix rho(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      cd acc{0.0};
      for (std::size_t r = 0; r < rank; ++r)
        acc += psi[i * rank + r] * std::conj(psi[j * rank + r]);
      rho(i, j) = acc;
    }
  return rho;
}

ComplexMatrix random_mixed_real(CounterRng& rng, std::size_t dim) {
  // Gram matrix of a real Gaussian square, normalized to unit trace.
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = cd{rng.gaussian()};
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= cd{1.0 / tr};
  return rho;
}

namespace {

// Gram-Schmidt on the columns of a square Gaussian matrix; re-orthogonalized
// once for numerical stability.
ComplexMatrix gram_schmidt_unitary(CounterRng& rng, std::size_t dim) {
  std::vector<std::vector<cd>> cols(dim, std::vector<cd>(dim));
  for (auto& c : cols)
    for (auto& a : c) a = rng.cgaussian();
  for (std::size_t k = 0; k < dim; ++k) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < k; ++j) {
        cd proj{0.0};
        for (std::size_t i = 0; i < dim; ++i)
          proj += std::conj(cols[j][i]) * cols[k][i];
        for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= proj * cols[j][i];
      }
    double norm_sq = 0.0;
    for (const auto& a : cols[k]) norm_sq += std::norm(a);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : cols[k]) a *= inv;
  }
  ComplexMatrix u(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) u(i, k) = cols[k][i];
  return u;
}

}  // namespace

ComplexMatrix random_unitary(CounterRng& rng, std::size_t dim) {
  return gram_schmidt_unitary(rng, dim);
}

KrausChannel random_channel(CounterRng& rng, std::size_t dim,
                            std::size_t kraus_count) {
  if (kraus_count == 0) throw input_error("random_channel: zero Kraus count");
  // Columns of a (dim·count)×dim isometry, orthonormalized as the first dim
  // columns of a (dim·count)-dimensional unitary; Kraus operator k is the
  // k-th dim×dim row block.
  const std::size_t big = dim * kraus_count;
  const ComplexMatrix u = gram_schmidt_unitary(rng, big);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < kraus_count; ++k) {
    ComplexMatrix K(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) K(i, j) = u(k * dim + i, j);
    kraus.push_back(std::move(K));
  }
  return KrausChannel::from_kraus(dim, std::move(kraus));
}

POVM random_povm(CounterRng& rng, std::size_t dim, std::size_t n_effects) {
  if (n_effects == 0) throw input_error("random_povm: zero effect count");
  // Positive Gram pieces G_i whitened by the inverse square root of their
  // sum, so the effects add to the identity by construction.
  std::vector<ComplexMatrix> gs;
  ComplexMatrix sum(dim, dim);
  for (std::size_t e = 0; e < n_effects; ++e) {
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.cgaussian();
    ComplexMatrix gram = g * g.adjoint();
    sum += gram;
    gs.push_back(std::move(gram));
  }
  const EigenSystem es = hermitian_eigen(sum);
  ComplexMatrix inv_sqrt(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (es.values[k] <= 0.0)
      throw numerical_error("random_povm: singular effect sum");
    const double w = 1.0 / std::sqrt(es.values[k]);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        inv_sqrt(i, j) += cd{w} * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  POVM povm;
  for (auto& g : gs) povm.effects.push_back(inv_sqrt * g * inv_sqrt);
  return povm;
}

Theorem1Instance random_theorem1_instance(CounterRng& rng, std::size_t k,
                                          std::size_t dim_z,
                                          bool disjoint_shields) {
  if (k < 2) throw input_error("random_theorem1_instance: need k >= 2");
  if (disjoint_shields && k > dim_z)
    throw input_error(
        "random_theorem1_instance: disjoint shields need k <= dim_z");
  Theorem1Instance inst;
  inst.dim_x = 2;
  inst.dim_y = 2;
  inst.dim_z = dim_z;

  std::vector<double> weights(k);
  double wsum = 0.0;
  for (auto& w : weights) {
    w = rng.uniform() + 0.1;  // bounded away from zero
    wsum += w;
  }
  for (auto& w : weights) w /= wsum;

  ComplexMatrix u;
  if (disjoint_shields) u = random_unitary(rng, dim_z);

  for (std::size_t i = 0; i < k; ++i) {
    Theorem1Member m;
    m.weight = weights[i];
    m.pair_state = random_mixed(rng, 4);
    if (disjoint_shields) {
      std::vector<cd> col(dim_z);
      for (std::size_t r = 0; r < dim_z; ++r) col[r] = u(r, i);
      m.shield = outer(col, col);
    } else {
      m.shield = random_mixed(rng, dim_z);
    }
    inst.members.push_back(std::move(m));
  }
  // Exact unit weight sum after normalization rounding.
  double total = 0.0;
  for (const auto& m : inst.members) total += m.weight;
  inst.members.back().weight += 1.0 - total;
  return inst;
}

}  // namespace wfsim
