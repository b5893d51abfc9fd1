#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wfsim/channels.hpp"
#include "wfsim/density.hpp"
#include "wfsim/metrics.hpp"

namespace wfsim {

// Scenario-level channel description; realized into Kraus form by the I/O
// layer (the "kraus" type reads a file).
struct ChannelSpec {
  std::string type = "identity";  // identity|dephasing|depolarizing|kraus
  double strength = 0.0;
  std::string basis = "computational";  // computational|ud (dephasing only)
  std::string kraus_file;               // type == "kraus" only
};

struct AliceModel {
  std::size_t d_A = 2;
  double epsilon = 0.0;
  ChannelSpec channel;
};

struct Scenario {
  double p = 0.5;
  AliceModel alice;
  std::vector<std::string> partitions;
  std::vector<std::string> metrics;
};

// ---------------------------------------------------------------------------
// Named states of the model
// ---------------------------------------------------------------------------

// Lab state on [a,t,m]: p|Ψ₊><Ψ₊|⊗|0><0| + (1-p)|Ψ₋><Ψ₋|⊗|1><1| with
// Ψ± = (|00>±|11>)/√2 on (a,t). Equals the preparation circuit output with
// wire e traced out, entrywise.
DensityMatrix alice_lab_state(double p);

// Post-decoherence memory pair: τ = channel(|ξ><ξ|), υ = channel(|ζ><ζ|)
// with (ξ,ζ) = memory_pair(ε, d_A).
std::pair<ComplexMatrix, ComplexMatrix> alice_state_pair(
    std::size_t d_A, double epsilon, const KrausChannel& channel);

// External description on [a,t,A]: p|Ψ₊><Ψ₊|⊗τ + (1-p)|Ψ₋><Ψ₋|⊗υ.
DensityMatrix wigner_state(double p, const ComplexMatrix& tau,
                           const ComplexMatrix& upsilon);

// ---------------------------------------------------------------------------
// Private-state structure and key security
// ---------------------------------------------------------------------------

// The (00,00) and (00,11) qubit-pair blocks of a block-structured [a,t,A]
// state; for wigner_state at p = ½ these are (τ+υ)/4 and (τ−υ)/4. The
// constructor verifies the block structure (all (01,·) and (10,·) blocks
// vanish within 1e-10) and that the four surviving blocks reassemble the
// input entrywise within 1e-12, naming the offending block otherwise.
struct PrivateBlocks {
  ComplexMatrix xi_block;
  ComplexMatrix zeta_block;
};
PrivateBlocks private_blocks(const DensityMatrix& rho);

// ‖ζ-block‖₁ in [0,½]; asserts agreement with negativity(ρ, "a|tA") within
// tolerances().eq — the security value and the negativity are the same
// number for every block-structured state.
double key_security(const DensityMatrix& rho);

// The security value a classical analyst restricted to `povm` would assign:
// ½ · povm_classical_distance(τ,υ,povm). Always <= the true key security.
double semiclassical_bound(const ComplexMatrix& tau,
                           const ComplexMatrix& upsilon, const POVM& povm);

// Negativity of the [a,t] marginal of wigner_state(p,τ,υ) across "a|t";
// equals |½−p| independently of the memories. The one-argument form uses
// canonical orthogonal pure memories; both assert the closed form within
// 1e-10.
double traced_negativity(double p);
double traced_negativity(double p, const ComplexMatrix& tau,
                         const ComplexMatrix& upsilon);

// ---------------------------------------------------------------------------
// Ensemble sandwich bounds
// ---------------------------------------------------------------------------

// ρ_XYZ = Σ_i w_i σ_XY;i ⊗ σ_Z;i with every member carrying a bipartite pair
// state on (X,Y) and a shield state on Z.
struct Theorem1Member {
  double weight;
  ComplexMatrix pair_state;  // (dim_x·dim_y) square
  ComplexMatrix shield;      // dim_z square
};
struct Theorem1Instance {
  std::size_t dim_x = 2;
  std::size_t dim_y = 2;
  std::size_t dim_z = 2;
  std::vector<Theorem1Member> members;
};

// Sandwich report for the assisted partitions. `lower` uses the
// distinguishing probability q_i: 1 when all shields have pairwise disjoint
// supports; 1−|<ψ₁|ψ₂>| when there are exactly two pure, equally weighted
// shields; 0 otherwise (the bound degrades but stays valid). `upper` is the
// convexity bound Σ w_i·negativity(σ_XY;i). The two assisted values are NOT
// asserted equal: they provably agree when the shields are disjoint or when
// either member family is real, and the report carries the measured gap so
// callers can decide (equality_ok uses tolerances().eq).
struct Theorem1Report {
  double lower = 0;
  double value_xz_y = 0;
  double value_x_yz = 0;
  double upper = 0;
  bool shields_disjoint = false;
  bool sandwich_ok = false;   // lower−tol <= both values <= upper+tol
  double equality_gap = 0;    // |value_xz_y − value_x_yz|
  bool equality_ok = false;
  bool saturation_ok = true;  // |value−upper| <= tol when shields_disjoint
};

Theorem1Report theorem1_bounds(const Theorem1Instance& inst,
                               const Bipartition& bip_assisted,
                               const Bipartition& bip_pair);
// Convenience: canonical partitions "XZ|Y" and "X|Y".
Theorem1Report theorem1_bounds(const Theorem1Instance& inst);

}  // namespace wfsim
