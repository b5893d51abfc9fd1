#pragma once

#include <string>
#include <vector>

#include "wfsim/channels.hpp"
#include "wfsim/density.hpp"

namespace wfsim {

// Entanglement negativity (‖ρ^{T_left}‖₁ − 1)/2 for a bipartition covering
// every label of the layout. Symmetric in the two sides.
double negativity(const DensityMatrix& rho, const Bipartition& bip);
double negativity(const DensityMatrix& rho, const std::string& bip);

// True iff the minimum partial-transpose eigenvalue is >= tolerances().psd.
bool is_ppt(const DensityMatrix& rho, const Bipartition& bip);
bool is_ppt(const DensityMatrix& rho, const std::string& bip);

// Entanglement witness on [a,t,A]; a negative expectation certifies
// entanglement across the listed partitions.
struct Witness {
  ComplexMatrix op;
  SubsystemLayout layout;
  std::vector<std::string> partitions;
};

// W1 = |Φ₊><Φ₊|^{T_t} ⊗ Π_up and W2 = |Φ₊><Φ₊|^{T_t} ⊗ Π_down with
// |Φ₊> = (|01>+|10>)/√2 on (a,t). The projectors must be orthogonal and sum
// to the identity on A. Both witnesses certify "aA|t" and "a|tA".
std::pair<Witness, Witness> build_witnesses(std::size_t d_A,
                                            const ComplexMatrix& up,
                                            const ComplexMatrix& down);

// Tr[ρW], guaranteed real for Hermitian W.
double witness_expectation(const DensityMatrix& rho, const Witness& w);

// max(0, −min(Tr[ρW1], Tr[ρW2])): the reported violation magnitude. This is
// a detection certificate and a lower-bound proxy only, never an
// entanglement value.
double witness_violation(const DensityMatrix& rho, const Witness& w1,
                         const Witness& w2);

// ½‖τ−υ‖₁ in the standard Schatten-1 norm.
double trace_distance(const ComplexMatrix& tau, const ComplexMatrix& upsilon);

struct POVM {
  std::vector<ComplexMatrix> effects;
};

// Throws input_error unless each effect is PSD within tolerances().psd and
// the effects sum to the identity within 1e-9.
void validate_povm(const POVM& povm, std::size_t dim);

// Two-outcome optimum: projectors onto the nonnegative and negative
// eigenspaces of τ−υ. Its classical distance equals trace_distance.
POVM helstrom_povm(const ComplexMatrix& tau, const ComplexMatrix& upsilon);

// ½ Σ_m |Tr[Π_m τ] − Tr[Π_m υ]| — the halved classical statistical distance
// between the outcome distributions; never exceeds trace_distance.
double povm_classical_distance(const ComplexMatrix& tau,
                               const ComplexMatrix& upsilon, const POVM& povm);

// True iff every pair of states has Tr[P_i P_j] <= 1e-9 where P_i projects
// onto the support (eigenvalues > 1e-9) of state i.
bool supports_disjoint(const std::vector<ComplexMatrix>& states);

}  // namespace wfsim
