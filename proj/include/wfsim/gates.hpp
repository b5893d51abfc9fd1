#pragma once

#include <string>
#include <vector>

#include "wfsim/density.hpp"

namespace wfsim {

// Unitary gate with a declared arity. Construction checks U†U = I within
// 1e-10.
struct Gate {
  std::string name;
  ComplexMatrix mat;
  std::size_t arity;  // 1 or 2

  static Gate hadamard();
  static Gate pauli_x();
  static Gate cnot();  // control first
  static Gate custom(std::string name, ComplexMatrix mat, std::size_t arity);
};

// Four-qubit source state on [a,t,m,e]: amplitude sqrt(p) on |0000> and
// sqrt(1-p) on |1111>.
PureState ghz_state(double p);

// Applies I⊗…⊗U⊗…⊗I with U placed on `wires` (control first for two-wire
// gates). Wires must be distinct labels of matching dimension.
PureState apply_unitary(const PureState& psi, const Gate& gate,
                        const std::vector<std::string>& wires);
DensityMatrix apply_unitary(const DensityMatrix& rho, const Gate& gate,
                            const std::vector<std::string>& wires);

// The preparation pipeline used by the protocol: H on a, CNOT(a,t),
// CNOT(m,t) applied to ghz_state(p). The second CNOT aligns the all-ones
// branch with the (|00>-|11>)/√2 Bell form that the rest of the model is
// written in; without it the branch comes out as the singlet, which no
// downstream identity uses.
PureState prepare_source_circuit(double p);

// Destructive projective measurement on one wire: outcome k has probability
// Tr[(Π_k⊗I)ρ]; the post state is renormalized with the measured wire
// removed from the layout. Zero-probability outcomes are flagged instead of
// divided by zero.
struct MeasurementOutcome {
  std::size_t outcome_index;
  double probability;
  bool post_state_defined;
  // Valid only when post_state_defined; layout lacks the measured wire.
  ComplexMatrix post_mat;
  SubsystemLayout post_layout;
};

std::vector<MeasurementOutcome> measure_projective(
    const DensityMatrix& rho, const std::string& wire,
    const std::vector<std::vector<cd>>& basis);

}  // namespace wfsim
