#pragma once

#include <string>
#include <vector>

#include "wfsim/complex_matrix.hpp"
#include "wfsim/eigen_herm.hpp"
#include "wfsim/layout.hpp"

namespace wfsim {

// Normalized pure state over a layout.
struct PureState {
  SubsystemLayout layout;
  std::vector<cd> amplitudes;
};

// Throws input_error when the Euclidean norm deviates from 1 by more than
// 1e-10 or an amplitude is not finite.
void validate_pure(const PureState& psi);

// Density matrix with layout. Construction validates: Hermitian within
// tolerances().herm, trace within tolerances().trace of 1, minimum
// eigenvalue >= tolerances().psd. Tiny negative eigenvalues are never
// silently repaired; see sanitize().
class DensityMatrix {
 public:
  DensityMatrix(SubsystemLayout layout, ComplexMatrix mat);

  const SubsystemLayout& layout() const { return layout_; }
  const ComplexMatrix& mat() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  SubsystemLayout layout_;
  ComplexMatrix mat_;
};

DensityMatrix to_density(const PureState& psi);

// Reduced state on `keep`, in the original layout order regardless of the
// order given. Unknown labels throw input_error.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep);

// Transposes the indices of the listed subsystems only. Pure entry
// relocation: applying it twice returns the input bitwise, Hermiticity and
// trace are preserved exactly. Layout-level variant provided for operators
// that are not states (witness construction).
ComplexMatrix partial_transpose(const ComplexMatrix& mat,
                                const SubsystemLayout& layout,
                                const std::vector<std::string>& part);
ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                const std::vector<std::string>& part);

// Reorders subsystems; the state is physically identical.
DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                 const std::vector<std::string>& new_order);

// Explicit repair pathway: clamps eigenvalues in [tolerances().psd, 0) to 0
// and renormalizes the trace. Never invoked implicitly.
DensityMatrix sanitize(const DensityMatrix& rho);

}  // namespace wfsim
