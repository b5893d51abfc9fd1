#pragma once

#include <vector>

#include "wfsim/complex_matrix.hpp"

namespace wfsim {

// Result of a Hermitian eigendecomposition: m = V diag(values) V†.
// Eigenvalues are sorted descending; exact ties are broken by lexicographic
// order of the eigenvector real parts. Each eigenvector is gauge-fixed so
// that its first entry of significant modulus is real and positive, which
// makes the decomposition deterministic for golden-file purposes.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;  // orthonormal columns, same order as values
};

// Throws input_error when m is not square or not Hermitian within
// tolerances().herm; throws numerical_error when the reconstruction
// ‖V diag(λ) V† − m‖_max exceeds tolerances().recon.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

// Schatten-1 norm of a Hermitian matrix: Σ|λ_i|. This is the standard
// convention; every halved-convention quantity in the model (classical
// statistical distance) is written out explicitly at its use site.
double schatten1(const ComplexMatrix& hermitian);

}  // namespace wfsim
