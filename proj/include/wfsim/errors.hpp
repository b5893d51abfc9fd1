#pragma once

#include <stdexcept>
#include <string>

namespace wfsim {

// Invalid caller-supplied data: bad dimensions, broken invariants, unknown
// labels, out-of-range parameters. The CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not meet its contract (non-convergence, failed
// reconstruction check). The CLI maps this to exit code 3.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Centralized tolerances. Every check in this library is an analytic
// identity; the slack only absorbs floating-point error, so these values are
// deliberately tight and shared by all modules.
struct Tolerances {
  double herm = 1e-10;    // max entry deviation from the adjoint
  double psd = -1e-9;     // minimum admissible eigenvalue
  double trace = 1e-10;   // |Tr - 1| for states
  double eq = 1e-9;       // generic identity assertions
  double recon = 1e-9;    // eigendecomposition reconstruction, max-entry norm
};

inline Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

}  // namespace wfsim
