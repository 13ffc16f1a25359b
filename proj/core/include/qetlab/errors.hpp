#pragma once

#include <stdexcept>
#include <string>

namespace qet {

// Input outside a function's mathematical domain (kT <= 0, |x| > 1, ...).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix shape incompatible with the operation or above the 8x8 cap.
struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated precondition was violated (non-Hermitian input, infeasible
// Kraus vector, ...). The message names the violated condition.
struct contract_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative scheme failed to converge; the message reports the residual.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Root bracketing failed: no sign change on the given interval.
struct bracket_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qet
