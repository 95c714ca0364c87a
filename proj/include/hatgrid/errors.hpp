#pragma once

#include <stdexcept>

namespace hatgrid {

// Text that does not parse as a rational or golden number.
struct MalformedNumber : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters in Z + phi*Z, a non-zero parameter sum, or a point landing exactly
// on a region boundary. None of these can happen for admissible inputs.
struct DegenerateParameter : std::domain_error {
    using std::domain_error::domain_error;
};

// A structural invariant of the construction failed. Always a bug signal.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// The fractal orientation iteration ran past its cap.
struct ResolutionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hatgrid
