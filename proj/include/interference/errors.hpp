#pragma once

#include <stdexcept>
#include <string>

namespace interference {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1; anything else escaping is a bug.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix shape does not fit the requested operation.
struct dimension_error : error {
    using error::error;
};

/// Argument outside its mathematical domain (n = 0, reflectivity > 1, ...).
struct domain_error : error {
    using error::error;
};

/// A hard resource cap would be exceeded (permanent size, state-space count).
struct size_limit_error : error {
    using error::error;
};

/// Occupation lists are mutually incompatible or incompatible with the device.
struct arrangement_error : error {
    using error::error;
};

/// A species constraint is violated (fermions on non-Pauli arrangements).
struct species_error : error {
    using error::error;
};

/// Malformed input data; the message names the offending line or field.
struct parse_error : error {
    using error::error;
};

/// Empty or otherwise unusable input to a statistical test.
struct input_error : error {
    using error::error;
};

/// The requested certification test does not apply to the given setup.
struct inapplicable_test_error : error {
    using error::error;
};

/// A signal width cannot be extracted from the given scan.
struct width_undefined_error : error {
    using error::error;
};

/// A rank is requested for an object that has none (zero tensor).
struct rank_undefined_error : error {
    using error::error;
};

/// Numerical rank estimation did not reach a stable majority.
struct ambiguous_rank_error : error {
    using error::error;
};

/// A precondition on the input data failed (e.g. singular reference minor).
struct precondition_error : error {
    using error::error;
};

}  // namespace interference
