#pragma once

#include <stdexcept>

namespace scstar {

// Thrown when an enumeration or construction would exceed the configured or
// hard-coded size guards (alphabets of n^n letters, 2^(m*n) state spaces...).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-level input: mismatched sizes, out-of-range indices, degenerate
// operations where the analysis requires non-degeneracy.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace scstar
