// errors.hpp
//
// Error taxonomy. Everything the library throws derives from std::exception
// through one of these four types, so callers (and the CLI exit-code mapping)
// can tell domain failures apart from plain misuse.

#pragma once

#include <stdexcept>

namespace fluxring {

// Amplitude data is unusable: empty, zero norm, or drifted too far from unit
// norm for a silent renormalization to be honest.
struct InvalidState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operands that must share a dimension don't.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A scalar argument is outside its domain (N = 0, negative inductance,
// out-of-range outcome index, ...).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The ring potential has a single well (beta <= 1): there are no symmetric
// minima to encode a qubit in, so minima-geometry questions have no answer.
struct MonostableError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace fluxring
