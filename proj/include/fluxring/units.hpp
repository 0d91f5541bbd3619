// units.hpp
//
// Numeric parsing for command-line quantities. A value is a plain double in
// SI units, optionally followed by one of a small set of unit suffixes tied
// to the quantity's dimension (e.g. "4960pH", "0.33ps", "25.8ohm"). A bare
// number always means SI. Anything trailing that is not a known suffix for
// that dimension is rejected.

#pragma once

#include <string>

namespace fluxring {

enum class Dimension {
    dimensionless,
    inductance,   // SI henry, suffix pH
    capacitance,  // SI farad, suffix fF
    current,      // SI ampere, suffix uA
    length,       // SI metre, suffix um
    time,         // SI second, suffixes ns, ps
    resistance,   // SI ohm, suffix ohm
};

// Parse text as a quantity of the given dimension, returning the SI value.
// Throws InvalidArgument on malformed numbers or unknown suffixes.
double parse_quantity(const std::string& text, Dimension dim);

}  // namespace fluxring
