// constants.hpp
//
// Physical constants, defined once for the whole project. h and e are exact
// by SI definition; everything else is derived from them at compile time, so
// each value is good well past 9 significant figures:
//
//   hbar = 1.05457182e-34 J s
//   phi0 = 2.06783385e-15 Wb      (flux quantum h/2e)
//   r_q  = 2.58128075e+4  ohm     (resistance quantum h/e^2)
//
// Everything in the library is strict SI; unit suffixes exist only at the CLI
// boundary (units.hpp).

#pragma once

namespace fluxring::constants {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double h = 6.62607015e-34;          // Planck constant [J s]
inline constexpr double e_charge = 1.602176634e-19;  // elementary charge [C]

inline constexpr double hbar = h / (2.0 * pi);             // [J s]
inline constexpr double phi0 = h / (2.0 * e_charge);       // [Wb]
inline constexpr double r_q = h / (e_charge * e_charge);   // [ohm]

inline constexpr double c_light = 299792458.0;  // [m/s]

}  // namespace fluxring::constants
