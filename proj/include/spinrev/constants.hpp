#pragma once

namespace spinrev {

// Internal arbitrary units. Energies are in [a.u.], times in [a.u.] with
// hbar = 1, so a level of energy E acquires phase exp(-i*E*t). Kept as a
// named constant so the unit convention is visible in every formula.
inline constexpr double hbar = 1.0;

}  // namespace spinrev
