#pragma once

// Physical constants, CODATA/SI-2019 exact definitions where available,
// otherwise 10 significant digits.
namespace photonbec::constants {

inline constexpr double planck_h = 6.62607015e-34;        // J s (exact)
inline constexpr double speed_of_light = 2.99792458e8;    // m/s (exact)
inline constexpr double boltzmann_kb = 1.380649e-23;      // J/K (exact)
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double kb_ev_per_k = 8.617333262e-5;     // eV/K
inline constexpr double hc_ev_nm = 1239.841984;           // eV nm
inline constexpr double pi = 3.141592653589793;

}  // namespace photonbec::constants
