#pragma once

// Physical constants (CODATA 2018), pinned in one place so every SI
// conversion in the codebase is bit-identical.
namespace nessdrag::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline constexpr double hbar = 1.054571817e-34;              // J s
inline constexpr double c_light = 299792458.0;               // m/s
inline constexpr double epsilon0 = 8.8541878128e-12;         // F/m
inline constexpr double elementary_charge = 1.602176634e-19; // C

// 1 eV expressed as an angular frequency, rad/s.
inline constexpr double ev_to_rad_per_s = elementary_charge / hbar;

} // namespace nessdrag::constants
