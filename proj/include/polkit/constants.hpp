#pragma once

namespace polkit::constants {

// Hartree energy in cm^-1 (CODATA).
constexpr double hartree_in_wavenumber = 219474.6313632;

// Inverse fine-structure constant: speed of light in atomic units.
constexpr double speed_of_light_au = 137.035999;

// Atomic unit of rate, 1/(hbar/Eh), in s^-1.
constexpr double au_rate_per_second = 4.1341373336e16;

// alpha/h [Hz/(V/m)^2] per alpha [a.u.], i.e. 4 pi eps0 a0^3 / h.
constexpr double polarizability_au_to_si = 2.48832e-8;

// RMS blackbody electric field at 300 K, V/m.
constexpr double bbr_field_300K = 831.9;
constexpr double bbr_reference_temperature = 300.0;

} // namespace polkit::constants
