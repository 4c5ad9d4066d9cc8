#pragma once
#include "polkit/constants.hpp"
#include "polkit/quantity.hpp"
#include <optional>

namespace polkit::bbr {

//! Blackbody environment. The field is fixed at its 300 K RMS value and
//! scaled with (T/300)^4; eta is the dynamic correction (exact).
struct Conditions {
  double temperature = constants::bbr_reference_temperature; // K
  double eta = 0.0;

  static constexpr double reference_field = constants::bbr_field_300K; // V/m
};

//! alpha [a0^3] -> alpha/h [Hz/(V/m)^2].
Quantity au_to_si(const Quantity &alpha);

//! -(1/2) E^2 (T/300)^4 alpha0 (1+eta), in Hz.
//! Throws std::invalid_argument for negative or non-finite temperature.
Quantity shift_state(const Quantity &alpha0, const Conditions &cond);

//! Differential shift of the ground -> excited transition, in Hz.
//!
//! By default the two polarizability uncertainties are combined in
//! quadrature. When `shared_core` is given, that term is taken to be
//! fully correlated between both states: it cancels in the difference and
//! its uncertainty is removed from each state before combining.
Quantity clock_shift(const Quantity &alpha_ground,
                     const Quantity &alpha_excited, const Conditions &cond,
                     const std::optional<Quantity> &shared_core = {});

} // namespace polkit::bbr
