#pragma once
#include "polkit/angular.hpp"
#include "polkit/dataset.hpp"
#include "polkit/quantity.hpp"
#include <span>
#include <vector>

namespace polkit {

//! One E1 spontaneous-decay channel upper -> lower; A in MHz.
struct DecayChannel {
  LevelLabel upper;
  LevelLabel lower;
  Quantity A;
};

//! E1 Einstein A coefficient (MHz) for reduced matrix element d (e a0) and
//! transition energy delta_e (hartree):
//!   A = 4/3 (delta_e/c)^3 d^2 / (2 j_upper + 1)   [atomic units of rate]
//! Throws PreconditionError if delta_e <= 0.
Quantity einstein_A(const Quantity &d, double delta_e, HalfInt j_upper);

//! tau = 1/sum(A), in ns, with the channel uncertainties propagated to first
//! order. Throws std::invalid_argument for an empty list or mixed upper
//! states.
Quantity lifetime(std::span<const DecayChannel> channels);

//! Matrix element of the one unknown channel given a measured lifetime and
//! the remaining (theoretical) channels. Returns the positive root.
//! Throws PreconditionError if the residual rate 1/tau - sum(other) <= 0.
Quantity extract_matrix_element(const Quantity &tau,
                                std::span<const DecayChannel> other_channels,
                                double delta_e, HalfInt j_upper);

//! All downward E1 channels of `upper` present in the dataset, ordered by
//! decreasing transition energy. Throws UnknownLevel.
std::vector<DecayChannel> decay_channels(const Dataset &ds,
                                         const LevelLabel &upper);

} // namespace polkit
