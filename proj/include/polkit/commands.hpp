#pragma once
#include "polkit/bbr.hpp"
#include "polkit/dataset.hpp"
#include "polkit/report.hpp"
#include <string>

// Computations behind the polkit command-line subcommands. Each returns a
// Report; rendering and exit-status mapping live in the executable.
//
// Failures: UnknownLevel / std::invalid_argument for bad user input,
// PreconditionError when the physics is undefined for the request.
namespace polkit::commands {

report::Report polarizability(const Dataset &ds, const std::string &source,
                              const LevelLabel &state, Multipole multipole);

//! Per-state and clock-transition BBR shifts. Totals carry both the
//! independent-error (quadrature) and correlated-core uncertainty modes.
//! Throws std::invalid_argument if temperature <= 0.
report::Report bbr(const Dataset &ds, const std::string &source,
                   const LevelLabel &ground, const LevelLabel &excited,
                   const polkit::bbr::Conditions &cond);

report::Report lifetime(const Dataset &ds, const std::string &source,
                        const LevelLabel &upper);

//! Matrix element upper-lower inferred from a measured lifetime, with all
//! other dataset decay channels of `upper` taken as known.
report::Report extract(const Dataset &ds, const std::string &source,
                       const LevelLabel &upper, const LevelLabel &lower,
                       const Quantity &tau);

} // namespace polkit::commands
