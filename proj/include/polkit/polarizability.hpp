#pragma once
#include "polkit/angular.hpp"
#include "polkit/dataset.hpp"
#include "polkit/quantity.hpp"
#include <optional>
#include <vector>

namespace polkit {

//==============================================================================
// Single-transition terms of the sum over intermediate states k for a
// valence state v. `d` is |<k||D||v>| (e a0), `delta_e` is E_k - E_v in
// hartree. Contribution uncertainties follow from alpha ~ d^2:
// delta(alpha) = 2 |alpha| delta(d)/d.

//! alpha0 = 2 / (3(2j_v+1)) * d^2 / delta_e.
//! Throws PreconditionError if delta_e == 0.
Quantity scalar_contribution(const Quantity &d, double delta_e, HalfInt jv);

//! alpha2 = -4 C(j_v) (-1)^(j_v+j_k+1) {j_v 1 j_k; 1 j_v 2} d^2 / delta_e.
//! Zero for j_v < 1. Throws PreconditionError if delta_e == 0.
Quantity tensor_contribution(const Quantity &d, double delta_e, HalfInt jv,
                             HalfInt jk);

//! alpha2/alpha0 for one transition; depends only on (j_v, j_k).
double tensor_to_scalar_ratio(HalfInt jv, HalfInt jk);

//! Rescale a Dirac-Fock tail that overestimates by `overestimate_factor`:
//! value = df/factor, unc = hypot(|df - value|, df.unc/factor).
//! Throws std::invalid_argument if factor <= 0.
Quantity scale_tail(const Quantity &df_tail, double overestimate_factor);

//==============================================================================
struct Contribution {
  LevelLabel state;        // v
  LevelLabel intermediate; // k
  Quantity d;              // e a0
  double delta_e = 0.0;    // E_k - E_v, hartree
  Quantity alpha0;
  std::optional<Quantity> alpha2; // absent for j_v < 1

  const Quantity &value(Multipole m) const {
    return m == Multipole::scalar ? alpha0 : *alpha2;
  }
};

struct PolarizabilityBreakdown {
  LevelLabel state;
  Multipole multipole = Multipole::scalar;
  std::vector<Contribution> main; // ordered by (j_k, E_k)
  Quantity tail;
  Quantity core; // zero for tensor
  Quantity total;

  //! Sum of main-term values only.
  Quantity main_sum() const;
};

//! Sum over every dataset element coupled to `state`, plus tail and (for
//! the scalar part) core. Uncertainties combine in quadrature.
//! Throws UnknownLevel, or PreconditionError for a tensor breakdown of a
//! j = 1/2 state.
PolarizabilityBreakdown assemble_breakdown(const Dataset &ds,
                                           const LevelLabel &state,
                                           Multipole multipole);

} // namespace polkit
