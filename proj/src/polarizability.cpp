#include "polkit/polarizability.hpp"
#include "polkit/error.hpp"
#include <algorithm>
#include <cmath>

namespace polkit {

namespace {

void require_nonzero(double delta_e) {
  if (delta_e == 0.0)
    throw PreconditionError("zero energy denominator");
}

// alpha = coef * d^2 / delta_e; d(alpha)/d(d) = 2 coef d / delta_e
Quantity quadratic_in_d(double coef, const Quantity &d, double delta_e) {
  const double value = coef * d.value() * d.value() / delta_e;
  const double unc = std::abs(2.0 * coef * d.value() / delta_e) * d.unc();
  return {value, unc, Unit::polarizability};
}

double scalar_weight(HalfInt jv) { return 2.0 / (3.0 * (jv.twice() + 1)); }

double tensor_weight(HalfInt jv, HalfInt jk) {
  const double c = angular::tensor_prefactor(jv);
  if (c == 0.0)
    return 0.0;
  const int phase_exp = (jv.twice() + jk.twice()) / 2 + 1;
  const double phase = phase_exp % 2 ? -1.0 : 1.0;
  const double sixj = angular::wigner6j_twice(jv.twice(), 2, jk.twice(), 2,
                                              jv.twice(), 4);
  return -4.0 * c * phase * sixj;
}

} // namespace

Quantity scalar_contribution(const Quantity &d, double delta_e, HalfInt jv) {
  require_nonzero(delta_e);
  return quadratic_in_d(scalar_weight(jv), d, delta_e);
}

Quantity tensor_contribution(const Quantity &d, double delta_e, HalfInt jv,
                             HalfInt jk) {
  require_nonzero(delta_e);
  return quadratic_in_d(tensor_weight(jv, jk), d, delta_e);
}

double tensor_to_scalar_ratio(HalfInt jv, HalfInt jk) {
  return tensor_weight(jv, jk) / scalar_weight(jv);
}

Quantity scale_tail(const Quantity &df_tail, double overestimate_factor) {
  if (!(overestimate_factor > 0.0))
    throw std::invalid_argument("tail scaling factor must be positive");
  const double value = df_tail.value() / overestimate_factor;
  const double unc = std::hypot(df_tail.value() - value,
                                df_tail.unc() / overestimate_factor);
  return {value, unc, df_tail.unit()};
}

//==============================================================================
Quantity PolarizabilityBreakdown::main_sum() const {
  std::vector<Quantity> terms;
  terms.reserve(main.size());
  for (const auto &c : main)
    terms.push_back(c.value(multipole));
  return sum_independent(terms, Unit::polarizability);
}

PolarizabilityBreakdown assemble_breakdown(const Dataset &ds,
                                           const LevelLabel &state,
                                           Multipole multipole) {
  ds.level(state); // throws UnknownLevel
  const auto jv = state.j();
  if (multipole == Multipole::tensor && jv.twice() < 2)
    throw PreconditionError("tensor polarizability vanishes for " +
                            state.to_string() + " (j < 1)");

  PolarizabilityBreakdown out;
  out.state = state;
  out.multipole = multipole;

  for (const auto &e : ds.elements) {
    if (!e.couples(state))
      continue;
    const auto &k = e.partner(state);
    Contribution c;
    c.state = state;
    c.intermediate = k;
    c.d = e.d;
    c.delta_e = energy_difference_au(ds, state, k).value();
    c.alpha0 = scalar_contribution(e.d, c.delta_e, jv);
    if (jv.twice() >= 2)
      c.alpha2 = tensor_contribution(e.d, c.delta_e, jv, k.j());
    out.main.push_back(std::move(c));
  }

  std::stable_sort(out.main.begin(), out.main.end(),
                   [](const Contribution &a, const Contribution &b) {
                     if (a.intermediate.j2 != b.intermediate.j2)
                       return a.intermediate.j2 < b.intermediate.j2;
                     return a.delta_e < b.delta_e;
                   });

  out.tail = ds.tail(state, multipole);
  out.core = multipole == Multipole::scalar
                 ? ds.core_alpha
                 : Quantity::exact(0.0, Unit::polarizability);

  std::vector<Quantity> terms;
  for (const auto &c : out.main)
    terms.push_back(c.value(multipole));
  terms.push_back(out.tail);
  terms.push_back(out.core);
  out.total = sum_independent(terms, Unit::polarizability);
  return out;
}

} // namespace polkit
