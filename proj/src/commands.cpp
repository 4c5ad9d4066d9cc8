#include "polkit/commands.hpp"
#include "polkit/error.hpp"
#include "polkit/polarizability.hpp"
#include "polkit/radiative.hpp"
#include <algorithm>
#include <charconv>

namespace polkit::commands {

using report::Field;
using report::Kind;
using report::Report;
using report::Row;

namespace {

std::string number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string transition(const LevelLabel &a, const LevelLabel &b) {
  return a.to_string() + "-" + b.to_string();
}

} // namespace

//==============================================================================
Report polarizability(const Dataset &ds, const std::string &source,
                      const LevelLabel &state, Multipole multipole) {
  const auto b = assemble_breakdown(ds, state, multipole);
  const std::string column =
      multipole == Multipole::scalar ? "alpha0" : "alpha2";

  Report r;
  r.kind = Kind::polarizability;
  r.inputs = {{"dataset", source},
              {"state", state.to_string()},
              {"multipole", std::string(to_string(multipole))}};
  for (const auto &c : b.main)
    r.rows.push_back({transition(state, c.intermediate),
                      {{"d", c.d}, {column, c.value(multipole)}}});
  if (multipole == Multipole::scalar)
    r.totals.push_back({"core", b.core});
  r.totals.push_back({"tail", b.tail});
  r.totals.push_back({"total", b.total});
  return r;
}

Report bbr(const Dataset &ds, const std::string &source,
           const LevelLabel &ground, const LevelLabel &excited,
           const polkit::bbr::Conditions &cond) {
  if (!(cond.temperature > 0.0))
    throw std::invalid_argument("temperature must be positive");

  const auto a_ground =
      assemble_breakdown(ds, ground, Multipole::scalar).total;
  const auto a_excited =
      assemble_breakdown(ds, excited, Multipole::scalar).total;

  Report r;
  r.kind = Kind::bbr;
  r.inputs = {{"dataset", source},
              {"ground", ground.to_string()},
              {"excited", excited.to_string()},
              {"temperature_K", number(cond.temperature)},
              {"eta", number(cond.eta)}};
  for (const auto &[label, alpha] :
       {std::pair{ground, a_ground}, std::pair{excited, a_excited}})
    r.rows.push_back({label.to_string(),
                      {{"alpha0", alpha}, {"shift", polkit::bbr::shift_state(alpha, cond)}}});
  r.totals.push_back({"clock_shift", polkit::bbr::clock_shift(a_ground, a_excited, cond)});
  r.totals.push_back({"clock_shift_correlated_core",
                      polkit::bbr::clock_shift(a_ground, a_excited, cond, ds.core_alpha)});
  return r;
}

Report lifetime(const Dataset &ds, const std::string &source,
                const LevelLabel &upper) {
  const auto channels = decay_channels(ds, upper);
  if (channels.empty())
    throw PreconditionError("no decay channels from " + upper.to_string());

  Report r;
  r.kind = Kind::lifetime;
  r.inputs = {{"dataset", source}, {"upper", upper.to_string()}};
  for (const auto &c : channels)
    r.rows.push_back({transition(c.upper, c.lower), {{"A", c.A}}});
  r.totals.push_back({"tau", polkit::lifetime(channels)});
  return r;
}

Report extract(const Dataset &ds, const std::string &source,
               const LevelLabel &upper, const LevelLabel &lower,
               const Quantity &tau) {
  auto all = decay_channels(ds, upper);
  const auto target =
      std::find_if(ds.elements.begin(), ds.elements.end(),
                   [&](const ReducedE1 &e) {
                     return e.upper == upper && e.lower == lower;
                   });
  if (target == ds.elements.end())
    throw std::invalid_argument("no E1 matrix element " +
                                transition(upper, lower) + " in dataset");

  std::vector<DecayChannel> others;
  std::copy_if(all.begin(), all.end(), std::back_inserter(others),
               [&](const DecayChannel &c) { return c.lower != lower; });

  const double de = energy_difference_au(ds, lower, upper).value();
  const auto d_expt =
      extract_matrix_element(tau.retag(Unit::nanosecond), others, de, upper.j());
  const auto &d_theory = target->d;

  // 100 (d_theory/d_expt - 1), error from d_expt only
  const double ratio = d_theory.value() / d_expt.value();
  const Quantity diff{100.0 * (ratio - 1.0),
                      100.0 * ratio * d_expt.relative_unc(),
                      Unit::dimensionless};

  Report r;
  r.kind = Kind::extract;
  r.inputs = {{"dataset", source},
              {"upper", upper.to_string()},
              {"lower", lower.to_string()},
              {"tau_ns", number(tau.value())},
              {"tau_unc_ns", number(tau.unc())}};
  for (const auto &c : others)
    r.rows.push_back({transition(c.upper, c.lower), {{"A", c.A}}});
  r.rows.push_back({transition(upper, lower),
                    {{"A", einstein_A(d_expt, de, upper.j())}, {"d", d_expt}}});
  r.totals.push_back({"d_expt", d_expt});
  r.totals.push_back({"d_theory", d_theory});
  r.totals.push_back({"diff_percent", diff});
  return r;
}

} // namespace polkit::commands
