#include "polkit/bbr.hpp"
#include "polkit/error.hpp"
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polkit::bbr {

namespace {

// Hz per Hz/(V/m)^2 of polarizability, without the (1+eta) factor
double field_factor(const Conditions &cond) {
  if (!std::isfinite(cond.temperature) || cond.temperature < 0.0)
    throw std::invalid_argument("temperature must be non-negative");
  const double t = cond.temperature / constants::bbr_reference_temperature;
  const double e = Conditions::reference_field;
  return -0.5 * e * e * (t * t) * (t * t);
}

void require_polarizability(const Quantity &q) {
  if (q.unit() != Unit::polarizability)
    throw UnitMismatch("expected a polarizability in a0^3");
}

} // namespace

Quantity au_to_si(const Quantity &alpha) {
  require_polarizability(alpha);
  return (alpha * constants::polarizability_au_to_si)
      .retag(Unit::hz_per_field2);
}

Quantity shift_state(const Quantity &alpha0, const Conditions &cond) {
  const double k = field_factor(cond) * (1.0 + cond.eta);
  return (au_to_si(alpha0) * k).retag(Unit::hertz);
}

Quantity clock_shift(const Quantity &alpha_ground,
                     const Quantity &alpha_excited, const Conditions &cond,
                     const std::optional<Quantity> &shared_core) {
  require_polarizability(alpha_ground);
  require_polarizability(alpha_excited);
  auto diff = alpha_excited - alpha_ground;
  if (shared_core) {
    require_polarizability(*shared_core);
    const double c2 = shared_core->unc() * shared_core->unc();
    const double g2 = alpha_ground.unc() * alpha_ground.unc() - c2;
    const double e2 = alpha_excited.unc() * alpha_excited.unc() - c2;
    diff = diff.with_unc(std::sqrt(std::max(g2, 0.0) + std::max(e2, 0.0)));
  }
  const double value = shift_state(alpha_excited, cond).value() -
                      shift_state(alpha_ground, cond).value();
  return shift_state(diff, cond).with_value(value);
}

} // namespace polkit::bbr
