#include "polkit/radiative.hpp"
#include "polkit/constants.hpp"
#include "polkit/error.hpp"
#include <algorithm>
#include <cmath>

namespace polkit {

namespace {

constexpr double ns_per_inverse_MHz = 1.0e3;

// A [MHz] per d^2 [(e a0)^2]
double rate_per_d2(double delta_e, HalfInt j_upper) {
  using namespace constants;
  const double x = delta_e / speed_of_light_au;
  const double au = 4.0 / 3.0 * x * x * x / (j_upper.twice() + 1);
  return au * au_rate_per_second * 1.0e-6;
}

} // namespace

Quantity einstein_A(const Quantity &d, double delta_e, HalfInt j_upper) {
  if (!(delta_e > 0.0))
    throw PreconditionError("Einstein A needs a positive transition energy");
  const double k = rate_per_d2(delta_e, j_upper);
  return {k * d.value() * d.value(), std::abs(2.0 * k * d.value()) * d.unc(),
          Unit::megahertz};
}

Quantity lifetime(std::span<const DecayChannel> channels) {
  if (channels.empty())
    throw std::invalid_argument("lifetime: no decay channels");
  double rate = 0.0, var = 0.0;
  for (const auto &c : channels) {
    if (c.upper != channels.front().upper)
      throw std::invalid_argument("lifetime: channels from different states (" +
                                  c.upper.to_string() + ", " +
                                  channels.front().upper.to_string() + ")");
    rate += c.A.value();
    var += c.A.unc() * c.A.unc();
  }
  if (!(rate > 0.0))
    throw PreconditionError("lifetime: total decay rate is not positive");
  const double tau = ns_per_inverse_MHz / rate;
  return {tau, tau / rate * std::sqrt(var), Unit::nanosecond};
}

Quantity extract_matrix_element(const Quantity &tau,
                                std::span<const DecayChannel> other_channels,
                                double delta_e, HalfInt j_upper) {
  if (!(tau.value() > 0.0))
    throw PreconditionError("lifetime must be positive");
  if (!(delta_e > 0.0))
    throw PreconditionError("transition energy must be positive");

  const double total = ns_per_inverse_MHz / tau.value();
  const double total_unc = total / tau.value() * tau.unc();
  double others = 0.0, var = total_unc * total_unc;
  for (const auto &c : other_channels) {
    others += c.A.value();
    var += c.A.unc() * c.A.unc();
  }
  const double residual = total - others;
  if (!(residual > 0.0))
    throw PreconditionError(
        "residual decay rate is not positive: lifetime inconsistent with the "
        "other channels");

  const double d = std::sqrt(residual / rate_per_d2(delta_e, j_upper));
  return {d, 0.5 * d * std::sqrt(var) / residual, Unit::dipole};
}

std::vector<DecayChannel> decay_channels(const Dataset &ds,
                                         const LevelLabel &upper) {
  ds.level(upper);
  std::vector<std::pair<double, DecayChannel>> found;
  for (const auto &e : ds.elements) {
    if (e.upper != upper)
      continue;
    const double de = energy_difference_au(ds, e.lower, upper).value();
    found.push_back(
        {de, {upper, e.lower, einstein_A(e.d, de, upper.j())}});
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto &a, const auto &b) { return a.first > b.first; });
  std::vector<DecayChannel> out;
  for (auto &f : found)
    out.push_back(std::move(f.second));
  return out;
}

} // namespace polkit
