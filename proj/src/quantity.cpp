#include "polkit/quantity.hpp"
#include "polkit/error.hpp"
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace polkit {

namespace {
constexpr std::array<std::pair<Unit, std::string_view>, 9> unit_table{{
    {Unit::polarizability, "a0^3"},
    {Unit::dipole, "e*a0"},
    {Unit::hartree, "Eh"},
    {Unit::wavenumber, "cm^-1"},
    {Unit::hertz, "Hz"},
    {Unit::megahertz, "MHz"},
    {Unit::nanosecond, "ns"},
    {Unit::hz_per_field2, "Hz/(V/m)^2"},
    {Unit::dimensionless, "1"},
}};

void require_same(Unit a, Unit b) {
  if (a != b)
    throw UnitMismatch("unit mismatch: " + std::string(unit_symbol(a)) +
                       " vs " + std::string(unit_symbol(b)));
}
} // namespace

std::string_view unit_symbol(Unit u) {
  for (const auto &[unit, sym] : unit_table)
    if (unit == u)
      return sym;
  return "?";
}

Unit unit_from_symbol(std::string_view symbol) {
  for (const auto &[unit, sym] : unit_table)
    if (sym == symbol)
      return unit;
  throw std::invalid_argument("unknown unit '" + std::string(symbol) + "'");
}

//==============================================================================
Quantity::Quantity(double value, double unc, Unit unit)
    : m_value(value), m_unc(unc), m_unit(unit) {
  if (!std::isfinite(value) || !std::isfinite(unc))
    throw std::invalid_argument("quantity must be finite");
  if (unc < 0.0)
    throw std::invalid_argument("negative uncertainty");
}

double Quantity::relative_unc() const {
  return m_value == 0.0 ? 0.0 : m_unc / std::abs(m_value);
}

Quantity &Quantity::operator+=(const Quantity &rhs) {
  require_same(m_unit, rhs.m_unit);
  m_value += rhs.m_value;
  m_unc = std::hypot(m_unc, rhs.m_unc);
  return *this;
}

Quantity &Quantity::operator-=(const Quantity &rhs) {
  require_same(m_unit, rhs.m_unit);
  m_value -= rhs.m_value;
  m_unc = std::hypot(m_unc, rhs.m_unc);
  return *this;
}

Quantity &Quantity::operator*=(double k) {
  m_value *= k;
  m_unc *= std::abs(k);
  return *this;
}

//==============================================================================
double quadrature(std::span<const double> uncs) {
  double s = 0.0;
  for (double u : uncs)
    s += u * u;
  return std::sqrt(s);
}

double quadrature(std::initializer_list<double> uncs) {
  return quadrature(std::span<const double>(uncs.begin(), uncs.size()));
}

Quantity sum_independent(std::span<const Quantity> terms, Unit unit) {
  double value = 0.0, var = 0.0;
  for (const auto &t : terms) {
    require_same(unit, t.unit());
    value += t.value();
    var += t.unc() * t.unc();
  }
  return {value, std::sqrt(var), unit};
}

} // namespace polkit
