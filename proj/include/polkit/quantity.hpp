#pragma once
#include <initializer_list>
#include <span>
#include <string_view>

namespace polkit {

enum class Unit {
  polarizability, // a0^3 (atomic units)
  dipole,         // e a0
  hartree,        // atomic unit of energy
  wavenumber,     // cm^-1
  hertz,
  megahertz,
  nanosecond,
  hz_per_field2, // Hz/(V/m)^2
  dimensionless
};

std::string_view unit_symbol(Unit u);
//! Inverse of unit_symbol; throws std::invalid_argument for unknown symbols.
Unit unit_from_symbol(std::string_view symbol);

//==============================================================================
//! A value with a one-sigma uncertainty and a unit tag.
//!
//! Addition/subtraction assume independent errors and combine uncertainties
//! in quadrature. Mixing unit tags throws UnitMismatch.
class Quantity {
public:
  Quantity() = default;
  //! Throws std::invalid_argument if unc < 0 or either argument is not finite.
  Quantity(double value, double unc, Unit unit);

  static Quantity exact(double value, Unit unit) { return {value, 0.0, unit}; }

  double value() const { return m_value; }
  double unc() const { return m_unc; }
  Unit unit() const { return m_unit; }

  //! Relative uncertainty; 0 if value is 0.
  double relative_unc() const;

  Quantity operator-() const { return {-m_value, m_unc, m_unit}; }
  Quantity &operator+=(const Quantity &rhs);
  Quantity &operator-=(const Quantity &rhs);
  Quantity &operator*=(double k);

  friend Quantity operator+(Quantity a, const Quantity &b) { return a += b; }
  friend Quantity operator-(Quantity a, const Quantity &b) { return a -= b; }
  friend Quantity operator*(Quantity a, double k) { return a *= k; }
  friend Quantity operator*(double k, Quantity a) { return a *= k; }

  //! Same value and unit; uncertainty replaced.
  Quantity with_unc(double unc) const { return {m_value, unc, m_unit}; }
  Quantity with_value(double value) const { return {value, m_unc, m_unit}; }
  //! Same numbers, new unit tag (explicit conversions only).
  Quantity retag(Unit unit) const { return {m_value, m_unc, unit}; }

  friend bool operator==(const Quantity &, const Quantity &) = default;

private:
  double m_value = 0.0;
  double m_unc = 0.0;
  Unit m_unit = Unit::dimensionless;
};

//! Square root of the sum of squares.
double quadrature(std::span<const double> uncs);
double quadrature(std::initializer_list<double> uncs);

//! Sum of independent quantities (all must share one unit).
//! An empty range yields exact zero with the given unit.
Quantity sum_independent(std::span<const Quantity> terms, Unit unit);

} // namespace polkit
