#pragma once
#include "polkit/quantity.hpp"
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polkit::report {

enum class Kind { polarizability, bbr, lifetime, extract };
std::string_view to_string(Kind k);
Kind parse_kind(std::string_view text);

struct Field {
  std::string name;
  Quantity q;
  friend bool operator==(const Field &, const Field &) = default;
};

struct Row {
  std::string label;
  std::vector<Field> fields;
  friend bool operator==(const Row &, const Row &) = default;
};

//! Rendered result of one CLI command: an echo of the inputs, ordered rows
//! and named totals. Rendering is a pure function of this value.
struct Report {
  Kind kind = Kind::polarizability;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Row> rows;
  std::vector<Field> totals;

  //! nullptr if absent
  const Field *total(std::string_view name) const;

  friend bool operator==(const Report &, const Report &) = default;
};

//------------------------------------------------------------------------------
// Display rounding. All table output goes through these.

//! Round half to even at `decimals` places after the point (may be < 0).
double round_half_even(double x, int decimals);

//! value(unc) with the uncertainty kept to two significant digits when its
//! leading digits are 100-354, one digit for 355-949, and rounded up to two
//! digits of the next decade for 950-999; the value is rounded to the same
//! place. Uncertainties that reach past the decimal point print in full
//! ("76.1(1.1)"), otherwise in units of the last digit ("0.380(13)").
//! A zero uncertainty prints the value alone to four significant digits.
std::string format_uncertain(double value, double unc);

//! Shortest round-trip representation of value and uncertainty, unrounded.
std::string format_full(double value, double unc);

//------------------------------------------------------------------------------
std::string render_table(const Report &r, bool full_precision = false);

//! Structured JSON text; doubles are written in shortest round-trip form
//! so from_machine(to_machine(r)) == r.
std::string to_machine(const Report &r);
//! Throws std::invalid_argument on malformed input.
Report from_machine(std::string_view text);

} // namespace polkit::report
