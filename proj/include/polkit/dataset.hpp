#pragma once
#include "polkit/angular.hpp"
#include "polkit/quantity.hpp"
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polkit {

//==============================================================================
//! Atomic state label n l_j, e.g. 4p3/2. j is stored as twice its value.
struct LevelLabel {
  int n = 1;
  int l = 0;
  int j2 = 1;

  //! Parses "<n><s|p|d|f|g><2j>/2"; throws std::invalid_argument.
  static LevelLabel parse(std::string_view text);
  std::string to_string() const;

  HalfInt j() const { return HalfInt::from_twice(j2); }
  //! n > 0, 0 <= l <= 4, 2j in {2l-1, 2l+1}
  bool is_valid() const;

  friend auto operator<=>(const LevelLabel &, const LevelLabel &) = default;
};

char orbital_letter(int l);

struct Level {
  LevelLabel label;
  double energy_cm = 0.0;
};

//! Reduced E1 matrix element |<upper||D||lower>|, stored as a positive
//! magnitude; every formula that consumes it uses d^2.
struct ReducedE1 {
  LevelLabel lower;
  LevelLabel upper;
  Quantity d; // e a0

  bool couples(const LevelLabel &s) const { return lower == s || upper == s; }
  //! The endpoint that is not s. s must be an endpoint.
  const LevelLabel &partner(const LevelLabel &s) const {
    return lower == s ? upper : lower;
  }
};

enum class Multipole { scalar, tensor };
std::string_view to_string(Multipole m);
//! "scalar" | "tensor"; throws std::invalid_argument.
Multipole parse_multipole(std::string_view text);

//==============================================================================
//! Levels, E1 matrix elements, core polarizability and tail terms for one
//! atomic system. Immutable once returned from parse_dataset.
struct Dataset {
  std::vector<Level> levels;
  std::vector<ReducedE1> elements;
  Quantity core_alpha = Quantity::exact(0.0, Unit::polarizability);
  std::map<std::pair<LevelLabel, Multipole>, Quantity> tails;

  //! nullptr if absent
  const Level *find_level(const LevelLabel &label) const;
  //! Throws UnknownLevel.
  const Level &level(const LevelLabel &label) const;
  bool has_level(const LevelLabel &label) const {
    return find_level(label) != nullptr;
  }
  //! Tail for (state, multipole), or exact zero if none is declared.
  Quantity tail(const LevelLabel &state, Multipole m) const;
};

//! Parses dataset text. Syntax errors throw ParseError; a dataset that
//! parses but fails validate() throws DataError.
Dataset parse_dataset(std::string_view text);
//! Reads and parses a file; throws std::runtime_error if unreadable.
Dataset load_dataset(const std::string &path);

//! Dataset file text. Numbers are written in shortest round-trip form, so
//! parse_dataset(print_dataset(ds)) reproduces every field bit for bit.
std::string print_dataset(const Dataset &ds);

//! One description per violated invariant; empty iff ds is consistent.
std::vector<std::string> validate(const Dataset &ds);

//! (E_b - E_a) in hartree, exact (experimental energies carry no error).
Quantity energy_difference_au(const Dataset &ds, const LevelLabel &a,
                              const LevelLabel &b);

} // namespace polkit
