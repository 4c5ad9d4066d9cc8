#pragma once
#include <compare>

namespace polkit {

//==============================================================================
//! Non-negative half-integer angular momentum, stored as twice its value.
class HalfInt {
public:
  constexpr HalfInt() = default;
  //! Throws std::invalid_argument if twice < 0.
  static HalfInt from_twice(int twice);
  static HalfInt from_int(int j) { return from_twice(2 * j); }

  constexpr int twice() const { return m_twice; }
  constexpr double value() const { return 0.5 * m_twice; }
  constexpr bool is_integer() const { return m_twice % 2 == 0; }

  friend HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.m_twice + b.m_twice);
  }
  //! Throws std::invalid_argument if the result would be negative.
  friend HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.m_twice - b.m_twice);
  }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
  constexpr explicit HalfInt(int twice) : m_twice(twice) {}
  int m_twice = 0;
};

namespace angular {

//! Largest twice-j accepted by wigner6j.
constexpr int max_twice_j = 200;

//! |a-b| <= c <= a+b and a+b+c integer.
bool triangle_ok(HalfInt a, HalfInt b, HalfInt c);
bool triangle_ok_twice(int a, int b, int c);

//! Wigner 6j symbol {j1 j2 j3; j4 j5 j6}.
//! Racah sum evaluated in exact integer arithmetic; the result is
//! rounded to double once. Returns 0 if any triad fails triangle_ok.
//! Throws std::out_of_range if any twice-j exceeds max_twice_j.
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                HalfInt j6);
//! Same, with arguments given as twice-j integers.
double wigner6j_twice(int a, int b, int c, int d, int e, int f);

//! Tensor polarizability prefactor
//!   C(j) = sqrt( 5j(2j-1) / (6(j+1)(2j+1)(2j+3)) ),
//! zero for j < 1.
double tensor_prefactor(HalfInt jv);

} // namespace angular
} // namespace polkit
