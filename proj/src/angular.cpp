#include "polkit/angular.hpp"
#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace polkit {

HalfInt HalfInt::from_twice(int twice) {
  if (twice < 0)
    throw std::invalid_argument("negative angular momentum (2j = " +
                                std::to_string(twice) + ")");
  return HalfInt(twice);
}

namespace angular {

using boost::multiprecision::cpp_int;

namespace {

// Largest factorial argument reachable from the Racah sum: (t+1)! with
// t <= (sum of four j's) <= 2 * max_twice_j.
constexpr int max_factorial = 2 * max_twice_j + 1;

const std::vector<cpp_int> &factorials() {
  static const std::vector<cpp_int> table = [] {
    std::vector<cpp_int> f(max_factorial + 1);
    f[0] = 1;
    for (int i = 1; i <= max_factorial; ++i)
      f[i] = f[i - 1] * i;
    return f;
  }();
  return table;
}

// Exact num/den -> double. Operands may exceed the double range.
double ratio_to_double(const cpp_int &num, const cpp_int &den) {
  if (num == 0)
    return 0.0;
  const long shift = static_cast<long>(boost::multiprecision::msb(den)) -
                     static_cast<long>(boost::multiprecision::msb(num)) + 80;
  const cpp_int q = shift >= 0 ? cpp_int((num << shift) / den)
                               : cpp_int(num / (den << -shift));
  return std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
}

} // namespace

bool triangle_ok_twice(int a, int b, int c) {
  return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 &&
         std::abs(a - b) <= c && c <= a + b;
}

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
  return triangle_ok_twice(a.twice(), b.twice(), c.twice());
}

//==============================================================================
double wigner6j_twice(int a, int b, int c, int d, int e, int f) {
  for (int x : {a, b, c, d, e, f})
    if (x > max_twice_j)
      throw std::out_of_range("wigner6j: 2j = " + std::to_string(x) +
                              " exceeds " + std::to_string(max_twice_j));

  // Triads: (j1 j2 j3), (j1 j5 j6), (j4 j2 j6), (j4 j5 j3)
  const std::array<std::array<int, 3>, 4> triads{
      {{a, b, c}, {a, e, f}, {d, b, f}, {d, e, c}}};
  for (const auto &t : triads)
    if (!triangle_ok_twice(t[0], t[1], t[2]))
      return 0.0;

  const auto &fact = factorials();

  // Triangle coefficients, squared, as one exact fraction
  cpp_int delta_num = 1, delta_den = 1;
  for (const auto &[x, y, z] : triads) {
    delta_num *= fact[(x + y - z) / 2] * fact[(x - y + z) / 2] *
                 fact[(-x + y + z) / 2];
    delta_den *= fact[(x + y + z) / 2 + 1];
  }

  std::array<int, 4> alpha{};
  for (std::size_t i = 0; i < 4; ++i)
    alpha[i] = (triads[i][0] + triads[i][1] + triads[i][2]) / 2;
  const std::array<int, 3> beta{(a + b + d + e) / 2, (b + c + e + f) / 2,
                                (c + a + f + d) / 2};

  const int tmin = *std::max_element(alpha.begin(), alpha.end());
  const int tmax = *std::min_element(beta.begin(), beta.end());

  // Common denominator makes every Racah term an integer.
  cpp_int common = 1;
  for (int x : alpha)
    common *= fact[tmax - x];
  for (int y : beta)
    common *= fact[y - tmin];

  cpp_int sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    cpp_int den = 1;
    for (int x : alpha)
      den *= fact[t - x];
    for (int y : beta)
      den *= fact[y - t];
    cpp_int term = fact[t + 1] * common / den;
    if (t % 2)
      sum -= term;
    else
      sum += term;
  }
  if (sum == 0)
    return 0.0;

  // value^2 = sum^2 * delta^2 / common^2
  const double squared =
      ratio_to_double(sum * sum * delta_num, common * common * delta_den);
  const double magnitude = std::sqrt(squared);
  return sum < 0 ? -magnitude : magnitude;
}

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                HalfInt j6) {
  return wigner6j_twice(j1.twice(), j2.twice(), j3.twice(), j4.twice(),
                        j5.twice(), j6.twice());
}

//==============================================================================
double tensor_prefactor(HalfInt jv) {
  if (jv.twice() < 2)
    return 0.0;
  const double j = jv.value();
  return std::sqrt(5.0 * j * (2.0 * j - 1.0) /
                   (6.0 * (j + 1.0) * (2.0 * j + 1.0) * (2.0 * j + 3.0)));
}

} // namespace angular
} // namespace polkit
