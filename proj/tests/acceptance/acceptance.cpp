// Acceptance suite: Ca+ polarizability breakdowns, the blackbody clock
// shift, the 4p lifetime analysis, and the angular-algebra identities. Prints one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include "oracles.hpp"
#include "polkit/angular.hpp"
#include "polkit/bbr.hpp"
#include "polkit/commands.hpp"
#include "polkit/polarizability.hpp"
#include "polkit/radiative.hpp"
#include "polkit/report.hpp"
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

using namespace polkit;

namespace {

const std::string golden_path = POLKIT_DATA_DIR "/ca_plus.dat";

LevelLabel L(const char *s) { return LevelLabel::parse(s); }

// Collects failure messages for one criterion
struct Check {
  std::vector<std::string> failures;
  int count = 0;

  void expect(bool ok, const std::string &what) {
    ++count;
    if (!ok)
      failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string &what) {
    std::ostringstream s;
    s.precision(10);
    s << what << ": got " << got << ", want " << want << " +/- " << tol;
    expect(std::abs(got - want) <= tol, s.str());
  }
};

int failed = 0;

void report(int id, const std::string &title, const Check &c,
            double elapsed_ms) {
  const bool ok = c.failures.empty();
  failed += !ok;
  std::printf("[%s] %d. %s (%d checks, %.0f ms)\n", ok ? "PASS" : "FAIL", id,
              title.c_str(), c.count, elapsed_ms);
  for (const auto &f : c.failures)
    std::printf("       %s\n", f.c_str());
}

template <class F> void criterion(int id, const std::string &title, F &&body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception &e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const auto t1 = std::chrono::steady_clock::now();
  report(id, title, c,
         std::chrono::duration<double, std::milli>(t1 - t0).count());
}

// A reference value with the number of printed decimals.
struct Printed {
  double value;
  int decimals;
  double unc = -1.0; // < 0: not printed
  int unc_decimals = 0;
};

// Agreement at printed precision: within half a unit of the last printed
// digit, and never tighter than 0.005 a0^3 (energy-source rounding).
double row_tolerance(int decimals) {
  return std::max(0.005, 0.5 * std::pow(10.0, -decimals)) + 1e-12;
}

struct TableRow {
  const char *intermediate;
  Printed alpha;
};

void check_rows(Check &c, const PolarizabilityBreakdown &b,
                const std::vector<TableRow> &table, const std::string &tag) {
  c.expect(b.main.size() == table.size(),
           tag + ": row count " + std::to_string(b.main.size()));
  for (std::size_t i = 0; i < std::min(b.main.size(), table.size()); ++i) {
    const auto &row = table[i];
    const auto &got = b.main[i];
    const auto name = tag + " " + b.state.to_string() + "-" + row.intermediate;
    c.expect(got.intermediate == L(row.intermediate), name + ": row order");
    const auto &q = got.value(b.multipole);
    c.near(q.value(), row.alpha.value, row_tolerance(row.alpha.decimals), name);
    if (row.alpha.unc >= 0)
      c.near(q.unc(), row.alpha.unc, row_tolerance(row.alpha.unc_decimals),
             name + " unc");
  }
}

void check_printed(Check &c, const Quantity &q, const Printed &p,
                   const std::string &name) {
  c.near(q.value(), p.value, row_tolerance(p.decimals), name);
  if (p.unc >= 0)
    c.near(q.unc(), p.unc, row_tolerance(p.unc_decimals), name + " unc");
}

// Exact agreement after rounding to the printed decimals.
void check_rounded(Check &c, const Quantity &q, const Printed &p,
                   const std::string &name) {
  using report::round_half_even;
  const double v = round_half_even(q.value(), p.decimals);
  const double u = round_half_even(q.unc(), p.unc_decimals);
  std::ostringstream s;
  s << name << ": " << q.value() << "(" << q.unc() << ") rounds to " << v
    << "(" << u << "), want " << p.value << "(" << p.unc << ")";
  c.expect(std::abs(v - p.value) < 1e-9 && std::abs(u - p.unc) < 1e-9,
           s.str());
}

std::string run_cli(const std::string &args) {
  const std::string cmd = "\"" POLKIT_BINARY "\" --dataset \"" + golden_path +
                          "\" " + args + " 2>&1";
  std::string out;
  FILE *pipe = ::popen(cmd.c_str(), "r");
  if (!pipe)
    return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  out += "<exit " + std::to_string(::pclose(pipe)) + ">";
  return out;
}

} // namespace

int main() {
  const auto ds = load_dataset(golden_path);

  criterion(1, "4s1/2 scalar polarizability breakdown", [&](Check &c) {
    const auto b = assemble_breakdown(ds, L("4s1/2"), Multipole::scalar);
    check_rows(c, b,
               {{"4p1/2", {24.4, 1, 0.5, 1}},
                {"5p1/2", {0.007, 3}},
                {"6p1/2", {0.007, 3}},
                {"4p3/2", {48.4, 1, 1.0, 1}},
                {"5p3/2", {0.010, 3}},
                {"6p3/2", {0.012, 3}}},
               "alpha0");
    check_printed(c, b.core, {3.25, 2, 0.17, 2}, "alpha_core");
    check_printed(c, b.tail, {0.006, 3, 0.006, 3}, "alpha_tail");
    check_rounded(c, b.total, {76.1, 1, 1.1, 1}, "alpha_total");
  });

  criterion(2, "3d5/2 scalar and tensor polarizability breakdowns",
            [&](Check &c) {
    const auto s = assemble_breakdown(ds, L("3d5/2"), Multipole::scalar);
    check_rows(c, s,
               {{"4p3/2", {22.78, 2, 0.25, 2}},
                {"5p3/2", {0.011, 3, 0.002, 3}},
                {"6p3/2", {0.004, 3}},
                {"4f5/2", {0.120, 3, 0.003, 3}},
                {"5f5/2", {0.039, 3, 0.002, 3}},
                {"6f5/2", {0.018, 3, 0.001, 3}},
                {"7f5/2", {0.010, 3}},
                {"8f5/2", {0.006, 3}},
                {"9f5/2", {0.004, 3}},
                {"10f5/2", {0.003, 3}},
                {"11f5/2", {0.002, 3}},
                {"12f5/2", {0.002, 3}},
                {"4f7/2", {2.392, 3, 0.053, 3}},
                {"5f7/2", {0.773, 3, 0.033, 3}},
                {"6f7/2", {0.350, 3, 0.012, 3}},
                {"7f7/2", {0.191, 3, 0.007, 3}},
                {"8f7/2", {0.117, 3, 0.004, 3}},
                {"9f7/2", {0.077, 3, 0.003, 3}},
                {"10f7/2", {0.054, 3, 0.002, 3}},
                {"11f7/2", {0.039, 3, 0.001, 3}},
                {"12f7/2", {0.029, 3, 0.001, 3}}},
               "alpha0");
    check_printed(c, s.core, {3.25, 2, 0.17, 2}, "alpha0 core");
    check_printed(c, s.tail, {1.7, 1, 1.1, 1}, "alpha0 tail");
    check_rounded(c, s.total, {32.0, 1, 1.1, 1}, "alpha0 total");

    const auto t = assemble_breakdown(ds, L("3d5/2"), Multipole::tensor);
    check_rows(c, t,
               {{"4p3/2", {-22.78, 2, 0.25, 2}},
                {"5p3/2", {-0.011, 3, 0.002, 3}},
                {"6p3/2", {-0.004, 3}},
                {"4f5/2", {0.137, 3, 0.003, 3}},
                {"5f5/2", {0.044, 3, 0.002, 3}},
                {"6f5/2", {0.020, 3, 0.001, 3}},
                {"7f5/2", {0.011, 3}},
                {"8f5/2", {0.007, 3}},
                {"9f5/2", {0.004, 3}},
                {"10f5/2", {0.003, 3}},
                {"11f5/2", {0.002, 3}},
                {"12f5/2", {0.002, 3}},
                {"4f7/2", {-0.854, 3, 0.019, 3}},
                {"5f7/2", {-0.276, 3, 0.012, 3}},
                {"6f7/2", {-0.125, 3, 0.004, 3}},
                {"7f7/2", {-0.068, 3, 0.003, 3}},
                {"8f7/2", {-0.042, 3, 0.002, 3}},
                {"9f7/2", {-0.028, 3, 0.001, 3}},
                {"10f7/2", {-0.019, 3, 0.001, 3}},
                {"11f7/2", {-0.014, 3, 0.001, 3}},
                {"12f7/2", {-0.011, 3}}},
               "alpha2");
    check_printed(c, t.tail, {-0.5, 1, 0.3, 1}, "alpha2 tail");
    check_rounded(c, t.total, {-24.5, 1, 0.4, 1}, "alpha2 total");
  });

  criterion(3, "BBR clock shift at 300 K = 0.380(13) Hz", [&](Check &c) {
    const auto g = assemble_breakdown(ds, L("4s1/2"), Multipole::scalar).total;
    const auto e = assemble_breakdown(ds, L("3d5/2"), Multipole::scalar).total;
    const auto shift = bbr::clock_shift(g, e, bbr::Conditions{300.0, 0.0});
    c.near(shift.value(), 0.380, 0.0005, "shift [Hz]");
    c.near(shift.unc(), 0.013, 0.001, "uncertainty [Hz], quadrature");
  });

  criterion(4, "4p lifetimes and Einstein A coefficients", [&](Check &c) {
    const auto ch = [](const char *up, const char *lo, double a) {
      return DecayChannel{L(up), L(lo), {a, 0.0, Unit::megahertz}};
    };
    const std::vector<DecayChannel> p12{ch("4p1/2", "4s1/2", 136.0),
                                        ch("4p1/2", "3d3/2", 9.452)};
    const std::vector<DecayChannel> p32{ch("4p3/2", "4s1/2", 139.7),
                                        ch("4p3/2", "3d3/2", 0.997),
                                        ch("4p3/2", "3d5/2", 8.877)};
    c.near(lifetime(p12).value(), 6.875, 0.001, "tau(4p1/2) [ns]");
    c.near(lifetime(p32).value(), 6.686, 0.001, "tau(4p3/2) [ns]");

    for (const auto &ref : {p12, p32}) {
      const auto computed = decay_channels(ds, ref.front().upper);
      for (const auto &want : ref) {
        const auto it = std::find_if(
            computed.begin(), computed.end(),
            [&](const DecayChannel &x) { return x.lower == want.lower; });
        const auto name = "A(" + want.upper.to_string() + "->" +
                          want.lower.to_string() + ") [MHz]";
        c.expect(it != computed.end(), name + " missing");
        if (it != computed.end())
          c.near(it->A.value(), want.A.value(), 0.05, name);
      }
    }
  });

  criterion(5, "4p-4s matrix elements from measured lifetimes", [&](Check &c) {
    struct Case {
      const char *upper;
      double tau, tau_unc, d, d_unc, diff;
    };
    for (const auto &k : {Case{"4p1/2", 7.098, 0.020, 2.849, 0.004, 1.7},
                          Case{"4p3/2", 6.924, 0.019, 4.023, 0.006, 1.9}}) {
      const auto r = commands::extract(ds, golden_path, L(k.upper), L("4s1/2"),
                                       {k.tau, k.tau_unc, Unit::nanosecond});
      const auto name = std::string("<") + k.upper + "||D||4s1/2>";
      c.near(r.total("d_expt")->q.value(), k.d, 0.001, name);
      c.near(r.total("d_expt")->q.unc(), k.d_unc, 0.001, name + " unc");
      c.near(r.total("diff_percent")->q.value(), k.diff, 0.05,
             name + " theory-expt difference [%]");
    }
  });

  criterion(6, "Wigner 6j: symmetry, orthogonality, Racah oracle (2j <= 15)",
            [&](Check &c) {
    constexpr int N = 16;
    const auto key = [](int a, int b, int cc, int d, int e, int f) {
      return ((((a * N + b) * N + cc) * N + d) * N + e) * N + f;
    };
    const auto valid = [](int a, int b, int cc, int d, int e, int f) {
      return oracle::triad(a, b, cc) && oracle::triad(a, e, f) &&
             oracle::triad(d, b, f) && oracle::triad(d, e, cc);
    };

    std::unordered_map<int, double> table;
    int oracle_bad = 0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int cc = 0; cc < N; ++cc)
          for (int d = 0; d < N; ++d)
            for (int e = 0; e < N; ++e)
              for (int f = 0; f < N; ++f) {
                const double v = angular::wigner6j_twice(a, b, cc, d, e, f);
                if (!valid(a, b, cc, d, e, f)) {
                  if (v != 0.0)
                    ++oracle_bad;
                  continue;
                }
                table.emplace(key(a, b, cc, d, e, f), v);
                const double ref = oracle::racah_6j(a, b, cc, d, e, f);
                if (!oracle::close_rel(v, ref, 1e-12, 1e-15))
                  ++oracle_bad;
              }
    c.expect(oracle_bad == 0,
             std::to_string(oracle_bad) + " mismatches against Racah oracle");
    c.expect(table.size() == 363196,
             "valid symbols: " + std::to_string(table.size()));

    int sym_bad = 0;
    for (const auto &[k, v] : table) {
      std::array<int, 6> s{};
      int rest = k;
      for (int i = 5; i >= 0; --i) {
        s[i] = rest % N;
        rest /= N;
      }
      for (const auto &t : oracle::sixj_orbit(s)) {
        const double w = table.at(key(t[0], t[1], t[2], t[3], t[4], t[5]));
        if (!oracle::close_rel(v, w, 1e-12, 1e-15))
          ++sym_bad;
      }
    }
    c.expect(sym_bad == 0, std::to_string(sym_bad) + " symmetry violations");

    // sum_x (2x+1) {a b x; c d p}{a b x; c d q} = delta_pq / (2p+1)
    // for all a, b, c, d, p, q <= 15/2; x runs over its full range.
    int orth_bad = 0;
    double worst = 0.0;
    std::vector<double> m(31 * N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int cc = 0; cc < N; ++cc)
          for (int d = 0; d < N; ++d) {
            for (int x = 0; x <= 30; ++x)
              for (int p = 0; p < N; ++p)
                m[x * N + p] = angular::wigner6j_twice(a, b, x, cc, d, p);
            for (int p = 0; p < N; ++p)
              for (int q = p; q < N; ++q) {
                double sum = 0.0;
                for (int x = 0; x <= 30; ++x)
                  sum += (x + 1) * m[x * N + p] * m[x * N + q];
                const bool allowed =
                    oracle::triad(a, d, p) && oracle::triad(cc, b, p);
                const double want = (p == q && allowed) ? 1.0 / (p + 1) : 0.0;
                const double err = std::abs(sum - want);
                worst = std::max(worst, err);
                if (err > 1e-12)
                  ++orth_bad;
              }
          }
    std::ostringstream s;
    s << orth_bad << " orthogonality violations (worst " << worst << ")";
    c.expect(orth_bad == 0, s.str());
  });

  criterion(7, "Polarizability and BBR property suite", [&](Check &c) {
    const auto b = assemble_breakdown(ds, L("3d5/2"), Multipole::scalar);
    std::map<int, double> ratio;
    for (const auto &k : b.main) {
      const double r = k.alpha2->value() / k.alpha0.value();
      const double want =
          tensor_to_scalar_ratio(L("3d5/2").j(), k.intermediate.j());
      auto [it, fresh] = ratio.emplace(k.intermediate.j2, r);
      c.expect(std::abs(r - it->second) <= 1e-12 * std::abs(it->second),
               "ratio not constant for " + k.intermediate.to_string());
      c.expect(std::abs(r - want) <= 1e-12 * std::abs(want),
               "ratio differs from 6j weight for " +
                   k.intermediate.to_string());
    }
    c.near(ratio.at(3), -1.0, 1e-12, "alpha2/alpha0 for 3d5/2 -> p3/2");

    for (const auto *state : {"4s1/2", "3d5/2"})
      for (auto m : {Multipole::scalar, Multipole::tensor}) {
        if (m == Multipole::tensor && L(state).j2 < 2)
          continue;
        const auto bd = assemble_breakdown(ds, L(state), m);
        double var =
            bd.tail.unc() * bd.tail.unc() + bd.core.unc() * bd.core.unc();
        for (const auto &k : bd.main)
          var += k.value(m).unc() * k.value(m).unc();
        c.near(bd.total.unc() * bd.total.unc() - var, 0.0,
               1e-12 * bd.total.unc() * bd.total.unc(),
               std::string("quadrature identity ") + state);
      }

    const Quantity g{76.1, 1.1, Unit::polarizability};
    const Quantity e{32.0, 1.1, Unit::polarizability};
    for (double t : {1.0, 77.0, 150.0, 293.15, 300.0, 310.5, 1000.0}) {
      const double s1 = bbr::clock_shift(g, e, {t, 0.0}).value();
      const double s2 = bbr::clock_shift(g, e, {2 * t, 0.0}).value();
      c.near(s2 / s1, 16.0, 16.0 * 1e-12, "shift(2T)/shift(T) at T=" +
                                             std::to_string(t));
    }
  });

  criterion(8, "CLI output is deterministic", [&](Check &c) {
    for (const auto *fmt : {"table", "machine"})
      for (const auto *cmd :
           {"polarizability --state 4s1/2", "polarizability --state 3d5/2",
            "polarizability --state 3d5/2 --multipole tensor", "bbr",
            "lifetime --state 4p3/2",
            "extract --upper 4p1/2 --lower 4s1/2 --tau 7.098 --tau-unc 0.02"}) {
        const std::string args = std::string("--format ") + fmt + " " + cmd;
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        c.expect(first.ends_with("<exit 0>"), args + ": non-zero exit");
        c.expect(first == second, args + ": output differs between runs");
      }
  });

  std::printf("%s: %d criteria failed\n", failed ? "FAILED" : "PASSED",
              failed);
  return failed;
}
