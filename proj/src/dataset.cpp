#include "polkit/dataset.hpp"
#include "polkit/constants.hpp"
#include "polkit/error.hpp"
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace polkit {

namespace {
constexpr std::string_view orbital_letters = "spdfg";

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view s, std::size_t line) {
  double x = 0.0;
  const auto *first = s.data();
  const auto *last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || !std::isfinite(x))
    throw ParseError(line, "invalid number '" + std::string(s) + "'");
  return x;
}

LevelLabel parse_label(std::string_view s, std::size_t line) {
  try {
    return LevelLabel::parse(s);
  } catch (const std::invalid_argument &e) {
    throw ParseError(line, e.what());
  }
}

Quantity parse_quantity(std::string_view v, std::string_view u, Unit unit,
                        std::size_t line) {
  const double value = parse_number(v, line);
  const double unc = parse_number(u, line);
  if (unc < 0.0)
    throw ParseError(line, "negative uncertainty " + std::string(u));
  return {value, unc, unit};
}

void expect_fields(const std::vector<std::string_view> &f, std::size_t n,
                   std::size_t line) {
  if (f.size() != n)
    throw ParseError(line, "'" + std::string(f[0]) + "' expects " +
                               std::to_string(n - 1) + " fields, got " +
                               std::to_string(f.size() - 1));
}
} // namespace

//==============================================================================
char orbital_letter(int l) {
  if (l < 0 || l >= static_cast<int>(orbital_letters.size()))
    return '?';
  return orbital_letters[static_cast<std::size_t>(l)];
}

LevelLabel LevelLabel::parse(std::string_view text) {
  const auto bad = [&](const char *why) {
    return std::invalid_argument("invalid level label '" + std::string(text) +
                                 "': " + why);
  };
  LevelLabel label;
  const char *p = text.data();
  const char *end = text.data() + text.size();

  auto [p1, ec1] = std::from_chars(p, end, label.n);
  if (ec1 != std::errc() || p1 == p)
    throw bad("expected principal quantum number");
  if (p1 == end)
    throw bad("missing orbital letter");
  const auto l = orbital_letters.find(*p1);
  if (l == std::string_view::npos)
    throw bad("orbital letter must be one of s,p,d,f,g");
  label.l = static_cast<int>(l);

  const char *p2 = p1 + 1;
  auto [p3, ec2] = std::from_chars(p2, end, label.j2);
  if (ec2 != std::errc() || p3 == p2)
    throw bad("expected 2j");
  if (std::string_view(p3, static_cast<std::size_t>(end - p3)) != "/2")
    throw bad("j must be written as <2j>/2");
  if (!label.is_valid())
    throw bad("inconsistent quantum numbers");
  return label;
}

bool LevelLabel::is_valid() const {
  if (n < 1 || l < 0 || l > 4 || j2 < 1 || j2 % 2 == 0)
    return false;
  return j2 == 2 * l + 1 || j2 == 2 * l - 1;
}

std::string LevelLabel::to_string() const {
  return std::to_string(n) + orbital_letter(l) + std::to_string(j2) + "/2";
}

std::string_view to_string(Multipole m) {
  return m == Multipole::scalar ? "scalar" : "tensor";
}

Multipole parse_multipole(std::string_view text) {
  if (text == "scalar")
    return Multipole::scalar;
  if (text == "tensor")
    return Multipole::tensor;
  throw std::invalid_argument("multipole must be 'scalar' or 'tensor', got '" +
                              std::string(text) + "'");
}

//==============================================================================
const Level *Dataset::find_level(const LevelLabel &label) const {
  auto it = std::find_if(levels.begin(), levels.end(),
                         [&](const Level &l) { return l.label == label; });
  return it == levels.end() ? nullptr : &*it;
}

const Level &Dataset::level(const LevelLabel &label) const {
  const auto *l = find_level(label);
  if (!l)
    throw UnknownLevel(label.to_string());
  return *l;
}

Quantity Dataset::tail(const LevelLabel &state, Multipole m) const {
  auto it = tails.find({state, m});
  return it == tails.end() ? Quantity::exact(0.0, Unit::polarizability)
                           : it->second;
}

//==============================================================================
Dataset parse_dataset(std::string_view text) {
  Dataset ds;
  bool have_core = false;
  std::size_t lineno = 0;

  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    const auto f = split_fields(line);
    if (f.empty())
      continue;

    if (f[0] == "level") {
      expect_fields(f, 3, lineno);
      ds.levels.push_back({parse_label(f[1], lineno), parse_number(f[2], lineno)});
    } else if (f[0] == "e1") {
      expect_fields(f, 5, lineno);
      ds.elements.push_back({parse_label(f[1], lineno),
                             parse_label(f[2], lineno),
                             parse_quantity(f[3], f[4], Unit::dipole, lineno)});
    } else if (f[0] == "core") {
      expect_fields(f, 3, lineno);
      if (have_core)
        throw ParseError(lineno, "duplicate 'core' record");
      ds.core_alpha = parse_quantity(f[1], f[2], Unit::polarizability, lineno);
      have_core = true;
    } else if (f[0] == "tail") {
      expect_fields(f, 5, lineno);
      const auto label = parse_label(f[1], lineno);
      Multipole m;
      try {
        m = parse_multipole(f[2]);
      } catch (const std::invalid_argument &e) {
        throw ParseError(lineno, e.what());
      }
      const auto q = parse_quantity(f[3], f[4], Unit::polarizability, lineno);
      if (!ds.tails.emplace(std::pair{label, m}, q).second)
        throw ParseError(lineno, "duplicate tail for " + label.to_string() +
                                     " " + std::string(to_string(m)));
    } else {
      throw ParseError(lineno, "unknown record '" + std::string(f[0]) + "'");
    }
  }

  if (auto violations = validate(ds); !violations.empty())
    throw DataError(std::move(violations));
  return ds;
}

Dataset load_dataset(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open dataset '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dataset(ss.str());
}

std::string print_dataset(const Dataset &ds) {
  std::string out;
  for (const auto &l : ds.levels)
    out += "level " + l.label.to_string() + " " + format_number(l.energy_cm) +
           "\n";
  for (const auto &e : ds.elements)
    out += "e1 " + e.lower.to_string() + " " + e.upper.to_string() + " " +
           format_number(e.d.value()) + " " + format_number(e.d.unc()) + "\n";
  out += "core " + format_number(ds.core_alpha.value()) + " " +
         format_number(ds.core_alpha.unc()) + "\n";
  for (const auto &[key, q] : ds.tails)
    out += "tail " + key.first.to_string() + " " +
           std::string(to_string(key.second)) + " " +
           format_number(q.value()) + " " + format_number(q.unc()) + "\n";
  return out;
}

//==============================================================================
std::vector<std::string> validate(const Dataset &ds) {
  std::vector<std::string> v;

  std::set<LevelLabel> seen;
  int ground_count = 0;
  for (const auto &l : ds.levels) {
    const auto name = l.label.to_string();
    if (!l.label.is_valid())
      v.push_back("level " + name + ": invalid quantum numbers");
    if (!seen.insert(l.label).second)
      v.push_back("level " + name + ": duplicate level");
    if (!std::isfinite(l.energy_cm) || l.energy_cm < 0.0)
      v.push_back("level " + name + ": energy must be non-negative");
    if (l.energy_cm == 0.0)
      ++ground_count;
  }
  if (!ds.levels.empty() && ground_count != 1)
    v.push_back("expected exactly one ground level at energy 0, found " +
                std::to_string(ground_count));

  std::set<std::pair<LevelLabel, LevelLabel>> pairs;
  for (const auto &e : ds.elements) {
    const auto name = "e1 " + e.lower.to_string() + " " + e.upper.to_string();
    if (e.d.unit() != Unit::dipole)
      v.push_back(name + ": matrix element must be in e*a0");
    if (!(e.d.value() > 0.0))
      v.push_back(name + ": matrix element must be positive");

    const auto *lo = ds.find_level(e.lower);
    const auto *up = ds.find_level(e.upper);
    if (!lo)
      v.push_back(name + ": unknown level " + e.lower.to_string());
    if (!up)
      v.push_back(name + ": unknown level " + e.upper.to_string());

    if (std::abs(e.lower.l - e.upper.l) != 1 ||
        std::abs(e.lower.j2 - e.upper.j2) > 2)
      v.push_back(name + ": violates E1 selection rules");
    if (lo && up && !(lo->energy_cm < up->energy_cm))
      v.push_back(name + ": lower level is not below upper level");

    const auto key = std::minmax(e.lower, e.upper);
    if (!pairs.insert(key).second)
      v.push_back(name + ": duplicate matrix element");
  }

  if (ds.core_alpha.unit() != Unit::polarizability)
    v.push_back("core: must be in a0^3");
  if (!(ds.core_alpha.value() > 0.0))
    v.push_back("core: polarizability must be positive");

  for (const auto &[key, q] : ds.tails) {
    const auto name = "tail " + key.first.to_string() + " " +
                      std::string(to_string(key.second));
    if (!ds.find_level(key.first))
      v.push_back(name + ": unknown level " + key.first.to_string());
    if (q.unit() != Unit::polarizability)
      v.push_back(name + ": must be in a0^3");
    if (key.second == Multipole::tensor && key.first.j2 < 2)
      v.push_back(name + ": tensor polarizability needs j >= 1");
  }
  return v;
}

Quantity energy_difference_au(const Dataset &ds, const LevelLabel &a,
                              const LevelLabel &b) {
  const double de = ds.level(b).energy_cm - ds.level(a).energy_cm;
  return Quantity::exact(de / constants::hartree_in_wavenumber, Unit::hartree);
}

} // namespace polkit
