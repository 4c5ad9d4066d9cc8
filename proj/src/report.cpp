#include "polkit/report.hpp"
#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <stdexcept>

namespace polkit::report {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 4> kind_names{{
    {Kind::polarizability, "polarizability"},
    {Kind::bbr, "bbr"},
    {Kind::lifetime, "lifetime"},
    {Kind::extract, "extract"},
}};

std::string fixed(double x, int decimals) {
  if (x == 0.0)
    x = 0.0; // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", std::max(decimals, 0), x);
  return buf;
}

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
  return s;
}

} // namespace

std::string_view to_string(Kind k) {
  for (const auto &[kind, name] : kind_names)
    if (kind == k)
      return name;
  return "?";
}

Kind parse_kind(std::string_view text) {
  for (const auto &[kind, name] : kind_names)
    if (name == text)
      return kind;
  throw std::invalid_argument("unknown report kind '" + std::string(text) +
                              "'");
}

const Field *Report::total(std::string_view name) const {
  auto it = std::find_if(totals.begin(), totals.end(),
                         [&](const Field &f) { return f.name == name; });
  return it == totals.end() ? nullptr : &*it;
}

//==============================================================================
double round_half_even(double x, int decimals) {
  if (decimals >= 0) {
    const double scale = std::pow(10.0, decimals);
    return std::nearbyint(x * scale) / scale;
  }
  const double scale = std::pow(10.0, -decimals);
  return std::nearbyint(x / scale) * scale;
}

std::string format_uncertain(double value, double unc) {
  if (unc == 0.0) {
    if (value == 0.0)
      return "0";
    const int mag = static_cast<int>(std::floor(std::log10(std::abs(value))));
    const int decimals = std::clamp(3 - mag, 0, 8);
    return fixed(round_half_even(value, decimals), decimals);
  }

  int exponent = static_cast<int>(std::floor(std::log10(unc)));
  double leading = std::nearbyint(unc * std::pow(10.0, 2 - exponent));
  if (leading >= 1000.0) { // log10 landed just below a power of ten
    ++exponent;
    leading = std::nearbyint(unc * std::pow(10.0, 2 - exponent));
  }

  int decimals;
  double rounded_unc;
  if (leading <= 354.0) {
    decimals = 1 - exponent;
    rounded_unc = round_half_even(unc, decimals);
  } else if (leading <= 949.0) {
    decimals = -exponent;
    rounded_unc = round_half_even(unc, decimals);
  } else {
    decimals = -exponent;
    rounded_unc = std::pow(10.0, exponent + 1);
  }

  const double rounded_value = round_half_even(value, decimals);
  std::string out = fixed(rounded_value, decimals) + "(";
  if (decimals > 0 && rounded_unc >= 1.0)
    out += fixed(rounded_unc, decimals);
  else if (decimals > 0)
    out += fixed(std::nearbyint(rounded_unc * std::pow(10.0, decimals)), 0);
  else
    out += fixed(rounded_unc, 0);
  return out + ")";
}

std::string format_full(double value, double unc) {
  return shortest(value) + " +/- " + shortest(unc);
}

//==============================================================================
std::string render_table(const Report &r, bool full_precision) {
  const auto fmt = [&](const Quantity &q) {
    return full_precision ? format_full(q.value(), q.unc())
                          : format_uncertain(q.value(), q.unc());
  };

  std::string out = "# " + std::string(to_string(r.kind)) + "\n";
  for (const auto &[key, value] : r.inputs)
    out += "# " + key + ": " + value + "\n";

  // Columns in order of first appearance
  std::vector<std::pair<std::string, Unit>> columns;
  for (const auto &row : r.rows)
    for (const auto &f : row.fields)
      if (std::none_of(columns.begin(), columns.end(),
                       [&](const auto &c) { return c.first == f.name; }))
        columns.emplace_back(f.name, f.q.unit());

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"transition"});
  for (const auto &[name, unit] : columns)
    cells.back().push_back(name + " [" + std::string(unit_symbol(unit)) + "]");
  for (const auto &row : r.rows) {
    std::vector<std::string> line{row.label};
    for (const auto &[name, unit] : columns) {
      auto it = std::find_if(row.fields.begin(), row.fields.end(),
                             [&](const Field &f) { return f.name == name; });
      line.push_back(it == row.fields.end() ? "" : fmt(it->q));
    }
    cells.push_back(std::move(line));
  }

  std::size_t label_width = 0;
  for (const auto &line : cells)
    label_width = std::max(label_width, line[0].size());
  for (const auto &t : r.totals)
    label_width = std::max(label_width, t.name.size());
  std::vector<std::size_t> widths(columns.size(), 0);
  for (const auto &line : cells)
    for (std::size_t i = 1; i < line.size(); ++i)
      widths[i - 1] = std::max(widths[i - 1], line[i].size());

  if (!r.rows.empty()) {
    for (const auto &line : cells) {
      std::string text = pad(line[0], label_width);
      for (std::size_t i = 1; i < line.size(); ++i)
        text += "  " + pad(line[i], widths[i - 1]);
      out += rtrim(text) + "\n";
    }
    out += "\n";
  }
  for (const auto &t : r.totals)
    out += pad(t.name, label_width) + "  " + fmt(t.q) + " " +
           std::string(unit_symbol(t.q.unit())) + "\n";
  return out;
}

//==============================================================================
namespace {

json field_to_json(const Field &f) {
  return json{{"name", f.name},
              {"value", f.q.value()},
              {"unc", f.q.unc()},
              {"unit", std::string(unit_symbol(f.q.unit()))}};
}

Field field_from_json(const json &j) {
  return {j.at("name").get<std::string>(),
          Quantity(j.at("value").get<double>(), j.at("unc").get<double>(),
                   unit_from_symbol(j.at("unit").get<std::string>()))};
}

} // namespace

std::string to_machine(const Report &r) {
  json j;
  j["kind"] = std::string(to_string(r.kind));
  json inputs = json::object();
  for (const auto &[key, value] : r.inputs)
    inputs[key] = value;
  j["inputs"] = std::move(inputs);
  json rows = json::array();
  for (const auto &row : r.rows) {
    json fields = json::array();
    for (const auto &f : row.fields)
      fields.push_back(field_to_json(f));
    rows.push_back(json{{"label", row.label}, {"fields", std::move(fields)}});
  }
  j["rows"] = std::move(rows);
  json totals = json::array();
  for (const auto &t : r.totals)
    totals.push_back(field_to_json(t));
  j["totals"] = std::move(totals);
  return j.dump(2) + "\n";
}

Report from_machine(std::string_view text) {
  try {
    const auto j = json::parse(text);
    Report r;
    r.kind = parse_kind(j.at("kind").get<std::string>());
    for (const auto &[key, value] : j.at("inputs").items())
      r.inputs.emplace_back(key, value.get<std::string>());
    for (const auto &row : j.at("rows")) {
      Row out{row.at("label").get<std::string>(), {}};
      for (const auto &f : row.at("fields"))
        out.fields.push_back(field_from_json(f));
      r.rows.push_back(std::move(out));
    }
    for (const auto &t : j.at("totals"))
      r.totals.push_back(field_from_json(t));
    return r;
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

} // namespace polkit::report
