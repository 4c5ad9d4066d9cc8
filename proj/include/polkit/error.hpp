#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace polkit {

//! Syntax error in a dataset file; line() is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        m_line(line), m_reason(reason) {}
  std::size_t line() const { return m_line; }
  const std::string &reason() const { return m_reason; }

private:
  std::size_t m_line;
  std::string m_reason;
};

//! A dataset that parsed but violates one or more physical invariants.
class DataError : public std::runtime_error {
public:
  explicit DataError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)),
        m_violations(std::move(violations)) {}
  const std::vector<std::string> &violations() const { return m_violations; }

private:
  static std::string join(const std::vector<std::string> &v) {
    std::string out = "invalid dataset";
    for (const auto &s : v)
      out += "\n  " + s;
    return out;
  }
  std::vector<std::string> m_violations;
};

//! Level label that is not declared in the dataset.
class UnknownLevel : public std::invalid_argument {
public:
  explicit UnknownLevel(const std::string &label)
      : std::invalid_argument("unknown state " + label) {}
};

//! Arithmetic between quantities carrying different unit tags.
class UnitMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

//! Inputs are well-formed but the computation is undefined for them
//! (zero energy denominator, negative residual decay rate, ...).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace polkit
