#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rtlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Errors split into two families so the CLI can map them onto exit codes:
/// precondition violations exit with 2, exhausted budgets or caps with 3.
enum class ErrorKind { Precondition, Budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error precondition_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Precondition, std::move(code), message);
}

inline Error budget_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Budget, std::move(code), message);
}

inline std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace rtlab
