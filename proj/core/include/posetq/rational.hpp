#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace posetq {

/// Exact arbitrary-precision rational. Valuations, lengths, pairs and
/// scalars are all carried in this type so that additive identities hold
/// exactly.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Accepts "7", "-3/4" and finite decimals such as "2.5" (converted exactly).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &value);

double to_double(const Rational &value);

int sign(const Rational &value);

Rational abs(const Rational &value);

/// Exact square root when the argument is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational &value);

/// A real number that stays exact when it can. Square roots of perfect
/// rational squares keep the rational form; anything else falls back to
/// double precision.
class Real {
public:
  Real() : Real(Rational(0)) {}
  Real(const Rational &exact); // NOLINT(google-explicit-constructor)
  static Real approximate(double value);
  static Real sqrt(const Rational &radicand);

  bool is_exact() const noexcept { return exact_.has_value(); }
  /// Precondition: is_exact().
  const Rational &exact() const;
  double value() const noexcept { return approx_; }

  friend Real operator+(const Real &a, const Real &b);
  friend Real operator-(const Real &a, const Real &b);
  friend Real operator*(const Real &a, const Real &b);
  friend Real operator/(const Real &a, const Real &b);
  friend Real operator-(const Real &a);

private:
  std::optional<Rational> exact_;
  double approx_ = 0.0;
};

std::string to_string(const Real &value);
std::ostream &operator<<(std::ostream &os, const Real &value);

} // namespace posetq
