#include <posetq/error.hpp>
#include <posetq/rational.hpp>

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace posetq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    raise(ErrorKind::ParseError,
          "not a rational number: '" + std::string(whole) + "'");
  }
  return Integer(std::string(s));
}

std::optional<Integer> exact_isqrt(const Integer &n) {
  if (n < 0) {
    return std::nullopt;
  }
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) {
    return std::nullopt;
  }
  return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(body.substr(0, slash), text);
    Integer den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
      raise(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    out = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    Integer w = whole.empty() ? Integer(0) : parse_integer(whole, text);
    Integer f = parse_integer(frac, text);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    out = Rational(w * scale + f, scale);
  } else {
    out = Rational(parse_integer(body, text));
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational &value) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(value);
  if (boost::multiprecision::denominator(value) != 1) {
    os << '/' << boost::multiprecision::denominator(value);
  }
  return os.str();
}

double to_double(const Rational &value) { return value.convert_to<double>(); }

int sign(const Rational &value) { return value.sign(); }

Rational abs(const Rational &value) { return value.sign() < 0 ? Rational(-value) : value; }

std::optional<Rational> exact_sqrt(const Rational &value) {
  if (value.sign() < 0) {
    return std::nullopt;
  }
  auto num = exact_isqrt(boost::multiprecision::numerator(value));
  auto den = exact_isqrt(boost::multiprecision::denominator(value));
  if (!num || !den) {
    return std::nullopt;
  }
  return Rational(*num, *den);
}

Real::Real(const Rational &exact) : exact_(exact), approx_(to_double(exact)) {}

Real Real::approximate(double value) {
  Real r;
  r.exact_.reset();
  r.approx_ = value;
  return r;
}

Real Real::sqrt(const Rational &radicand) {
  if (radicand.sign() < 0) {
    raise(ErrorKind::InvalidArgument, "square root of negative " + to_string(radicand));
  }
  if (auto root = exact_sqrt(radicand)) {
    return Real(*root);
  }
  return approximate(std::sqrt(to_double(radicand)));
}

const Rational &Real::exact() const {
  if (!exact_) {
    raise(ErrorKind::InvalidArgument, "value is not exact");
  }
  return *exact_;
}

Real operator+(const Real &a, const Real &b) {
  if (a.exact_ && b.exact_) {
    return Real(Rational(*a.exact_ + *b.exact_));
  }
  return Real::approximate(a.approx_ + b.approx_);
}

Real operator-(const Real &a, const Real &b) {
  if (a.exact_ && b.exact_) {
    return Real(Rational(*a.exact_ - *b.exact_));
  }
  return Real::approximate(a.approx_ - b.approx_);
}

Real operator*(const Real &a, const Real &b) {
  if (a.exact_ && b.exact_) {
    return Real(Rational(*a.exact_ * *b.exact_));
  }
  return Real::approximate(a.approx_ * b.approx_);
}

Real operator/(const Real &a, const Real &b) {
  if (a.exact_ && b.exact_) {
    if (b.exact_->sign() == 0) {
      raise(ErrorKind::InvalidArgument, "division by zero");
    }
    return Real(Rational(*a.exact_ / *b.exact_));
  }
  return Real::approximate(a.approx_ / b.approx_);
}

Real operator-(const Real &a) {
  if (a.exact_) {
    return Real(Rational(-*a.exact_));
  }
  return Real::approximate(-a.approx_);
}

std::string to_string(const Real &value) {
  if (value.is_exact()) {
    return to_string(value.exact());
  }
  std::ostringstream os;
  os.precision(17);
  os << value.value();
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Real &value) {
  return os << to_string(value);
}

} // namespace posetq
