#include "chipart/rational.hpp"

#include <cfloat>
#include <cmath>
#include <cstring>
#include <ostream>

#include "chipart/error.hpp"

namespace chipart {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
  throw Error(ErrorKind::ParseError,
              "cannot parse number '" + std::string(text) + "': " + why);
}

// Decimal literal without sign: digits[.digits][(e|E)[+-]digits]
Rational parse_decimal(std::string_view whole, std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp_part = s.substr(e + 1);
    bool exp_neg = false;
    if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
      exp_neg = exp_part[0] == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) parse_fail(whole, "bad exponent");
    exponent = std::stol(std::string(exp_part));
    if (exp_neg) exponent = -exponent;
  }

  std::string digits;
  const auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(mantissa)) parse_fail(whole, "expected digits");
    digits = std::string(mantissa);
  } else {
    const std::string_view int_part = mantissa.substr(0, dot);
    const std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) parse_fail(whole, "expected digits");
    if (!int_part.empty() && !all_digits(int_part)) parse_fail(whole, "expected digits");
    if (!frac_part.empty() && !all_digits(frac_part)) parse_fail(whole, "expected digits");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  }

  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(mpz_class(num * scale), mpz_class(1));
  return Rational(num, scale);
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  q_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::NonFiniteCoefficient, "non-finite value");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) parse_fail(text, "empty");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) parse_fail(text, "expected integer/integer");
    const mpz_class d(std::string(den), 10);
    if (d == 0) parse_fail(text, "zero denominator");
    value = Rational(mpz_class(std::string(num), 10), d);
  } else {
    value = parse_decimal(text, s);
  }
  return negative ? -value : value;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;
  const bool negative = sign() < 0;
  const mpq_class a = ::abs(q_);

  // Anything at or beyond DBL_MAX + half an ulp rounds to infinity.
  mpq_class overflow_edge;
  {
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), 2, 1024);
    mpz_class half_ulp;
    mpz_ui_pow_ui(half_ulp.get_mpz_t(), 2, 970);
    overflow_edge = mpq_class(top - half_ulp);
  }
  if (a >= overflow_edge) {
    return negative ? -HUGE_VAL : HUGE_VAL;
  }

  // mpq_get_d truncates; pick between the truncation and the next double up.
  const double below = mpq_get_d(a.get_mpq_t());
  const double above = std::nextafter(below, HUGE_VAL);
  const mpq_class err_below = a - from_double(below).q_;
  double result = below;
  if (err_below != 0 && std::isfinite(above)) {
    const mpq_class err_above = from_double(above).q_ - a;
    const int c = cmp(err_below, err_above);
    if (c > 0) {
      result = above;
    } else if (c == 0) {
      std::uint64_t bits;
      std::memcpy(&bits, &below, sizeof bits);
      result = (bits & 1u) ? above : below;
    }
  }
  return negative ? -result : result;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::string Rational::to_fraction_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace chipart
