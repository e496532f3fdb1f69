#pragma once

// Exact rational arithmetic helpers, parsing of decimal/fraction literals and
// the a + b*pi representation used for times and positions on the torus.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dispobs {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer Fourier mode index.
using Mode = std::int64_t;

/// Raised for malformed input or a violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two independently computed answers disagree. Never expected.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(Mode v) {
  Rational q;
  q.get_num() = Integer(static_cast<long>(v));
  q.get_den() = 1;
  return q;
}

inline Integer to_integer(Mode v) { return Integer(static_cast<long>(v)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_div(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Converts a GMP integer that is known to fit.
inline Mode to_mode(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("integer out of range: " + z.get_str());
  return static_cast<Mode>(z.get_si());
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Parses "[-+]digits[.digits][e[-+]digits]" exactly.
inline Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  unsigned frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw InvalidArgument("not a number: '" + original + "'");
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw InvalidArgument("not a number: '" + original + "'");
    std::string exp_str(s.substr(i + 1));
    if (exp_str.empty()) throw InvalidArgument("bad exponent in '" + original + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_str, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad exponent in '" + original + "'");
    }
    if (used != exp_str.size() || exponent > 4000 || exponent < -4000)
      throw InvalidArgument("bad exponent in '" + original + "'");
  }
  Rational q(Integer(digits, 10), 1);
  long scale = exponent - static_cast<long>(frac_digits);
  if (scale >= 0) {
    q *= Rational(pow10(static_cast<unsigned>(scale)), 1);
  } else {
    q /= Rational(pow10(static_cast<unsigned>(-scale)), 1);
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace detail

/// Parses "3", "-7/2", "0.25", "1e-3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw InvalidArgument("empty number");
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return detail::parse_decimal(s);
  Rational num = detail::parse_decimal(detail::trim(s.substr(0, slash)));
  Rational den = detail::parse_decimal(detail::trim(s.substr(slash + 1)));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q = num / den;
  q.canonicalize();
  return q;
}

/// A real number a + b*pi with a, b rational.  Times, positions and
/// intersection points are kept in this form so that phases can be reduced
/// modulo 2*pi without losing the exact part.
struct PiLinear {
  Rational rational{0};
  Rational pi_coeff{0};

  PiLinear() = default;
  PiLinear(Rational a, Rational b = Rational(0)) : rational(std::move(a)), pi_coeff(std::move(b)) {
    rational.canonicalize();
    pi_coeff.canonicalize();
  }

  static PiLinear from_double(double x) { return PiLinear(Rational(x)); }

  double to_double() const {
    return rational.get_d() + pi_coeff.get_d() * std::numbers::pi;
  }

  bool is_zero() const { return rational == 0 && pi_coeff == 0; }

  friend PiLinear operator+(const PiLinear& x, const PiLinear& y) {
    return {x.rational + y.rational, x.pi_coeff + y.pi_coeff};
  }
  friend PiLinear operator-(const PiLinear& x, const PiLinear& y) {
    return {x.rational - y.rational, x.pi_coeff - y.pi_coeff};
  }
  friend PiLinear operator-(const PiLinear& x) { return {-x.rational, -x.pi_coeff}; }
  friend PiLinear operator*(const Rational& s, const PiLinear& x) {
    return {s * x.rational, s * x.pi_coeff};
  }
  friend PiLinear operator/(const PiLinear& x, const Rational& s) {
    if (s == 0) throw InvalidArgument("division by zero");
    return {x.rational / s, x.pi_coeff / s};
  }
  friend bool operator==(const PiLinear& x, const PiLinear& y) {
    return x.rational == y.rational && x.pi_coeff == y.pi_coeff;
  }

  /// "1/2", "3/4pi", "1/3+5/2pi".
  std::string str() const {
    if (pi_coeff == 0) return rational.get_str();
    std::string p = pi_coeff.get_str() + "pi";
    if (rational == 0) return p;
    return rational.get_str() + (pi_coeff > 0 ? "+" : "") + p;
  }
};

/// Parses a plain rational or a rational multiple of pi: "0.5", "3/4pi",
/// "-pi", "2*pi", "pi/2".
inline PiLinear parse_angle(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw InvalidArgument("empty angle");
  auto pos = s.find("pi");
  if (pos == std::string_view::npos) return PiLinear(parse_rational(s));
  std::string_view head = detail::trim(s.substr(0, pos));
  std::string_view tail = detail::trim(s.substr(pos + 2));
  if (!head.empty() && head.back() == '*') head = detail::trim(head.substr(0, head.size() - 1));
  Rational coeff(1);
  if (head == "-") {
    coeff = -1;
  } else if (head == "+" || head.empty()) {
    coeff = 1;
  } else {
    coeff = parse_rational(head);
  }
  if (!tail.empty()) {
    if (tail.front() != '/') throw InvalidArgument("bad angle: '" + std::string(text) + "'");
    Rational den = parse_rational(tail.substr(1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    coeff /= den;
  }
  return PiLinear(Rational(0), coeff);
}

namespace detail {

inline const mpf_class& two_pi_mpf() {
  static const mpf_class value = [] {
    mpf_class pi(
        "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534"
        "2117067982148086513282306647093844609550582231725359408128481117450284102701938521105559644622"
        "948954930381964428810975665933446128475648233786783165271201909145648566923460348610454326648",
        1024);
    return mpf_class(pi * 2, 1024);
  }();
  return value;
}

}  // namespace detail

/// Reduces x modulo 2*pi into (-pi, pi] and returns it as a double.  The pi
/// part is reduced exactly; the rational part with 1024-bit floating point.
inline double reduce_angle(const PiLinear& x) {
  // b*pi mod 2pi: b mod 2 in (-1, 1].
  Rational b = x.pi_coeff;
  Integer turns = floor_div(Rational((b + 1) / 2));
  b -= Rational(turns * 2, 1);

  double a_reduced = 0.0;
  if (x.rational != 0) {
    mpf_class a(x.rational, 1024);
    const mpf_class& two_pi = detail::two_pi_mpf();
    mpf_class q(a / two_pi, 1024);
    mpf_class k(0, 1024);
    mpf_floor(k.get_mpf_t(), mpf_class(q + 0.5, 1024).get_mpf_t());
    mpf_class r(a - k * two_pi, 1024);
    a_reduced = r.get_d();
  }
  double theta = a_reduced + b.get_d() * std::numbers::pi;
  double r = std::remainder(theta, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

}  // namespace dispobs
