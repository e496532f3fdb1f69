#pragma once

// Polynomial dispersion symbols p(k) with exact rational coefficients, the
// shifted eigenvalues lambda_k(v) = p(k) - k v, their divided differences and
// the weak-gap classification that fixes the minimal observation time.

#include "dispobs/rational.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace dispobs {

/// Slope of an observation line x = x0 - v t.  Always in lowest terms.
class Slope {
 public:
  Slope() = default;
  Slope(Rational v) : value_(std::move(v)) { value_.canonicalize(); }
  Slope(long v) : value_(v) {}

  const Rational& value() const { return value_; }
  bool is_integer() const { return dispobs::is_integer(value_); }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const Slope& a, const Slope& b) { return a.value_ == b.value_; }
  friend bool operator<(const Slope& a, const Slope& b) { return a.value_ < b.value_; }

 private:
  Rational value_{0};
};

inline Slope parse_slope(std::string_view text) { return Slope(parse_rational(text)); }

/// p(k) = sum_j coeffs[j] k^j with a nonzero leading coefficient and degree >= 1.
class PolynomialSymbol {
 public:
  explicit PolynomialSymbol(std::vector<Rational> coeffs, std::string name = {})
      : coeffs_(std::move(coeffs)), name_(std::move(name)) {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() < 2) throw InvalidArgument("symbol must have degree >= 1");
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int j) const {
    return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[j] : Rational(0);
  }
  const Rational& leading() const { return coeffs_.back(); }
  const std::string& name() const { return name_; }

  Rational operator()(Mode k) const {
    const Rational x = make_rational(k);
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Human-readable form, e.g. "k^2 + k^4" or "1/2 + 2*k^3".
  std::string str() const {
    std::string out;
    for (int j = 0; j <= degree(); ++j) {
      const Rational& c = coeffs_[j];
      if (c == 0) continue;
      std::string mono = j == 0 ? "" : (j == 1 ? "k" : "k^" + std::to_string(j));
      std::string term;
      Rational mag = abs(c);
      if (j == 0) {
        term = mag.get_str();
      } else if (mag == 1) {
        term = mono;
      } else {
        term = mag.get_str() + "*" + mono;
      }
      if (out.empty()) {
        out = (c < 0 ? "-" : "") + term;
      } else {
        out += (c < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

  std::string coeff_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (j) out += ",";
      out += coeffs_[j].get_str();
    }
    return out;
  }

  friend bool operator==(const PolynomialSymbol& a, const PolynomialSymbol& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
  std::string name_;
};

inline PolynomialSymbol schrodinger_symbol() {
  return PolynomialSymbol({0, 0, 1}, "schrodinger");
}

inline PolynomialSymbol kdv_symbol() { return PolynomialSymbol({0, 0, 0, 1}, "kdv"); }

/// k^2 + k^4 + ... + k^{2l}, l >= 2.
inline PolynomialSymbol higher_schrodinger_symbol(int l) {
  if (l < 2) throw InvalidArgument("higher-order Schrodinger needs l >= 2 (l = 1 is plain Schrodinger)");
  std::vector<Rational> c(2 * l + 1, Rational(0));
  for (int j = 1; j <= l; ++j) c[2 * j] = 1;
  return PolynomialSymbol(std::move(c), "higher-schrodinger:" + std::to_string(l));
}

/// Accepts a preset name (schrodinger, kdv, higher-schrodinger:l) or a
/// coefficient list "a0,a1,...,ad" of decimal rationals.
inline PolynomialSymbol parse_symbol(std::string_view text) {
  std::string s(detail::trim(text));
  if (s == "schrodinger") return schrodinger_symbol();
  if (s == "kdv") return kdv_symbol();
  const std::string prefix = "higher-schrodinger:";
  if (s.rfind(prefix, 0) == 0) {
    std::string l = s.substr(prefix.size());
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(l, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad order in '" + s + "'");
    }
    if (used != l.size()) throw InvalidArgument("bad order in '" + s + "'");
    return higher_schrodinger_symbol(value);
  }
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    coeffs.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return PolynomialSymbol(std::move(coeffs));
}

inline Rational eval_p(const PolynomialSymbol& sym, Mode k) { return sym(k); }

/// lambda_k(v) = p(k) - k v.
inline Rational lambda_kv(const PolynomialSymbol& sym, const Slope& v, Mode k) {
  return sym(k) - make_rational(k) * v.value();
}

/// h(k, m) = (p(k) - p(m)) / (k - m) - v.  Zero exactly when k and m resonate.
inline Rational divided_diff(const PolynomialSymbol& sym, const Slope& v, Mode k, Mode m) {
  if (k == m) throw InvalidArgument("divided_diff requires k != m");
  return (sym(k) - sym(m)) / make_rational(k - m) - v.value();
}

struct GapClass {
  enum class Kind { Infinite, Positive, Degenerate };
  Kind kind = Kind::Infinite;
  Rational value{0};  // meaningful only for Positive

  static GapClass infinite() { return {Kind::Infinite, Rational(0)}; }
  static GapClass positive(Rational g) { return {Kind::Positive, std::move(g)}; }
  static GapClass degenerate() { return {Kind::Degenerate, Rational(0)}; }

  std::string str() const {
    switch (kind) {
      case Kind::Infinite: return "infinite";
      case Kind::Positive: return value.get_str();
      case Kind::Degenerate: return "degenerate";
    }
    return {};
  }
};

/// Weak uniform gap of the spectrum {lambda_k(v)}.  Every polynomial of
/// degree >= 2 has an infinite weak gap; a linear symbol has the uniform gap
/// |a1 - v|, which vanishes when the line follows the group velocity.
inline GapClass gap_classification(const PolynomialSymbol& sym, const Slope& v) {
  if (sym.degree() >= 2) return GapClass::infinite();
  Rational g = abs(Rational(sym.coeff(1) - v.value()));
  if (g == 0) return GapClass::degenerate();
  return GapClass::positive(g);
}

/// Threshold on T above which the one-segment inequality can hold.
struct MinTime {
  bool any_positive = true;  // every T > 0 suffices
  PiLinear threshold;        // 2*pi/gamma' when !any_positive

  std::string str() const { return any_positive ? "any T > 0" : threshold.str(); }
};

inline MinTime min_time(const PolynomialSymbol& sym, const Slope& v) {
  GapClass gap = gap_classification(sym, v);
  switch (gap.kind) {
    case GapClass::Kind::Infinite: return MinTime{};
    case GapClass::Kind::Positive: return MinTime{false, PiLinear(Rational(0), Rational(2) / gap.value)};
    case GapClass::Kind::Degenerate: break;
  }
  throw InvalidArgument("no uniform gap: every mode travels with the observation line");
}

}  // namespace dispobs
