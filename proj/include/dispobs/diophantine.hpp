#pragma once

// Resonance classes Xi_k(v) and the resonant set Pi(v).
//
// Two distinct modes k, m resonate under slope v when lambda_k(v) =
// lambda_m(v).  For a polynomial symbol the resonant pairs are finite apart
// from "families": integers s for which every pair {k, s - k} resonates.
//
// Completeness comes from explicit a-priori bounds on resonant pairs; every
// candidate is then verified with exact arithmetic.
//
//  * odd degree d = 2n+1: with rho^2 = k^2 + m^2 the leading part of h(k,m)
//    is a_d prod_j (k^2 + m^2 - 2km cos(2 pi j / d)) >= |a_d| c rho^{2n},
//    so resonance forces |a_d| c rho^{2n} <= |v| + sum_j j |a_j| rho^{j-1}.
//  * even degree d = 2n: the leading part factors as (k + m) Q(k, m) with
//    Q >= c1 rho^{2n-2}.  Outside a disk of radius rho1 the sum s = k + m
//    lies in a bounded band; each s in the band is solved as a univariate
//    polynomial q_s(k) = p(k) - p(s-k) - v (2k - s).

#include "dispobs/integer_roots.hpp"
#include "dispobs/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace dispobs {

/// Unordered pair stored with first < second.
using ModePair = std::pair<Mode, Mode>;

inline ModePair make_pair_sorted(Mode a, Mode b) { return a < b ? ModePair{a, b} : ModePair{b, a}; }

struct ResonanceClass {
  Mode anchor = 0;
  std::vector<Mode> members;  // sorted, contains anchor

  std::size_t size() const { return members.size(); }
};

struct ResonancePairSet {
  PolynomialSymbol symbol;
  Slope slope;
  std::set<ModePair> finite_pairs;
  std::vector<Mode> infinite_families;  // s: every {k, s-k} with 2k != s

  bool empty() const { return finite_pairs.empty() && infinite_families.empty(); }

  bool in_family(Mode k, Mode m) const {
    for (Mode s : infinite_families)
      if (k + m == s && k != m) return true;
    return false;
  }

  bool contains_pair(Mode k, Mode m) const {
    if (k == m) return false;
    return finite_pairs.count(make_pair_sorted(k, m)) > 0 || in_family(k, m);
  }

  /// k in Pi(v).
  bool contains_mode(Mode k) const {
    for (Mode s : infinite_families)
      if (2 * k != s) return true;
    for (const auto& [a, b] : finite_pairs)
      if (a == k || b == k) return true;
    return false;
  }

  /// Explicit members of Pi(v), i.e. endpoints of finite pairs.
  std::set<Mode> explicit_modes() const {
    std::set<Mode> out;
    for (const auto& [a, b] : finite_pairs) {
      out.insert(a);
      out.insert(b);
    }
    return out;
  }

  /// All resonant pairs with |k|, |m| <= K, families included.
  std::set<ModePair> window(Mode K) const {
    std::set<ModePair> out;
    for (const auto& pr : finite_pairs)
      if (std::llabs(pr.first) <= K && std::llabs(pr.second) <= K) out.insert(pr);
    for (Mode s : infinite_families) {
      for (Mode k = -K; k <= K; ++k) {
        Mode m = s - k;
        if (m == k || std::llabs(m) > K) continue;
        out.insert(make_pair_sorted(k, m));
      }
    }
    return out;
  }
};

namespace detail {

// Exact lambda scaled to integers: Lambda(k) = D p(k) - D v k.
struct ScaledLambda {
  IntPolynomial p;
  Integer v;

  ScaledLambda(const PolynomialSymbol& sym, const Slope& slope) {
    std::vector<Rational> all = sym.coeffs();
    all.push_back(slope.value());
    IntPolynomial scaled = clear_denominators(all);
    v = scaled.back();
    scaled.pop_back();
    p = std::move(scaled);
  }

  Integer operator()(Mode k) const {
    Integer x = to_integer(k);
    return evaluate(p, x) - v * x;
  }
};

// Every resonant pair inside the box |k|, |m| <= R, by grouping equal lambda.
inline std::set<ModePair> resonant_pairs_in_box(const ScaledLambda& lam, Mode R) {
  std::map<Integer, std::vector<Mode>> groups;
  for (Mode k = -R; k <= R; ++k) groups[lam(k)].push_back(k);
  std::set<ModePair> out;
  for (const auto& [value, ks] : groups) {
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i + 1; j < ks.size(); ++j) out.insert(make_pair_sorted(ks[i], ks[j]));
  }
  return out;
}

inline double rational_abs_d(const Rational& q) { return std::fabs(q.get_d()); }

// Unique positive root of lead x^e - sum_i b_i x^i (b_i >= 0, i < e).
inline double positive_root_bound(double lead, int e, const std::vector<double>& lower) {
  auto f = [&](double x) {
    double rhs = 0.0;
    double xp = 1.0;
    for (double b : lower) {
      rhs += b * xp;
      xp *= x;
    }
    return lead * std::pow(x, e) - rhs;
  };
  double hi = 1.0;
  while (f(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e15) throw InvalidArgument("resonance bound exceeds desk-scale limits");
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

inline Mode safe_ceiling(double x) {
  if (!(x < 1e15)) throw InvalidArgument("resonance bound exceeds desk-scale limits");
  return static_cast<Mode>(std::floor(x * (1.0 + 1e-9) + 1e-9)) + 1;
}

// Coefficients in k of q_s(k) = p(k) - p(s - k) - v (2k - s).
inline std::vector<Rational> band_polynomial(const PolynomialSymbol& sym, const Slope& v, Mode s) {
  const int d = sym.degree();
  std::vector<Rational> q(d + 1, Rational(0));
  const Rational S = make_rational(s);
  // (s - k)^j = sum_i C(j,i) s^{j-i} (-k)^i
  for (int j = 0; j <= d; ++j) {
    const Rational& a = sym.coeff(j);
    if (a == 0) continue;
    q[j] += a;
    Integer binom(1);
    for (int i = 0; i <= j; ++i) {
      if (i > 0) binom = binom * (j - i + 1) / i;
      Rational spow(1);
      for (int t = 0; t < j - i; ++t) spow *= S;
      Rational term = a * Rational(binom, 1) * spow;
      if (i % 2 == 1) term = -term;
      q[i] -= term;
    }
  }
  q[1] -= 2 * v.value();
  q[0] += v.value() * S;
  return q;
}

}  // namespace detail

/// Resonance class of k: every integer m with lambda_m(v) = lambda_k(v).
inline ResonanceClass xi_class(const PolynomialSymbol& sym, const Slope& v, Mode k) {
  if (sym.degree() == 1) {
    if (sym.coeff(1) == v.value())
      throw InvalidArgument("degenerate linear symbol: every mode resonates when v = a1");
    return {k, {k}};
  }
  std::vector<Rational> f = sym.coeffs();
  f[1] -= v.value();
  f[0] -= lambda_kv(sym, v, k);
  ResonanceClass out{k, integer_roots(f)};
  if (std::find(out.members.begin(), out.members.end(), k) == out.members.end())
    throw InternalConsistencyError("resonance class lost its anchor");
  return out;
}

inline bool is_resonant(const PolynomialSymbol& sym, const Slope& v, Mode k) {
  return xi_class(sym, v, k).size() >= 2;
}

/// The complete resonant set Pi(v) for deg p >= 2.
inline ResonancePairSet pi_set(const PolynomialSymbol& sym, const Slope& v) {
  const int d = sym.degree();
  if (d < 2) throw InvalidArgument("pi_set requires deg p >= 2");
  ResonancePairSet out{sym, v, {}, {}};
  const detail::ScaledLambda lam(sym, v);
  constexpr double kRelPad = 1e-12;

  std::vector<double> abs_a(d + 1);
  for (int j = 0; j <= d; ++j) abs_a[j] = detail::rational_abs_d(sym.coeff(j)) * (1.0 + kRelPad);
  const double abs_v = detail::rational_abs_d(v.value()) * (1.0 + kRelPad);
  const double lead = detail::rational_abs_d(sym.leading()) * (1.0 - kRelPad);

  if (d % 2 == 1) {
    const int n = (d - 1) / 2;
    double c = 1.0;
    for (int j = 1; j <= n; ++j) c *= 1.0 - std::fabs(std::cos(2.0 * std::numbers::pi * j / d));
    c *= 1.0 - 1e-9;
    // lead*c*rho^{2n} <= |v| + sum_{j=1}^{2n} j |a_j| rho^{j-1}
    std::vector<double> lower(2 * n, 0.0);
    lower[0] = abs_v;
    for (int j = 1; j <= 2 * n; ++j) lower[j - 1] += j * abs_a[j];
    const double rho = detail::positive_root_bound(lead * c, 2 * n, lower);
    out.finite_pairs = detail::resonant_pairs_in_box(lam, std::max<Mode>(1, detail::safe_ceiling(rho)));
    return out;
  }

  const int n = d / 2;
  if (n == 1) {
    // h(k, m) = a2 (k + m) + a1 - v: a single family or nothing.
    Rational s = (v.value() - sym.coeff(1)) / sym.coeff(2);
    if (is_integer(s)) out.infinite_families.push_back(to_mode(s.get_num()));
    return out;
  }

  double c1 = 1.0;
  for (int j = 1; j <= n - 1; ++j) c1 *= 1.0 - std::fabs(std::cos(std::numbers::pi * j / n));
  c1 *= 1.0 - 1e-9;
  // For rho >= rho1 the terms below degree 2n-1 contribute at most
  // A / rho1 + |v| / rho1^{2n-2} to the band width.
  double A = 0.0;
  for (int j = 1; j <= 2 * n - 2; ++j) A += j * abs_a[j];
  const double rho1 = std::max({1.0, A, std::pow(abs_v, 1.0 / (2 * n - 2)) * (1.0 + 1e-9)});
  const double band =
      ((2 * n - 1) * abs_a[2 * n - 1] + A / rho1 + abs_v / std::pow(rho1, 2 * n - 2)) / (c1 * lead);
  const Mode M = detail::safe_ceiling(band);
  const Mode R = detail::safe_ceiling(rho1);

  std::set<ModePair> pairs = detail::resonant_pairs_in_box(lam, R);
  for (Mode s = -M; s <= M; ++s) {
    std::vector<Rational> q = detail::band_polynomial(sym, v, s);
    if (is_zero_polynomial(q)) {
      out.infinite_families.push_back(s);
      continue;
    }
    for (Mode k : integer_roots(q)) {
      if (2 * k == s) continue;
      pairs.insert(make_pair_sorted(k, s - k));
    }
  }
  for (const auto& pr : pairs) {
    if (out.in_family(pr.first, pr.second)) continue;
    if (lam(pr.first) != lam(pr.second)) throw InternalConsistencyError("unverified resonant pair");
    out.finite_pairs.insert(pr);
  }
  return out;
}

/// Exhaustive scan of every pair |k|, |m| <= K with a vanishing divided
/// difference.  Used as a test oracle for pi_set.
inline std::set<ModePair> pi_oracle(const PolynomialSymbol& sym, const Slope& v, Mode K) {
  if (K < 1) throw InvalidArgument("pi_oracle needs K >= 1");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(2 * K + 1));
  for (Mode k = -K; k <= K; ++k) values.push_back(sym(k));
  std::set<ModePair> out;
  for (Mode k = -K; k <= K; ++k) {
    for (Mode m = k + 1; m <= K; ++m) {
      Rational h = (values[k + K] - values[m + K]) / make_rational(k - m) - v.value();
      if (h == 0) out.insert({k, m});
    }
  }
  return out;
}

/// (H1) finite classes, (H2) classes of size <= 2 beyond N_v.
struct Hypotheses {
  bool h1 = false;
  bool h2 = false;
  std::optional<Mode> n_v;
};

inline Hypotheses check_hypotheses(const PolynomialSymbol& sym, const Slope& v) {
  if (sym.degree() == 1) {
    if (sym.coeff(1) == v.value()) return {false, false, std::nullopt};
    return {true, true, Mode{1}};
  }
  ResonancePairSet pi = pi_set(sym, v);
  Mode max_abs = 0;
  for (const auto& [a, b] : pi.finite_pairs) max_abs = std::max<Mode>({max_abs, std::llabs(a), std::llabs(b)});
  return {true, true, pi.finite_pairs.empty() ? Mode{1} : max_abs + 1};
}

}  // namespace dispobs
