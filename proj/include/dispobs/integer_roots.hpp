#pragma once

// Integer roots of polynomials with rational coefficients, by the rational
// root theorem on the primitive integer form.

#include "dispobs/rational.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dispobs {

/// Coefficients c[0..d], index = power.
using IntPolynomial = std::vector<Integer>;

/// Multiplies through by the lcm of the denominators.
inline IntPolynomial clear_denominators(const std::vector<Rational>& coeffs) {
  Integer l(1);
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPolynomial out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Rational scaled = c * Rational(l, 1);
    out.push_back(scaled.get_num());
  }
  return out;
}

inline Integer evaluate(const IntPolynomial& f, const Integer& x) {
  Integer acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline bool is_zero_polynomial(const std::vector<Rational>& coeffs) {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

namespace detail {

// Upper bound on |root| for a polynomial with nonzero constant term: the
// minimum of the Cauchy bound, |c0| and a padded Fujiwara bound.
inline Integer root_magnitude_bound(const IntPolynomial& f) {
  const std::size_t d = f.size() - 1;
  const Integer lead = abs(f[d]);
  Integer max_ratio(0);
  for (std::size_t i = 0; i < d; ++i) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), Integer(abs(f[i])).get_mpz_t(), lead.get_mpz_t());
    if (q > max_ratio) max_ratio = q;
  }
  Integer bound = max_ratio + 1;
  Integer c0 = abs(f[0]);
  if (c0 < bound) bound = c0;

  // Fujiwara: |z| <= 2 max_i |c_{d-i}/c_d|^{1/i}, evaluated in log space.
  const double log_lead = std::log(mpz_get_d(lead.get_mpz_t()));
  double best = -INFINITY;
  for (std::size_t i = 1; i <= d; ++i) {
    const Integer& c = f[d - i];
    if (c == 0) continue;
    double lc = std::log(std::fabs(mpz_get_d(c.get_mpz_t())));
    best = std::max(best, (lc - log_lead) / static_cast<double>(i));
  }
  if (std::isfinite(best)) {
    double fuj = 2.0 * std::exp(best) * (1.0 + 1e-9) + 2.0;
    if (fuj < 9.0e18) {
      Integer f_bound(static_cast<unsigned long>(std::ceil(fuj)));
      if (f_bound < bound) bound = f_bound;
    }
  }
  return bound;
}

}  // namespace detail

/// All integer roots of a nonzero polynomial, sorted ascending, without
/// multiplicity.  Throws on the zero polynomial.
inline std::vector<Mode> integer_roots(IntPolynomial f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.empty()) throw InvalidArgument("integer_roots of the zero polynomial");
  std::vector<Mode> roots;
  if (f.size() == 1) return roots;
  if (f[0] == 0) {
    roots.push_back(0);
    std::size_t shift = 0;
    while (f[shift] == 0) ++shift;
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(shift));
    if (f.size() == 1) return roots;
  }
  const Integer c0 = abs(f[0]);
  const Integer bound = detail::root_magnitude_bound(f);
  Integer sqrt_c0;
  mpz_sqrt(sqrt_c0.get_mpz_t(), c0.get_mpz_t());

  auto try_candidate = [&](const Integer& m) {
    if (m > bound) return;
    for (int sign : {1, -1}) {
      Integer x = sign * m;
      if (evaluate(f, x) == 0) roots.push_back(to_mode(x));
    }
  };

  const Integer limit = bound < sqrt_c0 ? bound : sqrt_c0;
  if (limit > Integer(200000000)) throw InvalidArgument("integer root search exceeds desk-scale limits");
  const unsigned long n = limit.get_ui();
  if (bound <= sqrt_c0) {
    for (unsigned long d = 1; d <= n; ++d) {
      if (mpz_divisible_ui_p(c0.get_mpz_t(), d)) try_candidate(Integer(d));
    }
  } else {
    for (unsigned long d = 1; d <= n; ++d) {
      if (!mpz_divisible_ui_p(c0.get_mpz_t(), d)) continue;
      try_candidate(Integer(d));
      Integer co = c0 / Integer(d);
      if (co != Integer(d)) try_candidate(co);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

inline std::vector<Mode> integer_roots(const std::vector<Rational>& coeffs) {
  return integer_roots(clear_denominators(coeffs));
}

}  // namespace dispobs
