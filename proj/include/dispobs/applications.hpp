#pragma once

// Closed forms for p = k^2, p = k^2 + ... + k^{2l} and p = k^3.

#include "dispobs/decision.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace dispobs {

/// p = k^2.  A non-integer slope has no resonances; two integer slopes give
/// disjoint infinite ladders: qualitative yes, quantitative no.
inline ObservabilityVerdict schrodinger_verdict(const Slope& v1, const Slope& v2) {
  if (v1 == v2) throw InvalidArgument("the two slopes must differ");
  const PolynomialSymbol sym = schrodinger_symbol();
  ObservabilityVerdict out;
  out.symbol = sym;
  out.slopes = {v1, v2};
  out.min_time = MinTime{};
  out.hypotheses = {check_hypotheses(sym, v1), check_hypotheses(sym, v2)};
  out.qualitative = Answer::Yes;
  if (!v1.is_integer() || !v2.is_integer()) {
    out.quantitative = Answer::Yes;
    out.reason = Reason::NoCycle;
    return out;
  }
  ColoredGraph g;
  g.symbol = sym;
  g.v1 = v1;
  g.v2 = v2;
  g.red_families = {to_mode(v1.value().get_num())};
  g.blue_families = {to_mode(v2.value().get_num())};
  out.quantitative = Answer::No;
  out.reason = Reason::InfiniteG;
  out.components = component_summary(g);
  out.path_witness = find_alternative_path(g, 3);
  return out;
}

/// p = k^2 + k^4 + ... + k^{2l}: quantitative observability for every pair
/// of distinct slopes.  Cross-checked against the graph decision.
inline ObservabilityVerdict higher_schrodinger_verdict(int l, const Slope& v1, const Slope& v2) {
  if (v1 == v2) throw InvalidArgument("the two slopes must differ");
  ObservabilityVerdict graph = decide_two_segments(higher_schrodinger_symbol(l), v1, v2);
  if (graph.qualitative != Answer::Yes || graph.quantitative != Answer::Yes)
    throw InternalConsistencyError("graph decision contradicts the monotone-symbol closed form for l = " +
                                   std::to_string(l));
  return graph;
}

struct GammaCertificate {
  Integer v;
  bool member = false;
  std::optional<std::pair<Mode, Mode>> representation;  // k^2 + k m + m^2 = v, k != m
};

/// Membership of v in {k^2 + k m + m^2 : k != m} by bounded enumeration.
/// The returned representation has k > |m|, smallest k, then smallest m.
inline GammaCertificate gamma_membership(const Integer& v) {
  GammaCertificate out{v, false, std::nullopt};
  if (v <= 0) return out;
  // 4v = (2m + k)^2 + 3k^2, so |k| <= 2 sqrt(v / 3).
  Integer bound;
  {
    Integer t = 4 * v / 3;
    mpz_sqrt(bound.get_mpz_t(), t.get_mpz_t());
    bound += 1;
  }
  const Mode B = to_mode(bound);
  std::optional<std::pair<Mode, Mode>> fallback;
  for (Mode k = -B; k <= B; ++k) {
    const Integer K = to_integer(k);
    const Integer disc = 4 * v - 3 * K * K;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
    for (const Integer& num : {Integer(-K - r), Integer(-K + r)}) {
      if (!mpz_even_p(num.get_mpz_t())) continue;
      const Mode m = to_mode(Integer(num / 2));
      if (m == k) continue;
      if (K * K + K * to_integer(m) + to_integer(m) * to_integer(m) != v)
        throw InternalConsistencyError("bad quadratic form representation");
      if (k > std::llabs(m)) {
        if (!out.representation || std::make_pair(k, m) < *out.representation) out.representation = {k, m};
      } else if (!fallback) {
        fallback = {k, m};
      }
    }
  }
  if (!out.representation) out.representation = fallback;
  out.member = out.representation.has_value();
  return out;
}

inline GammaCertificate gamma_membership(long v) { return gamma_membership(Integer(v)); }

/// One segment for p = k^3: observable iff v is not in Gamma.
inline ObservabilityVerdict kdv_one_segment(const Slope& v) {
  const PolynomialSymbol sym = kdv_symbol();
  ObservabilityVerdict out;
  out.symbol = sym;
  out.slopes = {v};
  out.min_time = MinTime{};
  out.hypotheses = {check_hypotheses(sym, v)};
  std::optional<GammaCertificate> cert;
  if (v.is_integer()) cert = gamma_membership(v.value().get_num());
  if (!cert || !cert->member) {
    out.qualitative = out.quantitative = Answer::Yes;
    out.reason = Reason::EmptyPi;
    return out;
  }
  const auto [k, m] = *cert->representation;
  if (divided_diff(sym, v, k, m) != 0) throw InternalConsistencyError("Gamma representation is not resonant");
  out.qualitative = out.quantitative = Answer::No;
  out.reason = Reason::NonEmptyPi;
  out.pair_witness = ModePair{k, m};
  return out;
}

/// Largest e with p^e | v.
inline int ord_p(const Integer& v, unsigned long p) {
  if (v == 0) throw InvalidArgument("ord_p(0) is undefined");
  if (p < 2) throw InvalidArgument("ord_p needs a prime p");
  Integer x = abs(v);
  int e = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++e;
  }
  return e;
}

inline int ord_p(long v, unsigned long p) { return ord_p(Integer(v), p); }

/// Prime factors of |v| by trial division, ascending.
inline std::vector<unsigned long> prime_factors(long v) {
  if (v == 0) throw InvalidArgument("prime factors of 0");
  unsigned long x = static_cast<unsigned long>(v < 0 ? -v : v);
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) out.push_back(x);
  return out;
}

struct KdvCriterion {
  enum class Result { ObservableBy1, ObservableBy2, Inconclusive };
  struct Valuation {
    unsigned long p;
    int ord_v1;
    int ord_v2;
  };

  Result result = Result::Inconclusive;
  std::optional<unsigned long> prime;  // for ObservableBy2
  std::vector<Valuation> valuations;   // primes = 2 mod 3 dividing v1 v2

  static const char* name(Result r) {
    switch (r) {
      case Result::ObservableBy1: return "ObservableBy1";
      case Result::ObservableBy2: return "ObservableBy2";
      case Result::Inconclusive: return "Inconclusive";
    }
    return "";
  }
};

/// Sufficient criteria for two segments with p = k^3 and positive integer
/// slopes: v2 > 4 v1 (either order), or differing ord_p at a prime p = 2 mod 3.
inline KdvCriterion kdv_two_segment_criterion(long v1, long v2) {
  if (v1 == v2) throw InvalidArgument("the two slopes must differ");
  if (v1 <= 0 || v2 <= 0) throw InvalidArgument("the KdV criteria need positive integer slopes");
  if (v1 > 1000000000L || v2 > 1000000000L) throw InvalidArgument("slopes above 1e9 are not supported");
  KdvCriterion out;
  std::vector<unsigned long> primes = prime_factors(v1);
  for (unsigned long p : prime_factors(v2)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (unsigned long p : primes) {
    if (p % 3 != 2) continue;
    out.valuations.push_back({p, ord_p(v1, p), ord_p(v2, p)});
  }
  if (v2 > 4 * v1 || v1 > 4 * v2) {
    out.result = KdvCriterion::Result::ObservableBy1;
    return out;
  }
  for (const auto& val : out.valuations) {
    if (val.ord_v1 != val.ord_v2) {
      out.result = KdvCriterion::Result::ObservableBy2;
      out.prime = val.p;
      return out;
    }
  }
  return out;
}

}  // namespace dispobs
