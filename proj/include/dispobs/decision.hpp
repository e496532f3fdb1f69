#pragma once

// Observability verdicts from one segment (Pi(v) empty or not) and from two
// segments (no two-colored cycle; additionally finite g for the quantitative
// inequality).  For deg p > 2 the two answers must coincide and any
// disagreement is reported as an internal consistency error.

#include "dispobs/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dispobs {

enum class Answer { Yes, No, Undecided };

enum class Reason {
  EmptyPi,          // one segment: no resonant pair
  NonEmptyPi,       // one segment: a resonant pair exists
  NoCycle,          // two segments: at most one color has edges
  NoCycleFiniteG,   // two segments: both colors, no cycle, finite components
  TwoColoredCycle,  // two segments: alternating cycle found
  InfiniteG,        // two segments: no cycle but an infinite alternating path
  GammaDegenerate,  // linear symbol moving with the line
};

inline const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Undecided: return "undecided";
  }
  return "";
}

inline const char* reason_name(Reason r) {
  switch (r) {
    case Reason::EmptyPi: return "EmptyPi";
    case Reason::NonEmptyPi: return "NonEmptyPi";
    case Reason::NoCycle: return "NoCycle";
    case Reason::NoCycleFiniteG: return "NoCycleFiniteG";
    case Reason::TwoColoredCycle: return "TwoColoredCycle";
    case Reason::InfiniteG: return "InfiniteG";
    case Reason::GammaDegenerate: return "GammaDegenerate";
  }
  return "";
}

struct ObservabilityVerdict {
  PolynomialSymbol symbol{{0, 0, 1}};
  std::vector<Slope> slopes;  // one or two
  Answer qualitative = Answer::Undecided;
  Answer quantitative = Answer::Undecided;
  Reason reason = Reason::GammaDegenerate;
  std::optional<ModePair> pair_witness;
  std::optional<CycleWitness> cycle_witness;
  std::optional<PathWitness> path_witness;
  std::optional<ComponentSummary> components;
  std::optional<MinTime> min_time;
  std::vector<Hypotheses> hypotheses;  // per slope

  /// CLI exit code convention: 0 quantitative, 10 qualitative only, 20 neither.
  int exit_code() const {
    if (quantitative == Answer::Yes) return 0;
    if (qualitative == Answer::Yes) return 10;
    return 20;
  }
};

/// Checks the structural invariants of a verdict, including exact
/// re-validation of every witness it carries.
inline bool verdict_consistent(const ObservabilityVerdict& v) {
  if (v.quantitative == Answer::Yes && v.qualitative != Answer::Yes) return false;
  if (v.reason == Reason::TwoColoredCycle && (!v.cycle_witness || !validate_cycle(v.symbol, *v.cycle_witness)))
    return false;
  if (v.reason == Reason::InfiniteG && (!v.path_witness || !validate_path(v.symbol, *v.path_witness))) return false;
  if (v.cycle_witness && !validate_cycle(v.symbol, *v.cycle_witness)) return false;
  if (v.path_witness && !validate_path(v.symbol, *v.path_witness)) return false;
  if (v.pair_witness) {
    if (v.slopes.size() != 1) return false;
    const auto [a, b] = *v.pair_witness;
    if (a == b || lambda_kv(v.symbol, v.slopes[0], a) != lambda_kv(v.symbol, v.slopes[0], b)) return false;
  }
  return true;
}

/// A representative resonant pair: the smallest finite pair, else {0, s}
/// (or {-1, s + 1} when s = 0) from the first family.
inline std::optional<ModePair> representative_pair(const ResonancePairSet& pi) {
  if (!pi.finite_pairs.empty()) return *pi.finite_pairs.begin();
  if (!pi.infinite_families.empty()) {
    Mode s = pi.infinite_families.front();
    return s != 0 ? make_pair_sorted(0, s) : make_pair_sorted(-1, 1);
  }
  return std::nullopt;
}

inline ObservabilityVerdict decide_one_segment(const PolynomialSymbol& sym, const Slope& v) {
  ObservabilityVerdict out;
  out.symbol = sym;
  out.slopes = {v};
  out.hypotheses = {check_hypotheses(sym, v)};
  if (gap_classification(sym, v).kind == GapClass::Kind::Degenerate) {
    out.reason = Reason::GammaDegenerate;
    return out;
  }
  out.min_time = min_time(sym, v);
  std::optional<ModePair> pair;
  if (sym.degree() >= 2) pair = representative_pair(pi_set(sym, v));
  if (!pair) {
    out.qualitative = out.quantitative = Answer::Yes;
    out.reason = Reason::EmptyPi;
  } else {
    out.qualitative = out.quantitative = Answer::No;
    out.reason = Reason::NonEmptyPi;
    out.pair_witness = pair;
  }
  return out;
}

/// Decision from precomputed resonance sets for v1 (red) and v2 (blue).
inline ObservabilityVerdict decide_two_segments(const ResonancePairSet& red, const ResonancePairSet& blue) {
  const PolynomialSymbol& sym = red.symbol;
  if (sym.degree() < 2) throw InvalidArgument("two-segment decision needs deg p >= 2");
  ColoredGraph g = build_graph(red, blue);
  ObservabilityVerdict out;
  out.symbol = sym;
  out.slopes = {red.slope, blue.slope};
  out.min_time = MinTime{};
  out.hypotheses = {check_hypotheses(sym, red.slope), check_hypotheses(sym, blue.slope)};

  // Both tests always run; neither shortcuts the other.
  std::optional<CycleWitness> cycle = has_two_colored_cycle(g);
  ComponentSummary comps = component_summary(g);
  out.components = comps;

  const bool qualitative = !cycle.has_value();
  const bool quantitative = qualitative && !comps.infinite;
  out.qualitative = qualitative ? Answer::Yes : Answer::No;
  out.quantitative = quantitative ? Answer::Yes : Answer::No;
  if (cycle) {
    out.reason = Reason::TwoColoredCycle;
    out.cycle_witness = std::move(cycle);
  } else if (comps.infinite) {
    out.reason = Reason::InfiniteG;
    out.path_witness = find_alternative_path(g, 3);
  } else {
    const bool red_edges = !g.red_edges.empty() || !g.red_families.empty();
    const bool blue_edges = !g.blue_edges.empty() || !g.blue_families.empty();
    out.reason = red_edges && blue_edges ? Reason::NoCycleFiniteG : Reason::NoCycle;
  }
  if (sym.degree() > 2 && qualitative != quantitative)
    throw InternalConsistencyError("qualitative and quantitative verdicts differ for deg p > 2 (v1 = " +
                                   red.slope.str() + ", v2 = " + blue.slope.str() + ")");
  if (!verdict_consistent(out)) throw InternalConsistencyError("verdict failed self-validation");
  return out;
}

inline ObservabilityVerdict decide_two_segments(const PolynomialSymbol& sym, const Slope& v1, const Slope& v2) {
  if (v1 == v2) throw InvalidArgument("the two slopes must differ");
  if (sym.degree() < 2) throw InvalidArgument("two-segment decision needs deg p >= 2");
  return decide_two_segments(pi_set(sym, v1), pi_set(sym, v2));
}

}  // namespace dispobs
