#pragma once

// Explicit counterexamples: states that vanish on observation segments and
// the sequence of states along an alternating path whose observation energy
// stays bounded while the norm grows.

#include "dispobs/graph.hpp"
#include "dispobs/numeric.hpp"

#include <utility>
#include <vector>

namespace dispobs {

/// The point where the lines x = x1 - v1 (t - t1) and x = x2 - v2 (t - t2)
/// cross.  Exact in a + b pi form.
inline std::pair<PiLinear, PiLinear> intersection_point(const SegmentSpec& s1, const SegmentSpec& s2) {
  const Rational& v1 = s1.v.value();
  const Rational& v2 = s2.v.value();
  if (v1 == v2) throw InvalidArgument("parallel segments do not intersect");
  const PiLinear w1 = s1.x0 + v1 * s1.t0;
  const PiLinear w2 = s2.x0 + v2 * s2.t0;
  const Rational dv = v1 - v2;
  PiLinear t0 = (w1 - w2) / dv;
  PiLinear x0 = (v1 * w2 - v2 * w1) / dv;
  return {t0, x0};
}

namespace detail {

// e^{-i (p(k) t0 + k x0)}
inline Complex backward_phase(const PolynomialSymbol& sym, Mode k, const PiLinear& t0, const PiLinear& x0) {
  return unit_phase(-(sym(k) * t0 + make_rational(k) * x0));
}

}  // namespace detail

/// c_{k_j} = (-1)^{j+1} e^{-i (p(k_j) t0 + k_j x0)} along an alternating
/// cycle.  Vanishes on every line of slope v_red or v_blue through (t0, x0).
inline FourierState cycle_vanishing_state(const PolynomialSymbol& sym, const CycleWitness& cycle, const PiLinear& t0,
                                          const PiLinear& x0) {
  if (!validate_cycle(sym, cycle)) throw InvalidArgument("not a valid alternating cycle");
  FourierState out;
  for (std::size_t j = 0; j < cycle.vertices.size(); ++j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    out.coefficients[cycle.vertices[j]] = sign * detail::backward_phase(sym, cycle.vertices[j], t0, x0);
  }
  return out;
}

/// Two-mode state vanishing on the line of slope v through (t0, x0).
inline FourierState pair_vanishing_state(const PolynomialSymbol& sym, const Slope& v, const PiLinear& t0,
                                         const PiLinear& x0, ModePair pair) {
  const auto [k1, k2] = pair;
  if (k1 == k2 || lambda_kv(sym, v, k1) != lambda_kv(sym, v, k2))
    throw InvalidArgument("pair {" + std::to_string(k1) + ", " + std::to_string(k2) + "} is not resonant");
  FourierState out;
  out.coefficients[k1] = detail::backward_phase(sym, k1, t0, x0);
  out.coefficients[k2] = -detail::backward_phase(sym, k2, t0, x0);
  return out;
}

/// c_{k_j} = (-1)^j e^{-i (p(k_j) t0 + k_j x0)} over an alternating path.
inline FourierState path_ratio_state(const PolynomialSymbol& sym, const PathWitness& path, const PiLinear& t0,
                                     const PiLinear& x0) {
  if (!validate_path(sym, path)) throw InvalidArgument("not a valid alternating path");
  FourierState out;
  for (std::size_t j = 0; j < path.vertices.size(); ++j) {
    const double sign = j % 2 == 0 ? -1.0 : 1.0;
    out.coefficients[path.vertices[j]] = sign * detail::backward_phase(sym, path.vertices[j], t0, x0);
  }
  return out;
}

struct RatioRow {
  Mode n = 0;
  double norm_sq = 0.0;
  double seg_integral = 0.0;  // both segments
  double red_integral = 0.0;
  double blue_integral = 0.0;
  double ratio = 0.0;
  std::vector<Mode> path;
};

/// One row per n: the state on the first 2n path vertices, its norm and its
/// observation energy on (red, blue).  The red segment must carry v1.
inline std::vector<RatioRow> ratio_sequence(const ColoredGraph& g, const SegmentSpec& red, const SegmentSpec& blue,
                                            const std::vector<Mode>& n_list, const QuadratureSpec& quad = {}) {
  if (!(red.v == g.v1) || !(blue.v == g.v2)) throw InvalidArgument("segment slopes must match the graph (v1, v2)");
  const auto [t0, x0] = intersection_point(red, blue);
  std::vector<RatioRow> out;
  for (Mode n : n_list) {
    PathWitness path = find_alternative_path(g, n);
    FourierState state = path_ratio_state(g.symbol, path, t0, x0);
    RatioRow row;
    row.n = n;
    row.path = path.vertices;
    row.norm_sq = l2_norm_sq(state);
    row.red_integral = segment_l2(state, g.symbol, red, quad);
    row.blue_integral = segment_l2(state, g.symbol, blue, quad);
    row.seg_integral = row.red_integral + row.blue_integral;
    row.ratio = row.seg_integral / row.norm_sq;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace dispobs
