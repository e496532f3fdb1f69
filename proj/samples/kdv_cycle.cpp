// p = k^3 with slopes 7 and 13: the resonance graph has an alternating
// 4-cycle, and the matching state is invisible on both segments.
#include "dispobs/dispobs.hpp"

#include <iostream>

using namespace dispobs;

int main() {
  const PolynomialSymbol p = kdv_symbol();
  ColoredGraph g = build_graph(p, Slope(7), Slope(13));
  auto cycle = has_two_colored_cycle(g);
  if (!cycle) return 1;
  std::cout << "cycle:";
  for (Mode k : cycle->vertices) std::cout << ' ' << k;
  std::cout << '\n';

  SegmentSpec s1{PiLinear(0), parse_angle("1/3pi"), Slope(7), 2.0};
  SegmentSpec s2{PiLinear(Rational(1, 2)), PiLinear(0), Slope(13), 2.0};
  const auto [t0, x0] = intersection_point(s1, s2);
  FourierState u0 = cycle_vanishing_state(p, *cycle, t0, x0);
  std::cout << "||u0||^2 = " << l2_norm_sq(u0) << '\n';
  std::cout << "max |u| on segment 1: " << max_abs_on_segment(u0, p, s1) << '\n';
  std::cout << "max |u| on segment 2: " << max_abs_on_segment(u0, p, s2) << '\n';
}
