// Two integer slopes for p = k^2: no vanishing solution, but the states on
// longer and longer ladder paths have bounded observation energy.
#include "dispobs/dispobs.hpp"

#include <iostream>

using namespace dispobs;

int main() {
  const Slope v1(0), v2(1);
  ObservabilityVerdict v = decide_two_segments(schrodinger_symbol(), v1, v2);
  std::cout << "qualitative " << answer_name(v.qualitative) << ", quantitative " << answer_name(v.quantitative)
            << " (" << reason_name(v.reason) << ")\n";

  ColoredGraph g = build_graph(schrodinger_symbol(), v1, v2);
  SegmentSpec red{PiLinear(0), PiLinear(0), v1, 1.0};
  SegmentSpec blue{PiLinear(0), PiLinear(0), v2, 1.0};
  for (const auto& row : ratio_sequence(g, red, blue, {2, 4, 8, 16}))
    std::cout << "n=" << row.n << "  norm^2=" << row.norm_sq << "  observed=" << row.seg_integral
              << "  ratio=" << row.ratio << '\n';
}
