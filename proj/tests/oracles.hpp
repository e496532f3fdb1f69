#pragma once

// Independent reference computations used only by the tests.  They share no
// code with the library beyond the data types.

#include "dispobs/dispobs.hpp"

#include <complex>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using dispobs::Mode;
using dispobs::ModePair;

/// lambda_k(v) = p(k) - k v with plain long double arithmetic on small integer
/// symbols; exact while all values stay below 2^63.
inline long long lambda_int(const std::vector<long long>& coeffs, long long v, long long k) {
  long long acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * k + *it;
  return acc - k * v;
}

/// Resonant pairs with |k|, |m| <= K for an integer symbol and integer slope,
/// by grouping equal lambda.
inline std::set<ModePair> int_pairs(const std::vector<long long>& coeffs, long long v, long long K) {
  std::map<long long, std::vector<long long>> groups;
  for (long long k = -K; k <= K; ++k) groups[lambda_int(coeffs, v, k)].push_back(k);
  std::set<ModePair> out;
  for (const auto& [lam, ks] : groups)
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i + 1; j < ks.size(); ++j) out.insert({ks[i], ks[j]});
  return out;
}

/// Adjacency with colors for brute-force searches on small explicit graphs.
struct SmallGraph {
  std::vector<Mode> vertices;
  std::map<std::pair<Mode, Mode>, int> color;  // both orders; 0 red, 1 blue

  explicit SmallGraph(const dispobs::ColoredGraph& g) {
    vertices.assign(g.vertices.begin(), g.vertices.end());
    for (const auto& [a, b] : g.red_edges) color[{a, b}] = color[{b, a}] = 0;
    for (const auto& [a, b] : g.blue_edges) color[{a, b}] = color[{b, a}] = 1;
  }
  std::vector<Mode> nbrs(Mode k) const {
    std::vector<Mode> out;
    for (Mode m : vertices)
      if (color.count({k, m})) out.push_back(m);
    return out;
  }
};

/// Depth-first enumeration of simple cycles; true when some cycle uses both
/// colors.  Exponential; meant for graphs with at most ~20 vertices.
inline bool has_bicolored_cycle_dfs(const dispobs::ColoredGraph& g) {
  SmallGraph sg(g);
  std::vector<Mode> path;
  std::set<Mode> on_path;
  std::function<bool(Mode, Mode, bool, bool)> dfs = [&](Mode start, Mode k, bool red, bool blue) -> bool {
    for (Mode m : sg.nbrs(k)) {
      int c = sg.color.at({k, m});
      bool r = red || c == 0, b = blue || c == 1;
      if (m == start && path.size() >= 3 && r && b) return true;
      if (on_path.count(m) || m < start) continue;
      path.push_back(m);
      on_path.insert(m);
      if (dfs(start, m, r, b)) return true;
      on_path.erase(m);
      path.pop_back();
    }
    return false;
  };
  for (Mode s : sg.vertices) {
    path = {s};
    on_path = {s};
    if (dfs(s, s, false, false)) return true;
  }
  return false;
}

/// Component sizes by breadth-first search.
inline std::vector<std::size_t> component_sizes_bfs(const dispobs::ColoredGraph& g) {
  SmallGraph sg(g);
  std::set<Mode> seen;
  std::vector<std::size_t> out;
  for (Mode s : sg.vertices) {
    if (seen.count(s)) continue;
    std::vector<Mode> stack{s};
    seen.insert(s);
    std::size_t n = 0;
    while (!stack.empty()) {
      Mode k = stack.back();
      stack.pop_back();
      ++n;
      for (Mode m : sg.nbrs(k))
        if (seen.insert(m).second) stack.push_back(m);
    }
    out.push_back(n);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// int_0^T |c1 e^{i l1 t} + c2 e^{i l2 t}|^2 dt in closed form.
inline double two_mode_integral(std::complex<double> c1, double l1, std::complex<double> c2, double l2, double T) {
  const double base = (std::norm(c1) + std::norm(c2)) * T;
  const double delta = l1 - l2;
  std::complex<double> cross;
  if (delta == 0.0) {
    cross = c1 * std::conj(c2) * T;
  } else {
    const std::complex<double> i(0.0, 1.0);
    cross = c1 * std::conj(c2) * (std::exp(i * delta * T) - 1.0) / (i * delta);
  }
  return base + 2.0 * cross.real();
}

/// Gamma membership by scanning a square box.
inline bool in_gamma_box(long long v) {
  for (long long k = -100; k <= 100; ++k)
    for (long long m = -100; m <= 100; ++m)
      if (k != m && k * k + k * m + m * m == v) return true;
  return false;
}

}  // namespace oracle
