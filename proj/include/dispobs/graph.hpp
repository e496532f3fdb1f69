#pragma once

// The two-colored resonance graph G(v1, v2): vertices Pi(v1) u Pi(v2), a red
// edge for every v1-resonant pair and a blue edge for every v2-resonant pair.
//
// Finite resonances are stored explicitly.  Families (all pairs {k, s - k})
// stay symbolic; the explicit part is closed under one family step, i.e. the
// family partner of every explicit vertex is added.  That closure already
// contains every edge that can sit on a cycle or on a path with more than one
// edge, except when both colors carry a family (degree 2 only), where the
// graph is a union of infinite ladders handled in closed form.

#include "dispobs/diophantine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace dispobs {

enum class Color { Red, Blue };

inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }
inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

namespace detail {

class DisjointSets {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    size_.push_back(1);
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }
  std::size_t count() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

struct ColoredGraph {
  PolynomialSymbol symbol{{0, 0, 1}};
  Slope v1;  // red
  Slope v2;  // blue
  std::set<Mode> vertices;
  std::set<ModePair> red_edges;
  std::set<ModePair> blue_edges;
  std::vector<Mode> red_families;
  std::vector<Mode> blue_families;
  Mode window = 20;

  const std::set<ModePair>& edges(Color c) const { return c == Color::Red ? red_edges : blue_edges; }
  const std::vector<Mode>& families(Color c) const { return c == Color::Red ? red_families : blue_families; }
  const Slope& slope(Color c) const { return c == Color::Red ? v1 : v2; }

  bool has_families() const { return !red_families.empty() || !blue_families.empty(); }
  bool both_families() const { return !red_families.empty() && !blue_families.empty(); }

  bool has_edge(Color c, Mode a, Mode b) const {
    if (a == b) return false;
    if (edges(c).count(make_pair_sorted(a, b))) return true;
    for (Mode s : families(c))
      if (a + b == s) return true;
    return false;
  }

  /// Neighbors of k under color c, explicit and family, ascending.
  std::vector<Mode> neighbors(Color c, Mode k) const {
    std::set<Mode> out;
    for (const auto& [a, b] : edges(c)) {
      if (a == k) out.insert(b);
      if (b == k) out.insert(a);
    }
    for (Mode s : families(c))
      if (s - k != k) out.insert(s - k);
    return {out.begin(), out.end()};
  }

  std::size_t edge_count() const { return red_edges.size() + blue_edges.size(); }

  /// Builds a family-free graph from explicit edge lists, checking simplicity.
  static ColoredGraph from_edges(std::set<ModePair> red, std::set<ModePair> blue,
                                 std::set<Mode> extra_vertices = {}) {
    ColoredGraph g;
    for (auto* es : {&red, &blue}) {
      std::set<ModePair> canon;
      for (const auto& [a, b] : *es) {
        if (a == b) throw InvalidArgument("self-loop in edge list");
        canon.insert(make_pair_sorted(a, b));
      }
      *es = std::move(canon);
    }
    for (const auto& e : red)
      if (blue.count(e)) throw InvalidArgument("pair carries both colors");
    g.red_edges = std::move(red);
    g.blue_edges = std::move(blue);
    g.vertices = std::move(extra_vertices);
    for (const auto* es : {&g.red_edges, &g.blue_edges})
      for (const auto& [a, b] : *es) {
        g.vertices.insert(a);
        g.vertices.insert(b);
      }
    return g;
  }
};

/// Cyclic sequence k_1 .. k_L; edge_colors[i] colors {k_i, k_{i+1 mod L}}.
struct CycleWitness {
  std::vector<Mode> vertices;
  std::vector<Color> edge_colors;
  Slope v_red;
  Slope v_blue;
};

/// Linear sequence k_1 .. k_{2n}; the first edge is red and colors alternate.
struct PathWitness {
  std::vector<Mode> vertices;
  std::vector<Color> edge_colors;
  Slope v_red;
  Slope v_blue;
};

struct ComponentSummary {
  std::vector<std::size_t> sizes;  // explicit components, descending
  bool family_pairs = false;       // infinitely many isolated family pairs
  bool infinite = false;
  std::size_t g_value = 0;

  std::string g_str() const { return infinite ? "infinity" : std::to_string(g_value); }
};

inline ColoredGraph build_graph(const ResonancePairSet& red, const ResonancePairSet& blue, Mode window = 20) {
  if (red.slope == blue.slope) throw InvalidArgument("the two slopes must differ");
  if (!(red.symbol == blue.symbol)) throw InvalidArgument("resonance sets come from different symbols");
  if (window < 1) throw InvalidArgument("window must be >= 1");
  ColoredGraph g;
  g.symbol = red.symbol;
  g.v1 = red.slope;
  g.v2 = blue.slope;
  g.window = window;
  g.red_families = red.infinite_families;
  g.blue_families = blue.infinite_families;
  g.red_edges = red.finite_pairs;
  g.blue_edges = blue.finite_pairs;
  for (const auto* es : {&g.red_edges, &g.blue_edges})
    for (const auto& [a, b] : *es) {
      g.vertices.insert(a);
      g.vertices.insert(b);
    }
  const std::set<Mode> seed = g.vertices;
  for (Color c : {Color::Red, Color::Blue}) {
    auto& es = c == Color::Red ? g.red_edges : g.blue_edges;
    for (Mode s : g.families(c))
      for (Mode k : seed) {
        if (2 * k == s) continue;
        es.insert(make_pair_sorted(k, s - k));
        g.vertices.insert(s - k);
      }
  }
  for (const auto& [a, b] : g.red_edges)
    if (g.has_edge(Color::Blue, a, b)) throw InternalConsistencyError("bichromatic pair");
  for (const auto& [a, b] : g.blue_edges)
    if (g.has_edge(Color::Red, a, b)) throw InternalConsistencyError("bichromatic pair");
  return g;
}

inline ColoredGraph build_graph(const PolynomialSymbol& sym, const Slope& v1, const Slope& v2, Mode window = 20) {
  if (v1 == v2) throw InvalidArgument("the two slopes must differ");
  return build_graph(pi_set(sym, v1), pi_set(sym, v2), window);
}

/// Family-free copy with every family pair inside |k| <= window made explicit.
inline ColoredGraph materialize(const ColoredGraph& g, std::optional<Mode> window = std::nullopt) {
  const Mode K = window.value_or(g.window);
  ColoredGraph out = g;
  out.red_families.clear();
  out.blue_families.clear();
  for (Color c : {Color::Red, Color::Blue}) {
    auto& es = c == Color::Red ? out.red_edges : out.blue_edges;
    for (Mode s : g.families(c))
      for (Mode k = -K; k <= K; ++k) {
        Mode m = s - k;
        if (m == k || std::llabs(m) > K) continue;
        es.insert(make_pair_sorted(k, m));
        out.vertices.insert(k);
        out.vertices.insert(m);
      }
  }
  return out;
}

/// Strict alternation, distinct vertices and exact lambda equalities.
inline bool validate_cycle(const PolynomialSymbol& sym, const CycleWitness& w) {
  const std::size_t L = w.vertices.size();
  if (L < 4 || L % 2 != 0 || w.edge_colors.size() != L) return false;
  if (std::set<Mode>(w.vertices.begin(), w.vertices.end()).size() != L) return false;
  for (std::size_t i = 0; i < L; ++i) {
    if (w.edge_colors[i] == w.edge_colors[(i + 1) % L]) return false;
    const Slope& v = w.edge_colors[i] == Color::Red ? w.v_red : w.v_blue;
    if (lambda_kv(sym, v, w.vertices[i]) != lambda_kv(sym, v, w.vertices[(i + 1) % L])) return false;
  }
  return true;
}

inline bool validate_path(const PolynomialSymbol& sym, const PathWitness& w) {
  const std::size_t L = w.vertices.size();
  if (L < 2 || L % 2 != 0 || w.edge_colors.size() != L - 1) return false;
  if (std::set<Mode>(w.vertices.begin(), w.vertices.end()).size() != L) return false;
  for (std::size_t i = 0; i + 1 < L; ++i) {
    if (w.edge_colors[i] != (i % 2 == 0 ? Color::Red : Color::Blue)) return false;
    const Slope& v = w.edge_colors[i] == Color::Red ? w.v_red : w.v_blue;
    if (lambda_kv(sym, v, w.vertices[i]) != lambda_kv(sym, v, w.vertices[i + 1])) return false;
  }
  return true;
}

namespace detail {

// Connected components of one color over explicit edges, keyed by vertex.
inline std::map<Mode, std::size_t> color_classes(const ColoredGraph& g, Color c, std::size_t& count) {
  std::map<Mode, std::size_t> index;
  DisjointSets ds;
  for (const auto& [a, b] : g.edges(c)) {
    for (Mode k : {a, b})
      if (!index.count(k)) index[k] = ds.add();
    ds.unite(index[a], index[b]);
  }
  std::map<std::size_t, std::size_t> relabel;
  std::map<Mode, std::size_t> out;
  for (const auto& [k, i] : index) {
    auto root = ds.find(i);
    auto it = relabel.find(root);
    if (it == relabel.end()) it = relabel.emplace(root, relabel.size()).first;
    out[k] = it->second;
  }
  count = relabel.size();
  return out;
}

// Puts the smallest vertex first and walks along its red edge.
inline CycleWitness canonical_cycle(const ColoredGraph& g, std::vector<Mode> cyc) {
  const std::size_t L = cyc.size();
  auto first = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
  std::rotate(cyc.begin(), cyc.begin() + first, cyc.end());
  if (!g.has_edge(Color::Red, cyc[0], cyc[1])) std::reverse(cyc.begin() + 1, cyc.end());
  CycleWitness w{cyc, {}, g.v1, g.v2};
  for (std::size_t i = 0; i < L; ++i) w.edge_colors.push_back(i % 2 == 0 ? Color::Red : Color::Blue);
  return w;
}

}  // namespace detail

/// Two-colored cycle test by class contraction.  Every nontrivial red class
/// and blue class becomes a node; a vertex lying in both a red and a blue
/// class becomes an edge between them.  A cycle in that multigraph expands to
/// an alternating cycle in G because classes are cliques.
inline std::optional<CycleWitness> has_two_colored_cycle(const ColoredGraph& g) {
  if (g.both_families()) return std::nullopt;  // disjoint ladders
  std::size_t n_red = 0, n_blue = 0;
  const auto red = detail::color_classes(g, Color::Red, n_red);
  const auto blue = detail::color_classes(g, Color::Blue, n_blue);

  // Node ids: red classes [0, n_red), blue classes [n_red, n_red + n_blue).
  detail::DisjointSets ds;
  for (std::size_t i = 0; i < n_red + n_blue; ++i) ds.add();
  std::vector<std::vector<std::pair<std::size_t, Mode>>> forest(n_red + n_blue);

  for (const auto& [k, rc] : red) {
    auto it = blue.find(k);
    if (it == blue.end()) continue;
    const std::size_t a = rc, b = n_red + it->second;
    if (ds.unite(a, b)) {
      forest[a].push_back({b, k});
      forest[b].push_back({a, k});
      continue;
    }
    // Path b -> a in the forest, then close it with k.
    std::vector<std::pair<std::size_t, Mode>> prev(forest.size(), {SIZE_MAX, 0});
    std::deque<std::size_t> queue{b};
    prev[b] = {b, 0};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      if (x == a) break;
      for (const auto& [y, label] : forest[x]) {
        if (prev[y].first != SIZE_MAX) continue;
        prev[y] = {x, label};
        queue.push_back(y);
      }
    }
    std::vector<Mode> cyc{k};
    for (std::size_t x = a; x != b; x = prev[x].first) cyc.push_back(prev[x].second);
    CycleWitness w = detail::canonical_cycle(g, std::move(cyc));
    if (!validate_cycle(g.symbol, w)) throw InternalConsistencyError("cycle expansion failed validation");
    return w;
  }
  return std::nullopt;
}

inline ComponentSummary component_summary(const ColoredGraph& g) {
  ComponentSummary out;
  out.family_pairs = g.has_families();
  if (g.both_families()) {
    out.infinite = true;
    return out;
  }
  std::map<Mode, std::size_t> index;
  detail::DisjointSets ds;
  for (Mode k : g.vertices) index[k] = ds.add();
  for (const auto* es : {&g.red_edges, &g.blue_edges})
    for (const auto& [a, b] : *es) ds.unite(index.at(a), index.at(b));
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& [k, i] : index) ++sizes[ds.find(i)];
  for (const auto& [root, n] : sizes) out.sizes.push_back(n);
  std::sort(out.sizes.rbegin(), out.sizes.rend());
  out.g_value = out.sizes.empty() ? 0 : out.sizes.front();
  if (out.family_pairs) out.g_value = std::max<std::size_t>(out.g_value, 2);
  return out;
}

/// True when k lies on a two-way infinite ladder of a graph whose two colors
/// both carry a family.  Ladders through a fixed point 2k = s are one-way.
inline bool on_two_way_ladder(const ColoredGraph& g, Mode k) {
  if (!g.both_families()) return false;
  const Mode sr = g.red_families.front(), sb = g.blue_families.front();
  const Mode d = sb - sr;
  return (2 * k - sr) % d != 0;
}

/// Iteratively deletes vertices whose remaining edges all have one color.
/// Vertices in `anchors` are never deleted.
inline ColoredGraph peel(const ColoredGraph& g, const std::set<Mode>& anchors = {}) {
  if (g.has_families()) throw InvalidArgument("peel needs an explicit graph");
  ColoredGraph out = g;
  std::map<Mode, std::set<Mode>> adj[2];
  for (int c = 0; c < 2; ++c)
    for (const auto& [a, b] : out.edges(c == 0 ? Color::Red : Color::Blue)) {
      adj[c][a].insert(b);
      adj[c][b].insert(a);
    }
  auto degree = [&](int c, Mode k) {
    auto it = adj[c].find(k);
    return it == adj[c].end() ? std::size_t{0} : it->second.size();
  };
  std::deque<Mode> work(out.vertices.begin(), out.vertices.end());
  std::set<Mode> alive = out.vertices;
  while (!work.empty()) {
    Mode k = work.front();
    work.pop_front();
    if (!alive.count(k) || anchors.count(k)) continue;
    if (degree(0, k) > 0 && degree(1, k) > 0) continue;
    alive.erase(k);
    for (int c = 0; c < 2; ++c) {
      auto it = adj[c].find(k);
      if (it == adj[c].end()) continue;
      for (Mode m : it->second) {
        adj[c][m].erase(k);
        work.push_back(m);
      }
      adj[c].erase(it);
    }
  }
  out.vertices = alive;
  for (auto* es : {&out.red_edges, &out.blue_edges}) {
    std::set<ModePair> kept;
    for (const auto& e : *es)
      if (alive.count(e.first) && alive.count(e.second)) kept.insert(e);
    *es = std::move(kept);
  }
  return out;
}

/// Reduced graph.  A one-colored family only adds vertices with a single
/// color, which peel away, so the explicit closure is reduced directly.  When
/// both colors carry families the window is materialized and vertices on
/// two-way ladders are kept, since in the infinite graph they never lose an
/// edge; one-way ladders start at a fixed point and peel completely.
inline ColoredGraph reduce_graph(const ColoredGraph& g) {
  if (!g.both_families()) {
    ColoredGraph explicit_part = g;
    explicit_part.red_families.clear();
    explicit_part.blue_families.clear();
    return peel(explicit_part);
  }
  ColoredGraph m = materialize(g);
  std::set<Mode> anchors;
  for (Mode k : m.vertices)
    if (on_two_way_ladder(g, k)) anchors.insert(k);
  return peel(m, anchors);
}

namespace detail {

// k_1 = s_r - s_b shifted along the ladder until the orbit never folds back.
inline PathWitness ladder_path(const ColoredGraph& g, Mode n) {
  const Mode sr = g.red_families.front(), sb = g.blue_families.front();
  const Mode d = sb - sr;
  Mode k1 = sr - sb;
  // Odd positions k1 + j d, even positions sr - k1 - j d (j < n); they meet
  // iff q = (sr - 2 k1) / d is an integer in [0, 2n - 2].
  const Mode num = sr - 2 * k1;
  if (num % d == 0) {
    const Mode q = num / d;
    if (q >= 0 && q <= 2 * n - 2) k1 += (q / 2 + 1) * d;
  }
  PathWitness w{{}, {}, g.v1, g.v2};
  Mode k = k1;
  for (Mode i = 0; i < 2 * n; ++i) {
    w.vertices.push_back(k);
    if (i + 1 < 2 * n) w.edge_colors.push_back(i % 2 == 0 ? Color::Red : Color::Blue);
    k = (i % 2 == 0 ? sr : sb) - k;
  }
  return w;
}

inline bool extend_path(const ColoredGraph& g, std::vector<Mode>& path, std::set<Mode>& used, std::size_t target) {
  if (path.size() == target) return true;
  Color c = path.size() % 2 == 1 ? Color::Red : Color::Blue;
  for (Mode m : g.neighbors(c, path.back())) {
    if (used.count(m)) continue;
    path.push_back(m);
    used.insert(m);
    if (extend_path(g, path, used, target)) return true;
    used.erase(m);
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/// Alternating path k_1 .. k_{2n} whose first edge is red.
inline PathWitness find_alternative_path(const ColoredGraph& g, Mode n) {
  if (n < 1) throw InvalidArgument("path length parameter n must be >= 1");
  PathWitness w;
  if (g.both_families()) {
    w = detail::ladder_path(g, n);
  } else {
    const std::size_t target = static_cast<std::size_t>(2 * n);
    bool found = false;
    if (target <= g.vertices.size()) {
      for (Mode start : g.vertices) {
        std::vector<Mode> path{start};
        std::set<Mode> used{start};
        if (detail::extend_path(g, path, used, target)) {
          w = PathWitness{path, {}, g.v1, g.v2};
          for (std::size_t i = 0; i + 1 < target; ++i) w.edge_colors.push_back(i % 2 == 0 ? Color::Red : Color::Blue);
          found = true;
          break;
        }
      }
    }
    if (!found) throw InvalidArgument("no alternating path with " + std::to_string(target) + " vertices");
  }
  if (!validate_path(g.symbol, w)) throw InternalConsistencyError("alternating path failed validation");
  return w;
}

/// Graphviz rendering.  Families appear as dashed rays labelled with s.
inline std::string to_dot(const ColoredGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  os << "  // p(k) = " << g.symbol.str() << ", red v1 = " << g.v1.str() << ", blue v2 = " << g.v2.str() << "\n";
  ColoredGraph m = materialize(g);
  for (Mode k : m.vertices) os << "  \"" << k << "\";\n";
  for (Color c : {Color::Red, Color::Blue}) {
    for (const auto& [a, b] : m.edges(c)) {
      bool explicit_edge = g.edges(c).count({a, b}) > 0;
      os << "  \"" << a << "\" -- \"" << b << "\" [color=" << color_name(c);
      if (!explicit_edge) os << ", style=dashed";
      os << "];\n";
    }
    for (Mode s : g.families(c)) {
      std::string id = std::string(color_name(c)) + "_family_" + std::to_string(s);
      os << "  \"" << id << "\" [shape=point];\n";
      os << "  \"" << id << "_end\" [shape=none, label=\"\"];\n";
      os << "  \"" << id << "\" -- \"" << id << "_end\" [color=" << color_name(c)
         << ", style=dashed, label=\"family s=" << s << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace dispobs
