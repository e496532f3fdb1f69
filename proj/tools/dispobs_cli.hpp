#pragma once

// Command-line front end.  run() is separate from main() so tests can drive
// it with string arguments and captured streams.

#include "dispobs/dispobs.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace dispobs::cli {

enum ExitCode : int {
  kQuantitative = 0,
  kQualitativeOnly = 10,
  kNeither = 20,
  kUsage = 2,
  kInternal = 3,
};

struct RunConfig {
  std::string command;
  std::string symbol;
  std::string v, v1, v2;
  std::string t1 = "0", x1 = "0", t2 = "0", x2 = "0";
  double T = 1.0;
  std::string format;
  Mode window = 20;
  Mode k = 0;
  std::string pair;
  std::string kind;
  std::string n_list = "2,4,8,16";
  bool oracle = false;
  std::uint64_t seed = 1;
  int count = 20;
  int threads = 1;
  int den = 4;
  int range = 10;
  int samples = 1000;
};

inline const char* kSymbolHelp =
    "dispersion symbol: a coefficient list a0,a1,...,ad of decimal rationals (\"0,0,0,1\" is k^3) or a "
    "preset: schrodinger (k^2), kdv (k^3), higher-schrodinger:l (k^2 + k^4 + ... + k^{2l}, l >= 2)";

namespace detail {

inline Slope slope_arg(const std::string& text, const char* what) {
  if (text.empty()) throw InvalidArgument(std::string("missing ") + what);
  try {
    return parse_slope(text);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what() +
                          " (only rational slopes are accepted; for a rational symbol an irrational slope has no "
                          "resonant pair, so one segment already observes)");
  }
}

inline PolynomialSymbol symbol_arg(const std::string& text) {
  if (text.empty()) throw InvalidArgument("missing --symbol");
  return parse_symbol(text);
}

inline std::vector<Mode> int_list(const std::string& text) {
  std::vector<Mode> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q = parse_rational(item);
    if (!is_integer(q)) throw InvalidArgument("expected integers in '" + text + "'");
    out.push_back(to_mode(q.get_num()));
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

inline SegmentSpec segment(const std::string& t, const std::string& x, const Slope& v, double T) {
  SegmentSpec s{parse_angle(t), parse_angle(x), v, T};
  s.validate();
  return s;
}

inline std::string format_or(const RunConfig& c, const char* fallback) {
  return c.format.empty() ? fallback : c.format;
}

inline void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline Json segment_json(const SegmentSpec& s) {
  return {{"t0", s.t0.str()}, {"x0", s.x0.str()}, {"v", s.v.str()}, {"T", s.T}};
}

inline std::string ratio_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "n,norm_sq,seg_integral,ratio\n";
  for (const auto& r : rows) os << r.n << ',' << r.norm_sq << ',' << r.seg_integral << ',' << r.ratio << '\n';
  return os.str();
}

inline Json ratio_json(const std::vector<RatioRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"n", r.n},
                   {"norm_sq", r.norm_sq},
                   {"seg_integral", r.seg_integral},
                   {"red_integral", r.red_integral},
                   {"blue_integral", r.blue_integral},
                   {"ratio", r.ratio},
                   {"path", r.path}});
  return {{"schema", kSchemaVersion}, {"rows", arr}};
}

}  // namespace detail

inline int cmd_analyze(const RunConfig& c, std::ostream& out) {
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  const Slope v1 = detail::slope_arg(c.v1.empty() ? c.v : c.v1, "--v1");
  if (c.v2.empty()) {
    ObservabilityVerdict v = decide_one_segment(sym, v1);
    Json j = to_json(v);
    if (v.pair_witness) {
      SegmentSpec seg = detail::segment(c.t1, c.x1, v1, c.T);
      FourierState s = pair_vanishing_state(sym, v1, seg.t0, seg.x0, *v.pair_witness);
      j["witness_state"] = to_json(s);
      j["witness_residual"] = max_abs_on_segment(s, sym, seg, c.samples);
    }
    detail::print(out, j);
    return v.reason == Reason::GammaDegenerate ? kNeither : v.exit_code();
  }
  const Slope v2 = detail::slope_arg(c.v2, "--v2");
  ObservabilityVerdict v = decide_two_segments(sym, v1, v2);
  Json j = to_json(v);
  if (sym == kdv_symbol() && v1.is_integer() && v2.is_integer() && v1.value() > 0 && v2.value() > 0) {
    KdvCriterion crit = kdv_two_segment_criterion(to_mode(v1.value().get_num()), to_mode(v2.value().get_num()));
    j["kdv_criterion"] = to_json(crit);
    if (crit.result != KdvCriterion::Result::Inconclusive && v.quantitative != Answer::Yes)
      throw InternalConsistencyError("KdV criterion hit but the graph decision is negative");
  }
  if (v.cycle_witness) {
    SegmentSpec s1 = detail::segment(c.t1, c.x1, v1, c.T);
    SegmentSpec s2 = detail::segment(c.t2, c.x2, v2, c.T);
    const auto [t0, x0] = intersection_point(s1, s2);
    FourierState s = cycle_vanishing_state(sym, *v.cycle_witness, t0, x0);
    j["segments"] = {detail::segment_json(s1), detail::segment_json(s2)};
    j["intersection"] = {{"t0", t0.str()}, {"x0", x0.str()}};
    j["witness_state"] = to_json(s);
    j["witness_residual"] =
        std::max(max_abs_on_segment(s, sym, s1, c.samples), max_abs_on_segment(s, sym, s2, c.samples));
  }
  detail::print(out, j);
  return v.exit_code();
}

inline int cmd_pi(const RunConfig& c, std::ostream& out) {
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  const Slope v = detail::slope_arg(c.v, "--v");
  ResonancePairSet pi = pi_set(sym, v);
  Json j = to_json(pi);
  j["schema"] = kSchemaVersion;
  if (c.oracle) {
    auto oracle = pi_oracle(sym, v, c.window);
    j["window"] = c.window;
    j["oracle_pairs"] = pairs_json(oracle);
    j["oracle_match"] = oracle == pi.window(c.window);
  }
  detail::print(out, j);
  return kQuantitative;
}

inline int cmd_xi(const RunConfig& c, std::ostream& out) {
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  const Slope v = detail::slope_arg(c.v, "--v");
  Json j = to_json(xi_class(sym, v, c.k));
  j["schema"] = kSchemaVersion;
  j["lambda"] = lambda_kv(sym, v, c.k).get_str();
  detail::print(out, j);
  return kQuantitative;
}

inline int cmd_graph(const RunConfig& c, std::ostream& out) {
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  const Slope v1 = detail::slope_arg(c.v1, "--v1");
  const Slope v2 = detail::slope_arg(c.v2, "--v2");
  ColoredGraph g = build_graph(sym, v1, v2, c.window);
  const std::string fmt = detail::format_or(c, "json");
  if (fmt == "dot") {
    out << to_dot(g);
    return kQuantitative;
  }
  if (fmt != "json") throw InvalidArgument("graph supports --format json or dot");
  Json j = to_json(g);
  j["schema"] = kSchemaVersion;
  j["components"] = to_json(component_summary(g));
  auto cycle = has_two_colored_cycle(g);
  j["two_colored_cycle"] = cycle ? to_json(*cycle) : Json(nullptr);
  ColoredGraph reduced = reduce_graph(g);
  j["reduced"] = {{"vertices", reduced.vertices},
                  {"red_edges", pairs_json(reduced.red_edges)},
                  {"blue_edges", pairs_json(reduced.blue_edges)}};
  detail::print(out, j);
  return kQuantitative;
}

inline int cmd_ratio(const RunConfig& c, std::ostream& out) {
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  const Slope v1 = detail::slope_arg(c.v1, "--v1");
  const Slope v2 = detail::slope_arg(c.v2, "--v2");
  ColoredGraph g = build_graph(sym, v1, v2, c.window);
  SegmentSpec s1 = detail::segment(c.t1, c.x1, v1, c.T);
  SegmentSpec s2 = detail::segment(c.t2, c.x2, v2, c.T);
  auto rows = ratio_sequence(g, s1, s2, detail::int_list(c.n_list));
  const std::string fmt = detail::format_or(c, "csv");
  if (fmt == "csv") {
    out << detail::ratio_csv(rows);
  } else if (fmt == "json") {
    detail::print(out, detail::ratio_json(rows));
  } else {
    throw InvalidArgument("ratio supports --format csv or json");
  }
  return kQuantitative;
}

inline int cmd_witness(const RunConfig& c, std::ostream& out) {
  if (c.kind == "ratio") return cmd_ratio(c, out);
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  Json j = {{"schema", kSchemaVersion}, {"kind", c.kind}};
  if (c.kind == "pair") {
    const Slope v = detail::slope_arg(c.v.empty() ? c.v1 : c.v, "--v");
    ModePair pair;
    if (!c.pair.empty()) {
      auto ks = detail::int_list(c.pair);
      if (ks.size() != 2) throw InvalidArgument("--pair needs two integers");
      pair = {ks[0], ks[1]};
    } else {
      auto rep = representative_pair(pi_set(sym, v));
      if (!rep) throw InvalidArgument("no resonant pair for v = " + v.str());
      pair = *rep;
    }
    SegmentSpec seg = detail::segment(c.t1, c.x1, v, c.T);
    FourierState s = pair_vanishing_state(sym, v, seg.t0, seg.x0, pair);
    j["segments"] = {detail::segment_json(seg)};
    j["pair"] = {pair.first, pair.second};
    j["state"] = to_json(s);
    j["norm_sq"] = l2_norm_sq(s);
    j["residual"] = max_abs_on_segment(s, sym, seg, c.samples);
  } else if (c.kind == "cycle") {
    const Slope v1 = detail::slope_arg(c.v1, "--v1");
    const Slope v2 = detail::slope_arg(c.v2, "--v2");
    auto cycle = has_two_colored_cycle(build_graph(sym, v1, v2, c.window));
    if (!cycle) throw InvalidArgument("the graph has no two-colored cycle");
    SegmentSpec s1 = detail::segment(c.t1, c.x1, v1, c.T);
    SegmentSpec s2 = detail::segment(c.t2, c.x2, v2, c.T);
    const auto [t0, x0] = intersection_point(s1, s2);
    FourierState s = cycle_vanishing_state(sym, *cycle, t0, x0);
    j["segments"] = {detail::segment_json(s1), detail::segment_json(s2)};
    j["intersection"] = {{"t0", t0.str()}, {"x0", x0.str()}};
    j["cycle"] = to_json(*cycle);
    j["state"] = to_json(s);
    j["norm_sq"] = l2_norm_sq(s);
    j["residual"] = std::max(max_abs_on_segment(s, sym, s1, c.samples), max_abs_on_segment(s, sym, s2, c.samples));
  } else {
    throw InvalidArgument("--kind must be pair, cycle or ratio");
  }
  detail::print(out, j);
  return kQuantitative;
}

inline int cmd_kdv(const RunConfig& c, std::ostream& out) {
  if (!c.v.empty() && c.v1.empty() && c.v2.empty()) {
    const Slope v = detail::slope_arg(c.v, "--v");
    ObservabilityVerdict verdict = kdv_one_segment(v);
    Json j = to_json(verdict);
    if (v.is_integer()) j["gamma"] = to_json(gamma_membership(v.value().get_num()));
    detail::print(out, j);
    return verdict.exit_code();
  }
  const Slope v1 = detail::slope_arg(c.v1, "--v1");
  const Slope v2 = detail::slope_arg(c.v2, "--v2");
  if (!v1.is_integer() || !v2.is_integer()) throw InvalidArgument("kdv --v1/--v2 take integer slopes");
  const long a = to_mode(v1.value().get_num()), b = to_mode(v2.value().get_num());
  KdvCriterion crit = kdv_two_segment_criterion(a, b);
  ObservabilityVerdict verdict = decide_two_segments(kdv_symbol(), v1, v2);
  if (crit.result != KdvCriterion::Result::Inconclusive && verdict.quantitative != Answer::Yes)
    throw InternalConsistencyError("KdV criterion hit but the graph decision is negative");
  Json j = {{"schema", kSchemaVersion},
            {"v1", v1.str()},
            {"v2", v2.str()},
            {"gamma_v1", to_json(gamma_membership(a))},
            {"gamma_v2", to_json(gamma_membership(b))},
            {"criterion", to_json(crit)},
            {"decision", to_json(verdict)}};
  detail::print(out, j);
  return verdict.exit_code();
}

inline int cmd_oracle_compare(const RunConfig& c, std::ostream& out) {
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  const Slope v = detail::slope_arg(c.v, "--v");
  auto solver = pi_set(sym, v).window(c.window);
  auto oracle = pi_oracle(sym, v, c.window);
  Json j = {{"schema", kSchemaVersion},
            {"window", c.window},
            {"solver_pairs", solver.size()},
            {"oracle_pairs", oracle.size()},
            {"match", solver == oracle}};
  if (solver != oracle) {
    std::set<ModePair> only_solver, only_oracle;
    std::set_difference(solver.begin(), solver.end(), oracle.begin(), oracle.end(),
                        std::inserter(only_solver, only_solver.end()));
    std::set_difference(oracle.begin(), oracle.end(), solver.begin(), solver.end(),
                        std::inserter(only_oracle, only_oracle.end()));
    j["only_solver"] = pairs_json(only_solver);
    j["only_oracle"] = pairs_json(only_oracle);
  }
  detail::print(out, j);
  return solver == oracle ? kQuantitative : kInternal;
}

/// Random rational slope pairs; tasks are drawn up front from the seed and
/// results are printed in task order, so the thread count never changes output.
inline int cmd_sweep(const RunConfig& c, std::ostream& out) {
  const PolynomialSymbol sym = detail::symbol_arg(c.symbol);
  if (c.count < 1 || c.den < 1 || c.range < 1 || c.threads < 1)
    throw InvalidArgument("--count, --den, --range and --threads must be positive");
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<long> num(-static_cast<long>(c.range) * c.den, static_cast<long>(c.range) * c.den);
  std::uniform_int_distribution<long> den(1, c.den);
  std::vector<std::pair<Slope, Slope>> tasks;
  while (static_cast<int>(tasks.size()) < c.count) {
    Slope a(Rational(num(rng), den(rng)));
    Slope b(Rational(num(rng), den(rng)));
    if (a == b) continue;
    tasks.push_back({a, b});
  }
  std::vector<std::string> lines(tasks.size());
  std::vector<int> status(tasks.size(), 0);
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < tasks.size(); i += static_cast<std::size_t>(c.threads)) {
      Json j = {{"v1", tasks[i].first.str()}, {"v2", tasks[i].second.str()}};
      try {
        ObservabilityVerdict v = decide_two_segments(sym, tasks[i].first, tasks[i].second);
        j["qualitative"] = answer_name(v.qualitative);
        j["quantitative"] = answer_name(v.quantitative);
        j["reason"] = reason_name(v.reason);
        j["g"] = v.components ? to_json(*v.components)["g"] : Json(nullptr);
      } catch (const InternalConsistencyError& e) {
        j["error"] = e.what();
        status[i] = kInternal;
      } catch (const InvalidArgument& e) {
        j["error"] = e.what();
        status[i] = kUsage;
      }
      lines[i] = j.dump();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < c.threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
  work(0);
  for (auto& th : pool) th.join();
  for (const auto& l : lines) out << l << '\n';
  return *std::max_element(status.begin(), status.end());
}

inline int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.command == "analyze") return cmd_analyze(c, out);
  if (c.command == "pi") return cmd_pi(c, out);
  if (c.command == "xi") return cmd_xi(c, out);
  if (c.command == "graph") return cmd_graph(c, out);
  if (c.command == "witness") return cmd_witness(c, out);
  if (c.command == "ratio") return cmd_ratio(c, out);
  if (c.command == "kdv") return cmd_kdv(c, out);
  if (c.command == "oracle-compare") return cmd_oracle_compare(c, out);
  if (c.command == "sweep") return cmd_sweep(c, out);
  throw InvalidArgument("unknown command '" + c.command + "'");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Observability of dispersive equations on the torus from one or two moving segments"};
  app.name("dispobs");
  app.footer(std::string("Symbols (--symbol): ") + kSymbolHelp);
  app.require_subcommand(1);

  auto add_symbol = [&](CLI::App* s) { s->add_option("--symbol", c.symbol, kSymbolHelp); };
  auto add_segments = [&](CLI::App* s) {
    s->add_option("--t1", c.t1, "start time of segment 1 (decimal, fraction or multiple of pi)")
        ->capture_default_str();
    s->add_option("--x1", c.x1, "start position of segment 1 (e.g. 3/4pi)")->capture_default_str();
    s->add_option("--t2", c.t2, "start time of segment 2")->capture_default_str();
    s->add_option("--x2", c.x2, "start position of segment 2")->capture_default_str();
    s->add_option("--T", c.T, "segment length in time")->capture_default_str();
    s->add_option("--samples", c.samples, "sample points for residuals")->capture_default_str();
  };
  auto add_two = [&](CLI::App* s) {
    s->add_option("--v1", c.v1, "slope of segment 1 (red)");
    s->add_option("--v2", c.v2, "slope of segment 2 (blue)");
  };
  auto add_window = [&](CLI::App* s) {
    s->add_option("--window", c.window, "mode window |k| <= K for display and oracles")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "observability verdict for one (--v1) or two (--v1 --v2) segments");
  add_symbol(analyze);
  add_two(analyze);
  analyze->add_option("--v", c.v, "slope for a one-segment question");
  add_segments(analyze);

  auto* pi = app.add_subcommand("pi", "resonant set Pi(v): finite pairs and families");
  add_symbol(pi);
  pi->add_option("--v", c.v, "slope");
  add_window(pi);
  pi->add_flag("--oracle", c.oracle, "also run the exhaustive window scan");

  auto* xi = app.add_subcommand("xi", "resonance class of one mode");
  add_symbol(xi);
  xi->add_option("--v", c.v, "slope");
  xi->add_option("--k", c.k, "mode")->required();

  auto* graph = app.add_subcommand("graph", "two-colored resonance graph, components, cycle, reduced graph");
  add_symbol(graph);
  add_two(graph);
  add_window(graph);
  graph->add_option("--format", c.format, "json or dot");

  auto* witness = app.add_subcommand("witness", "explicit vanishing or blow-up states");
  add_symbol(witness);
  add_two(witness);
  witness->add_option("--v", c.v, "slope (pair kind)");
  witness->add_option("--kind", c.kind, "pair, cycle or ratio")->required();
  witness->add_option("--pair", c.pair, "resonant pair a,b (pair kind)");
  witness->add_option("--n", c.n_list, "path half-lengths (ratio kind)")->capture_default_str();
  witness->add_option("--format", c.format, "csv or json (ratio kind)");
  add_window(witness);
  add_segments(witness);

  auto* ratio = app.add_subcommand("ratio", "norm and observation energy along alternating paths");
  add_symbol(ratio);
  add_two(ratio);
  ratio->add_option("--n", c.n_list, "comma separated n values")->capture_default_str();
  ratio->add_option("--format", c.format, "csv or json");
  add_window(ratio);
  add_segments(ratio);

  auto* kdv = app.add_subcommand("kdv", "p = k^3: Gamma membership and the two-segment criteria");
  kdv->add_option("--v", c.v, "one-segment slope");
  add_two(kdv);

  auto* oc = app.add_subcommand("oracle-compare", "compare the resonance solver with the exhaustive scan");
  add_symbol(oc);
  oc->add_option("--v", c.v, "slope");
  add_window(oc);

  auto* sweep = app.add_subcommand("sweep", "decisions over random rational slope pairs");
  add_symbol(sweep);
  sweep->add_option("--count", c.count, "number of slope pairs")->capture_default_str();
  sweep->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sweep->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  sweep->add_option("--den", c.den, "largest slope denominator")->capture_default_str();
  sweep->add_option("--range", c.range, "slopes lie in [-range, range]")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }
  for (auto* s : app.get_subcommands()) c.command = s->get_name();

  try {
    return dispatch(c, out);
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kInternal;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dispobs::cli
