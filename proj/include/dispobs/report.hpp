#pragma once

// JSON (schema 1) for resonance sets, graphs, witnesses, states and verdicts.
// Rationals are written as strings ("7/2") so they round-trip exactly.

#include "dispobs/applications.hpp"
#include "dispobs/witness.hpp"

#include <json.hpp>

#include <string>

namespace dispobs {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json pairs_json(const std::set<ModePair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

inline Json to_json(const PolynomialSymbol& sym) {
  Json coeffs = Json::array();
  for (const auto& c : sym.coeffs()) coeffs.push_back(c.get_str());
  return {{"name", sym.name()}, {"text", sym.str()}, {"coeffs", coeffs}};
}

inline PolynomialSymbol symbol_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return PolynomialSymbol(std::move(coeffs), j.value("name", std::string{}));
}

inline Json to_json(const ResonancePairSet& pi) {
  return {{"symbol", to_json(pi.symbol)},
          {"v", pi.slope.str()},
          {"finite_pairs", pairs_json(pi.finite_pairs)},
          {"infinite_families", pi.infinite_families}};
}

inline Json to_json(const ResonanceClass& c) {
  return {{"anchor", c.anchor}, {"members", c.members}, {"n_k", c.members.size()}};
}

inline Json colors_json(const std::vector<Color>& colors) {
  Json out = Json::array();
  for (Color c : colors) out.push_back(color_name(c));
  return out;
}

inline std::vector<Color> colors_from_json(const Json& j) {
  std::vector<Color> out;
  for (const auto& c : j) {
    const auto s = c.get<std::string>();
    if (s == "red") {
      out.push_back(Color::Red);
    } else if (s == "blue") {
      out.push_back(Color::Blue);
    } else {
      throw InvalidArgument("unknown edge color '" + s + "'");
    }
  }
  return out;
}

inline Json to_json(const CycleWitness& w) {
  return {{"vertices", w.vertices},
          {"edge_colors", colors_json(w.edge_colors)},
          {"v_red", w.v_red.str()},
          {"v_blue", w.v_blue.str()}};
}

inline Json to_json(const PathWitness& w) {
  return {{"vertices", w.vertices},
          {"edge_colors", colors_json(w.edge_colors)},
          {"v_red", w.v_red.str()},
          {"v_blue", w.v_blue.str()}};
}

template <class W>
W witness_from_json(const Json& j) {
  W w;
  w.vertices = j.at("vertices").get<std::vector<Mode>>();
  w.edge_colors = colors_from_json(j.at("edge_colors"));
  w.v_red = parse_slope(j.at("v_red").get<std::string>());
  w.v_blue = parse_slope(j.at("v_blue").get<std::string>());
  return w;
}

inline Json to_json(const ComponentSummary& c) {
  Json g = c.infinite ? Json("infinity") : Json(c.g_value);
  return {{"sizes", c.sizes}, {"family_pairs", c.family_pairs}, {"g", g}};
}

inline Json to_json(const ColoredGraph& g) {
  return {{"symbol", to_json(g.symbol)},
          {"v1", g.v1.str()},
          {"v2", g.v2.str()},
          {"vertices", g.vertices},
          {"red_edges", pairs_json(g.red_edges)},
          {"blue_edges", pairs_json(g.blue_edges)},
          {"red_families", g.red_families},
          {"blue_families", g.blue_families}};
}

inline Json to_json(const FourierState& s) {
  Json out = Json::object();
  for (const auto& [k, c] : s.coefficients) out[std::to_string(k)] = {c.real(), c.imag()};
  return out;
}

inline Json to_json(const Hypotheses& h) {
  Json nv = h.n_v ? Json(*h.n_v) : Json(nullptr);
  return {{"H1", h.h1}, {"H2", h.h2}, {"N_v", nv}};
}

inline Json to_json(const ObservabilityVerdict& v) {
  Json slopes = Json::array();
  for (const auto& s : v.slopes) slopes.push_back(s.str());
  Json hyp = Json::array();
  for (const auto& h : v.hypotheses) hyp.push_back(to_json(h));
  Json out = {{"schema", kSchemaVersion},
              {"symbol", to_json(v.symbol)},
              {"slopes", slopes},
              {"qualitative", answer_name(v.qualitative)},
              {"quantitative", answer_name(v.quantitative)},
              {"reason", reason_name(v.reason)},
              {"hypotheses", hyp}};
  out["min_time"] = v.min_time ? Json(v.min_time->str()) : Json(nullptr);
  if (v.pair_witness) out["pair_witness"] = {v.pair_witness->first, v.pair_witness->second};
  if (v.cycle_witness) out["cycle_witness"] = to_json(*v.cycle_witness);
  if (v.path_witness) out["path_witness"] = to_json(*v.path_witness);
  if (v.components) out["components"] = to_json(*v.components);
  return out;
}

inline Answer answer_from_name(const std::string& s) {
  if (s == "yes") return Answer::Yes;
  if (s == "no") return Answer::No;
  if (s == "undecided") return Answer::Undecided;
  throw InvalidArgument("unknown answer '" + s + "'");
}

inline Reason reason_from_name(const std::string& s) {
  for (Reason r : {Reason::EmptyPi, Reason::NonEmptyPi, Reason::NoCycle, Reason::NoCycleFiniteG,
                   Reason::TwoColoredCycle, Reason::InfiniteG, Reason::GammaDegenerate})
    if (s == reason_name(r)) return r;
  throw InvalidArgument("unknown reason '" + s + "'");
}

/// Reads a verdict back.  Witnesses are restored as data; call
/// verdict_consistent to recheck them.
inline ObservabilityVerdict verdict_from_json(const Json& j) {
  if (j.value("schema", 0) != kSchemaVersion) throw InvalidArgument("unsupported schema version");
  ObservabilityVerdict v;
  v.symbol = symbol_from_json(j.at("symbol"));
  for (const auto& s : j.at("slopes")) v.slopes.push_back(parse_slope(s.get<std::string>()));
  v.qualitative = answer_from_name(j.at("qualitative").get<std::string>());
  v.quantitative = answer_from_name(j.at("quantitative").get<std::string>());
  v.reason = reason_from_name(j.at("reason").get<std::string>());
  if (j.contains("pair_witness")) {
    const auto& p = j.at("pair_witness");
    v.pair_witness = ModePair{p.at(0).get<Mode>(), p.at(1).get<Mode>()};
  }
  if (j.contains("cycle_witness")) v.cycle_witness = witness_from_json<CycleWitness>(j.at("cycle_witness"));
  if (j.contains("path_witness")) v.path_witness = witness_from_json<PathWitness>(j.at("path_witness"));
  return v;
}

inline Json to_json(const GammaCertificate& c) {
  Json out = {{"v", c.v.get_str()}, {"member", c.member}};
  out["representation"] =
      c.representation ? Json{c.representation->first, c.representation->second} : Json(nullptr);
  return out;
}

inline Json to_json(const KdvCriterion& c) {
  Json vals = Json::array();
  for (const auto& v : c.valuations) vals.push_back({{"p", v.p}, {"ord_v1", v.ord_v1}, {"ord_v2", v.ord_v2}});
  Json out = {{"result", KdvCriterion::name(c.result)}, {"valuations", vals}};
  out["prime"] = c.prime ? Json(*c.prime) : Json(nullptr);
  return out;
}

}  // namespace dispobs
