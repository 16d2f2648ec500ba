#pragma once

// JSON views of the verdicts and reports, and the JSON graph format
//   {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}]}

#include <string>
#include <string_view>

#include <json.hpp>

#include "artin/complex_lab.hpp"
#include "artin/coxeter_graph.hpp"
#include "artin/normalizer.hpp"
#include "artin/parabolic.hpp"
#include "artin/root_search.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

inline Json to_json(const ConjStabilityVerdict& v) {
  Json j;
  j["stable"] = v.stable;
  if (v.witness)
    j["witness"] = Json::array({v.witness->first, v.witness->second});
  else
    j["witness"] = nullptr;
  return j;
}

/// {rank, stab_gens: [{vertex, word}], loop_gens: [word]}
inline Json to_json(const CoxeterGraph& g, const GammaP& gp, const NormalizerBasis& b) {
  Json j;
  j["rank"] = b.rank;
  j["stab_gens"] = Json::array();
  for (const auto& s : b.stab_gens)
    j["stab_gens"].push_back(
        {{"vertex", vertex_label(g, gp.vertices()[s.vertex])}, {"word", to_string(s.word)}});
  j["loop_gens"] = Json::array();
  for (const auto& l : b.loop_gens) j["loop_gens"].push_back(to_string(l.word));
  return j;
}

inline Json to_json(const GirthReport& r) {
  Json j;
  j["m"] = r.m;
  j["bounds"] = {{"max_syllables", r.bounds.max_syllables},
                 {"max_exponent", r.bounds.max_exponent}};
  j["element_count"] = r.element_count;
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  if (r.girth)
    j["girth"] = *r.girth;
  else
    j["girth"] = nullptr;
  j["sweep"] = nullptr;
  return j;
}

inline Json to_json(const SweepReport& s) {
  Json j;
  j["m"] = s.m;
  j["bounds"] = {{"max_syllables", s.max_syllables}, {"max_exponent", s.max_exponent}};
  j["sweep"] = {{"tested", s.tested},
                {"trivial_found", s.trivial_found},
                {"relator", to_string(s.relator)},
                {"relator_trivial", s.relator_trivial}};
  j["sweep"]["trivial_words"] = Json::array();
  for (const auto& w : s.trivial_words) j["sweep"]["trivial_words"].push_back(to_string(w));
  return j;
}

inline Json to_json(const RootSearchReport& r) {
  Json j;
  j["m"] = r.m;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["max_n"] = r.max_n;
  j["cases"] = r.cases;
  j["vacuous"] = r.vacuous;
  j["non_vacuous"] = r.non_vacuous;
  j["violations"] = Json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"w", to_string(v.w)}, {"h", to_string(v.h)}, {"n", v.n}});
  return j;
}

inline CoxeterGraph parse_graph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<CoxeterGraph::EdgeSpec> edges;
    for (const auto& e : j.value("edges", Json::array()))
      edges.emplace_back(e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                         e.at("m").get<int>());
    return CoxeterGraph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed graph object: ") + e.what());
  }
}

inline Json graph_to_json(const CoxeterGraph& g) {
  Json j;
  j["vertices"] = g.vertices();
  j["edges"] = Json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"m", e.m}});
  return j;
}

/// Text or JSON, decided by the first significant character.
inline CoxeterGraph load_graph(std::string_view text) {
  auto at = text.find_first_not_of(" \t\r\n");
  if (at != std::string_view::npos && text[at] == '{') return parse_graph_json(text);
  return parse_coxeter_graph(text);
}

}  // namespace artin
