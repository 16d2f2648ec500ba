// Command-line front end. Exit codes: 0 answer, 1 domain "no", 2 usage or
// input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artin/artin.hpp"

namespace {

using artin::Json;

enum class Format { Text, Structured };

struct Config {
  Format format = Format::Text;
  std::uint64_t seed = 0;
  std::size_t cap = artin::kDefaultElementCap;
  std::size_t word_cap = artin::kDefaultWordCap;
};

artin::CoxeterGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw artin::ParseError(0, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return artin::load_graph(buf.str());
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

int emit(const Config& cfg, const Json& j, const std::string& text, int code = 0) {
  if (cfg.format == Format::Structured)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
  return code;
}

std::string girth_text(const std::optional<int>& g) {
  return g ? std::to_string(*g) : std::string("inf");
}

}  // namespace

int main(int argc, char** argv) {
  // Everything after a bare "--" following `conjugate` is the second type;
  // CLI11 would otherwise merge it into the first positional list.
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> second_type;
  bool split_seen = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] != "conjugate") continue;
    for (std::size_t k = i + 1; k < args.size(); ++k) {
      if (args[k] != "--") continue;
      second_type.assign(args.begin() + static_cast<long>(k) + 1, args.end());
      args.resize(k);
      split_seen = true;
      break;
    }
    break;
  }
  std::reverse(args.begin(), args.end());

  Config cfg;
  CLI::App app{"Large-type Artin groups: parabolics, normalisers, dihedral Garside tools"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", cfg.seed, "seed for randomized subcommands");
  app.add_option("--cap", cfg.cap, "hard limit on enumerated group elements");
  app.add_option("--word-cap", cfg.word_cap, "hard limit on words tested by a sweep");

  std::string graph_path;
  std::string vertex;
  std::vector<std::string> first_type;

  auto* validate = app.add_subcommand("validate", "check the graph is of large type");
  validate->add_option("graph", graph_path)->required();

  auto* oddc = app.add_subcommand("odd-component", "generators odd-connected to v");
  oddc->add_option("graph", graph_path)->required();
  oddc->add_option("v", vertex)->required();

  auto* conj = app.add_subcommand("conjugate", "are A_X and A_Y conjugate?  <graph> <X...> -- <Y...>");
  conj->add_option("graph", graph_path)->required();
  conj->add_option("X", first_type)->required();

  auto* stable = app.add_subcommand("conj-stable", "is A_X conjugacy stable?");
  stable->add_option("graph", graph_path)->required();
  stable->add_option("X", first_type)->required();

  bool dot = false;
  auto* norm = app.add_subcommand("normalizer", "basis of the free factor of N(<v>)");
  norm->add_option("graph", graph_path)->required();
  norm->add_option("v", vertex)->required();
  norm->add_flag("--dot", dot, "print Gamma_P as DOT");

  int m = 0;
  std::vector<std::string> words;
  auto* dih = app.add_subcommand("dihedral", "dihedral Artin group A(m) on a, b");
  dih->require_subcommand(1);
  auto add_m = [&](CLI::App* c) {
    c->add_option("-m", m, "edge label")->required()->check(CLI::Range(3, 65535));
  };
  auto* d_nf = dih->add_subcommand("nf", "normal form of each word");
  add_m(d_nf);
  d_nf->add_option("words", words)->required();
  auto* d_eq = dih->add_subcommand("eq", "do two words define the same element?");
  add_m(d_eq);
  d_eq->add_option("words", words)->required()->expected(2);
  auto* d_mult = dih->add_subcommand("mult", "normal form of the product");
  add_m(d_mult);
  d_mult->add_option("words", words)->required();
  auto* d_center = dih->add_subcommand("center", "generator of the centre");
  add_m(d_center);
  long trials = 500;
  long max_n = 4;
  auto* d_root = dih->add_subcommand("root-search", "falsification search for root stability");
  add_m(d_root);
  d_root->add_option("--trials", trials)->check(CLI::PositiveNumber);
  d_root->add_option("--max-n", max_n)->check(CLI::Range(2L, 1000000L));

  int syllables = 0;
  int max_exp = 1;
  auto* cx = app.add_subcommand("complex", "bounded fragments of the dihedral Artin complex");
  cx->require_subcommand(1);
  auto* c_girth = cx->add_subcommand("girth", "girth of the fragment");
  add_m(c_girth);
  c_girth->add_option("--syllables", syllables)->required()->check(CLI::PositiveNumber);
  c_girth->add_option("--max-exp", max_exp)->required()->check(CLI::PositiveNumber);
  c_girth->add_flag("--dot", dot, "print the fragment as DOT");
  auto* c_sweep = cx->add_subcommand("sweep", "triviality sweep of short alternating words");
  add_m(c_sweep);
  c_sweep->add_option("--max-exp", max_exp)->required()->check(CLI::PositiveNumber);
  c_sweep->add_option("--syllables", syllables, "defaults to 2m - 1");

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (format == "structured") cfg.format = Format::Structured;

  try {
    if (*validate) {
      auto g = read_graph(graph_path);
      std::vector<std::string> bad;
      for (const auto& e : g.edges())
        if (e.m < 3) bad.push_back(g.name(e.u) + "-" + g.name(e.v) + ":" + std::to_string(e.m));
      Json j{{"large_type", bad.empty()}, {"violations", bad}};
      if (bad.empty()) return emit(cfg, j, "large type");
      return emit(cfg, j, "not large type: " + join(bad, ", "), 1);
    }
    if (*oddc) {
      auto g = read_graph(graph_path);
      auto comp = artin::odd_component(g, vertex);
      return emit(cfg, Json{{"vertex", vertex}, {"component", comp}}, join(comp, " "));
    }
    if (*conj) {
      if (!split_seen) {
        std::cerr << "error: conjugate expects <graph> <X...> -- <Y...>\n";
        return 2;
      }
      auto g = read_graph(graph_path);
      auto x = artin::ParabolicType::of(g, first_type);
      auto y = artin::ParabolicType::of(g, second_type);
      bool yes = artin::are_standard_parabolics_conjugate(g, x, y);
      Json j{{"X", x.names(g)}, {"Y", y.names(g)}, {"conjugate", yes}};
      std::string text = yes ? "conjugate" : "not conjugate";
      if (yes && x.size() == 1 && !(x == y)) {
        auto w = artin::standard_conjugator(g, x.members()[0], y.members()[0]);
        j["conjugator"] = to_string(w);
        text += "; conjugator " + to_string(w);
      }
      return emit(cfg, j, text, yes ? 0 : 1);
    }
    if (*stable) {
      auto g = read_graph(graph_path);
      auto x = artin::ParabolicType::of(g, first_type);
      auto v = artin::is_conjugacy_stable(g, x);
      Json j = artin::to_json(v);
      j["X"] = x.names(g);
      if (v.stable) return emit(cfg, j, "stable");
      return emit(cfg, j,
                  "NOT stable; witness (" + v.witness->first + "," + v.witness->second + ")", 1);
    }
    if (*norm) {
      auto g = read_graph(graph_path);
      auto a = g.index_of(vertex);
      auto gp = artin::build_gamma_p(g, a);
      auto basis = artin::normalizer_basis(g, a);
      Json j = artin::to_json(g, gp, basis);
      std::vector<std::string> ws;
      for (const auto& w : basis.words()) ws.push_back(to_string(w));
      std::string text = "rank " + std::to_string(basis.rank) + "; basis: " + join(ws, ", ");
      if (dot) {
        j["dot"] = artin::to_dot(g, gp);
        text = artin::to_dot(g, gp);
        text.pop_back();
      }
      return emit(cfg, j, text);
    }
    if (*dih) {
      auto p = artin::make_presentation(m);
      if (*d_nf) {
        Json j{{"m", m}, {"normal_forms", Json::array()}};
        std::vector<std::string> lines;
        for (const auto& w : words) {
          auto x = artin::parse_dihedral(p, w);
          j["normal_forms"].push_back({{"word", w}, {"nf", to_string(x)}});
          lines.push_back(to_string(x));
        }
        return emit(cfg, j, join(lines, "\n"));
      }
      if (*d_eq) {
        auto x = artin::parse_dihedral(p, words[0]);
        auto y = artin::parse_dihedral(p, words[1]);
        bool same = x == y;
        Json j{{"m", m}, {"equal", same}, {"nf", {to_string(x), to_string(y)}}};
        return emit(cfg, j, same ? "equal" : "not equal", same ? 0 : 1);
      }
      if (*d_mult) {
        artin::DihedralElement x(p);
        for (const auto& w : words) x *= artin::parse_dihedral(p, w);
        return emit(cfg, Json{{"m", m}, {"nf", to_string(x)}}, to_string(x));
      }
      if (*d_center) {
        auto z = artin::center_generator(p);
        Json j{{"m", m}, {"nf", to_string(z)}, {"word", to_string(artin::to_word(z))}};
        return emit(cfg, j, to_string(z) + " = " + to_string(artin::to_word(z)));
      }
      if (*d_root) {
        auto r = artin::search_root_counterexample(p, trials, max_n, cfg.seed);
        std::string text = "seed " + std::to_string(cfg.seed) + "\ncases " +
                           std::to_string(r.cases) + "; non-vacuous " +
                           std::to_string(r.non_vacuous) + "; violations " +
                           std::to_string(r.violations.size());
        for (const auto& v : r.violations)
          text += "\nviolation: w = " + to_string(v.w) + ", h = " + to_string(v.h) +
                  ", n = " + std::to_string(v.n);
        return emit(cfg, artin::to_json(r), text, r.violations.empty() ? 0 : 1);
      }
    }
    if (*cx) {
      auto p = artin::make_presentation(m);
      if (*c_girth) {
        artin::GirthReport r;
        std::string dot_text;
        if (dot) {
          auto ball = artin::enumerate_ball(p, syllables, max_exp, cfg.cap);
          r = artin::girth_report(ball);
          dot_text = artin::to_dot(ball);
        } else {
          r = artin::streamed_ball_girth(p, syllables, max_exp, cfg.cap);
        }
        Json j = artin::to_json(r);
        std::string text = "girth " + girth_text(r.girth) + "\nelements " +
                           std::to_string(r.element_count) + "; vertices " +
                           std::to_string(r.vertex_count) + "; edges " +
                           std::to_string(r.edge_count) + "; bounds (" +
                           std::to_string(syllables) + ", " + std::to_string(max_exp) + ")";
        if (dot) {
          j["dot"] = dot_text;
          text = dot_text;
          text.pop_back();
        }
        return emit(cfg, j, text);
      }
      if (*c_sweep) {
        int k = syllables > 0 ? syllables : 2 * m - 1;
        auto s = artin::alternating_triviality_sweep(p, k, max_exp, cfg.word_cap);
        bool ok = s.trivial_found == 0 && s.relator_trivial;
        std::string text = "tested " + std::to_string(s.tested) + " alternating words with < " +
                           std::to_string(2 * m) + " syllables; trivial " +
                           std::to_string(s.trivial_found) + "\nrelator " +
                           to_string(s.relator) +
                           (s.relator_trivial ? " is trivial" : " is NOT trivial");
        for (const auto& w : s.trivial_words) text += "\ntrivial: " + to_string(w);
        return emit(cfg, artin::to_json(s), text, ok ? 0 : 1);
      }
    }
  } catch (const artin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
