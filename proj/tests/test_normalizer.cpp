#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "artin/dihedral.hpp"
#include "artin/json.hpp"
#include "artin/normalizer.hpp"
#include "support.hpp"

using namespace artin;

namespace {

const char* kRow1 = "vertices: a b c\na b 3\na c 3\nb c 3";
const char* kRow2 = "vertices: a b c\na b 3\na c 3\nb c 4";
const char* kRow3 = "vertices: a b c\na b 4\na c 4\nb c 4";
const char* kRow4 = "vertices: a b c\na b 4\na c 3\nb c 4";

std::vector<std::string> basis_strings(const CoxeterGraph& g, std::string_view a) {
  std::vector<std::string> out;
  for (const auto& w : normalizer_basis(g, a).words()) out.push_back(to_string(w));
  return out;
}

// A word up to inversion of individual factors: the edge sequence with
// absolute exponents, optionally after renaming the generators.
using Shape = std::vector<std::tuple<std::string, std::string, long>>;

Shape shape(const DeltaWord& w, const std::map<std::string, std::string>& rename = {}) {
  auto r = [&](const std::string& s) {
    auto it = rename.find(s);
    return it == rename.end() ? s : it->second;
  };
  Shape out;
  for (const auto& f : w.factors()) {
    auto u = r(f.u), v = r(f.v);
    out.emplace_back(std::min(u, v), std::max(u, v), std::labs(f.exp));
  }
  return out;
}

std::set<Shape> shapes(const std::vector<DeltaWord>& ws,
                       const std::map<std::string, std::string>& rename = {}) {
  std::set<Shape> out;
  for (const auto& w : ws) out.insert(shape(w, rename));
  return out;
}

// Rank from the component alone: 2 #odd edges + #even pendants - |comp| + 1.
long rank_oracle(const CoxeterGraph& g, std::size_t a) {
  std::vector<bool> in(g.size(), false);
  in[a] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& e : g.edges())
      if (e.m % 2 == 1 && in[e.u] != in[e.v]) in[e.u] = in[e.v] = grew = true;
  }
  long comp = std::count(in.begin(), in.end(), true), odd = 0, pendants = 0;
  for (const auto& e : g.edges()) {
    if (e.m % 2 == 1)
      odd += in[e.u] ? 1 : 0;
    else
      pendants += (in[e.u] ? 1 : 0) + (in[e.v] ? 1 : 0);
  }
  return 2 * odd + pendants - comp + 1;
}

}  // namespace

TEST_CASE("Gamma_P of the all-odd triangle is a hexagon") {
  auto g = parse_coxeter_graph(kRow1);
  auto gp = build_gamma_p(g, "a");
  CHECK(gp.type1_count() == 3);
  CHECK(gp.type2_count() == 3);
  CHECK(gp.incidences().size() == 6);
  CHECK(gp.betti() == 1);
  for (const auto& v : gp.vertices())
    if (v.is_type2()) CHECK(v.kind == GammaVertex::Kind::OddEdge);
  auto t = spanning_tree(gp);
  CHECK(t.tree.size() == 5);
  CHECK(t.non_tree.size() == 1);
  CHECK(free_rank(gp) == 4);
}

TEST_CASE("Gamma_P with one even edge is a tree with two pendants") {
  auto g = parse_coxeter_graph(kRow2);
  auto gp = build_gamma_p(g, "a");
  std::vector<std::string> labels;
  for (const auto& v : gp.vertices()) labels.push_back(vertex_label(g, v));
  CHECK(labels == std::vector<std::string>{"a", "b", "c", "ab", "ac", "bc@b", "bc@c"});
  CHECK(gp.betti() == 0);
  CHECK(spanning_tree(gp).non_tree.empty());
  CHECK(free_rank(gp) == 4);
}

TEST_CASE("Gamma_P of the all-even triangle is a star") {
  auto g = parse_coxeter_graph(kRow3);
  auto gp = build_gamma_p(g, "a");
  CHECK(gp.type1_count() == 1);
  CHECK(gp.type2_count() == 2);
  CHECK(gp.betti() == 0);
  CHECK(free_rank(gp) == 2);
  auto dot = to_dot(g, gp);
  CHECK(dot.rfind("graph gamma_p {", 0) == 0);
  CHECK(dot.find("ab@a") != std::string::npos);
  std::size_t bold = 0;
  for (auto at = dot.find("style=bold"); at != std::string::npos;
       at = dot.find("style=bold", at + 1))
    ++bold;
  CHECK(bold == 2);
}

TEST_CASE("free ranks of the four triangles") {
  std::vector<long> ranks;
  for (auto text : {kRow1, kRow2, kRow3, kRow4})
    ranks.push_back(free_rank(build_gamma_p(parse_coxeter_graph(text), "a")));
  CHECK(ranks == std::vector<long>{4, 4, 2, 3});
}

TEST_CASE("bases of the four triangles") {
  auto g1 = parse_coxeter_graph(kRow1);
  CHECK(basis_strings(g1, "a") ==
        std::vector<std::string>{"d[ab]^2", "d[ac]^2", "d[ab] d[bc]^2 d[ab]^-1",
                                 "d[ac] d[bc]^-1 d[ab]^-1"});
  CHECK(basis_strings(parse_coxeter_graph(kRow2), "a") ==
        std::vector<std::string>{"d[ab]^2", "d[ac]^2", "d[ab] d[bc] d[ab]^-1",
                                 "d[ac] d[bc] d[ac]^-1"});
  CHECK(basis_strings(parse_coxeter_graph(kRow3), "a") ==
        std::vector<std::string>{"d[ab]", "d[ac]"});
  CHECK(basis_strings(parse_coxeter_graph(kRow4), "a") ==
        std::vector<std::string>{"d[ab]", "d[ac]^2", "d[ac] d[bc] d[ac]^-1"});

  // The reference all-odd basis uses the other spanning tree of the
  // hexagon; swapping b and c maps ours onto it factor by factor.
  auto reference = std::vector<DeltaWord>{
      parse_delta_word("d[ab]^2", g1), parse_delta_word("d[ac]^2", g1),
      parse_delta_word("d[ac] d[bc]^2 d[ac]^-1", g1), parse_delta_word("d[ab] d[bc] d[ac]", g1)};
  CHECK(shapes(normalizer_basis(g1, "a").words(), {{"b", "c"}, {"c", "b"}}) ==
        shapes(reference));
}

TEST_CASE("tracker") {
  auto g = parse_coxeter_graph(kRow1);
  CHECK(verify_normalizes(g, "a", parse_delta_word("d[ab]^2", g)));
  CHECK_FALSE(verify_normalizes(g, "a", parse_delta_word("d[ab]", g)));
  CHECK(track(g, g.index_of("a"), parse_delta_word("d[ab]", g)) == g.index_of("b"));
  CHECK(verify_normalizes(g, "a", parse_delta_word("d[ab] d[bc] d[ac]", g)));
  auto even = parse_coxeter_graph(kRow3);
  CHECK(verify_normalizes(even, "a", parse_delta_word("d[ab]", even)));
  try {
    track(g, g.index_of("a"), parse_delta_word("d[ab] d[bc]", g));
    FAIL("expected an untrackable word");
  } catch (const UntrackableError& e) {
    CHECK(e.position() == 1);
  }
}

TEST_CASE("single odd edge and isolated vertex") {
  auto edge = parse_coxeter_graph("a b 5");
  auto b = normalizer_basis(edge, "a");
  CHECK(b.rank == 1);
  REQUIRE(b.stab_gens.size() == 1);
  CHECK(to_string(b.stab_gens[0].word) == "d[ab]^2");
  auto lonely = parse_coxeter_graph("vertices: a b c\nb c 3");
  CHECK(normalizer_basis(lonely, "a").rank == 0);
  CHECK(free_rank(build_gamma_p(lonely, "a")) == 0);
}

TEST_CASE("property: counting, parity and rank laws") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = test::random_graph(rng, 6, 1);
    for (std::size_t a = 0; a < g.size(); ++a) {
      auto gp = build_gamma_p(g, a);
      auto basis = normalizer_basis(g, a);
      CHECK(basis.stab_gens.size() == gp.type2_count());
      CHECK(static_cast<long>(basis.loop_gens.size()) == gp.betti());
      CHECK(basis.rank == free_rank(gp));
      CHECK(basis.rank == rank_oracle(g, a));
      for (const auto& s : basis.stab_gens) {
        const auto& v = gp.vertices()[s.vertex];
        bool odd = g.label(v.c, v.d) % 2 == 1;
        CHECK(std::labs(s.core.exp) == (odd ? 2 : 1));
        for (const auto& f : s.conjugator.factors()) CHECK(g.label(f.u, f.v) % 2 == 1);
        if (v.kind == GammaVertex::Kind::EvenPendant) CHECK(track(g, v.attach, s.conjugator) == a);
      }
      for (const auto& w : basis.words()) CHECK(verify_normalizes(g, a, w));
    }
  }
}

TEST_CASE("property: tracker agrees with dihedral conjugation") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_graph(rng, 5, 2);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (auto d : g.neighbours(a)) {
        auto u = std::min(a, d), v = std::max(a, d);
        auto p = make_presentation(g.label(u, v), g.name(u), g.name(v));
        auto gen = DihedralElement::generator(p, *p->letter_of(g.name(a)));
        for (long k : {-2L, -1L, 1L, 2L}) {
          DeltaWord w;
          w.push_back(delta_factor(g, u, v, k));
          auto image = conjugate(gen, DihedralElement::delta(p, k));
          auto t = track(g, a, w);
          CHECK(image == DihedralElement::generator(p, *p->letter_of(g.name(t))));
        }
      }
  }
}

TEST_CASE("structured basis") {
  auto g = parse_coxeter_graph(kRow4);
  auto gp = build_gamma_p(g, "a");
  auto j = to_json(g, gp, normalizer_basis(g, "a"));
  CHECK(j["rank"] == 3);
  CHECK(j["stab_gens"][2]["word"] == "d[ac] d[bc] d[ac]^-1");
  CHECK(j["loop_gens"].empty());
}
