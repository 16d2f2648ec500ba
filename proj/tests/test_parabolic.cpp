#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "artin/json.hpp"
#include "artin/parabolic.hpp"
#include "stability_table.hpp"
#include "support.hpp"

using namespace artin;

namespace {

ParabolicType subset(std::size_t bits, std::size_t n) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < n; ++i)
    if (bits >> i & 1) m.push_back(i);
  return ParabolicType(m);
}

std::string witness_text(const ConjStabilityVerdict& v) {
  return v.witness ? v.witness->first + "," + v.witness->second : "";
}

void check_equivalence(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> rel(count * count);
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = 0; y < count; ++y)
      rel[x * count + y] = are_standard_parabolics_conjugate(g, subset(x, n), subset(y, n));
  bool ok = true;
  for (std::size_t x = 0; x < count; ++x) {
    ok = ok && rel[x * count + x];
    for (std::size_t y = 0; y < count; ++y) {
      ok = ok && rel[x * count + y] == rel[y * count + x];
      if (!rel[x * count + y]) continue;
      for (std::size_t z = 0; z < count; ++z)
        if (rel[y * count + z]) ok = ok && rel[x * count + z];
    }
  }
  CHECK(ok);
}

}  // namespace

TEST_CASE("intersection and join examples") {
  auto g = parse_coxeter_graph("a b 3\nb c 4\na c 4");
  auto t = [&](std::vector<std::string> names) { return ParabolicType::of(g, names); };
  CHECK(standard_intersection(g, t({"a", "b"}), t({"b", "c"})) == t({"b"}));
  CHECK(standard_intersection(g, t({"a"}), t({"b"})).empty());
  CHECK(standard_intersection(g, ParabolicType::whole(g), t({"a", "c"})) == t({"a", "c"}));
  CHECK(standard_join(g, t({"a"}), t({"b"})) == t({"a", "b"}));
  CHECK(standard_join(g, t({"a"}), t({"a", "c"})) == t({"a", "c"}));
  CHECK(standard_join(g, t({}), t({})).empty());
  CHECK_THROWS_AS(standard_join(g, ParabolicType({7}), t({})), DomainError);
}

TEST_CASE("property: lattice laws") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_graph(rng, 6, 1);
    const std::size_t n = g.size();
    std::uniform_int_distribution<std::size_t> pick(0, (std::size_t{1} << n) - 1);
    auto x = subset(pick(rng), n), y = subset(pick(rng), n), z = subset(pick(rng), n);
    auto meet = [&](auto& u, auto& v) { return standard_intersection(g, u, v); };
    auto join = [&](auto& u, auto& v) { return standard_join(g, u, v); };
    CHECK(meet(x, y) == meet(y, x));
    CHECK(join(x, y) == join(y, x));
    auto xy = meet(x, y), yz = meet(y, z);
    CHECK(meet(xy, z) == meet(x, yz));
    auto jxy = join(x, y), jyz = join(y, z);
    CHECK(join(jxy, z) == join(x, jyz));
    CHECK(meet(x, x) == x);
    CHECK(join(x, x) == x);
    CHECK(meet(x, jxy) == x);
    CHECK(join(x, xy) == x);
    ParabolicType bottom, top = ParabolicType::whole(g);
    CHECK(meet(x, bottom) == bottom);
    CHECK(join(x, bottom) == x);
    CHECK(meet(x, top) == x);
    CHECK(join(x, top) == top);
  }
}

TEST_CASE("conjugacy of standard parabolics") {
  auto g = parse_coxeter_graph("a b 3\nb c 4\na c 4");
  auto t = [&](std::vector<std::string> names) { return ParabolicType::of(g, names); };
  CHECK(are_standard_parabolics_conjugate(g, t({"a"}), t({"b"})));
  CHECK_FALSE(are_standard_parabolics_conjugate(g, t({"a"}), t({"c"})));
  CHECK_FALSE(are_standard_parabolics_conjugate(g, t({"a", "b"}), t({"b", "c"})));
  CHECK(are_standard_parabolics_conjugate(g, t({"a", "b"}), t({"b", "a"})));
  CHECK_THROWS_AS(are_standard_parabolics_conjugate(parse_coxeter_graph("a b 2"), t({"a"}),
                                                    t({"b"})),
                  DomainError);
}

TEST_CASE("exhaustive: conjugacy is an equivalence relation") {
  std::vector<std::size_t> classes;
  for (int n = 1; n <= 5; ++n) {
    auto graphs = test::parity_graphs(n);
    classes.push_back(graphs.size());
    for (const auto& g : graphs) check_equivalence(g);
  }
  // three-coloured graphs on 1..5 vertices up to isomorphism
  CHECK(classes == std::vector<std::size_t>{1, 3, 10, 66, 792});
}

TEST_CASE("stability verdicts match the hand-evaluated table") {
  for (const auto& c : test::stability_table()) {
    auto g = parse_coxeter_graph(c.graph);
    auto v = is_conjugacy_stable(g, ParabolicType::of(g, c.x));
    INFO(c.graph);
    CHECK(v.stable == c.witness.empty());
    CHECK(witness_text(v) == c.witness);
  }
}

TEST_CASE("property: singletons and the whole graph are stable, relabelling is harmless") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = test::random_graph(rng, 6, 1);
    for (std::size_t v = 0; v < g.size(); ++v)
      CHECK(is_conjugacy_stable(g, ParabolicType({v})).stable);
    CHECK(is_conjugacy_stable(g, ParabolicType::whole(g)).stable);

    std::uniform_int_distribution<std::size_t> pick(0, (std::size_t{1} << g.size()) - 1);
    auto x = subset(pick(rng), g.size());
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = test::relabel(g, perm, rng);
    std::vector<std::string> renamed;
    for (auto i : x.members()) renamed.push_back(g.name(perm[i]));
    auto vg = is_conjugacy_stable(g, x);
    auto vh = is_conjugacy_stable(h, ParabolicType::of(h, renamed));
    CHECK(vg.stable == vh.stable);
    if (vh.witness) {
      // the witness in h is a genuine witness: odd-connected only outside X
      auto a = h.index_of(vh.witness->first), b = h.index_of(vh.witness->second);
      auto ambient = odd_component(h, a);
      CHECK(std::binary_search(ambient.begin(), ambient.end(), b));
      std::vector<bool> inside(h.size(), false);
      for (const auto& s : renamed) inside[h.index_of(s)] = true;
      auto local = odd_reachable(h, a, inside);
      CHECK_FALSE(std::binary_search(local.begin(), local.end(), b));
    }
  }
}

TEST_CASE("normaliser classification") {
  auto odd = parse_coxeter_graph("a b 3\nb c 3\na c 3");
  auto even = parse_coxeter_graph("a b 4\nb c 4\na c 4");
  CHECK(normalizer_type(odd, ParabolicType::of(odd, {"a", "b"})).kind ==
        NormalizerVerdict::Kind::SelfNormalizing);
  auto v = normalizer_type(odd, ParabolicType::of(odd, {"a"}));
  CHECK(v.kind == NormalizerVerdict::Kind::CyclicTimesFree);
  CHECK(v.rank == 4);
  auto w = normalizer_type(even, ParabolicType::of(even, {"a"}));
  CHECK(w.rank == 2);
  REQUIRE(w.basis);
  std::vector<std::string> words;
  for (const auto& d : w.basis->words()) words.push_back(to_string(d));
  CHECK(words == std::vector<std::string>{"d[ab]", "d[ac]"});
  CHECK_THROWS_AS(normalizer_type(odd, ParabolicType::whole(odd)), DomainError);
  CHECK_THROWS_AS(normalizer_type(odd, ParabolicType()), DomainError);
  CHECK_THROWS_AS(normalizer_type(parse_coxeter_graph("a b 3"), ParabolicType({0})),
                  DomainError);
}

TEST_CASE("property: normaliser bases normalise") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_graph(rng, 6, 3);
    for (std::size_t a = 0; a < g.size(); ++a) {
      auto v = normalizer_type(g, ParabolicType({a}));
      REQUIRE(v.basis);
      CHECK(v.rank >= 0);
      for (const auto& w : v.basis->words()) CHECK(verify_normalizes(g, a, w));
    }
  }
}

TEST_CASE("standard conjugators") {
  auto g = parse_coxeter_graph("a c 3\nc b 3");
  auto w = standard_conjugator(g, "a", "b");
  CHECK(to_string(w) == "d[cb] d[ac]");
  CHECK(track(g, g.index_of("a"), w) == g.index_of("b"));
  CHECK(standard_conjugator(g, "a", "a").is_identity());
  auto single = parse_coxeter_graph("a b 5");
  CHECK(to_string(standard_conjugator(single, "a", "b")) == "d[ab]");
  CHECK_THROWS_AS(standard_conjugator(parse_coxeter_graph("a b 4"), "a", "b"), DomainError);
}

TEST_CASE("property: conjugators follow the shortest odd path") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = test::random_graph(rng, 6, 2);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (auto b : odd_component(g, a)) {
        auto path = shortest_odd_path(g, a, b);
        auto w = standard_conjugator(g, a, b);
        CHECK(w.size() == path.size() - 1);
        CHECK(track(g, a, w) == b);
      }
  }
}

TEST_CASE("structured verdicts") {
  auto g = parse_coxeter_graph("a b 4\nb c 3\na c 3");
  auto j = to_json(is_conjugacy_stable(g, ParabolicType::of(g, {"a", "b"})));
  CHECK(j.dump() == R"({"stable":false,"witness":["a","b"]})");
  CHECK(to_json(ConjStabilityVerdict{}).dump() == R"({"stable":true,"witness":null})");
}
