#pragma once

// Normaliser of a cyclic standard parabolic subgroup P = <a> in a large-type
// Artin group: N(P) = P x F with F free. The quotient graph Gamma_P has
//
//   type 1 vertices  the generators of the odd component of a;
//   type 2 vertices  one per odd edge cd inside that component (joined to c
//                    and to d), and one pendant per endpoint c in the
//                    component of every even edge cd (joined to c only).
//
// Odd-edge midpoints are single vertices of degree 2 and even-edge midpoints
// split into pendants; this is what makes the rank come out as
// #type2 + b1(Gamma_P).
//
// Words are products of Garside elements delta_cd. Crossing an odd edge from
// c to d contributes delta_cd^+1 when c precedes d in declaration order and
// delta_cd^-1 otherwise.

#include <cstddef>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/word.hpp"

namespace artin {

struct GammaVertex {
  enum class Kind { Generator, OddEdge, EvenPendant };
  Kind kind;
  std::size_t c;       // generator (Generator) or first endpoint of the edge
  std::size_t d;       // second endpoint of the edge; unused for Generator
  std::size_t attach;  // endpoint a pendant hangs from; unused otherwise

  bool is_type2() const noexcept { return kind != Kind::Generator; }
};

/// Joins a type 1 vertex to a type 2 vertex (ids into GammaP::vertices()).
struct Incidence {
  std::size_t type1;
  std::size_t type2;
};

class GammaP {
 public:
  std::size_t base() const noexcept { return base_; }
  std::size_t base_vertex() const noexcept { return base_vertex_; }
  const std::vector<GammaVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Incidence>& incidences() const noexcept { return incidences_; }
  /// Incidence ids at a vertex, in incidence order.
  const std::vector<std::size_t>& incident(std::size_t v) const { return adj_.at(v); }

  std::size_t type1_count() const noexcept { return type1_; }
  std::size_t type2_count() const noexcept { return vertices_.size() - type1_; }

  /// First Betti number E - V + 1 (the graph is connected).
  long betti() const noexcept {
    return static_cast<long>(incidences_.size()) - static_cast<long>(vertices_.size()) + 1;
  }

  std::size_t other_end(std::size_t incidence, std::size_t v) const {
    const auto& i = incidences_.at(incidence);
    return i.type1 == v ? i.type2 : i.type1;
  }

  /// Vertex id of the type 1 vertex for generator c, if it is in the graph.
  std::optional<std::size_t> generator_vertex(std::size_t c) const {
    for (std::size_t i = 0; i < type1_; ++i)
      if (vertices_[i].c == c) return i;
    return std::nullopt;
  }

 private:
  friend GammaP build_gamma_p(const CoxeterGraph& g, std::size_t a);

  std::size_t base_ = 0;
  std::size_t base_vertex_ = 0;
  std::size_t type1_ = 0;
  std::vector<GammaVertex> vertices_;
  std::vector<Incidence> incidences_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// Builds Gamma_P for P = <a>. Type 1 vertices come in declaration order,
/// type 2 vertices in edge order (pendants of one edge: u side, then v side).
inline GammaP build_gamma_p(const CoxeterGraph& g, std::size_t a) {
  if (a >= g.size()) throw DomainError("vertex index out of range");
  validate_large_type(g);
  GammaP gp;
  gp.base_ = a;
  std::vector<std::size_t> slot(g.size(), std::numeric_limits<std::size_t>::max());
  for (auto c : odd_component(g, a)) {
    slot[c] = gp.vertices_.size();
    if (c == a) gp.base_vertex_ = gp.vertices_.size();
    gp.vertices_.push_back({GammaVertex::Kind::Generator, c, c, c});
  }
  gp.type1_ = gp.vertices_.size();
  auto in_comp = [&](std::size_t c) { return slot[c] != std::numeric_limits<std::size_t>::max(); };

  for (const auto& e : g.edges()) {
    if (e.m % 2 == 1) {
      if (!in_comp(e.u)) continue;  // odd edges never leave the component
      auto id = gp.vertices_.size();
      gp.vertices_.push_back({GammaVertex::Kind::OddEdge, e.u, e.v, e.u});
      gp.incidences_.push_back({slot[e.u], id});
      gp.incidences_.push_back({slot[e.v], id});
      continue;
    }
    for (auto end : {e.u, e.v}) {
      if (!in_comp(end)) continue;
      auto id = gp.vertices_.size();
      gp.vertices_.push_back({GammaVertex::Kind::EvenPendant, e.u, e.v, end});
      gp.incidences_.push_back({slot[end], id});
    }
  }
  gp.adj_.assign(gp.vertices_.size(), {});
  for (std::size_t i = 0; i < gp.incidences_.size(); ++i) {
    gp.adj_[gp.incidences_[i].type1].push_back(i);
    gp.adj_[gp.incidences_[i].type2].push_back(i);
  }
  return gp;
}

inline GammaP build_gamma_p(const CoxeterGraph& g, std::string_view a) {
  return build_gamma_p(g, g.index_of(a));
}

/// Breadth-first spanning tree rooted at v_a.
struct SpanningTree {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> parent_incidence;  // npos at the root
  std::vector<std::size_t> tree;              // incidence ids, discovery order
  std::vector<std::size_t> non_tree;          // incidence ids, ascending
  std::vector<std::size_t> order;             // vertices in BFS order
};

/// Neighbours are scanned in incidence order, which follows declaration order.
inline SpanningTree spanning_tree(const GammaP& gp) {
  SpanningTree t;
  const auto n = gp.vertices().size();
  t.parent_incidence.assign(n, SpanningTree::npos);
  std::vector<bool> seen(n, false);
  std::vector<bool> used(gp.incidences().size(), false);
  std::deque<std::size_t> queue{gp.base_vertex()};
  seen[gp.base_vertex()] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (auto inc : gp.incident(v)) {
      auto w = gp.other_end(inc, v);
      if (seen[w]) continue;
      seen[w] = true;
      used[inc] = true;
      t.parent_incidence[w] = inc;
      t.tree.push_back(inc);
      queue.push_back(w);
    }
  }
  if (t.order.size() != n) throw DomainError("Gamma_P is not connected");
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) t.non_tree.push_back(i);
  return t;
}

inline long free_rank(const GammaP& gp) {
  return static_cast<long>(gp.type2_count()) + gp.betti();
}

/// Product of delta factors for the Gamma-edges fully crossed by the tree path
/// from v_a to v, first crossing leftmost.
inline DeltaWord tree_path_word(const CoxeterGraph& g, const GammaP& gp,
                                const SpanningTree& t, std::size_t v) {
  std::vector<std::size_t> path{v};
  while (t.parent_incidence[path.back()] != SpanningTree::npos)
    path.push_back(gp.other_end(t.parent_incidence[path.back()], path.back()));
  DeltaWord w;
  // path runs v -> root; walk it root -> v looking at type1, type2, type1.
  for (std::size_t i = path.size(); i >= 3; --i) {
    const auto& from = gp.vertices()[path[i - 1]];
    const auto& mid = gp.vertices()[path[i - 2]];
    const auto& to = gp.vertices()[path[i - 3]];
    if (from.is_type2() || mid.kind != GammaVertex::Kind::OddEdge) continue;
    w.push_back(delta_factor(g, from.c, to.c, from.c < to.c ? 1 : -1));
  }
  return w;
}

struct StabGenerator {
  std::size_t vertex;   // type 2 vertex id
  DeltaWord conjugator; // g_v
  DeltaFactor core;     // delta_cd^2 (m odd) or delta_cd (m even)
  DeltaWord word;       // g_v core g_v^-1
};

struct LoopGenerator {
  std::size_t incidence;  // the non-tree incidence closing the loop
  DeltaWord word;
};

struct NormalizerBasis {
  std::vector<StabGenerator> stab_gens;
  std::vector<LoopGenerator> loop_gens;
  long rank = 0;

  std::vector<DeltaWord> words() const {
    std::vector<DeltaWord> out;
    for (const auto& s : stab_gens) out.push_back(s.word);
    for (const auto& l : loop_gens) out.push_back(l.word);
    return out;
  }
};

/// Explicit basis of F in N(<a>) = <a> x F: one conjugated centre generator
/// per type 2 vertex, one loop word per non-tree incidence.
inline NormalizerBasis normalizer_basis(const CoxeterGraph& g, std::size_t a) {
  auto gp = build_gamma_p(g, a);
  auto t = spanning_tree(gp);
  NormalizerBasis basis;
  for (std::size_t v = gp.type1_count(); v < gp.vertices().size(); ++v) {
    const auto& tv = gp.vertices()[v];
    auto gv = tree_path_word(g, gp, t, v);
    auto core = delta_factor(g, tv.c, tv.d, g.label(tv.c, tv.d) % 2 == 1 ? 2 : 1);
    DeltaWord mid;
    mid.push_back(core);
    basis.stab_gens.push_back({v, gv, core, gv * mid * gv.inverse()});
  }
  for (auto inc : t.non_tree) {
    const auto& i = gp.incidences()[inc];
    const auto& mid = gp.vertices()[i.type2];
    std::size_t c = gp.vertices()[i.type1].c;
    std::size_t d = mid.c == c ? mid.d : mid.c;
    DeltaWord cross;
    cross.push_back(delta_factor(g, c, d, c < d ? 1 : -1));
    auto gc = tree_path_word(g, gp, t, i.type1);
    auto gd = tree_path_word(g, gp, t, *gp.generator_vertex(d));
    basis.loop_gens.push_back({inc, gc * cross * gd.inverse()});
  }
  basis.rank = static_cast<long>(basis.stab_gens.size() + basis.loop_gens.size());
  return basis;
}

inline NormalizerBasis normalizer_basis(const CoxeterGraph& g, std::string_view a) {
  return normalizer_basis(g, g.index_of(a));
}

class UntrackableError : public DomainError {
 public:
  UntrackableError(std::size_t position, const std::string& what)
      : DomainError(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Follows the generator t in w t w^-1 = t' through a delta word, innermost
/// (rightmost) factor first. delta_cd^k with m_cd odd and k odd swaps c and d;
/// every other power fixes both. A factor whose edge misses the current
/// generator cannot be followed and raises UntrackableError.
inline std::size_t track(const CoxeterGraph& g, std::size_t start, const DeltaWord& w) {
  std::size_t t = start;
  const auto& f = w.factors();
  for (std::size_t i = f.size(); i-- > 0;) {
    auto c = g.index_of(f[i].u);
    auto d = g.index_of(f[i].v);
    if (t != c && t != d)
      throw UntrackableError(i, "factor " + std::to_string(i) + " (" +
                                    delta_symbol(f[i].u, f[i].v) +
                                    ") does not contain " + g.name(t));
    if (g.label(c, d) % 2 == 1 && f[i].exp % 2 != 0) t = t == c ? d : c;
  }
  return t;
}

/// True iff the tracker returns a, i.e. w normalises <a>.
inline bool verify_normalizes(const CoxeterGraph& g, std::size_t a, const DeltaWord& w) {
  return track(g, a, w) == a;
}

inline bool verify_normalizes(const CoxeterGraph& g, std::string_view a, const DeltaWord& w) {
  return verify_normalizes(g, g.index_of(a), w);
}

inline std::string vertex_label(const CoxeterGraph& g, const GammaVertex& v) {
  switch (v.kind) {
    case GammaVertex::Kind::Generator: return g.name(v.c);
    case GammaVertex::Kind::OddEdge: return g.name(v.c) + g.name(v.d);
    case GammaVertex::Kind::EvenPendant:
      return g.name(v.c) + g.name(v.d) + "@" + g.name(v.attach);
  }
  return {};
}

/// Undirected DOT; type 2 vertices are drawn bold.
inline std::string to_dot(const CoxeterGraph& g, const GammaP& gp) {
  std::string out = "graph gamma_p {\n";
  for (std::size_t i = 0; i < gp.vertices().size(); ++i) {
    const auto& v = gp.vertices()[i];
    out += "  v" + std::to_string(i) + " [label=\"" + vertex_label(g, v) + "\"";
    if (v.is_type2()) out += ", style=bold";
    out += "];\n";
  }
  for (const auto& inc : gp.incidences())
    out += "  v" + std::to_string(inc.type1) + " -- v" + std::to_string(inc.type2) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace artin
