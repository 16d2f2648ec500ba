#pragma once

// Bounded fragments of the Artin complex of a dihedral Artin group: the
// bipartite coset graph whose vertices are the cosets g<a> and g<b> and whose
// edges are the group elements g (joining g<a> to g<b>). The group acts
// freely and transitively on edges, so the edge of g is g.e for the base
// edge e = (<a>, <b>).
//
// A fragment is spanned by the alternating words a^r1 b^r2 ... with a bounded
// number of syllables and bounded exponents. Vertex valence in the full
// complex is infinite, so every statement made here is relative to those
// bounds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/dihedral.hpp"
#include "artin/error.hpp"

namespace artin {

inline constexpr std::size_t kDefaultElementCap = 200000;
inline constexpr std::size_t kDefaultWordCap = 50000000;

struct BallBounds {
  int max_syllables = 1;
  int max_exponent = 1;

  friend bool operator==(const BallBounds&, const BallBounds&) = default;
};

struct CosetVertex {
  Letter side;
  DihedralElement representative;  // first member met in enumeration order
};

struct BallEdge {
  DihedralElement element;
  std::size_t first_vertex;   // the coset element<a>
  std::size_t second_vertex;  // the coset element<b>
};

class BallGraph {
 public:
  explicit BallGraph(PresentationPtr p, BallBounds b = {}) : pres_(std::move(p)), bounds_(b) {}

  const PresentationPtr& presentation() const noexcept { return pres_; }
  BallBounds bounds() const noexcept { return bounds_; }
  const std::vector<CosetVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<BallEdge>& edges() const noexcept { return edges_; }
  std::size_t element_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find_edge(const DihedralElement& g) const {
    auto it = edge_index_.find(g.key());
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> find_vertex(const DihedralElement& g, Letter side) const {
    const auto& index = side == Letter::First ? first_index_ : second_index_;
    auto it = index.find(coset_representative(g, side).key());
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// Adds the edge of g and its two coset vertices; returns false when g is
  /// already present.
  bool insert(const DihedralElement& g) {
    auto [it, fresh] = edge_index_.emplace(g.key(), edges_.size());
    if (!fresh) return false;
    auto va = vertex_for(g, Letter::First);
    auto vb = vertex_for(g, Letter::Second);
    edges_.push_back({g, va, vb});
    return true;
  }

 private:
  std::size_t vertex_for(const DihedralElement& g, Letter side) {
    auto& index = side == Letter::First ? first_index_ : second_index_;
    auto [it, fresh] = index.emplace(coset_representative(g, side).key(), vertices_.size());
    if (fresh) vertices_.push_back({side, g});
    return it->second;
  }

  PresentationPtr pres_;
  BallBounds bounds_;
  std::vector<CosetVertex> vertices_;
  std::vector<BallEdge> edges_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::unordered_map<std::string, std::size_t> first_index_;
  std::unordered_map<std::string, std::size_t> second_index_;
};

namespace detail {

// Visits every alternating word with 1..max_syllables syllables and exponents
// in [-max_exp, max_exp] \ {0}, in order of syllable count, then first letter,
// then exponent (ascending, at each position). `visit(element, syllables)`.
template <class Visit>
void for_each_alternating(const PresentationPtr& p, int max_syllables, int max_exp,
                          Visit&& visit) {
  struct Node {
    DihedralElement element;
    Letter last;
  };
  std::vector<Node> layer;
  std::vector<Node> next;
  for (int k = 1; k <= max_syllables; ++k) {
    next.clear();
    auto extend = [&](const DihedralElement& base, Letter x) {
      for (int r = -max_exp; r <= max_exp; ++r) {
        if (r == 0) continue;
        DihedralElement child = base;
        child.mul_letter(x, r);
        visit(child, k);
        if (k < max_syllables) next.push_back({std::move(child), x});
      }
    };
    if (k == 1) {
      DihedralElement id(p);
      extend(id, Letter::First);
      extend(id, Letter::Second);
    } else {
      for (const auto& node : layer) extend(node.element, other(node.last));
    }
    layer.swap(next);
  }
}

}  // namespace detail

/// Edges of every alternating word within the bounds (plus the base edge),
/// deduplicated as group elements; cosets are identified through the
/// exponent homomorphism (g<x> = h<x> iff g^-1 h is a power of x).
inline BallGraph enumerate_ball(const PresentationPtr& p, int max_syllables, int max_exponent,
                                std::size_t max_elements = kDefaultElementCap) {
  if (max_syllables < 1 || max_exponent < 1)
    throw DomainError("ball bounds must be >= 1");
  BallGraph ball(p, {max_syllables, max_exponent});
  auto add = [&](const DihedralElement& g) {
    if (ball.insert(g) && ball.element_count() > max_elements)
      throw ResourceError("ball exceeds the element cap of " + std::to_string(max_elements));
  };
  add(DihedralElement(p));
  detail::for_each_alternating(p, max_syllables, max_exponent,
                               [&](const DihedralElement& g, int) { add(g); });
  return ball;
}

/// Length of a shortest cycle, or nullopt when the graph is a forest.
///
/// Degree-one vertices are peeled off first (they lie on no cycle); a
/// breadth-first search from every remaining vertex then records the
/// shortest closing edge, stopping once no shorter cycle can appear.
inline std::optional<int> girth(const BallGraph& b) {
  const std::size_t n = b.vertices().size();
  const auto& edges = b.edges();
  std::vector<std::size_t> offset(n + 1, 0);
  for (const auto& e : edges) {
    ++offset[e.first_vertex + 1];
    ++offset[e.second_vertex + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] += offset[i];
  std::vector<std::uint32_t> adj_edge(offset[n]);
  {
    auto fill = offset;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      adj_edge[fill[edges[i].first_vertex]++] = static_cast<std::uint32_t>(i);
      adj_edge[fill[edges[i].second_vertex]++] = static_cast<std::uint32_t>(i);
    }
  }
  auto far = [&](std::uint32_t e, std::size_t v) {
    return edges[e].first_vertex == v ? edges[e].second_vertex : edges[e].first_vertex;
  };

  std::vector<std::size_t> degree(n);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = offset[v + 1] - offset[v];
    if (degree[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (auto k = offset[v]; k < offset[v + 1]; ++k) {
      auto w = far(adj_edge[k], v);
      if (alive[w] && --degree[w] == 1) stack.push_back(w);
    }
  }

  constexpr int inf = std::numeric_limits<int>::max();
  int best = inf;
  std::vector<int> dist(n, -1);
  std::vector<std::uint32_t> via(n, 0);
  std::vector<std::size_t> touched;
  std::vector<std::size_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (!alive[root]) continue;
    queue.assign(1, root);
    dist[root] = 0;
    touched.assign(1, root);
    via[root] = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      if (best != inf && 2 * dist[u] + 1 >= best) break;
      for (auto k = offset[u]; k < offset[u + 1]; ++k) {
        auto e = adj_edge[k];
        auto w = far(e, u);
        if (!alive[w] || e == via[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          via[w] = e;
          touched.push_back(w);
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    for (auto v : touched) dist[v] = -1;
  }
  if (best == inf) return std::nullopt;
  return best;
}

/// The 2m edges 1, a, ab, ..., (ab...)_m = (ba...)_m, (ba...)_{m-1}, ..., b
/// around the base vertices. Throws if the braid relation does not close it.
inline std::vector<DihedralElement> relation_cycle(const PresentationPtr& p) {
  const int m = p->m();
  std::vector<DihedralElement> cycle;
  DihedralElement g(p);
  Letter l = Letter::First;
  for (int i = 0; i <= m; ++i) {
    cycle.push_back(g);
    g.mul_letter(l, 1);
    l = other(l);
  }
  std::vector<DihedralElement> back;
  DihedralElement h(p);
  l = Letter::Second;
  for (int i = 0; i < m; ++i) {
    h.mul_letter(l, 1);
    l = other(l);
    back.push_back(h);
  }
  if (!back.back().equals(cycle.back()))
    throw DomainError("braid relation failed to close the relation cycle");
  for (int i = m - 2; i >= 0; --i) cycle.push_back(back[static_cast<std::size_t>(i)]);
  return cycle;
}

/// True iff the elements are edges of b forming an embedded closed path.
inline bool is_embedded_cycle(const BallGraph& b, const std::vector<DihedralElement>& cycle) {
  if (cycle.size() < 2) return false;
  std::vector<std::size_t> ids;
  for (const auto& g : cycle) {
    auto id = b.find_edge(g);
    if (!id) return false;
    ids.push_back(*id);
  }
  std::vector<std::size_t> joints;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& e = b.edges()[ids[i]];
    const auto& f = b.edges()[ids[(i + 1) % ids.size()]];
    if (e.first_vertex == f.first_vertex && e.second_vertex != f.second_vertex)
      joints.push_back(e.first_vertex);
    else if (e.second_vertex == f.second_vertex && e.first_vertex != f.first_vertex)
      joints.push_back(e.second_vertex);
    else
      return false;
  }
  auto sorted = joints;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// Exact check, in group arithmetic, that the 2m edges of relation_cycle
/// are pairwise distinct and consecutive ones share exactly one coset with
/// all 2m shared cosets distinct.
inline bool relation_cycle_is_embedded(const PresentationPtr& p) {
  auto cycle = relation_cycle(p);
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cycle[i].equals(cycle[j])) return false;
  struct Joint {
    DihedralElement g;
    Letter side;
  };
  std::vector<Joint> joints;
  for (std::size_t i = 0; i < n; ++i) {
    auto q = cycle[i].inverse() * cycle[(i + 1) % n];
    bool in_a = member_of_generator_cyclic(q, Letter::First).has_value();
    bool in_b = member_of_generator_cyclic(q, Letter::Second).has_value();
    if (in_a == in_b) return false;
    joints.push_back({cycle[i], in_a ? Letter::First : Letter::Second});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (joints[i].side == joints[j].side &&
          member_of_generator_cyclic(joints[i].g.inverse() * joints[j].g, joints[i].side))
        return false;
  return true;
}

struct SweepReport {
  int m = 0;
  int max_syllables = 0;
  int max_exponent = 0;
  long tested = 0;
  long trivial_found = 0;
  std::vector<GeneratorWord> trivial_words;  // first few, for diagnostics
  GeneratorWord relator;                     // (ab...)_m ((ba...)_m)^-1
  bool relator_trivial = false;
};

/// Tests every alternating word with fewer than 2m syllables (and at most
/// max_syllables) for triviality, and checks that the relator with 2m
/// syllables is trivial.
inline SweepReport alternating_triviality_sweep(const PresentationPtr& p, int max_syllables,
                                                int max_exponent,
                                                std::size_t max_words = kDefaultWordCap) {
  if (max_syllables < 1 || max_exponent < 1) throw DomainError("sweep bounds must be >= 1");
  SweepReport rep;
  rep.m = p->m();
  rep.max_syllables = std::min(max_syllables, 2 * p->m() - 1);
  rep.max_exponent = max_exponent;
  // Words are tracked as elements only, so the offending spelling is
  // recovered from the normal form.
  detail::for_each_alternating(p, rep.max_syllables, max_exponent,
                               [&](const DihedralElement& g, int) {
                                 if (static_cast<std::size_t>(++rep.tested) > max_words)
                                   throw ResourceError("sweep exceeds the word cap of " +
                                                       std::to_string(max_words));
                                 if (!g.is_trivial()) return;
                                 ++rep.trivial_found;
                                 if (rep.trivial_words.size() < 8)
                                   rep.trivial_words.push_back(to_word(g));
                               });
  auto left = alternating_word(p->first(), p->second(), p->m());
  auto right = alternating_word(p->second(), p->first(), p->m());
  rep.relator = left * right.inverse();
  rep.relator_trivial = normal_form(p, rep.relator).is_trivial();
  return rep;
}

struct GirthReport {
  int m = 0;
  BallBounds bounds;
  std::size_t element_count = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::optional<int> girth;
};

namespace detail {

// Open addressing map from 64-bit fingerprints to dense ids.
class FingerprintTable {
 public:
  explicit FingerprintTable(std::size_t expected = 0) {
    std::size_t n = std::size_t{1} << 16;
    while (n < (std::size_t{1} << 27) && n * 3 < expected * 4) n *= 2;
    rehash(n);
  }

  std::size_t size() const noexcept { return size_; }

  void prefetch(std::uint64_t fp) const noexcept {
    __builtin_prefetch(&slots_[normalize(fp) & (slots_.size() - 1)]);
  }

  std::uint32_t find_or_insert(std::uint64_t fp) {
    fp = normalize(fp);
    if ((size_ + 1) * 4 > slots_.size() * 3) rehash(slots_.size() * 2);
    const std::size_t mask = slots_.size() - 1;
    const auto lo = static_cast<std::uint32_t>(fp);
    const auto hi = static_cast<std::uint32_t>(fp >> 32);
    for (std::size_t i = fp & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (s.lo == lo && s.hi == hi) return s.id;
      if (s.lo == 0 && s.hi == 0) {
        if (size_ == std::numeric_limits<std::uint32_t>::max())
          throw ResourceError("too many vertices for 32-bit ids");
        s = {lo, hi, size_};
        return size_++;
      }
    }
  }

  void release() { std::vector<Slot>().swap(slots_); }

 private:
  struct Slot {
    std::uint32_t lo = 0, hi = 0, id = 0;
  };

  static std::uint64_t normalize(std::uint64_t fp) noexcept { return fp == 0 ? 1 : fp; }

  void rehash(std::size_t n) {
    std::vector<Slot> fresh(n);
    const std::size_t mask = n - 1;
    for (const auto& s : slots_) {
      if (s.lo == 0 && s.hi == 0) continue;
      std::size_t i = ((static_cast<std::uint64_t>(s.hi) << 32) | s.lo) & mask;
      while (fresh[i].lo != 0 || fresh[i].hi != 0) i = (i + 1) & mask;
      fresh[i] = s;
    }
    slots_.swap(fresh);
  }

  std::vector<Slot> slots_;
  std::uint32_t size_ = 0;
};

// Girth of the simple graph underlying `edges` (pairs packed as u << 32 | v)
// on n vertices; parallel edges are merged and the distinct ones counted.
// Roots are restricted to `root_side`, which must meet every cycle. A known
// cycle length `bound` caps the search; a root is deleted once searched.
// In a bipartite graph every cycle closes at a vertex one level deeper, so
// the search can stop a level earlier.
inline std::optional<int> sparse_girth(std::uint32_t n, std::vector<std::uint64_t>&& edges,
                                       const std::vector<bool>& root_side,
                                       std::size_t& distinct_edges,
                                       int bound = std::numeric_limits<int>::max(),
                                       bool bipartite = false) {
  if (edges.size() * 2 >= std::numeric_limits<std::uint32_t>::max())
    throw ResourceError("too many edges for the girth search");
  std::vector<std::uint32_t> offset(std::size_t{n} + 1, 0);
  for (auto e : edges) {
    ++offset[(e >> 32) + 1];
    ++offset[(e & 0xffffffffULL) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] += offset[i];
  std::vector<std::uint32_t> adj(offset[n]);
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (auto e : edges) {
      auto u = static_cast<std::uint32_t>(e >> 32);
      auto v = static_cast<std::uint32_t>(e & 0xffffffffULL);
      adj[fill[u]++] = v;
      adj[fill[v]++] = u;
    }
  }
  std::vector<std::uint64_t>().swap(edges);

  std::uint32_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto begin = adj.begin() + offset[v];
    auto end = adj.begin() + offset[v + 1];
    std::sort(begin, end);
    auto last = std::unique(begin, end);
    offset[v] = write;
    for (auto it = begin; it != last; ++it) adj[write++] = *it;
  }
  offset[n] = write;
  distinct_edges = write / 2;

  std::vector<std::uint32_t> degree(n);
  std::vector<bool> alive(n, true);
  std::vector<std::uint32_t> stack;
  auto peel = [&] {
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (!alive[v]) continue;
      alive[v] = false;
      for (auto k = offset[v]; k < offset[v + 1]; ++k)
        if (alive[adj[k]] && --degree[adj[k]] <= 1) stack.push_back(adj[k]);
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    degree[v] = offset[v + 1] - offset[v];
    if (degree[v] <= 1) stack.push_back(v);
  }
  peel();

  constexpr int inf = std::numeric_limits<int>::max();
  constexpr auto none = std::numeric_limits<std::uint32_t>::max();
  int best = bound;
  std::vector<int> dist(n, -1);
  std::vector<std::uint32_t> parent(n, none);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (!alive[root] || !root_side[root]) continue;
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      if (best != inf && 2 * dist[u] + (bipartite ? 2 : 1) >= best) break;
      for (auto k = offset[u]; k < offset[u + 1]; ++k) {
        auto w = adj[k];
        if (!alive[w] || w == parent[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    for (auto v : queue) {
      dist[v] = -1;
      parent[v] = none;
    }
    // Every cycle through root has been seen; drop it and re-peel.
    stack.push_back(root);
    peel();
  }
  if (best == inf) return std::nullopt;
  return best;
}

}  // namespace detail

/// Counts and girth of the same fragment as enumerate_ball, without keeping
/// group elements. Words are walked depth first; a word w = u x^r shares its
/// <x>-vertex with u, so each word costs one coset lookup. Vertices are keyed
/// by 64-bit fingerprints of canonical coset representatives and edges by
/// their endpoint pair (an edge is determined by its two cosets since
/// <a> and <b> meet trivially). When the bounds contain the relation cycle,
/// its length (checked exactly) caps the search.
inline GirthReport streamed_ball_girth(const PresentationPtr& p, int max_syllables,
                                       int max_exponent,
                                       std::size_t max_elements = kDefaultElementCap) {
  if (max_syllables < 1 || max_exponent < 1)
    throw DomainError("ball bounds must be >= 1");
  const int m = p->m();
  const long reach = static_cast<long>(max_syllables) * max_exponent;
  // power[x][j + reach] = normal form of x^j
  std::vector<NormalForm> power[2];
  for (int x = 0; x < 2; ++x)
    for (long j = -reach; j <= reach; ++j) {
      NormalForm f;
      nf::mul_letter(f, static_cast<Letter>(x), j, m);
      power[x].push_back(std::move(f));
    }

  // Words in the fragment; vertices number at most one more.
  std::size_t words = 1;
  for (std::size_t k = 1, layer = 2; k <= static_cast<std::size_t>(max_syllables); ++k) {
    layer *= 2 * static_cast<std::size_t>(max_exponent);
    words += layer;
    if (words > max_elements) break;
  }
  detail::FingerprintTable table(std::min(words, max_elements) + 2);
  std::vector<bool> side;
  std::vector<std::uint64_t> edges;
  edges.reserve(std::min(words, max_elements) + 2);
  auto seed = [](Letter s) { return 1 + static_cast<std::uint64_t>(s); };
  auto vertex = [&](std::uint64_t fp, Letter s) {
    auto id = table.find_or_insert(fp);
    if (id == side.size()) side.push_back(s == Letter::First);
    if (table.size() > max_elements + 1)
      throw ResourceError("ball exceeds the element cap of " + std::to_string(max_elements));
    return id;
  };
  auto add_edge = [&](std::uint32_t a, std::uint32_t b) {
    edges.push_back(static_cast<std::uint64_t>(a) << 32 | b);
  };

  // Words starting with b are the images of those starting with a under the
  // automorphism a <-> b, which maps canonical coset representatives to
  // canonical coset representatives. Only the a-words are multiplied out;
  // `mirror` holds the vertices of the swapped word.
  struct Frame {
    NormalForm nf;
    long inv[2] = {0, 0};  // exponent invariants for targets a and b
    std::uint32_t v[2] = {0, 0};
    std::uint32_t mirror[2] = {0, 0};
    std::uint64_t fp = 0;
    std::uint64_t mirror_fp = 0;
  };
  const auto width = static_cast<std::size_t>(2 * max_exponent);
  std::vector<std::vector<Frame>> frames(static_cast<std::size_t>(max_syllables) + 1,
                                         std::vector<Frame>(width));
  NormalForm scratch;
  Frame& root = frames[0][0];
  root.v[0] = vertex(nf::fingerprint(NormalForm{}, seed(Letter::First)), Letter::First);
  root.v[1] = vertex(nf::fingerprint(NormalForm{}, seed(Letter::Second)), Letter::Second);
  root.mirror[0] = root.v[0];
  root.mirror[1] = root.v[1];
  add_edge(root.v[0], root.v[1]);

  auto finish = [&](Frame& child, const Frame& parent, int xi, long r) {
    const int yi = 1 - xi;
    for (int t = 0; t < 2; ++t)
      child.inv[t] = parent.inv[t] + ((m % 2 == 1 || t == xi) ? r : 0);
    child.v[xi] = parent.v[xi];
    child.mirror[yi] = parent.mirror[yi];
    scratch = child.nf;
    nf::mul(scratch, power[yi][static_cast<std::size_t>(reach - child.inv[yi])], m);
    child.fp = nf::fingerprint(scratch, seed(static_cast<Letter>(yi)));
    child.mirror_fp = nf::fingerprint(scratch, seed(static_cast<Letter>(xi)), true);
    table.prefetch(child.fp);
    table.prefetch(child.mirror_fp);
  };

  // Siblings are prepared together so their table probes overlap.
  auto visit = [&](auto&& self, std::size_t d, const Frame& parent, Letter x) -> void {
    auto& children = frames[d];
    const auto xi = static_cast<int>(x);
    const auto yi = 1 - xi;
    std::size_t j = 0;
    for (long r : {-1L, 1L}) {
      for (long e = r; std::labs(e) <= max_exponent; e += r) {
        Frame& child = children[j++];
        child.nf = e == r ? parent.nf : children[j - 2].nf;
        nf::mul_letter(child.nf, x, r, m);
        finish(child, parent, xi, e);
      }
    }
    for (auto& child : children) {
      child.v[yi] = vertex(child.fp, static_cast<Letter>(yi));
      add_edge(child.v[0], child.v[1]);
      child.mirror[xi] = vertex(child.mirror_fp, x);
      add_edge(child.mirror[0], child.mirror[1]);
    }
    if (d == static_cast<std::size_t>(max_syllables)) return;
    for (auto& child : children) self(self, d + 1, child, other(x));
  };
  visit(visit, 1, root, Letter::First);

  int bound = std::numeric_limits<int>::max();
  // relation_cycle lies in the fragment
  if (max_syllables >= m && relation_cycle_is_embedded(p)) bound = 2 * m;

  GirthReport rep;
  rep.m = m;
  rep.bounds = {max_syllables, max_exponent};
  rep.vertex_count = table.size();
  table.release();
  rep.girth = detail::sparse_girth(static_cast<std::uint32_t>(rep.vertex_count),
                                   std::move(edges), side, rep.edge_count, bound,
                                   /*bipartite=*/true);
  rep.element_count = rep.edge_count;
  if (rep.element_count > max_elements)
    throw ResourceError("ball exceeds the element cap of " + std::to_string(max_elements));
  return rep;
}

/// The same report computed from a materialized ball.
inline GirthReport girth_report(const BallGraph& b) {
  GirthReport rep;
  rep.m = b.presentation()->m();
  rep.bounds = b.bounds();
  rep.element_count = b.element_count();
  rep.vertex_count = b.vertices().size();
  rep.edge_count = b.edges().size();
  rep.girth = girth(b);
  return rep;
}

/// Undirected DOT: first-side cosets are circles, second-side cosets boxes.
inline std::string to_dot(const BallGraph& b) {
  std::string out = "graph ball {\n";
  const auto& p = *b.presentation();
  for (std::size_t i = 0; i < b.vertices().size(); ++i) {
    const auto& v = b.vertices()[i];
    out += "  v" + std::to_string(i) + " [shape=" +
           (v.side == Letter::First ? "circle" : "box") + ", label=\"" +
           to_string(v.representative) + " <" + p.name(v.side) + ">\"];\n";
  }
  for (const auto& e : b.edges())
    out += "  v" + std::to_string(e.first_vertex) + " -- v" + std::to_string(e.second_vertex) +
           " [label=\"" + to_string(e.element) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace artin
