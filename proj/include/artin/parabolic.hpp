#pragma once

#include <algorithm>
#include <deque>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/normalizer.hpp"
#include "artin/word.hpp"

namespace artin {

/// A subset X of the generators, the type of the standard parabolic A_X.
/// Members are declaration indices, sorted and unique.
class ParabolicType {
 public:
  ParabolicType() = default;

  static ParabolicType of(const CoxeterGraph& g, const std::vector<std::string>& names) {
    std::vector<std::size_t> idx;
    for (const auto& n : names) idx.push_back(g.index_of(n));
    return ParabolicType(std::move(idx));
  }
  static ParabolicType whole(const CoxeterGraph& g) {
    std::vector<std::size_t> idx(g.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return ParabolicType(std::move(idx));
  }
  explicit ParabolicType(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  std::vector<std::string> names(const CoxeterGraph& g) const {
    std::vector<std::string> out;
    for (auto i : members_) out.push_back(g.name(i));
    return out;
  }

  friend bool operator==(const ParabolicType&, const ParabolicType&) = default;

 private:
  std::vector<std::size_t> members_;
};

namespace detail {

inline void check_members(const CoxeterGraph& g, const ParabolicType& x) {
  for (auto i : x.members())
    if (i >= g.size()) throw DomainError("parabolic type has a member outside the graph");
}

inline std::vector<bool> mask(const CoxeterGraph& g, const ParabolicType& x) {
  std::vector<bool> m(g.size(), false);
  for (auto i : x.members()) m[i] = true;
  return m;
}

}  // namespace detail

/// A_X and A_Y meet in A_{X cap Y}.
inline ParabolicType standard_intersection(const CoxeterGraph& g, const ParabolicType& x,
                                           const ParabolicType& y) {
  detail::check_members(g, x);
  detail::check_members(g, y);
  std::vector<std::size_t> out;
  std::set_intersection(x.members().begin(), x.members().end(), y.members().begin(),
                        y.members().end(), std::back_inserter(out));
  return ParabolicType(std::move(out));
}

/// Smallest standard parabolic containing both: A_{X cup Y}.
inline ParabolicType standard_join(const CoxeterGraph& g, const ParabolicType& x,
                                   const ParabolicType& y) {
  detail::check_members(g, x);
  detail::check_members(g, y);
  std::vector<std::size_t> out;
  std::set_union(x.members().begin(), x.members().end(), y.members().begin(),
                 y.members().end(), std::back_inserter(out));
  return ParabolicType(std::move(out));
}

/// In large type, A_X and A_Y are conjugate iff X = Y or X = {a}, Y = {b}
/// with a and b joined by an odd-labelled path.
inline bool are_standard_parabolics_conjugate(const CoxeterGraph& g, const ParabolicType& x,
                                              const ParabolicType& y) {
  validate_large_type(g);
  detail::check_members(g, x);
  detail::check_members(g, y);
  if (x == y) return true;
  if (x.size() != 1 || y.size() != 1) return false;
  auto comp = odd_component(g, x.members().front());
  return std::binary_search(comp.begin(), comp.end(), y.members().front());
}

struct ConjStabilityVerdict {
  bool stable = true;
  std::optional<std::pair<std::string, std::string>> witness;
};

/// A_X fails to be conjugacy stable iff two generators of X are joined by an
/// odd path in Gamma_S but not in Gamma_X. Reports the lexicographically
/// first such pair in declaration order.
inline ConjStabilityVerdict is_conjugacy_stable(const CoxeterGraph& g, const ParabolicType& x) {
  validate_large_type(g);
  detail::check_members(g, x);
  auto inside = detail::mask(g, x);
  for (auto a : x.members()) {
    auto ambient = odd_reachable(g, a);
    auto local = odd_reachable(g, a, inside);
    for (auto b : x.members()) {
      if (b <= a) continue;
      bool in_s = std::binary_search(ambient.begin(), ambient.end(), b);
      bool in_x = std::binary_search(local.begin(), local.end(), b);
      if (in_s && !in_x) return {false, std::make_pair(g.name(a), g.name(b))};
    }
  }
  return {};
}

struct NormalizerVerdict {
  enum class Kind { SelfNormalizing, CyclicTimesFree };
  Kind kind = Kind::SelfNormalizing;
  long rank = 0;
  std::optional<NormalizerBasis> basis;
};

/// N(A_X) = A_X when |X| >= 2; N(<a>) = <a> x F otherwise.
inline NormalizerVerdict normalizer_type(const CoxeterGraph& g, const ParabolicType& x) {
  validate_large_type(g);
  detail::check_members(g, x);
  if (g.size() < 3) throw DomainError("normaliser classification needs at least 3 generators");
  if (x.empty()) throw DomainError("normaliser of the trivial parabolic is not classified");
  if (x.size() == g.size()) throw DomainError("normaliser of the whole group is not classified");
  if (x.size() >= 2) return {};
  auto basis = normalizer_basis(g, x.members().front());
  NormalizerVerdict v;
  v.kind = NormalizerVerdict::Kind::CyclicTimesFree;
  v.rank = basis.rank;
  v.basis = std::move(basis);
  return v;
}

/// Shortest odd path from a to b (BFS, neighbours in declaration order), as
/// the vertex sequence a = v_0, ..., v_k = b.
inline std::vector<std::size_t> shortest_odd_path(const CoxeterGraph& g, std::size_t a,
                                                  std::size_t b) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(g.size(), none);
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (auto y : g.neighbours(x)) {
      if (seen[y] || g.label(x, y) % 2 == 0) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[b])
    throw DomainError(g.name(b) + " is not joined to " + g.name(a) + " by an odd path");
  std::vector<std::size_t> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// w = delta_{e_k} ... delta_{e_1} along the shortest odd path a -> b, so that
/// w a w^-1 = b.
inline DeltaWord standard_conjugator(const CoxeterGraph& g, std::size_t a, std::size_t b) {
  auto path = shortest_odd_path(g, a, b);
  DeltaWord w;
  for (std::size_t i = path.size() - 1; i > 0; --i)
    w.push_back(delta_factor(g, path[i - 1], path[i], 1));
  return w;
}

inline DeltaWord standard_conjugator(const CoxeterGraph& g, std::string_view a,
                                     std::string_view b) {
  return standard_conjugator(g, g.index_of(a), g.index_of(b));
}

}  // namespace artin
