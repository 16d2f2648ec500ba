#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "artin/error.hpp"

namespace artin {

/// An edge of the Coxeter graph. Endpoints are declaration indices, u < v.
struct Edge {
  std::size_t u;
  std::size_t v;
  int m;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labelled simple graph defining an Artin group. A missing edge means the
/// two generators generate a free group (label infinity).
///
/// Vertex order is the declaration order; every canonical choice made
/// downstream (spanning trees, orientations, witnesses) follows it.
class CoxeterGraph {
 public:
  using EdgeSpec = std::tuple<std::string, std::string, int>;

  CoxeterGraph(std::vector<std::string> vertices,
               const std::vector<EdgeSpec>& edges)
      : names_(std::move(vertices)) {
    if (names_.empty()) throw DomainError("graph has no vertices");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw DomainError("empty generator name");
      if (!index_.emplace(names_[i], i).second)
        throw DomainError("duplicate vertex '" + names_[i] + "'");
    }
    labels_.assign(names_.size() * names_.size(), 0);
    for (const auto& [a, b, m] : edges) {
      std::size_t u = index_of(a);
      std::size_t v = index_of(b);
      if (u == v) throw DomainError("self-loop at '" + a + "'");
      if (m < 2)
        throw DomainError("label " + std::to_string(m) + " < 2 on edge " + a +
                          "-" + b);
      if (label(u, v) != 0)
        throw DomainError("duplicate edge " + a + "-" + b);
      labels_[u * size() + v] = m;
      labels_[v * size() + u] = m;
      edges_.push_back({std::min(u, v), std::max(u, v), m});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// Edges sorted by (u, v) in declaration order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw DomainError("unknown generator '" + std::string(name) + "'");
  }

  /// Edge label, or 0 when u and v are not joined (m = infinity).
  int label(std::size_t u, std::size_t v) const {
    return labels_.at(u * size() + v);
  }
  int label(std::string_view a, std::string_view b) const {
    return label(index_of(a), index_of(b));
  }

  /// Neighbours of u in declaration order.
  std::vector<std::size_t> neighbours(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v)
      if (label(u, v) != 0) out.push_back(v);
    return out;
  }

  friend bool operator==(const CoxeterGraph& x, const CoxeterGraph& y) {
    return x.names_ == y.names_ && x.edges_ == y.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<int> labels_;
  std::vector<Edge> edges_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses the line-oriented edge-list format:
///
///     # comment
///     vertices: a b c      (optional; fixes the declaration order)
///     a b 3
///     b c 4
///
/// Without a header, vertices are ordered by first appearance.
inline CoxeterGraph parse_coxeter_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, std::size_t> seen;
  std::unordered_map<std::string, std::size_t> edge_lines;
  std::vector<CoxeterGraph::EdgeSpec> edges;
  bool header = false;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = detail::trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;

    if (line.rfind("vertices:", 0) == 0) {
      if (header) throw ParseError(lineno, "second vertices header");
      if (!edges.empty())
        throw ParseError(lineno, "vertices header must precede edges");
      header = true;
      for (auto& name : detail::split_ws(line.substr(9))) {
        if (!seen.emplace(name, vertices.size()).second)
          throw ParseError(lineno, "duplicate vertex '" + name + "'");
        vertices.push_back(name);
      }
      if (vertices.empty()) throw ParseError(lineno, "empty vertices header");
      continue;
    }

    auto tok = detail::split_ws(line);
    if (tok.size() != 3)
      throw ParseError(lineno, "expected 'u v m', got '" + std::string(line) + "'");
    int m = 0;
    auto [end, ec] =
        std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), m);
    if (ec != std::errc() || end != tok[2].data() + tok[2].size())
      throw ParseError(lineno, "label '" + tok[2] + "' is not an integer");
    if (tok[0] == tok[1])
      throw ParseError(lineno, "self-loop at '" + tok[0] + "'");
    if (m < 2) throw ParseError(lineno, "label " + tok[2] + " < 2");
    for (int k = 0; k < 2; ++k) {
      if (seen.count(tok[k])) continue;
      if (header)
        throw ParseError(lineno, "undeclared vertex '" + tok[k] + "'");
      seen.emplace(tok[k], vertices.size());
      vertices.push_back(tok[k]);
    }
    auto key = std::min(tok[0], tok[1]) + '\0' + std::max(tok[0], tok[1]);
    if (auto [it, fresh] = edge_lines.emplace(key, lineno); !fresh)
      throw ParseError(lineno, "duplicate edge " + tok[0] + "-" + tok[1] +
                                   " (first at line " +
                                   std::to_string(it->second) + ")");
    edges.emplace_back(tok[0], tok[1], m);
  }
  if (vertices.empty()) throw ParseError(0, "graph has no vertices");
  return CoxeterGraph(std::move(vertices), edges);
}

/// Inverse of parse_coxeter_graph: header line then edges in canonical order.
inline std::string serialize(const CoxeterGraph& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertices()) out += " " + v;
  out += "\n";
  for (const auto& e : g.edges())
    out += g.name(e.u) + " " + g.name(e.v) + " " + std::to_string(e.m) + "\n";
  return out;
}

/// Throws DomainError naming every edge with label < 3.
inline void validate_large_type(const CoxeterGraph& g) {
  std::string bad;
  for (const auto& e : g.edges()) {
    if (e.m >= 3) continue;
    if (!bad.empty()) bad += ", ";
    bad += g.name(e.u) + "-" + g.name(e.v) + " (m=" + std::to_string(e.m) + ")";
  }
  if (!bad.empty()) throw DomainError("not of large type: " + bad);
}

inline bool is_large_type(const CoxeterGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.m >= 3; });
}

/// Vertices reachable from v through odd-labelled edges whose endpoints both
/// lie in `allowed` (all vertices when `allowed` is empty). Sorted.
inline std::vector<std::size_t> odd_reachable(
    const CoxeterGraph& g, std::size_t v,
    const std::vector<bool>& allowed = {}) {
  auto ok = [&](std::size_t x) { return allowed.empty() || allowed[x]; };
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto y : g.neighbours(x)) {
      if (seen[y] || !ok(y) || g.label(x, y) % 2 == 0) continue;
      seen[y] = true;
      queue.push_back(y);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

/// Vertex set of the maximal odd-labelled connected subgraph through v.
inline std::vector<std::size_t> odd_component(const CoxeterGraph& g,
                                              std::size_t v) {
  if (v >= g.size()) throw DomainError("vertex index out of range");
  return odd_reachable(g, v);
}

inline std::vector<std::string> odd_component(const CoxeterGraph& g,
                                              std::string_view v) {
  std::vector<std::string> out;
  for (auto i : odd_component(g, g.index_of(v))) out.push_back(g.name(i));
  return out;
}

}  // namespace artin
