#pragma once

// Shared generators for the randomised tests.

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "artin/coxeter_graph.hpp"

namespace test {

/// Random graph on n in [min_n, max_n] vertices named a, b, c, ...
/// Each pair is absent with probability 1/3, otherwise labelled from 3..6
/// (2..6 when allow_two).
template <class Rng>
artin::CoxeterGraph random_graph(Rng& rng, int max_n, int min_n = 1, bool allow_two = false) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  std::uniform_int_distribution<int> present(0, 2);
  std::uniform_int_distribution<int> label(allow_two ? 2 : 3, 6);
  int n = size(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::tuple<std::string, std::string, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (present(rng) != 0) edges.emplace_back(names[i], names[j], label(rng));
  return artin::CoxeterGraph(names, edges);
}

/// Same graph with vertex names permuted by `perm` (new name of vertex i is
/// names[perm[i]]), declared in a shuffled order.
template <class Rng>
artin::CoxeterGraph relabel(const artin::CoxeterGraph& g, const std::vector<std::size_t>& perm,
                            Rng& rng) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.size(); ++i) names.push_back(g.name(perm[i]));
  auto order = names;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::tuple<std::string, std::string, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(names[e.u], names[e.v], e.m);
  std::shuffle(edges.begin(), edges.end(), rng);
  return artin::CoxeterGraph(order, edges);
}

/// One graph per isomorphism class of graphs on n vertices whose pairs are
/// absent, odd (3) or even (4).
inline std::vector<artin::CoxeterGraph> parity_graphs(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_id(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pair_id[i][j] = pair_id[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
  std::vector<int> digits(pairs.size()), image(pairs.size());
  std::vector<artin::CoxeterGraph> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& d : digits) d = static_cast<int>(c % 3), c /= 3;
    bool smallest = true;
    for (const auto& p : perms) {
      for (std::size_t k = 0; k < pairs.size(); ++k)
        image[pair_id[p[pairs[k].first]][p[pairs[k].second]]] = digits[k];
      std::size_t other = 0;
      for (std::size_t k = pairs.size(); k-- > 0;) other = other * 3 + image[k];
      if (other < code) {
        smallest = false;
        break;
      }
    }
    if (!smallest) continue;
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (digits[k] != 0)
        edges.emplace_back(names[pairs[k].first], names[pairs[k].second], digits[k] == 1 ? 3 : 4);
    out.emplace_back(names, edges);
  }
  return out;
}

}  // namespace test
