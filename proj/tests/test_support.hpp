#pragma once

// Brute-force helpers shared by the test binaries. Nothing here calls the
// counting formulas under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "treecross/rng.hpp"
#include "treecross/tree_core.hpp"

namespace treecross::testing {

inline std::vector<LabeledTree> all_trees(int n) {
  std::vector<LabeledTree> out;
  auto stream = enumerate_trees(n);
  while (auto t = stream.next()) out.push_back(*t);
  return out;
}

inline std::vector<Edge> complete_graph_edges(int n) {
  std::vector<Edge> edges;
  for (Label u = 1; u <= n; ++u)
    for (Label v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return edges;
}

inline bool acyclic(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Every acyclic edge subset of K_n (including the empty one).
inline std::vector<std::vector<Edge>> all_forest_edge_sets(int n) {
  const auto edges = complete_graph_edges(n);
  std::vector<std::vector<Edge>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1U) chosen.push_back(edges[i]);
    if (acyclic(n, chosen)) out.push_back(std::move(chosen));
  }
  return out;
}

/// Random acyclic edge set on the given vertices: edges tried in random order, at most max_edges kept.
inline std::vector<Edge> random_forest_edges(int n, const std::vector<Label>& vertices, std::size_t max_edges, Rng& rng) {
  std::vector<Edge> candidates;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) candidates.emplace_back(vertices[i], vertices[j]);
  for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[rng.uniform_below(i)]);
  std::vector<Edge> chosen;
  for (const Edge& e : candidates) {
    if (chosen.size() >= max_edges) break;
    chosen.push_back(e);
    if (!acyclic(n, chosen)) chosen.pop_back();
  }
  return chosen;
}

inline std::uint64_t brute_force_containing(const std::vector<LabeledTree>& trees, const std::vector<Edge>& forest) {
  std::uint64_t count = 0;
  for (const auto& t : trees) {
    bool all = true;
    for (const Edge& e : forest) all = all && t.has_edge(e);
    count += all ? 1 : 0;
  }
  return count;
}

}  // namespace treecross::testing
