#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "treecross/rational.hpp"
#include "treecross/rng.hpp"

namespace treecross {

using Label = std::int32_t;

/// Undirected edge between two distinct 1-based labels, stored with u < v.
struct Edge {
  Label u = 0;
  Label v = 0;

  Edge() = default;
  Edge(Label a, Label b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool shares_endpoint(const Edge& o) const { return u == o.u || u == o.v || v == o.u || v == o.v; }
  auto operator<=>(const Edge&) const = default;
};

class PruferCode {
 public:
  /// Throws InvalidCode when the length is not max(n-2, 0) or an entry is outside [1, n].
  PruferCode(int n, std::vector<Label> code);

  int n() const { return n_; }
  std::span<const Label> code() const { return code_; }
  bool operator==(const PruferCode&) const = default;

 private:
  int n_;
  std::vector<Label> code_;
};

/// Spanning tree of the complete graph on labels 1..n.
class LabeledTree {
 public:
  /// Validates edge count, label range, connectivity and acyclicity; throws InvalidTree.
  static LabeledTree from_edges(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  bool has_edge(const Edge& e) const;

  bool operator==(const LabeledTree&) const = default;
  auto operator<=>(const LabeledTree&) const = default;

 private:
  LabeledTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}
  friend LabeledTree prufer_decode(const PruferCode&);
  friend LabeledTree sample_tree(int, Rng&);

  int n_;
  std::vector<Edge> edges_;  // sorted, canonical
};

/// Vertex-disjoint fixed subtrees a_1..a_p on labels 1..n.
///
/// Vertices outside every component are implicit singletons and do not
/// appear in component_sizes().
class Forest {
 public:
  /// Each inner list is one component's edges. Throws InvalidForest when a
  /// component is empty, disconnected, cyclic, or shares a vertex with another.
  static Forest from_components(int n, const std::vector<std::vector<Edge>>& components);

  /// Splits an acyclic edge set into its connected components.
  static Forest from_edges(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> component_sizes() const { return sizes_; }
  std::size_t num_components() const { return sizes_.size(); }

  /// Forest whose components are those of both inputs; the inputs must be vertex-disjoint.
  Forest merged_with(const Forest& other) const;

 private:
  Forest(int n, std::vector<Edge> edges, std::vector<int> sizes)
      : n_(n), edges_(std::move(edges)), sizes_(std::move(sizes)) {}

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> sizes_;
};

LabeledTree prufer_decode(const PruferCode& code);
PruferCode prufer_encode(const LabeledTree& tree);

/// Number of labelled trees, n^(n-2) (1 for n <= 2).
BigInt tree_count(int n);

/// Contiguous block [begin, end) of lexicographic code indices owned by one shard.
struct ShardRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const { return end - begin; }
};

/// Throws ArgumentError on a bad shard or when n^(n-2) does not fit in 64 bits.
ShardRange shard_range(int n, std::uint64_t shard, std::uint64_t num_shards);

/// Stream of the trees whose Prufer codes fall in one shard, in lexicographic code order.
class TreeStream {
 public:
  TreeStream(int n, std::uint64_t shard, std::uint64_t num_shards);

  std::optional<LabeledTree> next();
  const ShardRange& range() const { return range_; }

 private:
  int n_;
  ShardRange range_;
  std::uint64_t position_;
  std::vector<Label> digits_;
};

TreeStream enumerate_trees(int n, std::uint64_t shard = 0, std::uint64_t num_shards = 1);

LabeledTree sample_tree(int n, Rng& rng);

BigInt count_trees_containing(int n, const Forest& forest);
Rational forest_probability(int n, const Forest& forest);
bool contains_forest(const LabeledTree& tree, const Forest& forest);

namespace detail {

/// Linear-time Prufer decoding into a caller-owned buffer of n-1 edges.
/// `degree` must have room for n+1 entries. No validation.
void decode_prufer(int n, std::span<const Label> code, std::span<int> degree, std::span<Edge> out);

/// Writes the base-n digits of a lexicographic code index as labels 1..n.
void code_from_index(int n, std::uint64_t index, std::span<Label> code);

}  // namespace detail

}  // namespace treecross
