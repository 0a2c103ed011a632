#include "treecross/tree_core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "treecross/errors.hpp"

namespace treecross {
namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::uint64_t checked_code_space(int n) {
  if (n <= 2) return 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      throw ArgumentError("code space n^(n-2) exceeds 64 bits for n = " + std::to_string(n));
    }
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

PruferCode::PruferCode(int n, std::vector<Label> code) : n_(n), code_(std::move(code)) {
  if (n < 1) throw InvalidCode("Prufer code needs n >= 1");
  const std::size_t expected = n >= 2 ? static_cast<std::size_t>(n - 2) : 0;
  if (code_.size() != expected) {
    throw InvalidCode("Prufer code for n = " + std::to_string(n) + " must have length " +
                      std::to_string(expected) + ", got " + std::to_string(code_.size()));
  }
  for (Label x : code_) {
    if (x < 1 || x > n) {
      throw InvalidCode("Prufer entry " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
    }
  }
}

LabeledTree LabeledTree::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) throw InvalidTree("tree needs n >= 1");
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidTree("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                      " edges, got " + std::to_string(edges.size()));
  }
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n || e.u == e.v) throw InvalidTree("bad edge " + edge_text(e));
    if (!sets.unite(e.u, e.v)) throw InvalidTree("edge " + edge_text(e) + " closes a cycle");
  }
  std::sort(edges.begin(), edges.end());
  return LabeledTree(n, std::move(edges));
}

bool LabeledTree::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Forest Forest::from_components(int n, const std::vector<std::vector<Edge>>& components) {
  if (n < 1) throw InvalidForest("forest needs n >= 1");
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Edge> all;
  std::vector<int> sizes;
  DisjointSets sets(n);
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    if (comp.empty()) throw InvalidForest("component " + std::to_string(c + 1) + " has no edges");
    std::vector<Label> verts;
    for (const Edge& e : comp) {
      if (e.u < 1 || e.v > n || e.u == e.v) throw InvalidForest("bad edge " + edge_text(e));
      if (!sets.unite(e.u, e.v)) throw InvalidForest("edge " + edge_text(e) + " closes a cycle");
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Label v : verts) {
      if (owner[v] != -1) {
        throw InvalidForest("vertex " + std::to_string(v) + " belongs to components " +
                            std::to_string(owner[v] + 1) + " and " + std::to_string(c + 1));
      }
      owner[v] = static_cast<int>(c);
    }
    if (verts.size() != comp.size() + 1) {
      throw InvalidForest("component " + std::to_string(c + 1) + " is not connected");
    }
    sizes.push_back(static_cast<int>(verts.size()));
    all.insert(all.end(), comp.begin(), comp.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw InvalidForest("repeated edge");
  return Forest(n, std::move(all), std::move(sizes));
}

Forest Forest::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) throw InvalidForest("forest needs n >= 1");
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n || e.u == e.v) throw InvalidForest("bad edge " + edge_text(e));
    if (!sets.unite(e.u, e.v)) throw InvalidForest("edge " + edge_text(e) + " closes a cycle");
  }
  std::vector<std::vector<Edge>> components;
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    const int root = sets.find(e.u);
    if (index[root] == -1) {
      index[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[index[root]].push_back(e);
  }
  return from_components(n, components);
}

Forest Forest::merged_with(const Forest& other) const {
  if (other.n_ != n_) throw ArgumentError("forests on different vertex counts");
  std::vector<Edge> edges(edges_.begin(), edges_.end());
  edges.insert(edges.end(), other.edges_.begin(), other.edges_.end());
  std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
  for (const Edge& e : edges_) used[e.u] = used[e.v] = true;
  for (const Edge& e : other.edges_) {
    if (used[e.u] || used[e.v]) throw InvalidForest("forests are not vertex-disjoint");
  }
  return from_edges(n_, std::move(edges));
}

namespace detail {

void decode_prufer(int n, std::span<const Label> code, std::span<int> degree, std::span<Edge> out) {
  if (n < 2) return;
  std::fill(degree.begin(), degree.begin() + n + 1, 1);
  for (Label x : code) ++degree[x];
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  std::size_t k = 0;
  for (Label x : code) {
    out[k++] = Edge(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out[k] = Edge(leaf, n);
}

void code_from_index(int n, std::uint64_t index, std::span<Label> code) {
  const auto base = static_cast<std::uint64_t>(n);
  for (std::size_t i = code.size(); i-- > 0;) {
    code[i] = static_cast<Label>(index % base) + 1;
    index /= base;
  }
}

}  // namespace detail

LabeledTree prufer_decode(const PruferCode& code) {
  const int n = code.n();
  if (n == 1) return LabeledTree(1, {});
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  std::vector<Edge> edges(static_cast<std::size_t>(n - 1));
  detail::decode_prufer(n, code.code(), degree, edges);
  std::sort(edges.begin(), edges.end());
  return LabeledTree(n, std::move(edges));
}

PruferCode prufer_encode(const LabeledTree& tree) {
  const int n = tree.n();
  if (n <= 2) return PruferCode(n, {});
  // Root at n; repeatedly strip the smallest leaf and record its parent.
  std::vector<std::vector<Label>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : tree.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Label> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Label> stack{n};
  parent[n] = -1;
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    for (Label w : adj[v]) {
      if (w != parent[v]) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  for (Label v = 1; v <= n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<Label> code;
  code.reserve(static_cast<std::size_t>(n - 2));
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    const Label next = parent[leaf];
    code.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return PruferCode(n, std::move(code));
}

BigInt tree_count(int n) {
  if (n <= 2) return 1;
  return big_pow(n, static_cast<unsigned long>(n - 2));
}

ShardRange shard_range(int n, std::uint64_t shard, std::uint64_t num_shards) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  if (num_shards == 0 || shard >= num_shards) {
    throw ArgumentError("shard " + std::to_string(shard) + " not in [0, " + std::to_string(num_shards) + ")");
  }
  const std::uint64_t total = checked_code_space(n);
  const auto split = [&](std::uint64_t s) {
    // total * s / num_shards without overflow
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * s) / num_shards);
  };
  return {split(shard), split(shard + 1)};
}

TreeStream::TreeStream(int n, std::uint64_t shard, std::uint64_t num_shards)
    : n_(n), range_(shard_range(n, shard, num_shards)), position_(range_.begin) {
  digits_.resize(n >= 2 ? static_cast<std::size_t>(n - 2) : 0);
  detail::code_from_index(n, position_, digits_);
}

std::optional<LabeledTree> TreeStream::next() {
  if (position_ >= range_.end) return std::nullopt;
  LabeledTree tree = prufer_decode(PruferCode(n_, digits_));
  ++position_;
  // Odometer increment over labels 1..n.
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (digits_[i] < n_) {
      ++digits_[i];
      break;
    }
    digits_[i] = 1;
  }
  return tree;
}

TreeStream enumerate_trees(int n, std::uint64_t shard, std::uint64_t num_shards) {
  return TreeStream(n, shard, num_shards);
}

LabeledTree sample_tree(int n, Rng& rng) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  std::vector<Label> code(n >= 2 ? static_cast<std::size_t>(n - 2) : 0);
  for (Label& x : code) x = static_cast<Label>(rng.uniform_below(static_cast<std::uint64_t>(n))) + 1;
  return prufer_decode(PruferCode(n, std::move(code)));
}

BigInt count_trees_containing(int n, const Forest& forest) {
  if (forest.n() != n) throw ArgumentError("forest and tree size differ");
  if (n < 1) throw ArgumentError("n must be >= 1");
  const auto num_edges = static_cast<long>(forest.edges().size());
  if (num_edges == n - 1) return 1;
  if (n == 1) return 1;
  // T(S) = n^(n - |E| - 2) * prod v_i
  BigInt count = big_pow(n, static_cast<unsigned long>(n - num_edges - 2));
  for (int v : forest.component_sizes()) count *= v;
  return count;
}

Rational forest_probability(int n, const Forest& forest) {
  return make_rational(count_trees_containing(n, forest), tree_count(n));
}

bool contains_forest(const LabeledTree& tree, const Forest& forest) {
  return std::all_of(forest.edges().begin(), forest.edges().end(),
                     [&](const Edge& e) { return tree.has_edge(e); });
}

}  // namespace treecross
