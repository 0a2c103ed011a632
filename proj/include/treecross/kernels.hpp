#pragma once

// Hot loops behind the exact and Monte Carlo computations. Every kernel has
// a *_serial reference built from the public per-tree operations and a
// *_parallel OpenMP version built on precomputed tables; tests check that
// the two agree exactly.

#include <cstdint>
#include <span>
#include <vector>

#include "treecross/geometry.hpp"
#include "treecross/tree_core.hpp"

namespace treecross::kernels {

/// Histogram indexed by crossing count.
using Histogram = std::vector<std::uint64_t>;

/// Adds `part` into `total` pointwise, growing `total` as needed.
void merge_histogram(Histogram& total, const Histogram& part);

/// For each of the C(n,2) possible edges, the set of edges it crosses, as a
/// bit row of `words()` 64-bit words.
class CrossingTable {
 public:
  explicit CrossingTable(const PointConfig& config);

  int n() const { return n_; }
  std::size_t words() const { return words_; }
  std::uint32_t edge_index(Label u, Label v) const {
    return index_[static_cast<std::size_t>(u) * (n_ + 1) + v];
  }
  const std::uint64_t* row(std::uint32_t edge) const { return bits_.data() + edge * words_; }

  /// Crossings of a tree given by its n-1 edges.
  std::uint64_t count(std::span<const Edge> edges, std::span<std::uint64_t> scratch) const;

 private:
  int n_;
  std::size_t words_;
  std::vector<std::uint32_t> index_;
  std::vector<std::uint64_t> bits_;
};

/// Histogram of one contiguous shard of Prufer codes.
Histogram crossing_histogram_shard(const CrossingTable& table, std::uint64_t shard, std::uint64_t num_shards);

/// Reference: enumerate_trees + crossing_count, one tree at a time.
Histogram crossing_histogram_serial(const PointConfig& config);

/// Shards processed concurrently, each split into blocks for load balance.
Histogram crossing_histogram_parallel(const PointConfig& config, std::uint64_t num_shards);

/// Samples are drawn in fixed chunks; chunk c uses Rng::substream(seed, c).
inline constexpr std::uint64_t kSampleChunk = 4096;

/// Reference: sample_tree + crossing_count.
std::vector<std::uint64_t> sample_crossings_serial(const PointConfig& config, std::uint64_t num_samples,
                                                   std::uint64_t seed);

/// Same draws as the serial version, counted with the fast counters below.
std::vector<std::uint64_t> sample_crossings_parallel(const PointConfig& config, std::uint64_t num_samples,
                                                     std::uint64_t seed);

/// Crossings of a tree drawn on a convex configuration, O(n log n).
/// Counts pairs a < c < b < d among edges {a,b}, {c,d}.
std::uint64_t convex_crossings_fast(int n, std::span<const Edge> edges);

/// convex_crossings_fast with reusable buffers, for one thread.
class ConvexCounter {
 public:
  explicit ConvexCounter(int n);
  std::uint64_t count(std::span<const Edge> edges);

 private:
  int n_;
  std::vector<std::int32_t> head_;
  std::vector<std::int32_t> next_;
  std::vector<std::uint32_t> fenwick_;
};

/// side(a, b) is the set of labels k with (a, b, k) counterclockwise.
class SideTable {
 public:
  explicit SideTable(const PointConfig& config);
  bool left_of(Label a, Label b, Label k) const {
    const std::uint64_t* r = bits_.data() + (static_cast<std::size_t>(a) * (n_ + 1) + b) * words_;
    return (r[k >> 6] >> (k & 63)) & 1U;
  }
  std::uint64_t count(std::span<const Edge> edges) const;

 private:
  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Largest n for which SideTable is used during sampling.
inline constexpr int kSideTableMaxN = 512;

std::uint64_t convex_quadrilaterals_serial(std::span<const Point> points);
std::uint64_t convex_quadrilaterals_parallel(std::span<const Point> points);

std::uint64_t crossing_segment_pairs_serial(std::span<const Point> points);
std::uint64_t crossing_segment_pairs_parallel(std::span<const Point> points);

}  // namespace treecross::kernels
