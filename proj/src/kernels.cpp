#include "treecross/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <optional>

#include "treecross/errors.hpp"

namespace treecross::kernels {
namespace {

constexpr std::uint64_t kBlock = 1 << 16;

void advance_code(std::vector<Label>& code, int n) {
  for (std::size_t i = code.size(); i-- > 0;) {
    if (code[i] < n) {
      ++code[i];
      return;
    }
    code[i] = 1;
  }
}

void bump(Histogram& h, std::uint64_t k) {
  if (k >= h.size()) h.resize(k + 1, 0);
  ++h[k];
}

/// Counts codes [begin, end) into `hist`.
void histogram_block(const CrossingTable& table, std::uint64_t begin, std::uint64_t end, Histogram& hist) {
  const int n = table.n();
  if (begin >= end) return;
  if (n <= 2) {
    hist.resize(std::max<std::size_t>(hist.size(), 1));
    hist[0] += end - begin;
    return;
  }
  std::vector<Label> code(static_cast<std::size_t>(n - 2));
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  std::vector<Edge> edges(static_cast<std::size_t>(n - 1));
  std::vector<std::uint64_t> scratch(table.words());
  detail::code_from_index(n, begin, code);
  for (std::uint64_t i = begin; i < end; ++i) {
    detail::decode_prufer(n, code, degree, edges);
    bump(hist, table.count(edges, scratch));
    advance_code(code, n);
  }
}

std::uint64_t fenwick_prefix(const std::vector<std::uint32_t>& tree, int i) {
  std::uint64_t s = 0;
  for (; i > 0; i -= i & -i) s += tree[i];
  return s;
}

}  // namespace

void merge_histogram(Histogram& total, const Histogram& part) {
  if (part.size() > total.size()) total.resize(part.size(), 0);
  for (std::size_t k = 0; k < part.size(); ++k) total[k] += part[k];
}

CrossingTable::CrossingTable(const PointConfig& config) : n_(config.size()) {
  const std::size_t m = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  words_ = std::max<std::size_t>(1, (m + 63) / 64);
  index_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
  std::vector<Edge> all;
  all.reserve(m);
  for (Label u = 1; u <= n_; ++u)
    for (Label v = u + 1; v <= n_; ++v) {
      index_[static_cast<std::size_t>(u) * (n_ + 1) + v] = static_cast<std::uint32_t>(all.size());
      index_[static_cast<std::size_t>(v) * (n_ + 1) + u] = static_cast<std::uint32_t>(all.size());
      all.emplace_back(u, v);
    }
  bits_.assign(std::max<std::size_t>(m, 1) * words_, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (edges_cross(all[i], all[j], config)) {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
}

std::uint64_t CrossingTable::count(std::span<const Edge> edges, std::span<std::uint64_t> scratch) const {
  if (words_ == 1) {
    std::uint64_t mask = 0;
    for (const Edge& e : edges) mask |= std::uint64_t{1} << edge_index(e.u, e.v);
    std::uint64_t total = 0;
    for (const Edge& e : edges) total += static_cast<std::uint64_t>(std::popcount(row(edge_index(e.u, e.v))[0] & mask));
    return total / 2;
  }
  std::fill(scratch.begin(), scratch.end(), 0);
  for (const Edge& e : edges) {
    const std::uint32_t i = edge_index(e.u, e.v);
    scratch[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  std::uint64_t total = 0;
  for (const Edge& e : edges) {
    const std::uint64_t* r = row(edge_index(e.u, e.v));
    for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::uint64_t>(std::popcount(r[w] & scratch[w]));
  }
  return total / 2;
}

Histogram crossing_histogram_shard(const CrossingTable& table, std::uint64_t shard, std::uint64_t num_shards) {
  const ShardRange range = shard_range(table.n(), shard, num_shards);
  Histogram hist{0};
  histogram_block(table, range.begin, range.end, hist);
  return hist;
}

Histogram crossing_histogram_serial(const PointConfig& config) {
  Histogram hist{0};
  auto stream = enumerate_trees(config.size());
  while (auto tree = stream.next()) bump(hist, crossing_count(*tree, config).value);
  return hist;
}

Histogram crossing_histogram_parallel(const PointConfig& config, std::uint64_t num_shards) {
  const CrossingTable table(config);
  const int n = config.size();
  std::vector<ShardRange> blocks;
  for (std::uint64_t s = 0; s < num_shards; ++s) {
    const ShardRange r = shard_range(n, s, num_shards);
    for (std::uint64_t b = r.begin; b < r.end; b += kBlock) blocks.push_back({b, std::min(r.end, b + kBlock)});
  }
  Histogram total{0};
#pragma omp parallel
  {
    Histogram local{0};
#pragma omp for schedule(dynamic, 1) nowait
    for (std::size_t b = 0; b < blocks.size(); ++b) histogram_block(table, blocks[b].begin, blocks[b].end, local);
#pragma omp critical(treecross_histogram_merge)
    merge_histogram(total, local);
  }
  return total;
}

std::vector<std::uint64_t> sample_crossings_serial(const PointConfig& config, std::uint64_t num_samples,
                                                   std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  out.reserve(num_samples);
  const int n = config.size();
  for (std::uint64_t chunk = 0; chunk * kSampleChunk < num_samples; ++chunk) {
    Rng rng = Rng::substream(seed, chunk);
    const std::uint64_t stop = std::min(num_samples, (chunk + 1) * kSampleChunk);
    for (std::uint64_t i = chunk * kSampleChunk; i < stop; ++i) {
      out.push_back(crossing_count(sample_tree(n, rng), config).value);
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_crossings_parallel(const PointConfig& config, std::uint64_t num_samples,
                                                     std::uint64_t seed) {
  const int n = config.size();
  std::vector<std::uint64_t> out(num_samples, 0);
  if (n <= 3) return out;
  if (!config.is_convex()) validate_general_position(config);
  const bool use_table = !config.is_convex() && n <= kSideTableMaxN;
  const SideTable* side = nullptr;
  std::optional<SideTable> table_storage;
  if (use_table) {
    table_storage.emplace(config);
    side = &*table_storage;
  }
  const std::uint64_t chunks = (num_samples + kSampleChunk - 1) / kSampleChunk;
#pragma omp parallel
  {
    std::vector<Label> code(static_cast<std::size_t>(n - 2));
    std::vector<int> degree(static_cast<std::size_t>(n) + 1);
    std::vector<Edge> edges(static_cast<std::size_t>(n - 1));
    ConvexCounter convex_counter(n);
#pragma omp for schedule(dynamic, 1)
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
      Rng rng = Rng::substream(seed, chunk);
      const std::uint64_t stop = std::min(num_samples, (chunk + 1) * kSampleChunk);
      for (std::uint64_t i = chunk * kSampleChunk; i < stop; ++i) {
        for (Label& x : code) x = static_cast<Label>(rng.uniform_below(static_cast<std::uint64_t>(n))) + 1;
        detail::decode_prufer(n, code, degree, edges);
        if (config.is_convex()) {
          out[i] = convex_counter.count(edges);
        } else if (side != nullptr) {
          out[i] = side->count(edges);
        } else {
          std::uint64_t c = 0;
          for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b)
              if (edges_cross(edges[a], edges[b], config)) ++c;
          out[i] = c;
        }
      }
    }
  }
  return out;
}

std::uint64_t convex_crossings_fast(int n, std::span<const Edge> edges) {
  ConvexCounter counter(n);
  return counter.count(edges);
}

ConvexCounter::ConvexCounter(int n)
    : n_(n), head_(static_cast<std::size_t>(n) + 2), next_(static_cast<std::size_t>(n)),
      fenwick_(static_cast<std::size_t>(n) + 1) {}

std::uint64_t ConvexCounter::count(std::span<const Edge> edges) {
  // Sweep left endpoints c = 1..n; for each edge {c,d}, count earlier-started
  // edges {a,b} (a < c) whose right endpoint b lies strictly inside (c, d).
  std::fill(head_.begin(), head_.end(), -1);
  std::fill(fenwick_.begin(), fenwick_.end(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    next_[i] = head_[edges[i].u];
    head_[edges[i].u] = static_cast<std::int32_t>(i);
  }
  std::uint64_t total = 0;
  for (int c = 1; c <= n_; ++c) {
    if (head_[c] < 0) continue;
    const std::uint64_t below_c = fenwick_prefix(fenwick_, c);
    for (std::int32_t i = head_[c]; i >= 0; i = next_[i]) {
      const int d = edges[i].v;
      if (d - 1 > c) total += fenwick_prefix(fenwick_, d - 1) - below_c;
    }
    for (std::int32_t i = head_[c]; i >= 0; i = next_[i])
      for (int x = edges[i].v; x <= n_; x += x & -x) ++fenwick_[x];
  }
  return total;
}

SideTable::SideTable(const PointConfig& config) : n_(config.size()) {
  if (config.is_convex()) throw ArgumentError("SideTable needs explicit coordinates");
  words_ = static_cast<std::size_t>(n_) / 64 + 1;
  bits_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1) * words_, 0);
  const auto& pts = config.points();
  for (Label a = 1; a <= n_; ++a)
    for (Label b = a + 1; b <= n_; ++b) {
      std::uint64_t* r = bits_.data() + (static_cast<std::size_t>(a) * (n_ + 1) + b) * words_;
      for (Label k = 1; k <= n_; ++k)
        if (cross(pts[a - 1], pts[b - 1], pts[k - 1]) > 0) r[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
}

std::uint64_t SideTable::count(std::span<const Edge> edges) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& f = edges[j];
      if (e.shares_endpoint(f)) continue;
      if (left_of(e.u, e.v, f.u) != left_of(e.u, e.v, f.v) && left_of(f.u, f.v, e.u) != left_of(f.u, f.v, e.v))
        ++total;
    }
  }
  return total;
}

std::uint64_t convex_quadrilaterals_serial(std::span<const Point> points) {
  const std::size_t n = points.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (in_convex_position(points[i], points[j], points[k], points[l])) ++count;
  return count;
}

std::uint64_t convex_quadrilaterals_parallel(std::span<const Point> points) {
  // Four points in general position are convex iff, seen from the segment
  // i-j, the orientation pattern of k and l admits no point inside the
  // triangle of the others. Precomputed signs turn each test into lookups.
  const auto n = static_cast<std::int64_t>(points.size());
  std::vector<std::uint8_t> ccw(static_cast<std::size_t>(n * n * n), 0);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        ccw[(a * n + b) * n + c] = cross(points[a], points[b], points[c]) > 0;
  const auto s = [&](std::int64_t a, std::int64_t b, std::int64_t c) { return ccw[(a * n + b) * n + c]; };
  const auto inside = [&](std::int64_t p, std::int64_t x, std::int64_t y, std::int64_t z) {
    const auto s1 = s(x, y, p);
    return s1 == s(y, z, p) && s1 == s(z, x, p);
  };
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j)
      for (std::int64_t k = j + 1; k < n; ++k)
        for (std::int64_t l = k + 1; l < n; ++l)
          if (!inside(i, j, k, l) && !inside(j, i, k, l) && !inside(k, i, j, l) && !inside(l, i, j, k)) ++count;
  return count;
}

std::uint64_t crossing_segment_pairs_serial(std::span<const Point> points) {
  const PointConfig config = PointConfig::coordinates({points.begin(), points.end()});
  const int n = config.size();
  std::vector<Edge> segs;
  for (Label u = 1; u <= n; ++u)
    for (Label v = u + 1; v <= n; ++v) segs.emplace_back(u, v);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (edges_cross(segs[i], segs[j], config)) ++count;
  return count;
}

std::uint64_t crossing_segment_pairs_parallel(std::span<const Point> points) {
  const PointConfig config = PointConfig::coordinates({points.begin(), points.end()});
  const SideTable side(config);
  const int n = config.size();
  std::vector<Edge> segs;
  for (Label u = 1; u <= n; ++u)
    for (Label v = u + 1; v <= n; ++v) segs.emplace_back(u, v);
  const auto m = static_cast<std::int64_t>(segs.size());
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : count)
  for (std::int64_t i = 0; i < m; ++i) {
    const Edge& e = segs[i];
    for (std::int64_t j = i + 1; j < m; ++j) {
      const Edge& f = segs[j];
      if (e.shares_endpoint(f)) continue;
      if (side.left_of(e.u, e.v, f.u) != side.left_of(e.u, e.v, f.v) &&
          side.left_of(f.u, f.v, e.u) != side.left_of(f.u, f.v, e.v))
        ++count;
    }
  }
  return count;
}

}  // namespace treecross::kernels
