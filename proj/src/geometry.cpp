#include "treecross/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <utility>

#include "treecross/errors.hpp"
#include "treecross/kernels.hpp"

namespace treecross {
namespace {

bool within_bound(const Point& p) {
  return p.x >= -kCoordinateBound && p.x <= kCoordinateBound && p.y >= -kCoordinateBound &&
         p.y <= kCoordinateBound;
}

Orientation sign_of(std::int64_t det) {
  if (det > 0) return Orientation::CounterClockwise;
  if (det < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

void check_label(const Edge& e, int n) {
  if (e.u < 1 || e.v > n || e.u == e.v) {
    throw ArgumentError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " not on labels 1.." + std::to_string(n));
  }
}

bool strictly_between(Label x, Label lo, Label hi) { return lo < x && x < hi; }

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  if (!within_bound(p) || !within_bound(q) || !within_bound(r)) {
    throw CoordinateOverflow("coordinate magnitude exceeds 2^26");
  }
  return sign_of(cross(p, q, r));
}

PointConfig PointConfig::convex(int n) {
  if (n < 1) throw ArgumentError("convex configuration needs n >= 1");
  return PointConfig(true, n, {});
}

PointConfig PointConfig::coordinates(std::vector<Point> points) {
  if (points.empty()) throw ArgumentError("point set is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!within_bound(points[i])) {
      throw CoordinateOverflow("point " + std::to_string(i + 1) + " exceeds coordinate bound 2^26");
    }
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!seen.emplace(points[i].x, points[i].y).second) {
      throw InputError("point " + std::to_string(i + 1) + " duplicates an earlier point");
    }
  }
  const int n = static_cast<int>(points.size());
  return PointConfig(false, n, std::move(points));
}

std::string PointConfig::key() const {
  if (convex_) return "convex-" + std::to_string(n_);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Point& p : points_) {
    const std::string line = std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    for (unsigned char ch : line) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("coords-") + buf;
}

std::optional<std::array<int, 3>> find_collinear_triple(const PointConfig& config) {
  if (config.is_convex()) return std::nullopt;
  const auto& pts = config.points();
  const int n = config.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (cross(pts[i], pts[j], pts[k]) == 0) return std::array<int, 3>{i + 1, j + 1, k + 1};
  return std::nullopt;
}

void validate_general_position(const PointConfig& config) {
  if (auto t = find_collinear_triple(config)) {
    throw GeneralPositionError("points " + std::to_string((*t)[0]) + ", " + std::to_string((*t)[1]) +
                                   ", " + std::to_string((*t)[2]) + " are collinear",
                               *t);
  }
}

bool edges_cross(const Edge& e1, const Edge& e2, const PointConfig& config) {
  check_label(e1, config.size());
  check_label(e2, config.size());
  if (e1.shares_endpoint(e2)) return false;
  if (config.is_convex()) {
    return strictly_between(e2.u, e1.u, e1.v) != strictly_between(e2.v, e1.u, e1.v);
  }
  const Point& a = config.point(e1.u);
  const Point& b = config.point(e1.v);
  const Point& c = config.point(e2.u);
  const Point& d = config.point(e2.v);
  const std::int64_t o1 = cross(a, b, c);
  const std::int64_t o2 = cross(a, b, d);
  const std::int64_t o3 = cross(c, d, a);
  const std::int64_t o4 = cross(c, d, b);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
    // Touching or overlapping segments: not a crossing, but the input is degenerate.
    std::array<int, 3> t{};
    if (o1 == 0) t = {e1.u, e1.v, e2.u};
    else if (o2 == 0) t = {e1.u, e1.v, e2.v};
    else if (o3 == 0) t = {e2.u, e2.v, e1.u};
    else t = {e2.u, e2.v, e1.v};
    std::sort(t.begin(), t.end());
    throw GeneralPositionError("edges " + std::to_string(e1.u) + "-" + std::to_string(e1.v) + " and " +
                                   std::to_string(e2.u) + "-" + std::to_string(e2.v) +
                                   " meet a collinear triple",
                               t);
  }
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

CrossingCount crossing_count(const LabeledTree& tree, const PointConfig& config) {
  if (tree.n() != config.size()) {
    throw ArgumentError("tree has " + std::to_string(tree.n()) + " vertices but configuration has " +
                        std::to_string(config.size()));
  }
  const auto edges = tree.edges();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges_cross(edges[i], edges[j], config)) ++count;
  return {count};
}

bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d) {
  const auto inside = [](const Point& p, const Point& x, const Point& y, const Point& z) {
    const bool s1 = cross(x, y, p) > 0;
    const bool s2 = cross(y, z, p) > 0;
    const bool s3 = cross(z, x, p) > 0;
    return s1 == s2 && s2 == s3;
  };
  return !inside(a, b, c, d) && !inside(b, a, c, d) && !inside(c, a, b, d) && !inside(d, a, b, c);
}

BigInt rectilinear_crossing_number(const PointConfig& config) {
  const int n = config.size();
  if (config.is_convex()) return n >= 4 ? binomial(static_cast<unsigned long>(n), 4) : BigInt(0);
  validate_general_position(config);
  return from_u64(kernels::convex_quadrilaterals_parallel(config.points()));
}

BigInt kn_crossing_pairs(const PointConfig& config) {
  if (config.is_convex()) {
    throw ArgumentError("kn_crossing_pairs needs explicit coordinates");
  }
  validate_general_position(config);
  return from_u64(kernels::crossing_segment_pairs_parallel(config.points()));
}

PointConfig convex_realization(int n) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) pts.push_back({i, i * i});
  return PointConfig::coordinates(std::move(pts));
}

PointConfig random_general_position(int n, std::uint64_t seed, std::int64_t extent) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  if (extent < 1 || extent > kCoordinateBound) throw ArgumentError("extent outside [1, 2^26]");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(pts.size()) < n) {
    const Point p{rng.uniform_int(-extent, extent), rng.uniform_int(-extent, extent)};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == p) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        if (cross(pts[i], pts[j], p) == 0) ok = false;
    }
    if (ok) pts.push_back(p);
  }
  return PointConfig::coordinates(std::move(pts));
}

}  // namespace treecross
