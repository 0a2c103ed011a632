#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treecross/rational.hpp"
#include "treecross/tree_core.hpp"

namespace treecross {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

/// Coordinates must satisfy |x|, |y| <= 2^26. Differences then stay below
/// 2^27 and the orientation determinant below 2^55, exact in int64.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 26;

enum class Orientation { CounterClockwise, Clockwise, Collinear };

/// Sign of (q - p) x (r - p). Throws CoordinateOverflow outside the bound.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Unchecked determinant (q - p) x (r - p) for points already within the bound.
inline std::int64_t cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

/// Where labels 1..n sit: either convex position in label order (no
/// coordinates at all) or explicit integer points, label i at index i-1.
class PointConfig {
 public:
  static PointConfig convex(int n);
  /// Checks the coordinate bound and that no two points coincide.
  static PointConfig coordinates(std::vector<Point> points);

  bool is_convex() const { return convex_; }
  int size() const { return n_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(Label label) const { return points_[static_cast<std::size_t>(label - 1)]; }

  /// Stable identifier: "convex-<n>" or "coords-<fnv1a64 hex>" of the canonical point list.
  std::string key() const;

 private:
  PointConfig(bool convex, int n, std::vector<Point> points)
      : convex_(convex), n_(n), points_(std::move(points)) {}

  bool convex_;
  int n_;
  std::vector<Point> points_;
};

/// First collinear triple in lexicographic order, as 1-based labels.
std::optional<std::array<int, 3>> find_collinear_triple(const PointConfig& config);

/// Throws GeneralPositionError naming the first collinear triple.
void validate_general_position(const PointConfig& config);

/// Proper crossing of two straight edges. Edges sharing an endpoint never
/// cross. For coordinates, a touching or overlapping configuration is
/// reported as a GeneralPositionError.
bool edges_cross(const Edge& e1, const Edge& e2, const PointConfig& config);

struct CrossingCount {
  std::uint64_t value = 0;
  auto operator<=>(const CrossingCount&) const = default;
};

/// Pair scan over all tree edges; O(n^2).
CrossingCount crossing_count(const LabeledTree& tree, const PointConfig& config);

/// Number of 4-subsets in convex position. C(n,4) for convex configs.
BigInt rectilinear_crossing_number(const PointConfig& config);

/// Properly crossing pairs among the C(n,2) segments of the complete graph.
BigInt kn_crossing_pairs(const PointConfig& config);

/// Four points (no three collinear) are in convex position iff none lies in the
/// triangle of the other three.
bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d);

/// Integer points (i, i^2), i = 1..n: a convex polygon whose hull order is label order.
PointConfig convex_realization(int n);

/// n points drawn uniformly from [-extent, extent]^2, redrawn until in general position.
PointConfig random_general_position(int n, std::uint64_t seed, std::int64_t extent = 1 << 20);

}  // namespace treecross
