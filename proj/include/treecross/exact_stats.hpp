#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treecross/geometry.hpp"
#include "treecross/rational.hpp"

namespace treecross {

/// Exact number of labelled trees per crossing count on one configuration.
struct CrossingDistribution {
  int n = 0;
  std::string config_key;  // PointConfig::key()
  std::map<std::uint64_t, BigInt> counts;

  BigInt total() const;
};

struct EnumerationOptions {
  std::uint64_t num_shards = 4;
  int max_n = 10;
  bool force = false;
};

/// Throws GuardRefusal (with a cost estimate) when n > max_n and !force.
CrossingDistribution exact_distribution(const PointConfig& config, const EnumerationOptions& options = {});

/// Builds a distribution from a list of counts for k = 0, 1, 2, ...
CrossingDistribution distribution_from_counts(int n, std::string key, const std::vector<std::uint64_t>& counts);

/// E[X^j] = sum_k k^j counts[k] / total.
Rational raw_moment(const CrossingDistribution& dist, int j);

/// A set partition of {1..k} with blocks in canonical order.
struct SetPartition {
  int k = 0;
  std::vector<std::vector<int>> blocks;
  std::size_t size() const { return blocks.size(); }
};

inline constexpr int kMaxCumulantOrder = 8;

/// All partitions of {1..k}, Bell(k) of them. k is limited to kMaxCumulantOrder.
std::vector<SetPartition> set_partitions(int k);

/// Univariate cumulants C_1..C_K from raw moments m_1..m_K:
///   C_k = sum over partitions pi of [k] of (|pi|-1)! (-1)^(|pi|-1) prod_{B in pi} m_|B|.
std::vector<Rational> moments_to_cumulants(std::span<const Rational> moments);

/// (n-1)(n-2)(n-3) / (6n)
Rational closed_form_mean(int n);
Rational closed_form_second_moment(int n);
Rational closed_form_variance(int n);

struct FitPoint {
  std::int64_t n = 0;
  Rational value;
};

struct FitResult {
  int exp_min = 0;
  int exp_max = 0;
  std::vector<Rational> coefficients;  // coefficients[i] multiplies n^(exp_min + i)
  std::vector<Rational> residuals;     // one per input point

  const Rational& coefficient(int exponent) const { return coefficients.at(static_cast<std::size_t>(exponent - exp_min)); }
  bool exact() const;
};

/// Solves sum_i a_i n^i = value over the rationals for a square system.
/// Throws ArgumentError on a size mismatch or duplicate n, SingularSystem on rank deficiency.
FitResult fit_laurent_polynomial(std::span<const FitPoint> points, int exp_min, int exp_max);

/// Evaluates sum_i a_i n^i.
Rational evaluate_laurent(const FitResult& fit, std::int64_t n);

/// 4 * rectilinear crossing number / n^2.
Rational general_position_mean(const PointConfig& config);

struct CumulantRow {
  int n = 0;
  std::vector<Rational> cumulants;  // C_1..C_kmax
  std::vector<double> normalized;   // C_k / n^(3k/2)
};

struct CumulantScalingReport {
  int k_max = 0;
  std::vector<CumulantRow> rows;
  /// Least-squares slope of log|C_k| against log n, per k (NaN when fewer than two usable rows).
  std::vector<double> log_log_slopes;
};

CumulantScalingReport cumulant_scaling_report(std::span<const CrossingDistribution> dists, int k_max);

/// Convex configurations n_min..n_max, enumerated with `options`.
CumulantScalingReport cumulant_scaling_report(int n_min, int n_max, int k_max, const EnumerationOptions& options = {});

/// "k,count" rows sorted by k.
void write_distribution_csv(std::ostream& out, const CrossingDistribution& dist);

/// "name,numerator,denominator" rows.
void write_rational_csv(std::ostream& out, std::span<const std::pair<std::string, Rational>> rows);

}  // namespace treecross
