#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "treecross/geometry.hpp"
#include "treecross/rational.hpp"

namespace treecross {

/// Sample mean, unbiased variance, and plug-in (biased) skewness and excess
/// kurtosis: m3 / m2^1.5 and m4 / m2^2 - 3 with central moments m_j
/// averaged over the sample. The shape statistics are absent when the
/// sample has zero spread or fewer than four values.
struct MomentSummary {
  double mean = 0;
  double variance = 0;
  std::optional<double> skewness;
  std::optional<double> excess_kurtosis;
  bool degenerate = false;
};

/// Needs at least two samples.
MomentSummary empirical_moments(std::span<const double> samples);
MomentSummary empirical_moments(std::span<const std::uint64_t> samples);

/// Standard normal CDF via std::erfc: Phi(x) = erfc(-x / sqrt 2) / 2.
double normal_cdf(double x);

/// Two-sided Kolmogorov-Smirnov distance between the sample ECDF and Phi.
double ks_statistic(std::span<const double> samples);

struct HistogramBin {
  double left = 0;
  double right = 0;
  std::uint64_t count = 0;
};

/// Integer-aligned bins [left, right) over the crossing counts, at most max_bins of them.
std::vector<HistogramBin> crossing_histogram(std::span<const std::uint64_t> values, std::size_t max_bins = 64);

struct SampleReport {
  int n = 0;
  std::string config_kind;  // "convex" or "coordinates"
  std::string config_key;
  std::uint64_t num_samples = 0;
  std::uint64_t seed = 0;

  double empirical_mean = 0;
  double empirical_variance = 0;
  std::optional<double> skewness;
  std::optional<double> excess_kurtosis;
  bool degenerate = false;
  double ks_distance = 0;

  Rational exact_mean;                    // closed form (convex) or 4 cr / n^2 (coordinates)
  std::optional<Rational> exact_variance;  // convex only
  double sigma = 0;                       // sigma used for standardization
  std::string sigma_source;               // "exact" or "empirical"
  double asymptotic_mean = 0;             // n^2 / 6
  double asymptotic_variance = 0;         // n^3 / 45
  std::optional<BigInt> rectilinear_crossings;  // coordinates only

  std::vector<HistogramBin> histogram;
};

/// Draws num_samples uniform trees on `config` and summarizes their crossing
/// counts. Identical arguments give identical reports for any thread count.
SampleReport run_experiment(const PointConfig& config, std::uint64_t num_samples, std::uint64_t seed);

/// Raw crossing counts behind run_experiment.
std::vector<std::uint64_t> sample_crossing_counts(const PointConfig& config, std::uint64_t num_samples, std::uint64_t seed);

nlohmann::ordered_json to_json(const SampleReport& report);
void write_report_json(std::ostream& out, const SampleReport& report);
/// "bin_left,bin_right,count"
void write_histogram_csv(std::ostream& out, const SampleReport& report);

struct VarianceProbeRow {
  int n = 0;
  std::string config_key;
  double empirical_variance = 0;
  double variance_ratio = 0;  // empirical variance / n^3
  double crossing_ratio = 0;  // cr(S) / C(n,4); not checked against any limit
};

std::vector<VarianceProbeRow> variance_scaling_probe(std::span<const PointConfig> configs, std::uint64_t num_samples,
                                                     std::uint64_t seed);

}  // namespace treecross
