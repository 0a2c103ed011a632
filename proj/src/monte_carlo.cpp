#include "treecross/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "treecross/errors.hpp"
#include "treecross/exact_stats.hpp"
#include "treecross/kernels.hpp"

namespace treecross {
namespace {

template <typename T>
MomentSummary summarize(std::span<const T> xs) {
  if (xs.size() < 2) throw ArgumentError("need at least two samples for a variance");
  const auto m = static_cast<long double>(xs.size());
  long double sum = 0;
  for (T x : xs) sum += static_cast<long double>(x);
  const long double mean = sum / m;
  long double m2 = 0, m3 = 0, m4 = 0;
  for (T x : xs) {
    const long double d = static_cast<long double>(x) - mean;
    const long double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  MomentSummary s;
  s.mean = static_cast<double>(mean);
  s.variance = static_cast<double>(m2 / (m - 1));
  m2 /= m;
  m3 /= m;
  m4 /= m;
  if (m2 == 0) {
    s.degenerate = true;
  } else if (xs.size() >= 4) {
    s.skewness = static_cast<double>(m3 / std::pow(m2, 1.5L));
    s.excess_kurtosis = static_cast<double>(m4 / (m2 * m2) - 3);
  }
  return s;
}

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

nlohmann::ordered_json rational_json(const Rational& q) {
  return {{"numerator", q.get_num().get_str()}, {"denominator", q.get_den().get_str()}, {"value", q.get_d()}};
}

}  // namespace

MomentSummary empirical_moments(std::span<const double> samples) { return summarize(samples); }

MomentSummary empirical_moments(std::span<const std::uint64_t> samples) { return summarize(samples); }

double normal_cdf(double x) {
  if (!std::isfinite(x)) throw ArgumentError("normal_cdf needs a finite argument");
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double ks_statistic(std::span<const double> samples) {
  if (samples.empty()) throw ArgumentError("KS statistic of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto m = static_cast<double>(sorted.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
  }
  return d;
}

std::vector<HistogramBin> crossing_histogram(std::span<const std::uint64_t> values, std::size_t max_bins) {
  if (values.empty() || max_bins == 0) return {};
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const std::uint64_t lo = *lo_it;
  const std::uint64_t range = *hi_it - lo + 1;
  const std::uint64_t width = (range + max_bins - 1) / max_bins;
  const std::uint64_t bins = (range + width - 1) / width;
  std::vector<HistogramBin> out(bins);
  for (std::uint64_t b = 0; b < bins; ++b) {
    out[b].left = static_cast<double>(lo + b * width);
    out[b].right = static_cast<double>(lo + (b + 1) * width);
  }
  for (std::uint64_t v : values) ++out[(v - lo) / width].count;
  return out;
}

std::vector<std::uint64_t> sample_crossing_counts(const PointConfig& config, std::uint64_t num_samples,
                                                  std::uint64_t seed) {
  return kernels::sample_crossings_parallel(config, num_samples, seed);
}

SampleReport run_experiment(const PointConfig& config, std::uint64_t num_samples, std::uint64_t seed) {
  const int n = config.size();
  if (n < 2) throw ArgumentError("experiments need n >= 2");
  if (num_samples < 1) throw ArgumentError("experiments need at least one sample");
  if (!config.is_convex()) validate_general_position(config);

  const std::vector<std::uint64_t> counts = sample_crossing_counts(config, num_samples, seed);

  SampleReport r;
  r.n = n;
  r.config_kind = config.is_convex() ? "convex" : "coordinates";
  r.config_key = config.key();
  r.num_samples = num_samples;
  r.seed = seed;
  r.asymptotic_mean = static_cast<double>(n) * n / 6.0;
  r.asymptotic_variance = static_cast<double>(n) * n * n / 45.0;

  if (counts.size() >= 2) {
    const MomentSummary s = empirical_moments(std::span<const std::uint64_t>(counts));
    r.empirical_mean = s.mean;
    r.empirical_variance = s.variance;
    r.skewness = s.skewness;
    r.excess_kurtosis = s.excess_kurtosis;
    r.degenerate = s.degenerate;
  } else {
    r.empirical_mean = static_cast<double>(counts.front());
    r.degenerate = true;
  }

  if (config.is_convex()) {
    r.exact_mean = closed_form_mean(n);
    r.exact_variance = closed_form_variance(n);
    r.sigma = std::sqrt(r.exact_variance->get_d());
    r.sigma_source = "exact";
  } else {
    r.rectilinear_crossings = rectilinear_crossing_number(config);
    r.exact_mean = general_position_mean(config);
    r.sigma = std::sqrt(r.empirical_variance);
    r.sigma_source = "empirical";
  }

  const double mu = r.exact_mean.get_d();
  std::vector<double> z(counts.size(), 0.0);
  if (r.sigma > 0) {
    for (std::size_t i = 0; i < counts.size(); ++i) z[i] = (static_cast<double>(counts[i]) - mu) / r.sigma;
  }
  r.ks_distance = ks_statistic(z);
  r.histogram = crossing_histogram(counts);
  return r;
}

nlohmann::ordered_json to_json(const SampleReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["config_kind"] = r.config_kind;
  j["config_key"] = r.config_key;
  j["num_samples"] = r.num_samples;
  j["seed"] = r.seed;
  j["empirical_mean"] = r.empirical_mean;
  j["empirical_variance"] = r.empirical_variance;
  j["skewness"] = optional_number(r.skewness);
  j["excess_kurtosis"] = optional_number(r.excess_kurtosis);
  j["shape_estimator"] = "plug-in (biased) central-moment ratios";
  j["degenerate"] = r.degenerate;
  j["ks_distance"] = r.ks_distance;
  j["exact_mean"] = rational_json(r.exact_mean);
  j["exact_variance"] = r.exact_variance ? rational_json(*r.exact_variance) : nlohmann::ordered_json(nullptr);
  j["exact_sigma"] = r.sigma;
  j["sigma_source"] = r.sigma_source;
  j["asymptotic_mean"] = r.asymptotic_mean;
  j["asymptotic_variance"] = r.asymptotic_variance;
  j["rectilinear_crossing_number"] =
      r.rectilinear_crossings ? nlohmann::ordered_json(r.rectilinear_crossings->get_str()) : nlohmann::ordered_json(nullptr);
  auto& hist = j["histogram"] = nlohmann::ordered_json::array();
  for (const HistogramBin& b : r.histogram) hist.push_back({{"bin_left", b.left}, {"bin_right", b.right}, {"count", b.count}});
  return j;
}

void write_report_json(std::ostream& out, const SampleReport& report) { out << to_json(report).dump(2) << '\n'; }

void write_histogram_csv(std::ostream& out, const SampleReport& report) {
  out << "bin_left,bin_right,count\n";
  for (const HistogramBin& b : report.histogram) out << b.left << ',' << b.right << ',' << b.count << '\n';
}

std::vector<VarianceProbeRow> variance_scaling_probe(std::span<const PointConfig> configs, std::uint64_t num_samples,
                                                     std::uint64_t seed) {
  std::vector<VarianceProbeRow> rows;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const PointConfig& c = configs[i];
    const int n = c.size();
    if (n < 2) throw ArgumentError("probe configurations need n >= 2");
    if (num_samples < 2) throw ArgumentError("probe needs at least two samples");
    const auto counts = sample_crossing_counts(c, num_samples, splitmix64(seed + i));
    VarianceProbeRow row;
    row.n = n;
    row.config_key = c.key();
    row.empirical_variance = empirical_moments(std::span<const std::uint64_t>(counts)).variance;
    row.variance_ratio = row.empirical_variance / std::pow(static_cast<double>(n), 3);
    if (n >= 4) {
      const Rational ratio = make_rational(rectilinear_crossing_number(c), binomial(static_cast<unsigned long>(n), 4));
      row.crossing_ratio = ratio.get_d();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace treecross
