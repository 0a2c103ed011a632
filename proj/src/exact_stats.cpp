#include "treecross/exact_stats.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "treecross/errors.hpp"
#include "treecross/kernels.hpp"

namespace treecross {
namespace {

Rational power(std::int64_t n, int e) {
  if (e >= 0) return Rational(big_pow(n, static_cast<unsigned long>(e)));
  return make_rational(BigInt(1), big_pow(n, static_cast<unsigned long>(-e)));
}

Rational frac(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

/// sum_i coeffs[i].first * n^coeffs[i].second
Rational laurent(std::int64_t n, std::initializer_list<std::pair<Rational, int>> terms) {
  Rational sum = 0;
  for (const auto& [c, e] : terms) sum += c * power(n, e);
  return sum;
}

void generate_partitions(int k, int next, std::vector<std::vector<int>>& blocks, std::vector<SetPartition>& out) {
  if (next > k) {
    out.push_back({k, blocks});
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(next);
    generate_partitions(k, next + 1, blocks, out);
    blocks[b].pop_back();
  }
  blocks.push_back({next});
  generate_partitions(k, next + 1, blocks, out);
  blocks.pop_back();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace

BigInt CrossingDistribution::total() const {
  BigInt t = 0;
  for (const auto& [k, c] : counts) t += c;
  return t;
}

CrossingDistribution exact_distribution(const PointConfig& config, const EnumerationOptions& options) {
  const int n = config.size();
  if (n > options.max_n && !options.force) {
    const BigInt trees = tree_count(n);
    const BigInt pair_tests = trees * binomial(static_cast<unsigned long>(n - 1), 2);
    std::ostringstream msg;
    msg << "refusing to enumerate n = " << n << " (guard n <= " << options.max_n << "): " << trees.get_str()
        << " trees, about " << pair_tests.get_str() << " edge-pair tests; pass force to override";
    throw GuardRefusal(msg.str());
  }
  if (options.num_shards == 0) throw ArgumentError("num_shards must be positive");
  if (!config.is_convex()) validate_general_position(config);
  const kernels::Histogram hist = kernels::crossing_histogram_parallel(config, options.num_shards);
  return distribution_from_counts(n, config.key(), hist);
}

CrossingDistribution distribution_from_counts(int n, std::string key, const std::vector<std::uint64_t>& counts) {
  CrossingDistribution dist;
  dist.n = n;
  dist.config_key = std::move(key);
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) dist.counts.emplace(k, from_u64(counts[k]));
  return dist;
}

Rational raw_moment(const CrossingDistribution& dist, int j) {
  if (j < 0) throw ArgumentError("moment order must be >= 0");
  BigInt sum = 0;
  for (const auto& [k, c] : dist.counts) sum += big_pow(static_cast<std::int64_t>(k), static_cast<unsigned long>(j)) * c;
  return make_rational(sum, dist.total());
}

std::vector<SetPartition> set_partitions(int k) {
  if (k < 1 || k > kMaxCumulantOrder) {
    throw GuardRefusal("set partitions limited to 1 <= k <= " + std::to_string(kMaxCumulantOrder));
  }
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  generate_partitions(k, 1, blocks, out);
  return out;
}

std::vector<Rational> moments_to_cumulants(std::span<const Rational> moments) {
  const int kmax = static_cast<int>(moments.size());
  if (kmax < 1) throw ArgumentError("need at least one moment");
  if (kmax > kMaxCumulantOrder) {
    throw GuardRefusal("cumulant order " + std::to_string(kmax) + " exceeds guard " + std::to_string(kMaxCumulantOrder));
  }
  std::vector<Rational> out;
  for (int k = 1; k <= kmax; ++k) {
    Rational c = 0;
    for (const SetPartition& pi : set_partitions(k)) {
      const auto r = static_cast<long>(pi.size());
      BigInt weight = 1;
      for (long i = 2; i < r; ++i) weight *= i;  // (r-1)!
      if ((r - 1) % 2 != 0) weight = -weight;
      Rational term(weight);
      for (const auto& block : pi.blocks) term *= moments[block.size() - 1];
      c += term;
    }
    out.push_back(c);
  }
  return out;
}

Rational closed_form_mean(int n) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  return make_rational(BigInt(n - 1) * (n - 2) * (n - 3), BigInt(6 * n));
}

Rational closed_form_second_moment(int n) {
  if (n == 0) throw ArgumentError("second-moment formula is undefined at n = 0");
  return laurent(n, {{frac(1, 36), 4},
                     {frac(-14, 45), 3},
                     {frac(553, 360), 2},
                     {frac(-305, 72), 1},
                     {frac(491, 72), 0},
                     {frac(-2323, 360), -1},
                     {frac(217, 60), -2},
                     {frac(-1, 1), -3}});
}

Rational closed_form_variance(int n) {
  if (n == 0) throw ArgumentError("variance formula is undefined at n = 0");
  return laurent(n, {{frac(1, 45), 3},
                     {frac(-3, 40), 2},
                     {frac(-17, 72), 1},
                     {frac(35, 24), 0},
                     {frac(-1003, 360), -1},
                     {frac(157, 60), -2},
                     {frac(-1, 1), -3}});
}

bool FitResult::exact() const {
  for (const Rational& r : residuals)
    if (r != 0) return false;
  return true;
}

FitResult fit_laurent_polynomial(std::span<const FitPoint> points, int exp_min, int exp_max) {
  if (exp_max < exp_min) throw ArgumentError("exponent range is empty");
  const auto m = static_cast<std::size_t>(exp_max - exp_min + 1);
  if (points.size() != m) {
    throw ArgumentError("need " + std::to_string(m) + " points for " + std::to_string(m) + " exponents, got " +
                        std::to_string(points.size()));
  }
  std::set<std::int64_t> seen;
  for (const FitPoint& p : points) {
    if (p.n <= 0) throw ArgumentError("fit points need positive n");
    if (!seen.insert(p.n).second) throw ArgumentError("duplicate n = " + std::to_string(p.n) + " makes the system rank-deficient");
  }

  // Augmented matrix [A | b], A[r][c] = n_r^(exp_min + c).
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = power(points[r].n, exp_min + static_cast<int>(c));
    a[r][m] = points[r].value;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw SingularSystem("linear system is singular (column " + std::to_string(col) + ")");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
    }
  }

  FitResult fit;
  fit.exp_min = exp_min;
  fit.exp_max = exp_max;
  for (std::size_t i = 0; i < m; ++i) fit.coefficients.push_back(a[i][m] / a[i][i]);
  for (const FitPoint& p : points) fit.residuals.push_back(p.value - evaluate_laurent(fit, p.n));
  return fit;
}

Rational evaluate_laurent(const FitResult& fit, std::int64_t n) {
  Rational sum = 0;
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i) sum += fit.coefficients[i] * power(n, fit.exp_min + static_cast<int>(i));
  return sum;
}

Rational general_position_mean(const PointConfig& config) {
  const int n = config.size();
  return make_rational(4 * rectilinear_crossing_number(config), BigInt(n) * n);
}

CumulantScalingReport cumulant_scaling_report(std::span<const CrossingDistribution> dists, int k_max) {
  if (k_max < 1 || k_max > kMaxCumulantOrder) {
    throw GuardRefusal("cumulant order must be in [1, " + std::to_string(kMaxCumulantOrder) + "]");
  }
  CumulantScalingReport report;
  report.k_max = k_max;
  for (const CrossingDistribution& d : dists) {
    std::vector<Rational> moments;
    for (int j = 1; j <= k_max; ++j) moments.push_back(raw_moment(d, j));
    CumulantRow row;
    row.n = d.n;
    row.cumulants = moments_to_cumulants(moments);
    for (int k = 1; k <= k_max; ++k) {
      row.normalized.push_back(to_double(row.cumulants[k - 1]) / std::pow(static_cast<double>(d.n), 1.5 * k));
    }
    report.rows.push_back(std::move(row));
  }
  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::pair<double, double>> xy;
    for (const CumulantRow& row : report.rows) {
      const double c = std::fabs(to_double(row.cumulants[k - 1]));
      if (c > 0) xy.emplace_back(std::log(static_cast<double>(row.n)), std::log(c));
    }
    if (xy.size() < 2) {
      report.log_log_slopes.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    double mx = 0, my = 0;
    for (const auto& [x, y] : xy) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(xy.size());
    my /= static_cast<double>(xy.size());
    double sxy = 0, sxx = 0;
    for (const auto& [x, y] : xy) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    report.log_log_slopes.push_back(sxy / sxx);
  }
  return report;
}

CumulantScalingReport cumulant_scaling_report(int n_min, int n_max, int k_max, const EnumerationOptions& options) {
  if (n_min < 1 || n_max < n_min) throw ArgumentError("bad n range");
  std::vector<CrossingDistribution> dists;
  for (int n = n_min; n <= n_max; ++n) dists.push_back(exact_distribution(PointConfig::convex(n), options));
  return cumulant_scaling_report(dists, k_max);
}

void write_distribution_csv(std::ostream& out, const CrossingDistribution& dist) {
  out << "k,count\n";
  for (const auto& [k, c] : dist.counts) out << k << ',' << c.get_str() << '\n';
}

void write_rational_csv(std::ostream& out, std::span<const std::pair<std::string, Rational>> rows) {
  out << "name,numerator,denominator\n";
  for (const auto& [name, q] : rows) out << name << ',' << q.get_num().get_str() << ',' << q.get_den().get_str() << '\n';
}

}  // namespace treecross
