#include "treecross/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "treecross/errors.hpp"
#include "treecross/exact_stats.hpp"
#include "treecross/geometry.hpp"
#include "treecross/monte_carlo.hpp"
#include "treecross/points_io.hpp"
#include "treecross/reference_tables.hpp"
#include "treecross/tree_core.hpp"

namespace treecross::cli {
namespace {

struct ConfigFlags {
  int n = 0;
  bool convex = false;
  std::string points;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f, bool need_n) {
  auto* n_opt = cmd->add_option("--n", f.n, "Number of points (labels 1..n)")->check(CLI::PositiveNumber);
  auto* convex = cmd->add_flag("--convex", f.convex, "Points in convex position in label order");
  auto* points = cmd->add_option("--points", f.points, "Point-set file, one 'x y' per line");
  convex->excludes(points);
  points->excludes(convex);
  if (need_n) convex->needs(n_opt);
}

PointConfig resolve_config(const ConfigFlags& f) {
  if (!f.points.empty()) {
    PointConfig c = load_points_file(f.points);
    if (f.n != 0 && f.n != c.size()) {
      throw ArgumentError("--n " + std::to_string(f.n) + " disagrees with " + std::to_string(c.size()) +
                          " points in " + f.points);
    }
    return c;
  }
  if (!f.convex) throw ArgumentError("one of --convex or --points is required");
  if (f.n < 1) throw ArgumentError("--convex needs --n");
  return PointConfig::convex(f.n);
}

/// Writes to the named file, or to `fallback` when the name is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ArgumentError("cannot write " + path);
  body(file);
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ArgumentError("edge '" + item + "' is not of the form a-b");
    try {
      std::size_t used_a = 0, used_b = 0;
      const std::string a = item.substr(0, dash), b = item.substr(dash + 1);
      const int u = std::stoi(a, &used_a);
      const int v = std::stoi(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
      if (u == v) throw ArgumentError("edge '" + item + "' is a loop");
      edges.emplace_back(u, v);
    } catch (const std::logic_error&) {
      throw ArgumentError("edge '" + item + "' is not of the form a-b");
    }
  }
  return edges;
}

/// Convex distributions computed once per process.
class DistributionCache {
 public:
  DistributionCache(std::uint64_t shards, std::ostream& err) : shards_(shards), err_(err) {}

  const CrossingDistribution& convex(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    const auto start = std::chrono::steady_clock::now();
    err_ << "enumerating " << tree_count(n).get_str() << " trees for n = " << n << " ..." << std::flush;
    EnumerationOptions opts;
    opts.num_shards = shards_;
    opts.force = true;
    auto dist = exact_distribution(PointConfig::convex(n), opts);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    err_ << " done in " << std::fixed << std::setprecision(2) << took.count() << " s\n" << std::defaultfloat;
    return cache_.emplace(n, std::move(dist)).first->second;
  }

 private:
  std::uint64_t shards_;
  std::ostream& err_;
  std::map<int, CrossingDistribution> cache_;
};

// -- verify ------------------------------------------------------------------

struct VerifyTally {
  int pass = 0;
  int fail = 0;
  int deviations = 0;
};

void report_check(std::ostream& out, VerifyTally& tally, bool ok, const std::string& name, const std::string& detail) {
  out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  (ok ? tally.pass : tally.fail)++;
}

void verify_tables(std::ostream& out, VerifyTally& tally, DistributionCache& cache, int max_n) {
  for (int n = 1; n <= std::min(max_n, reference::kMaxTabulatedN); ++n) {
    const CrossingDistribution& d = cache.convex(n);
    const auto& expected = reference::convex_counts(n);
    std::ostringstream got;
    bool ok = d.counts.size() == expected.size();
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const auto it = d.counts.find(k);
      const BigInt value = it == d.counts.end() ? BigInt(0) : it->second;
      ok = ok && value == from_u64(expected[k]);
      got << (k ? ", " : "") << value.get_str();
    }
    report_check(out, tally, ok, "table1 n=" + std::to_string(n), got.str());
  }
}

void verify_formulas(std::ostream& out, VerifyTally& tally, DistributionCache& cache, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const CrossingDistribution& d = cache.convex(n);
    const Rational m1 = raw_moment(d, 1);
    const Rational m2 = raw_moment(d, 2);
    const Rational var = m2 - m1 * m1;
    const std::string tag = " n=" + std::to_string(n);
    report_check(out, tally, m1 == closed_form_mean(n), "mean-closed-form" + tag,
                 "enumerated " + to_string(m1) + ", closed form " + to_string(closed_form_mean(n)));
    report_check(out, tally, m2 == closed_form_second_moment(n), "second-moment-closed-form" + tag,
                 "enumerated " + to_string(m2) + ", closed form " + to_string(closed_form_second_moment(n)));
    report_check(out, tally, var == closed_form_variance(n), "variance-closed-form" + tag,
                 "enumerated " + to_string(var) + ", closed form " + to_string(closed_form_variance(n)));
    if (n > reference::kMaxTabulatedN) continue;

    const Rational pub_m2 = parse_rational(reference::published_second_moment(n));
    report_check(out, tally, m2 == pub_m2, "table2-second-moment" + tag,
                 "enumerated " + to_string(m2) + ", published " + reference::published_second_moment(n));
    const std::string& pub_mean_text = reference::published_mean(n);
    const Rational pub_m1 = parse_rational(pub_mean_text);
    if (m1 == pub_m1) {
      report_check(out, tally, true, "table2-mean" + tag, "enumerated " + to_string(m1) + ", published " + pub_mean_text);
      continue;
    }
    // The published mean disagrees. Accept it only as a typo if the published
    // counts and the closed form both side with the enumeration.
    const auto& counts = reference::convex_counts(n);
    const Rational from_counts = raw_moment(distribution_from_counts(n, "published", counts), 1);
    if (from_counts == m1 && closed_form_mean(n) == m1) {
      out << "DOCUMENTED-DEVIATION table2-mean" << tag << ": published " << pub_mean_text << " (= "
          << to_string(pub_m1) << "), enumerated " << to_string(m1) << ", mean of published counts "
          << to_string(from_counts) << ", closed form " << to_string(closed_form_mean(n)) << '\n';
      ++tally.deviations;
    } else {
      report_check(out, tally, false, "table2-mean" + tag, "enumerated " + to_string(m1) + ", published " + pub_mean_text);
    }
  }

  bool identity = true;
  for (int n = 2; n <= 100; ++n) {
    const Rational m1 = closed_form_mean(n);
    identity = identity && closed_form_variance(n) == closed_form_second_moment(n) - m1 * m1;
  }
  report_check(out, tally, identity, "variance-identity n=2..100", "Var = E(X^2) - E(X)^2 for the closed forms");

  if (max_n >= 10) {
    std::vector<FitPoint> pts;
    for (int n = 2; n <= 10; ++n) pts.push_back({n, raw_moment(cache.convex(n), 2)});
    const FitResult fit = fit_laurent_polynomial(pts, -4, 4);
    const std::vector<std::string> expected{"0", "-1", "217/60", "-2323/360", "491/72", "-305/72", "553/360", "-14/45", "1/36"};
    bool ok = fit.exact();
    std::ostringstream detail;
    for (int e = -4; e <= 4; ++e) {
      ok = ok && fit.coefficient(e) == parse_rational(expected[static_cast<std::size_t>(e + 4)]);
      detail << (e > -4 ? " " : "") << "a" << e << "=" << to_string(fit.coefficient(e));
    }
    report_check(out, tally, ok, "second-moment-fit n=2..10", detail.str());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo statistics of crossings in random labelled trees", "treecross"};
  app.require_subcommand(1);

  // dist
  ConfigFlags dist_cfg;
  std::uint64_t dist_shards = 4;
  std::string dist_out;
  bool dist_force = false;
  int dist_guard = 10;
  auto* dist = app.add_subcommand("dist", "Exact crossing distribution by exhaustive enumeration");
  add_config_flags(dist, dist_cfg, true);
  dist->add_option("--shards", dist_shards, "Number of enumeration shards")->check(CLI::PositiveNumber);
  dist->add_option("--out", dist_out, "CSV output file (default stdout)");
  dist->add_flag("--force", dist_force, "Enumerate beyond the size guard");
  dist->add_option("--guard", dist_guard, "Largest n enumerated without --force");

  // moments
  int mom_n_min = 1, mom_n_max = 0, mom_k = 2;
  std::uint64_t mom_shards = 4;
  bool mom_convex = true;
  std::string mom_out;
  auto* moments = app.add_subcommand("moments", "Exact raw moments against the closed forms");
  moments->add_option("--n-min", mom_n_min)->check(CLI::PositiveNumber);
  moments->add_option("--n-max", mom_n_max)->required()->check(CLI::Range(1, 10));
  moments->add_option("--k", mom_k, "Highest moment order")->check(CLI::Range(0, 16));
  moments->add_flag("--convex", mom_convex, "Convex configurations (the only kind for ranges)");
  moments->add_option("--shards", mom_shards)->check(CLI::PositiveNumber);
  moments->add_option("--out", mom_out, "Also write name,numerator,denominator CSV");

  // cumulants
  int cum_n_min = 4, cum_n_max = 0, cum_k = 4;
  std::uint64_t cum_shards = 4;
  bool cum_convex = true;
  std::string cum_out;
  auto* cumulants = app.add_subcommand("cumulants", "Exact cumulants and their growth in n");
  cumulants->add_option("--n-min", cum_n_min)->check(CLI::PositiveNumber);
  cumulants->add_option("--n-max", cum_n_max)->required()->check(CLI::Range(1, 10));
  cumulants->add_option("--k", cum_k)->check(CLI::Range(1, kMaxCumulantOrder));
  cumulants->add_flag("--convex", cum_convex);
  cumulants->add_option("--shards", cum_shards)->check(CLI::PositiveNumber);
  cumulants->add_option("--out", cum_out, "Also write name,numerator,denominator CSV");

  // fit
  int fit_moment = 2, fit_n_min = 2, fit_n_max = 10, fit_exp_min = -4, fit_exp_max = 4;
  std::string fit_n_list, fit_source = "enum";
  auto* fit = app.add_subcommand("fit", "Recover Laurent coefficients from exact moments");
  fit->add_option("--moment", fit_moment)->check(CLI::Range(1, 2));
  fit->add_option("--n-min", fit_n_min)->check(CLI::PositiveNumber);
  fit->add_option("--n-max", fit_n_max)->check(CLI::Range(1, 10));
  fit->add_option("--exp-min", fit_exp_min);
  fit->add_option("--exp-max", fit_exp_max);
  fit->add_option("--n-list", fit_n_list, "Explicit comma-separated n values instead of a range");
  fit->add_option("--source", fit_source, "enum (enumeration) or closed (closed forms)")
      ->check(CLI::IsMember({"enum", "closed"}));

  // crnumber
  ConfigFlags cr_cfg;
  auto* crnumber = app.add_subcommand("crnumber", "Rectilinear crossing number of a point set");
  add_config_flags(crnumber, cr_cfg, true);

  // forest-prob
  int fp_n = 0;
  std::string fp_edges;
  auto* forest = app.add_subcommand("forest-prob", "Trees containing a fixed forest");
  forest->add_option("--n", fp_n)->required()->check(CLI::PositiveNumber);
  forest->add_option("--edges", fp_edges, "Edges as \"a-b,c-d\"")->required();

  // sample
  ConfigFlags smp_cfg;
  std::uint64_t smp_samples = 0, smp_seed = 0;
  std::string smp_out, smp_hist;
  auto* sample = app.add_subcommand("sample", "Monte Carlo experiment over uniform random trees");
  add_config_flags(sample, smp_cfg, true);
  sample->add_option("--samples", smp_samples)->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", smp_seed)->required();
  sample->add_option("--out", smp_out, "JSON report file (default stdout)");
  sample->add_option("--histogram", smp_hist, "Histogram CSV file");

  // verify
  std::string ver_suite = "all";
  int ver_max_n = 9;
  std::uint64_t ver_shards = 4;
  auto* verify = app.add_subcommand("verify", "Regression suite against the published tables and closed forms");
  verify->add_option("--suite", ver_suite)->check(CLI::IsMember({"tables", "formulas", "all"}));
  verify->add_option("--max-n", ver_max_n)->check(CLI::Range(1, 10));
  verify->add_option("--shards", ver_shards)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (dist->parsed()) {
      const PointConfig config = resolve_config(dist_cfg);
      EnumerationOptions opts;
      opts.num_shards = dist_shards;
      opts.force = dist_force;
      opts.max_n = dist_guard;
      const CrossingDistribution d = exact_distribution(config, opts);
      emit(dist_out, out, [&](std::ostream& os) { write_distribution_csv(os, d); });
      return kSuccess;
    }

    if (moments->parsed()) {
      if (mom_n_min > mom_n_max) throw ArgumentError("--n-min exceeds --n-max");
      DistributionCache cache(mom_shards, err);
      std::vector<std::pair<std::string, Rational>> csv;
      bool all_match = true;
      out << "n,j,enumerated,closed_form,status\n";
      for (int n = mom_n_min; n <= mom_n_max; ++n) {
        const CrossingDistribution& d = cache.convex(n);
        for (int j = 1; j <= mom_k; ++j) {
          const Rational m = raw_moment(d, j);
          csv.emplace_back("E[X_" + std::to_string(n) + "^" + std::to_string(j) + "]", m);
          std::optional<Rational> closed;
          if (j == 1) closed = closed_form_mean(n);
          if (j == 2) closed = closed_form_second_moment(n);
          out << n << ',' << j << ',' << to_string(m) << ',';
          if (closed) {
            const bool match = *closed == m;
            all_match = all_match && match;
            out << to_string(*closed) << ',' << (match ? "MATCH" : "MISMATCH");
          } else {
            out << "-,-";
          }
          out << '\n';
        }
      }
      if (!mom_out.empty()) emit(mom_out, out, [&](std::ostream& os) { write_rational_csv(os, csv); });
      return all_match ? kSuccess : kFailure;
    }

    if (cumulants->parsed()) {
      if (cum_n_min > cum_n_max) throw ArgumentError("--n-min exceeds --n-max");
      DistributionCache cache(cum_shards, err);
      std::vector<CrossingDistribution> dists;
      for (int n = cum_n_min; n <= cum_n_max; ++n) dists.push_back(cache.convex(n));
      const CumulantScalingReport report = cumulant_scaling_report(dists, cum_k);
      std::vector<std::pair<std::string, Rational>> csv;
      out << "n,k,cumulant,cumulant_over_n^(3k/2)\n";
      for (const CumulantRow& row : report.rows) {
        for (int k = 1; k <= cum_k; ++k) {
          const Rational& c = row.cumulants[static_cast<std::size_t>(k - 1)];
          csv.emplace_back("C" + std::to_string(k) + "(X_" + std::to_string(row.n) + ")", c);
          out << row.n << ',' << k << ',' << to_string(c) << ',' << std::setprecision(10)
              << row.normalized[static_cast<std::size_t>(k - 1)] << '\n';
        }
      }
      for (int k = 1; k <= cum_k; ++k) {
        out << "# log-log slope of |C" << k << "| over n=" << cum_n_min << ".." << cum_n_max << ": "
            << report.log_log_slopes[static_cast<std::size_t>(k - 1)] << '\n';
      }
      if (!cum_out.empty()) emit(cum_out, out, [&](std::ostream& os) { write_rational_csv(os, csv); });
      return kSuccess;
    }

    if (fit->parsed()) {
      std::vector<std::int64_t> ns;
      if (!fit_n_list.empty()) {
        std::stringstream ss(fit_n_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            ns.push_back(std::stoll(item));
          } catch (const std::logic_error&) {
            throw ArgumentError("--n-list entry '" + item + "' is not an integer");
          }
        }
      } else {
        for (int n = fit_n_min; n <= fit_n_max; ++n) ns.push_back(n);
      }
      DistributionCache cache(4, err);
      std::vector<FitPoint> pts;
      for (std::int64_t n : ns) {
        if (n < 1 || n > 10) throw ArgumentError("fit n values must lie in [1, 10]");
        const int ni = static_cast<int>(n);
        Rational v;
        if (fit_source == "closed") {
          v = fit_moment == 1 ? closed_form_mean(ni) : closed_form_second_moment(ni);
        } else {
          v = raw_moment(cache.convex(ni), fit_moment);
        }
        pts.push_back({n, v});
      }
      const auto start = std::chrono::steady_clock::now();
      const FitResult result = fit_laurent_polynomial(pts, fit_exp_min, fit_exp_max);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      out << "exponent,coefficient\n";
      for (int e = fit_exp_max; e >= fit_exp_min; --e) out << e << ',' << to_string(result.coefficient(e)) << '\n';
      out << "n,residual\n";
      for (std::size_t i = 0; i < pts.size(); ++i) out << pts[i].n << ',' << to_string(result.residuals[i]) << '\n';
      err << "solved " << pts.size() << "x" << pts.size() << " system in " << took.count() << " s\n";
      return kSuccess;
    }

    if (crnumber->parsed()) {
      const PointConfig config = resolve_config(cr_cfg);
      const int n = config.size();
      const BigInt cr = rectilinear_crossing_number(config);
      const BigInt all = n >= 4 ? binomial(static_cast<unsigned long>(n), 4) : BigInt(0);
      out << "n=" << n << '\n' << "crossing_number=" << cr.get_str() << '\n' << "binomial_n_4=" << all.get_str() << '\n';
      out << "ratio=" << (all == 0 ? std::string("0") : to_string(make_rational(cr, all))) << '\n';
      if (!config.is_convex()) {
        const BigInt pairs = kn_crossing_pairs(config);
        out << "segment_crossing_pairs=" << pairs.get_str() << '\n'
            << "oracles=" << (pairs == cr ? "AGREE" : "DISAGREE") << '\n';
        if (pairs != cr) return kFailure;
      }
      return kSuccess;
    }

    if (forest->parsed()) {
      const Forest f = Forest::from_edges(fp_n, parse_edge_list(fp_edges));
      const BigInt count = count_trees_containing(fp_n, f);
      const Rational p = forest_probability(fp_n, f);
      out << "T=" << count.get_str() << '\n' << "P=" << to_string(p) << '\n';
      if (fp_n <= 7) {
        std::uint64_t brute = 0;
        auto stream = enumerate_trees(fp_n);
        while (auto t = stream.next())
          if (contains_forest(*t, f)) ++brute;
        const bool match = from_u64(brute) == count;
        out << "brute_force=" << brute << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
        if (!match) return kFailure;
      }
      return kSuccess;
    }

    if (sample->parsed()) {
      const PointConfig config = resolve_config(smp_cfg);
      const SampleReport report = run_experiment(config, smp_samples, smp_seed);
      emit(smp_out, out, [&](std::ostream& os) { write_report_json(os, report); });
      if (!smp_hist.empty()) emit(smp_hist, out, [&](std::ostream& os) { write_histogram_csv(os, report); });
      return kSuccess;
    }

    if (verify->parsed()) {
      DistributionCache cache(ver_shards, err);
      VerifyTally tally;
      if (ver_suite == "tables" || ver_suite == "all") verify_tables(out, tally, cache, ver_max_n);
      if (ver_suite == "formulas" || ver_suite == "all") verify_formulas(out, tally, cache, ver_max_n);
      out << "summary: " << tally.pass << " passed, " << tally.fail << " failed, " << tally.deviations
          << " documented deviations\n";
      return tally.fail == 0 ? kSuccess : kFailure;
    }
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kGuardRefusal;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInputViolation;
  }
  return kUsage;
}

}  // namespace treecross::cli
