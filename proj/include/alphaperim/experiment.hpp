// Monte Carlo driver reproducing the convergence-rate study: error, bias and
// standard-deviation tables over (n, alpha), log-log slope fits, CSV and
// human-readable reports.
#ifndef ALPHAPERIM_EXPERIMENT_HPP
#define ALPHAPERIM_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "alphaperim/domain.hpp"
#include "alphaperim/statistics.hpp"

namespace alphaperim {

enum class Estimator { alpha_shape, alpha_hull };

struct ExperimentConfig {
  Domain domain = Domain::disk(1.0);
  std::vector<double> alphas;
  std::vector<int> sample_sizes;  // strictly increasing
  int replicates = 1;
  std::uint64_t master_seed = 0;
  Estimator estimator = Estimator::alpha_shape;
  std::string output_path;  // base path for emitted files (may be empty)
};

/// Seed for replicate m of cell (n, alpha_index); the one rule every sampler
/// in the harness uses.
std::uint64_t replicate_seed(std::uint64_t master_seed, int n, int alpha_index, int replicate);

struct CellSummary {
  double alpha = 0.0;
  int n = 0;
  double error = 0.0;   // mean absolute deviation from the true perimeter
  double bias = 0.0;    // mean deviation
  double stddev = 0.0;  // sample standard deviation (denominator M - 1)
  std::vector<double> replicate_values;
};

struct ExperimentResult {
  std::string domain_spec;
  double true_perimeter = 0.0;
  std::vector<double> alphas;
  std::vector<int> sample_sizes;
  int replicates = 0;
  std::uint64_t master_seed = 0;
  Estimator estimator = Estimator::alpha_shape;
  std::vector<CellSummary> cells;  // row-major: alpha index * sizes + size index

  const CellSummary& cell(int alpha_index, int size_index) const;
};

/// Runs every (n, alpha, replicate) cell; replicates are the unit of parallel
/// work and each owns its generator, so the output is deterministic for a
/// given config. A failed replicate aborts the run with (n, alpha, m) named.
ExperimentResult run_experiment(const ExperimentConfig& config);

enum class FitStatistic { error, stddev };

/// OLS of log(statistic) on log(n) for one alpha of a finished result.
SlopeFit fit_loglog_slope(const ExperimentResult& result, double alpha, FitStatistic statistic);

// CSV schemas (UTF-8, '.' decimal, header row mandatory):
//   raw:     domain,alpha,n,replicate,perimeter_estimate,true_perimeter
//   summary: domain,alpha,n,M,error,bias,std
void write_raw_csv(const ExperimentResult& result, std::ostream& os);
void write_summary_csv(const ExperimentResult& result, std::ostream& os);
/// Slope fits per alpha, a normality diagnostic at the largest n, and a
/// gnuplot-compatible data block of the log-log error curve.
void write_report(const ExperimentResult& result, std::ostream& os);

/// Writes <base>.raw.csv, <base>.summary.csv and <base>.report.txt.
void emit_files(const ExperimentResult& result, const std::string& base_path);

/// Key = value file mirroring ExperimentConfig (keys: domain, alphas, sizes,
/// reps, seed, estimator, out; '#' comments). Values present in the file
/// override whatever the config already holds.
void apply_config_file(const std::string& path, ExperimentConfig& config);

std::vector<double> parse_double_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace alphaperim

#endif  // ALPHAPERIM_EXPERIMENT_HPP
