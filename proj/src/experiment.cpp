#include "alphaperim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "alphaperim/alpha_shape.hpp"
#include "alphaperim/numeric_format.hpp"
#include "alphaperim/rng.hpp"

namespace alphaperim {
namespace {

void validate(const ExperimentConfig& config) {
  if (config.replicates < 1) throw std::invalid_argument("experiment: replicates must be >= 1");
  for (double a : config.alphas) {
    if (!(a > 0.0)) throw std::invalid_argument("experiment: alphas must be positive");
  }
  for (std::size_t i = 1; i < config.sample_sizes.size(); ++i) {
    if (config.sample_sizes[i] <= config.sample_sizes[i - 1]) {
      throw std::invalid_argument("experiment: sample sizes must be strictly increasing");
    }
  }
  for (int n : config.sample_sizes) {
    if (n < 0) throw std::invalid_argument("experiment: negative sample size");
  }
}

double estimate_once(const ExperimentConfig& config, int n, int alpha_index, int replicate) {
  Xoshiro256pp rng(replicate_seed(config.master_seed, n, alpha_index, replicate));
  std::vector<Vec2> points = config.domain.sample_uniform(n, rng);
  const AlphaShape shape =
      make_alpha_shape(std::move(points), config.alphas[alpha_index], EdgeAlgorithm::fast);
  return config.estimator == Estimator::alpha_shape ? shape_perimeter(shape)
                                                    : hull_perimeter(shape);
}

}  // namespace

std::uint64_t replicate_seed(std::uint64_t master_seed, int n, int alpha_index, int replicate) {
  return derive_seed(master_seed, {static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(alpha_index),
                                   static_cast<std::uint64_t>(replicate)});
}

const CellSummary& ExperimentResult::cell(int alpha_index, int size_index) const {
  return cells.at(static_cast<std::size_t>(alpha_index) * sample_sizes.size() +
                  static_cast<std::size_t>(size_index));
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  ExperimentResult result;
  result.domain_spec = config.domain.spec_string();
  result.true_perimeter = config.domain.exact_perimeter();
  result.alphas = config.alphas;
  result.sample_sizes = config.sample_sizes;
  result.replicates = config.replicates;
  result.master_seed = config.master_seed;
  result.estimator = config.estimator;

  const int workers = std::max(1u, std::thread::hardware_concurrency());
  const int M = config.replicates;

  for (int ai = 0; ai < static_cast<int>(config.alphas.size()); ++ai) {
    for (int n : config.sample_sizes) {
      CellSummary cell;
      cell.alpha = config.alphas[ai];
      cell.n = n;
      cell.replicate_values.assign(static_cast<std::size_t>(M), 0.0);

      std::atomic<int> next{0};
      std::mutex error_mutex;
      std::string first_error;
      auto work = [&]() {
        for (int m = next.fetch_add(1); m < M; m = next.fetch_add(1)) {
          try {
            cell.replicate_values[m] = estimate_once(config, n, ai, m);
          } catch (const std::exception& ex) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (first_error.empty()) {
              first_error = "replicate failed (n=" + std::to_string(n) +
                            ", alpha=" + format_double(cell.alpha) +
                            ", m=" + std::to_string(m) + "): " + ex.what();
            }
          }
        }
      };
      if (workers == 1 || M == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
      }
      if (!first_error.empty()) throw std::runtime_error(first_error);

      double abs_sum = 0.0;
      double sum = 0.0;
      for (double v : cell.replicate_values) {
        abs_sum += std::abs(v - result.true_perimeter);
        sum += v - result.true_perimeter;
      }
      cell.error = abs_sum / M;
      cell.bias = sum / M;
      cell.stddev = M >= 2 ? sample_std(cell.replicate_values) : 0.0;
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

SlopeFit fit_loglog_slope(const ExperimentResult& result, double alpha, FitStatistic statistic) {
  int alpha_index = -1;
  for (std::size_t i = 0; i < result.alphas.size(); ++i) {
    if (result.alphas[i] == alpha) {
      alpha_index = static_cast<int>(i);
      break;
    }
  }
  if (alpha_index < 0) throw std::invalid_argument("fit_loglog_slope: alpha not in the result");
  if (result.sample_sizes.size() < 3) {
    throw std::invalid_argument("fit_loglog_slope: need at least 3 sample sizes");
  }
  std::vector<double> xs, ys;
  for (std::size_t si = 0; si < result.sample_sizes.size(); ++si) {
    const CellSummary& c = result.cell(alpha_index, static_cast<int>(si));
    const double v = statistic == FitStatistic::error ? c.error : c.stddev;
    if (!(v > 0.0)) {
      throw std::invalid_argument("fit_loglog_slope: nonpositive statistic at n=" +
                                  std::to_string(c.n) + ", alpha=" + format_double(alpha));
    }
    xs.push_back(static_cast<double>(c.n));
    ys.push_back(v);
  }
  return ols_loglog(xs, ys);
}

void write_raw_csv(const ExperimentResult& result, std::ostream& os) {
  os << "domain,alpha,n,replicate,perimeter_estimate,true_perimeter\n";
  for (const CellSummary& cell : result.cells) {
    for (std::size_t m = 0; m < cell.replicate_values.size(); ++m) {
      os << csv_field(result.domain_spec) << ',' << format_double(cell.alpha) << ',' << cell.n << ',' << m
         << ',' << format_double(cell.replicate_values[m]) << ','
         << format_double(result.true_perimeter) << '\n';
    }
  }
}

void write_summary_csv(const ExperimentResult& result, std::ostream& os) {
  os << "domain,alpha,n,M,error,bias,std\n";
  for (const CellSummary& cell : result.cells) {
    os << csv_field(result.domain_spec) << ',' << format_double(cell.alpha) << ',' << cell.n << ','
       << result.replicates << ',' << format_double(cell.error) << ','
       << format_double(cell.bias) << ',' << format_double(cell.stddev) << '\n';
  }
}

void write_report(const ExperimentResult& result, std::ostream& os) {
  os << "perimeter estimation experiment\n"
     << "domain:         " << result.domain_spec << '\n'
     << "estimator:      " << (result.estimator == Estimator::alpha_shape ? "shape" : "hull")
     << '\n'
     << "replicates:     " << result.replicates << '\n'
     << "master seed:    " << result.master_seed << '\n'
     << "true perimeter: " << format_double(result.true_perimeter) << "\n\n";

  for (std::size_t ai = 0; ai < result.alphas.size(); ++ai) {
    const double alpha = result.alphas[ai];
    os << "alpha = " << format_double(alpha) << '\n';
    for (std::size_t si = 0; si < result.sample_sizes.size(); ++si) {
      const CellSummary& c = result.cell(static_cast<int>(ai), static_cast<int>(si));
      os << "  n=" << c.n << "  error=" << format_double(c.error)
         << "  bias=" << format_double(c.bias) << "  std=" << format_double(c.stddev) << '\n';
    }
    if (result.sample_sizes.size() >= 3) {
      bool fit_ok = true;
      try {
        const SlopeFit ef = fit_loglog_slope(result, alpha, FitStatistic::error);
        os << "  log-log error fit: slope=" << format_double(ef.slope) << "  95% CI=["
           << format_double(ef.ci_low) << ", " << format_double(ef.ci_high)
           << "]  R2=" << format_double(ef.r_squared) << '\n';
      } catch (const std::exception& ex) {
        fit_ok = false;
        os << "  log-log error fit: unavailable (" << ex.what() << ")\n";
      }
      if (fit_ok && result.replicates >= 2) {
        try {
          const SlopeFit sf = fit_loglog_slope(result, alpha, FitStatistic::stddev);
          os << "  log-log std fit:   slope=" << format_double(sf.slope) << "  95% CI=["
             << format_double(sf.ci_low) << ", " << format_double(sf.ci_high)
             << "]  R2=" << format_double(sf.r_squared) << '\n';
        } catch (const std::exception& ex) {
          os << "  log-log std fit:   unavailable (" << ex.what() << ")\n";
        }
      }
    }
    if (result.replicates >= 20 && !result.sample_sizes.empty()) {
      const CellSummary& c =
          result.cell(static_cast<int>(ai), static_cast<int>(result.sample_sizes.size()) - 1);
      const NormalityReport nr = normality_diagnostic(c.replicate_values);
      os << "  normality (Jarque-Bera) at n=" << c.n << ": stat="
         << format_double(nr.jarque_bera_stat) << "  p=" << format_double(nr.p_value)
         << "  skew=" << format_double(nr.skewness)
         << "  excess_kurtosis=" << format_double(nr.excess_kurtosis)
         << (nr.zero_variance ? "  (zero variance)" : "") << '\n';
    }
    os << '\n';
  }

  os << "# gnuplot data block: log-log error vs n, one index per alpha\n"
     << "# usage: plot 'report.txt' index N using 1:2 with linespoints\n";
  for (std::size_t ai = 0; ai < result.alphas.size(); ++ai) {
    os << "# alpha = " << format_double(result.alphas[ai]) << "\n";
    for (std::size_t si = 0; si < result.sample_sizes.size(); ++si) {
      const CellSummary& c = result.cell(static_cast<int>(ai), static_cast<int>(si));
      os << c.n << ' ' << format_double(c.error) << '\n';
    }
    os << "\n\n";
  }
}

void emit_files(const ExperimentResult& result, const std::string& base_path) {
  const auto open = [](const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
  };
  {
    std::ofstream os = open(base_path + ".raw.csv");
    write_raw_csv(result, os);
    if (!os.good()) throw std::runtime_error("write failed: " + base_path + ".raw.csv");
  }
  {
    std::ofstream os = open(base_path + ".summary.csv");
    write_summary_csv(result, os);
    if (!os.good()) throw std::runtime_error("write failed: " + base_path + ".summary.csv");
  }
  {
    std::ofstream os = open(base_path + ".report.txt");
    write_report(result, os);
    if (!os.good()) throw std::runtime_error("write failed: " + base_path + ".report.txt");
  }
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(tok, &used));
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size()) throw std::invalid_argument("bad number in list: '" + tok + "'");
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_double_list(text)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) throw std::invalid_argument("expected integer list");
    out.push_back(i);
  }
  return out;
}

void apply_config_file(const std::string& path, ExperimentConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto not_space = [](char c) { return !std::isspace(static_cast<unsigned char>(c)); };
    line.erase(line.begin(), std::find_if(line.begin(), line.end(), not_space));
    line.erase(std::find_if(line.rbegin(), line.rend(), not_space).base(), line.end());
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(std::find_if(key.rbegin(), key.rend(), not_space).base(), key.end());
    value.erase(value.begin(), std::find_if(value.begin(), value.end(), not_space));
    try {
      if (key == "domain") {
        config.domain = Domain::parse(value);
      } else if (key == "alphas") {
        config.alphas = parse_double_list(value);
      } else if (key == "sizes") {
        config.sample_sizes = parse_int_list(value);
      } else if (key == "reps") {
        config.replicates = std::stoi(value);
      } else if (key == "seed") {
        config.master_seed = std::stoull(value);
      } else if (key == "estimator") {
        if (value == "shape") {
          config.estimator = Estimator::alpha_shape;
        } else if (value == "hull") {
          config.estimator = Estimator::alpha_hull;
        } else {
          throw std::invalid_argument("estimator must be 'shape' or 'hull'");
        }
      } else if (key == "out") {
        config.output_path = value;
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::exception& ex) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
}

}  // namespace alphaperim
