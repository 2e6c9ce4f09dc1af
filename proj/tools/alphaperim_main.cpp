// Command-line front end: sample domains, build alpha-shapes, print perimeter
// estimates and diagnostics, and run the Monte Carlo experiment.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "alphaperim/alpha_shape.hpp"
#include "alphaperim/diagnostics.hpp"
#include "alphaperim/domain.hpp"
#include "alphaperim/experiment.hpp"
#include "alphaperim/numeric_format.hpp"
#include "alphaperim/rng.hpp"

namespace ap = alphaperim;

namespace {

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

ap::AlphaShape build_shape(const std::string& domain_spec, double alpha, int n,
                           std::uint64_t seed) {
  const ap::Domain domain = ap::Domain::parse(domain_spec);
  ap::Xoshiro256pp rng(seed);
  return ap::make_alpha_shape(domain.sample_uniform(n, rng), alpha);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-shape perimeter estimation toolkit"};
  app.require_subcommand(1);

  std::string domain_spec = "annulus:0.25,1.0";
  double alpha = 0.2;
  int n = 1000;
  std::uint64_t seed = 0;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd, bool with_alpha) {
    cmd->add_option("--domain", domain_spec,
                    "domain spec: disk:R | annulus:RIN,ROUT | stadium:HALFLEN,CAPR | "
                    "disks:(X,Y),R,(X,Y),R");
    if (with_alpha) cmd->add_option("--alpha", alpha, "disk radius of the alpha-shape");
    cmd->add_option("--n", n, "sample size");
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* sample_cmd = app.add_subcommand("sample", "draw a uniform sample from a domain");
  add_common(sample_cmd, false);

  CLI::App* edges_cmd = app.add_subcommand("edges", "list the alpha-edges of a sampled shape");
  add_common(edges_cmd, true);

  CLI::App* perimeter_cmd =
      app.add_subcommand("perimeter", "perimeter estimates for a sampled shape");
  add_common(perimeter_cmd, true);

  CLI::App* diagnose_cmd = app.add_subcommand("diagnose", "geometric diagnostics for a shape");
  add_common(diagnose_cmd, true);
  int resolution = 2000;
  bool diag_csv = false;
  diagnose_cmd->add_option("--resolution", resolution, "boundary sampling points per unit length");
  diagnose_cmd->add_flag("--csv", diag_csv, "emit one CSV row instead of key=value lines");

  CLI::App* experiment_cmd =
      app.add_subcommand("experiment", "Monte Carlo error/bias/std study over (n, alpha)");
  std::string alphas_text = "0.2";
  std::string sizes_text = "1000,3000,10000";
  int reps = 1;
  std::string estimator_text = "shape";
  std::string config_path;
  experiment_cmd->add_option("--domain", domain_spec, "domain spec");
  experiment_cmd->add_option("--alphas", alphas_text, "comma-separated alpha values");
  experiment_cmd->add_option("--sizes", sizes_text, "comma-separated sample sizes (increasing)");
  experiment_cmd->add_option("--reps", reps, "replicates per (n, alpha) cell");
  experiment_cmd->add_option("--seed", seed, "master seed");
  experiment_cmd->add_option("--estimator", estimator_text, "shape | hull");
  experiment_cmd->add_option("--config", config_path,
                             "key = value file; file values override flags");
  experiment_cmd->add_option("--out", out_path,
                             "base path for <base>.raw.csv, .summary.csv, .report.txt");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;
    if (sample_cmd->parsed()) {
      const ap::Domain domain = ap::Domain::parse(domain_spec);
      ap::Xoshiro256pp rng(seed);
      std::ostream& os = open_output(out_path, file);
      os << "x,y\n";
      for (const ap::Vec2& p : domain.sample_uniform(n, rng)) {
        os << ap::format_double(p.x()) << ',' << ap::format_double(p.y()) << '\n';
      }
    } else if (edges_cmd->parsed()) {
      const ap::AlphaShape shape = build_shape(domain_spec, alpha, n, seed);
      std::ostream& os = open_output(out_path, file);
      os << "i,j,xi,yi,xj,yj,length,sidedness\n";
      for (const ap::AlphaEdge& e : shape.edges) {
        const ap::Vec2& a = shape.points[e.i];
        const ap::Vec2& b = shape.points[e.j];
        os << e.i << ',' << e.j << ',' << ap::format_double(a.x()) << ','
           << ap::format_double(a.y()) << ',' << ap::format_double(b.x()) << ','
           << ap::format_double(b.y()) << ',' << ap::format_double((b - a).norm()) << ','
           << (ap::classify_sidedness(e).one_sided ? "one_sided" : "two_sided") << '\n';
      }
    } else if (perimeter_cmd->parsed()) {
      const ap::Domain domain = ap::Domain::parse(domain_spec);
      const ap::AlphaShape shape = build_shape(domain_spec, alpha, n, seed);
      std::ostream& os = open_output(out_path, file);
      os << "domain=" << domain.spec_string() << '\n'
         << "alpha=" << ap::format_double(alpha) << '\n'
         << "n=" << n << '\n'
         << "seed=" << seed << '\n'
         << "edges=" << shape.edges.size() << '\n'
         << "shape_perimeter=" << ap::format_double(ap::shape_perimeter(shape)) << '\n'
         << "hull_perimeter=" << ap::format_double(ap::hull_perimeter(shape)) << '\n'
         << "true_perimeter=" << ap::format_double(domain.exact_perimeter()) << '\n';
    } else if (diagnose_cmd->parsed()) {
      const ap::Domain domain = ap::Domain::parse(domain_spec);
      const ap::AlphaShape shape = build_shape(domain_spec, alpha, n, seed);
      const ap::DiagnosticsBundle bundle = ap::run_diagnostics(shape, domain, resolution);
      std::ostream& os = open_output(out_path, file);
      if (diag_csv) {
        os << ap::diagnostics_csv_header() << '\n'
           << ap::to_csv_row(bundle, domain, alpha, n, seed) << '\n';
      } else {
        os << "domain=" << domain.spec_string() << '\n'
           << "alpha=" << ap::format_double(alpha) << '\n'
           << "n=" << n << '\n'
           << "seed=" << seed << '\n'
           << ap::to_key_value(bundle);
      }
    } else if (experiment_cmd->parsed()) {
      ap::ExperimentConfig config;
      config.domain = ap::Domain::parse(domain_spec);
      config.alphas = ap::parse_double_list(alphas_text);
      config.sample_sizes = ap::parse_int_list(sizes_text);
      config.replicates = reps;
      config.master_seed = seed;
      config.output_path = out_path;
      if (estimator_text == "shape") {
        config.estimator = ap::Estimator::alpha_shape;
      } else if (estimator_text == "hull") {
        config.estimator = ap::Estimator::alpha_hull;
      } else {
        throw std::invalid_argument("--estimator must be 'shape' or 'hull'");
      }
      if (!config_path.empty()) ap::apply_config_file(config_path, config);

      const ap::ExperimentResult result = ap::run_experiment(config);
      if (config.output_path.empty()) {
        ap::write_report(result, std::cout);
      } else {
        ap::emit_files(result, config.output_path);
        std::cout << "wrote " << config.output_path << ".raw.csv, .summary.csv, .report.txt\n";
      }
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
