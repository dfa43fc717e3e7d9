#include "capca/errors.hpp"
#include "capca/harness.hpp"
#include "capca/samplers.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

std::vector<capca::EstimatorId> parse_estimators(const std::string& list) {
  std::vector<capca::EstimatorId> out;
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    const auto id = capca::parse_estimator(name);
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

struct CommonSweepFlags {
  std::string input;
  bool header = false;
  capca::Index centers = 200;
  std::uint64_t seed = 0;
  bool truncate = false;
  unsigned threads = 1;
  bool lb_corrected = false;
};

void add_common(CLI::App* cmd, CommonSweepFlags& f) {
  cmd->add_option("--input", f.input, "Point cloud CSV, one point per row")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--header", f.header, "Skip the first line of the input");
  cmd->add_option("--n-points", f.centers, "Number of resampled centers N")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_flag("--truncate-tail", f.truncate, "Keep only the leading k eigenvalues when D > k");
  cmd->add_option("--threads", f.threads, "Worker threads (results do not depend on this)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--lb-corrected", f.lb_corrected, "Use the 1/(k-2) Levina-Bickel denominator");
}

capca::SweepConfig base_config(const CommonSweepFlags& f) {
  capca::SweepConfig cfg;
  cfg.centers = f.centers;
  cfg.seed = f.seed;
  cfg.truncate_tail = f.truncate;
  cfg.threads = f.threads;
  cfg.lb_denominator = f.lb_corrected ? capca::LbDenominator::Corrected : capca::LbDenominator::Original;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intrinsic dimension estimation with curvature-adjusted local PCA"};
  app.require_subcommand(1);

  // estimate
  CommonSweepFlags est_flags;
  capca::Index est_k = 10;
  std::string est_name = "capca";
  auto* estimate = app.add_subcommand("estimate", "Mean and std of one estimator at one k");
  add_common(estimate, est_flags);
  estimate->add_option("--k", est_k, "Neighborhood size")->required();
  estimate->add_option("--estimator", est_name, "pca, capca or lb")
      ->check(CLI::IsMember({"pca", "capca", "lb"}));

  // sweep
  CommonSweepFlags sweep_flags;
  std::string sweep_estimators = "pca,capca,lb";
  capca::Index k_min = 5, k_max = 20, k_step = 1, resample_limit = -1;
  std::string out_csv, out_svg;
  std::optional<int> true_dim;
  auto* sweep = app.add_subcommand("sweep", "Per-estimator mean and std over a range of k");
  add_common(sweep, sweep_flags);
  sweep->add_option("--estimators", sweep_estimators, "Comma separated subset of pca,capca,lb");
  sweep->add_option("--k-min", k_min)->required();
  sweep->add_option("--k-max", k_max)->required();
  sweep->add_option("--k-step", k_step)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_csv, "CSV output path (stdout when omitted)");
  sweep->add_option("--plot", out_svg, "SVG chart output path");
  sweep->add_option("--true-dim", true_dim, "Draw a reference line at this dimension");
  sweep->add_option("--resample-limit", resample_limit, "Maximum replaced degenerate centers (default 10 N)");

  // sample
  std::string manifold;
  capca::ManifoldParams params;
  capca::Index n_samples = 0;
  std::uint64_t sample_seed = 0;
  double noise = 0.0;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "Write a synthetic point cloud as CSV");
  sample->add_option("--manifold", manifold, "klein, sphere, fourier_curve, special_orthogonal, so3_plus_torus3, "
                                             "box, circle_union_s3, random_images")
      ->required();
  sample->add_option("--a", params.a, "Klein bottle radius a");
  sample->add_option("--b", params.b, "Klein bottle radius b");
  sample->add_option("--dim", params.dim, "Sphere dimension, or n for special_orthogonal");
  sample->add_option("--max-freq", params.max_freq, "Highest Fourier frequency");
  sample->add_option("--edge", params.edges, "Box edge lengths")->expected(1, -1);
  sample->add_option("--width", params.width);
  sample->add_option("--height", params.height);
  sample->add_option("--n,--n-points", n_samples, "Number of points")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed);
  sample->add_option("--noise", noise, "Uniform (-eps, eps) noise per coordinate");
  sample->add_option("--out", sample_out, "CSV output path (stdout when omitted)");

  // verify
  std::string suite;
  std::uint64_t verify_seed = 0;
  capca::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run an analytic oracle suite");
  verify->add_option("--suite", suite, "lemma1, prop1, moments or signs")->required();
  verify->add_option("--seed", verify_seed);
  verify->add_option("--samples", verify_options.samples, "Monte-Carlo samples per check");
  verify->add_option("--threads", verify_options.threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*estimate) {
      const auto cloud = capca::load_csv(est_flags.input, {est_flags.header});
      auto cfg = base_config(est_flags);
      cfg.estimators = {capca::parse_estimator(est_name)};
      cfg.k_min = cfg.k_max = est_k;
      const auto result = capca::run_sweep(cloud, cfg);
      const auto& row = result.rows.front();
      std::printf("%s k=%lld N=%lld: %.6f +- %.6f\n", est_name.c_str(), static_cast<long long>(est_k),
                  static_cast<long long>(cfg.centers), row.mean, row.std);
    } else if (*sweep) {
      const auto cloud = capca::load_csv(sweep_flags.input, {sweep_flags.header});
      auto cfg = base_config(sweep_flags);
      cfg.estimators = parse_estimators(sweep_estimators);
      cfg.k_min = k_min;
      cfg.k_max = k_max;
      cfg.k_step = k_step;
      cfg.resample_limit = resample_limit;
      const auto result = capca::run_sweep(cloud, cfg);
      if (out_csv.empty()) {
        std::cout << capca::format_csv(result);
      } else {
        capca::emit_csv(result, out_csv);
      }
      if (!out_svg.empty()) capca::emit_svg(result, out_svg, true_dim);
    } else if (*sample) {
      const auto spec = capca::make_manifold(manifold, params);
      auto cloud = capca::add_noise(capca::sample(spec, n_samples, sample_seed), noise, sample_seed);
      if (sample_out.empty()) {
        capca::write_csv(cloud, std::cout);
      } else {
        capca::save_csv(cloud, sample_out);
      }
    } else if (*verify) {
      const auto report = capca::verify_suite(suite, verify_seed, verify_options);
      std::cout << report.format();
      return report.passed() ? 0 : kRuntimeError;
    }
  } catch (const capca::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
