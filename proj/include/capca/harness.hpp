#pragma once

#include "capca/analytic.hpp"
#include "capca/estimators.hpp"
#include "capca/pointcloud.hpp"
#include "capca/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capca {

struct SweepConfig {
  std::vector<EstimatorId> estimators{EstimatorId::PCA, EstimatorId::CAPCA, EstimatorId::LB};
  Index k_min = 5;
  Index k_max = 20;
  Index k_step = 1;
  Index centers = 200;  ///< N, drawn with replacement
  std::uint64_t seed = 0;
  bool truncate_tail = false;
  Index resample_limit = -1;  ///< total replacements of degenerate centers; -1 means 10 * centers
  unsigned threads = 1;
  LbDenominator lb_denominator = LbDenominator::Original;

  std::vector<Index> ks() const;
};

struct SweepRow {
  EstimatorId estimator = EstimatorId::PCA;
  Index k = 0;
  double mean = 0.0;
  double std = 0.0;  ///< population standard deviation over the centers
  Index skipped = 0;  ///< degenerate centers that failed on this row and were replaced
  std::vector<double> values;  ///< per-center estimates in center-slot order
};

struct SweepResult {
  std::vector<SweepRow> rows;   ///< estimator-major, k ascending
  std::vector<Index> centers;   ///< accepted center index per slot, shared by every row
  Index replacements = 0;

  const SweepRow& row(EstimatorId estimator, Index k) const;
};

/// Runs every estimator at every k on the same N centers.
///
/// Slot s draws its center from substream (seed, "center", s); a center whose
/// neighborhood is degenerate at any (estimator, k) is replaced by the next
/// draw of the same substream. Neighbors are computed once per center at
/// k_max and reused as prefixes. Results do not depend on `threads`.
SweepResult run_sweep(const PointCloud& cloud, const SweepConfig& config);

/// CSV text: header `estimator,k,mean,std,skipped`, six decimals.
std::string format_csv(const SweepResult& result);
void emit_csv(const SweepResult& result, const std::filesystem::path& path);

struct CsvRow {
  std::string estimator;
  Index k = 0;
  double mean = 0.0;
  double std = 0.0;
  Index skipped = 0;
};
std::vector<CsvRow> parse_sweep_csv(std::string_view text);

/// Mean-vs-k chart: one polyline per estimator, axes, legend and an optional
/// dashed rule at the true dimension.
std::string render_svg(const SweepResult& result, std::optional<int> true_dim = std::nullopt);
void emit_svg(const SweepResult& result, const std::filesystem::path& path, std::optional<int> true_dim = std::nullopt);

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::string format() const;
};

struct VerifyOptions {
  std::size_t samples = 1'000'000;  ///< MC sample size per check
  unsigned threads = 1;
};

/// Runs one of the analytic oracle suites: "lemma1", "prop1", "moments", "signs".
VerifyReport verify_suite(std::string_view name, std::uint64_t seed, VerifyOptions options = {});

/// Random embedding with the given codimension whose largest |eigenvalue| is
/// exactly `lambda`: each form is V diag(mu) V^T with Haar V and mu uniform.
analytic::QuadraticEmbedding random_embedding(int d, int codim, double lambda, Rng& rng);

}  // namespace capca
