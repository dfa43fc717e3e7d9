#include "capca/harness.hpp"

#include "capca/errors.hpp"
#include "capca/samplers.hpp"
#include "capca/spectral.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace capca {

std::vector<Index> SweepConfig::ks() const {
  std::vector<Index> out;
  for (Index k = k_min; k <= k_max; k += k_step) out.push_back(k);
  return out;
}

const SweepRow& SweepResult::row(EstimatorId estimator, Index k) const {
  for (const auto& r : rows) {
    if (r.estimator == estimator && r.k == k) return r;
  }
  throw InvalidArgument("no sweep row for " + std::string(to_string(estimator)) + " at k=" + std::to_string(k));
}

namespace {

void validate(const PointCloud& cloud, const SweepConfig& config) {
  if (config.estimators.empty()) throw InvalidArgument("no estimators");
  if (config.k_step < 1) throw InvalidArgument("k_step must be >= 1");
  if (config.k_min < 2 || config.k_min > config.k_max) throw InvalidArgument("need 2 <= k_min <= k_max");
  if (config.k_max >= cloud.size() - 1) {
    throw InvalidArgument("k_max=" + std::to_string(config.k_max) + " must be < n-1 for n=" +
                          std::to_string(cloud.size()));
  }
  if (config.centers < 1) throw InvalidArgument("need at least one center");
}

struct SlotOutcome {
  Index center = -1;
  std::vector<double> values;        // row-major over (estimator, k)
  std::vector<Index> failures;       // per row count of rejected draws that failed there
  Index replacements = 0;
};

}  // namespace

SweepResult run_sweep(const PointCloud& cloud, const SweepConfig& config) {
  validate(cloud, config);
  const std::vector<Index> ks = config.ks();
  const std::size_t n_est = config.estimators.size();
  const std::size_t n_rows = n_est * ks.size();
  const Index limit = config.resample_limit >= 0 ? config.resample_limit : 10 * config.centers;
  const bool wants_spectrum = std::any_of(config.estimators.begin(), config.estimators.end(),
                                          [](EstimatorId e) { return e != EstimatorId::LB; });
  const Index k_top = ks.back();
  const PointEstimateOptions point_options{config.truncate_tail, config.lb_denominator};

  std::vector<SlotOutcome> slots(static_cast<std::size_t>(config.centers));
  detail::parallel_for(slots.size(), config.threads, [&](std::size_t s) {
    SlotOutcome& out = slots[s];
    out.values.assign(n_rows, 0.0);
    out.failures.assign(n_rows, 0);
    Rng rng = Rng::substream(config.seed, "center", s);
    std::vector<bool> failed(n_rows);
    while (true) {
      const Index center = static_cast<Index>(rng.below(static_cast<std::uint64_t>(cloud.size())));
      std::fill(failed.begin(), failed.end(), false);
      bool ok = true;
      try {
        const Neighborhood full = knn(cloud, center, k_top);
        for (std::size_t ki = 0; ki < ks.size(); ++ki) {
          std::optional<Neighborhood> nbhd;
          std::optional<EigenSpectrum> spectrum;
          try {
            nbhd = full.prefix(ks[ki]);
            if (wants_spectrum) spectrum = local_spectrum(cloud, *nbhd, config.truncate_tail);
          } catch (const DegenerateNeighborhood&) {
            for (std::size_t e = 0; e < n_est; ++e) failed[e * ks.size() + ki] = true;
            ok = false;
            continue;
          }
          for (std::size_t e = 0; e < n_est; ++e) {
            const std::size_t row = e * ks.size() + ki;
            try {
              switch (config.estimators[e]) {
                case EstimatorId::PCA:
                  out.values[row] = pca_estimate(*spectrum);
                  break;
                case EstimatorId::CAPCA:
                  out.values[row] = capca_estimate(*spectrum);
                  break;
                case EstimatorId::LB:
                  out.values[row] = estimate_from_neighborhood(cloud, *nbhd, EstimatorId::LB, point_options);
                  break;
              }
            } catch (const DegenerateNeighborhood&) {
              failed[row] = true;
              ok = false;
            }
          }
        }
      } catch (const DegenerateNeighborhood&) {
        std::fill(failed.begin(), failed.end(), true);
        ok = false;
      }
      if (ok) {
        out.center = center;
        return;
      }
      for (std::size_t row = 0; row < n_rows; ++row) out.failures[row] += failed[row] ? 1 : 0;
      if (++out.replacements > limit) {
        throw ResampleLimitExceeded("resample limit of " + std::to_string(limit) +
                                    " exhausted: degenerate neighborhoods everywhere near slot " + std::to_string(s));
      }
    }
  });

  SweepResult result;
  for (const auto& slot : slots) {
    result.centers.push_back(slot.center);
    result.replacements += slot.replacements;
  }
  if (result.replacements > limit) {
    throw ResampleLimitExceeded("resample limit of " + std::to_string(limit) + " exhausted after " +
                                std::to_string(result.replacements) + " degenerate centers");
  }

  const double count = static_cast<double>(slots.size());
  for (std::size_t e = 0; e < n_est; ++e) {
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      const std::size_t index = e * ks.size() + ki;
      SweepRow row;
      row.estimator = config.estimators[e];
      row.k = ks[ki];
      row.values.reserve(slots.size());
      for (const auto& slot : slots) {
        row.values.push_back(slot.values[index]);
        row.skipped += slot.failures[index];
      }
      double sum = 0.0;
      for (double v : row.values) sum += v;
      row.mean = sum / count;
      double ss = 0.0;
      for (double v : row.values) ss += (v - row.mean) * (v - row.mean);
      row.std = std::sqrt(ss / count);
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::string format_csv(const SweepResult& result) {
  if (result.rows.empty()) throw InvalidArgument("no estimators");
  std::string text = "estimator,k,mean,std,skipped\n";
  char buffer[160];
  for (const auto& row : result.rows) {
    std::snprintf(buffer, sizeof(buffer), "%s,%lld,%.6f,%.6f,%lld\n", std::string(to_string(row.estimator)).c_str(),
                  static_cast<long long>(row.k), row.mean, row.std, static_cast<long long>(row.skipped));
    text += buffer;
  }
  return text;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace

void emit_csv(const SweepResult& result, const std::filesystem::path& path) { write_text(path, format_csv(result)); }

std::vector<CsvRow> parse_sweep_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "estimator,k,mean,std,skipped") {
    throw ParseError("missing sweep CSV header");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) throw ParseError("ragged row " + std::to_string(line_no));
    CsvRow row;
    row.estimator = cells[0];
    auto number = [&](const std::string& s, auto& value) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("non-numeric cell at row " + std::to_string(line_no));
      }
    };
    long long k = 0;
    long long skipped = 0;
    number(cells[1], k);
    number(cells[2], row.mean);
    number(cells[3], row.std);
    number(cells[4], skipped);
    row.k = static_cast<Index>(k);
    row.skipped = static_cast<Index>(skipped);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string label_for(EstimatorId id) {
  switch (id) {
    case EstimatorId::PCA:
      return "PCA";
    case EstimatorId::CAPCA:
      return "CA-PCA";
    case EstimatorId::LB:
      return "LB";
  }
  return "?";
}

}  // namespace

std::string render_svg(const SweepResult& result, std::optional<int> true_dim) {
  if (result.rows.empty()) throw InvalidArgument("empty sweep result");

  const double width = 640.0, height = 420.0;
  const double left = 64.0, right = 150.0, top = 24.0, bottom = 56.0;
  const double plot_w = width - left - right, plot_h = height - top - bottom;

  Index k_lo = result.rows.front().k, k_hi = k_lo;
  double y_lo = result.rows.front().mean, y_hi = y_lo;
  for (const auto& row : result.rows) {
    k_lo = std::min(k_lo, row.k);
    k_hi = std::max(k_hi, row.k);
    y_lo = std::min(y_lo, row.mean);
    y_hi = std::max(y_hi, row.mean);
  }
  if (true_dim) {
    y_lo = std::min(y_lo, static_cast<double>(*true_dim));
    y_hi = std::max(y_hi, static_cast<double>(*true_dim));
  }
  y_lo = std::floor(y_lo);
  y_hi = std::ceil(y_hi);
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  const double k_span = k_hi > k_lo ? static_cast<double>(k_hi - k_lo) : 1.0;

  auto px = [&](double k) { return left + (k - static_cast<double>(k_lo)) / k_span * plot_w; };
  auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";

  // Axes.
  svg << "<line class=\"axis\" x1=\"" << fmt(left) << "\" y1=\"" << fmt(top + plot_h) << "\" x2=\"" << fmt(left + plot_w)
      << "\" y2=\"" << fmt(top + plot_h) << "\" stroke=\"black\"/>\n"
      << "<line class=\"axis\" x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(left) << "\" y2=\""
      << fmt(top + plot_h) << "\" stroke=\"black\"/>\n";

  const int y_ticks = static_cast<int>(y_hi - y_lo) <= 10 ? static_cast<int>(y_hi - y_lo) : 5;
  for (int t = 0; t <= y_ticks; ++t) {
    const double y = y_lo + (y_hi - y_lo) * t / y_ticks;
    svg << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(py(y) + 4) << "\" text-anchor=\"end\">" << fmt(y)
        << "</text>\n";
  }
  const int x_ticks = std::min<Index>(k_hi - k_lo, 8) > 0 ? static_cast<int>(std::min<Index>(k_hi - k_lo, 8)) : 1;
  for (int t = 0; t <= x_ticks; ++t) {
    const double k = static_cast<double>(k_lo) + k_span * t / x_ticks;
    svg << "<text x=\"" << fmt(px(k)) << "\" y=\"" << fmt(top + plot_h + 18) << "\" text-anchor=\"middle\">"
        << fmt(k) << "</text>\n";
  }
  svg << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\"" << fmt(height - 12)
      << "\" text-anchor=\"middle\">k (nearest neighbors)</text>\n"
      << "<text x=\"16\" y=\"" << fmt(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fmt(top + plot_h / 2) << ")\">mean estimated dimension</text>\n";

  if (true_dim) {
    const double y = py(*true_dim);
    svg << "<line class=\"true-dim\" x1=\"" << fmt(left) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(left + plot_w)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }

  // One series per estimator, in first-appearance order.
  std::vector<EstimatorId> order;
  for (const auto& row : result.rows) {
    if (std::find(order.begin(), order.end(), row.estimator) == order.end()) order.push_back(row.estimator);
  }
  for (std::size_t s = 0; s < order.size(); ++s) {
    const char* color = kPalette[s % std::size(kPalette)];
    svg << "<polyline class=\"series\" data-estimator=\"" << to_string(order[s]) << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& row : result.rows) {
      if (row.estimator != order[s]) continue;
      svg << (first ? "" : " ") << fmt(px(static_cast<double>(row.k))) << ',' << fmt(py(row.mean));
      first = false;
    }
    svg << "\"/>\n";
    const double ly = top + 16.0 + 20.0 * static_cast<double>(s);
    const double lx = left + plot_w + 16.0;
    svg << "<line class=\"legend\" x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 24)
        << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fmt(lx + 30) << "\" y=\"" << fmt(ly + 4) << "\">" << label_for(order[s]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_svg(const SweepResult& result, const std::filesystem::path& path, std::optional<int> true_dim) {
  write_text(path, render_svg(result, true_dim));
}

// ---------------------------------------------------------------------------
// Oracle suites

bool VerifyReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  char buffer[256];
  for (const auto& c : checks) {
    std::snprintf(buffer, sizeof(buffer), "[%s] %-48s deviation=%.3e tolerance=%.3e\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.deviation, c.tolerance);
    out << buffer;
  }
  out << suite << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

analytic::QuadraticEmbedding random_embedding(int d, int codim, double lambda, Rng& rng) {
  if (d < 1 || codim < 1 || !(lambda >= 0.0)) throw InvalidArgument("invalid random embedding parameters");
  std::vector<Eigen::VectorXd> spectra;
  double largest = 0.0;
  for (int j = 0; j < codim; ++j) {
    Eigen::VectorXd mu(d);
    for (int i = 0; i < d; ++i) mu(i) = rng.uniform(-1.0, 1.0);
    largest = std::max(largest, mu.cwiseAbs().maxCoeff());
    spectra.push_back(mu);
  }
  std::vector<Eigen::MatrixXd> forms;
  for (const auto& mu : spectra) {
    const Eigen::MatrixXd v = haar_orthogonal(d, rng);
    Eigen::MatrixXd m = v * (mu * (largest > 0.0 ? lambda / largest : 0.0)).asDiagonal() * v.transpose();
    forms.push_back(0.5 * (m + m.transpose()));
  }
  return analytic::QuadraticEmbedding(std::move(forms));
}

namespace {

std::string label(const char* format, auto... args) {
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

VerifyCheck check(std::string name, double deviation, double tolerance) {
  return VerifyCheck{std::move(name), deviation, tolerance, deviation <= tolerance};
}

analytic::QuadraticEmbedding flat_embedding(int d, int codim) {
  return analytic::QuadraticEmbedding(std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(codim), Eigen::MatrixXd::Zero(d, d)));
}

VerifyReport verify_lemma1(std::uint64_t seed, const VerifyOptions& options) {
  VerifyReport report{"lemma1", {}};
  constexpr int cases[][2] = {{1, 3}, {2, 5}, {3, 8}};
  for (std::size_t c = 0; c < std::size(cases); ++c) {
    const int d = cases[c][0];
    const int ambient = cases[c][1];
    const auto mc = analytic::mc_covariance(flat_embedding(d, ambient - d), options.samples, seed + c,
                                            {options.threads, 64});
    const ReferenceSpectrum ref = reference_spectrum(d, ambient);
    double worst = 0.0;
    for (int i = 0; i < ambient; ++i) {
      worst = std::max(worst, std::abs(mc.spectrum[static_cast<std::size_t>(i)] - ref.values[static_cast<std::size_t>(i)]));
    }
    report.checks.push_back(check(label("ball spectrum (d=%d, D=%d)", d, ambient), worst, 0.003));
  }
  return report;
}

void prop1_checks(VerifyReport& report, const analytic::QuadraticEmbedding& emb, const analytic::McCovariance& mc,
                  const std::string& tag) {
  const int d = emb.intrinsic_dim();
  const int ambient = emb.ambient_dim();
  const double lambda = emb.max_norm();
  const double a = emb.a();
  const double b = emb.b();
  const double upper_formula = 5.0 * std::pow(lambda, 4);
  const double lower_formula = 5.0 * std::pow(lambda, 3);

  report.checks.push_back(check(tag + " upper trace", std::abs(mc.upper_trace - analytic::trace_sigma1(d, a, b)),
                                upper_formula + 3.0 * mc.upper_trace_stderr));
  report.checks.push_back(check(tag + " lower trace", std::abs(mc.lower_trace - analytic::trace_sigma2(d, a)),
                                lower_formula + 3.0 * mc.lower_trace_stderr));

  const auto bounds = analytic::eigenvalue_bounds(d, a, b);
  double worst_excess = 0.0;
  double worst_tol = 0.0;
  bool inside = true;
  for (int i = 0; i < d; ++i) {
    const double value = mc.upper_spectrum[static_cast<std::size_t>(i)];
    const double tol = upper_formula + 3.0 * mc.upper_spectrum_stderr[static_cast<std::size_t>(i)];
    const double excess = std::max(bounds.low - value, value - bounds.high);
    if (excess > tol) inside = false;
    if (excess - tol >= worst_excess - worst_tol || i == 0) {
      worst_excess = excess;
      worst_tol = tol;
    }
  }
  VerifyCheck bounds_check{tag + " upper eigenvalues in bounds", worst_excess, worst_tol, inside};
  report.checks.push_back(bounds_check);

  double worst_ratio = 0.0;
  double worst_entry = 0.0;
  double worst_entry_tol = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = d; j < ambient; ++j) {
      const double entry = std::abs(mc.covariance(i, j));
      const double tol = 3.0 * mc.entry_stderr(i, j);
      const double ratio = tol > 0.0 ? entry / tol : (entry > 0.0 ? INFINITY : 0.0);
      if (ratio >= worst_ratio) {
        worst_ratio = ratio;
        worst_entry = entry;
        worst_entry_tol = tol;
      }
    }
  }
  report.checks.push_back(check(tag + " cross-block entries", worst_entry, worst_entry_tol));
}

VerifyReport verify_prop1(std::uint64_t seed, const VerifyOptions& options) {
  VerifyReport report{"prop1", {}};
  {
    const auto flat = flat_embedding(2, 2);
    const auto mc = analytic::mc_covariance(flat, options.samples, seed, {options.threads, 64});
    prop1_checks(report, flat, mc, "flat d=2 D=4");
  }
  Rng rng = Rng::substream(seed, "prop1-embeddings", 0);
  for (int e = 0; e < 10; ++e) {
    const int d = 1 + e % 3;
    const int codim = 1 + (e / 3) % 2;
    const double lambda = rng.uniform(0.05, 0.15);
    const auto emb = random_embedding(d, codim, lambda, rng);
    const auto mc = analytic::mc_covariance(emb, options.samples, seed + 1 + static_cast<std::uint64_t>(e),
                                            {options.threads, 64});
    prop1_checks(report, emb, mc, label("emb%d d=%d D=%d L=%.3f", e, d, d + codim, lambda));
  }
  return report;
}

VerifyReport verify_moments(std::uint64_t seed, const VerifyOptions& options) {
  VerifyReport report{"moments", {}};
  constexpr int kMonomials = 50;
  Rng picker = Rng::substream(seed, "moments-exponents", 0);
  std::vector<std::vector<int>> exponents(kMonomials);
  for (auto& alpha : exponents) {
    const int d = 1 + static_cast<int>(picker.below(6));
    const int degree = static_cast<int>(picker.below(7));
    alpha.assign(static_cast<std::size_t>(d), 0);
    for (int u = 0; u < degree; ++u) ++alpha[picker.below(static_cast<std::uint64_t>(d))];
  }

  std::vector<VerifyCheck> checks(kMonomials);
  detail::parallel_for(exponents.size(), options.threads, [&](std::size_t m) {
    const auto& alpha = exponents[m];
    const int d = static_cast<int>(alpha.size());
    const double closed = analytic::sphere_moment(alpha);
    const std::vector<int> zeros(alpha.size(), 0);
    const double area = analytic::sphere_moment(zeros);

    Rng rng = Rng::substream(seed, "moments-mc", m);
    Eigen::VectorXd x(d);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t s = 0; s < options.samples; ++s) {
      for (int i = 0; i < d; ++i) x(i) = rng.normal();
      x.normalize();
      double value = 1.0;
      for (int i = 0; i < d; ++i) value *= std::pow(x(i), alpha[static_cast<std::size_t>(i)]);
      sum += value;
      sum_sq += value * value;
    }
    const double count = static_cast<double>(options.samples);
    const double mean = sum / count;
    const double var = std::max(0.0, sum_sq / count - mean * mean);
    const double estimate = area * mean;
    const double sigma = area * std::sqrt(var / count);

    std::string name = "x^(";
    for (std::size_t i = 0; i < alpha.size(); ++i) name += (i ? "," : "") + std::to_string(alpha[i]);
    name += ")";
    const bool odd = std::any_of(alpha.begin(), alpha.end(), [](int a) { return a % 2 != 0; });
    // Constant integrands (alpha = 0, or d = 1) have zero MC variance; allow rounding only.
    VerifyCheck c = check(name, std::abs(closed - estimate), 3.0 * sigma + 1e-12 * std::max(1.0, std::abs(closed)));
    if (odd && closed != 0.0) c.passed = false;
    checks[m] = c;
  });
  report.checks = std::move(checks);
  return report;
}

VerifyReport verify_signs(std::uint64_t seed, const VerifyOptions&) {
  VerifyReport report{"signs", {}};
  constexpr int kAssignments = 10000;
  Rng rng = Rng::substream(seed, "signs", 0);
  for (int table = 0; table < 5; ++table) {
    const int d = 2 + table;
    std::vector<double> magnitudes(static_cast<std::size_t>(d));
    double a = 0.0;
    for (double& m : magnitudes) {
      m = rng.uniform();
      a += m * m;
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int s = 0; s < kAssignments; ++s) {
      double trace = 0.0;
      for (double m : magnitudes) trace += (rng.bits() & 1u) ? m : -m;
      const double b = trace * trace;
      sum += b;
      sum_sq += b * b;
    }
    const double mean = sum / kAssignments;
    const double se = std::sqrt(std::max(0.0, sum_sq / kAssignments - mean * mean) / kAssignments);
    report.checks.push_back(check(label("E[B_j] = A_j (d=%d)", d), std::abs(mean - a), 3.0 * se));
  }
  return report;
}

}  // namespace

VerifyReport verify_suite(std::string_view name, std::uint64_t seed, VerifyOptions options) {
  if (name == "lemma1") return verify_lemma1(seed, options);
  if (name == "prop1") return verify_prop1(seed, options);
  if (name == "moments") return verify_moments(seed, options);
  if (name == "signs") return verify_signs(seed, options);
  throw InvalidArgument("unknown suite '" + std::string(name) + "' (expected lemma1, prop1, moments, signs)");
}

}  // namespace capca
