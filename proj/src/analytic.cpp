#include "capca/analytic.hpp"

#include "capca/errors.hpp"
#include "capca/rng.hpp"
#include "capca/spectral.hpp"
#include "parallel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace capca::analytic {

QuadraticEmbedding::QuadraticEmbedding(std::vector<Eigen::MatrixXd> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) {
    throw InvalidArgument("a quadratic embedding needs at least one form");
  }
  dim_ = static_cast<int>(forms_.front().rows());
  if (dim_ < 1) {
    throw InvalidArgument("forms must be at least 1 x 1");
  }
  for (const auto& m : forms_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw InvalidArgument("all forms must be d x d with the same d");
    }
    if (!m.allFinite() || (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw InvalidArgument("forms must be finite and symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    eigenvalues_.push_back(solver.eigenvalues());
    max_norm_ = std::max(max_norm_, solver.eigenvalues().cwiseAbs().maxCoeff());
  }
}

double QuadraticEmbedding::a(int j) const { return eigenvalues_.at(static_cast<std::size_t>(j)).squaredNorm(); }

double QuadraticEmbedding::b(int j) const {
  const double s = eigenvalues_.at(static_cast<std::size_t>(j)).sum();
  return s * s;
}

double QuadraticEmbedding::a() const {
  double total = 0.0;
  for (int j = 0; j < codim(); ++j) total += a(j);
  return total;
}

double QuadraticEmbedding::b() const {
  double total = 0.0;
  for (int j = 0; j < codim(); ++j) total += b(j);
  return total;
}

double QuadraticEmbedding::q(const Eigen::VectorXd& x) const {
  double total = 0.0;
  for (int j = 0; j < codim(); ++j) {
    const double v = form(j, x);
    total += v * v;
  }
  return total;
}

namespace {

void check_point(const QuadraticEmbedding& emb, const Eigen::VectorXd& x) {
  if (x.size() != emb.intrinsic_dim()) {
    throw InvalidArgument("point has dimension " + std::to_string(x.size()) + ", embedding expects " +
                          std::to_string(emb.intrinsic_dim()));
  }
  if (!x.allFinite()) {
    throw InvalidArgument("point must be finite");
  }
}

void check_curvature(int d, double a, double b) {
  if (d < 1) throw InvalidArgument("intrinsic dimension must be >= 1");
  if (!(a >= 0.0) || !(b >= 0.0)) throw InvalidArgument("curvature aggregates A, B must be >= 0");
}

/// pi^{d/2} / Gamma(d/2)
double sphere_prefactor(int d) { return std::exp(0.5 * d * std::log(std::numbers::pi) - std::lgamma(0.5 * d)); }

double metric_density(const QuadraticEmbedding& emb, const Eigen::VectorXd& x) {
  const int d = emb.intrinsic_dim();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(d, d);
  for (const auto& m : emb.forms()) {
    const Eigen::VectorXd grad = 2.0 * (m * x);
    g.noalias() += grad * grad.transpose();
  }
  return std::sqrt(g.determinant());
}

}  // namespace

Eigen::VectorXd embed(const QuadraticEmbedding& emb, const Eigen::VectorXd& x) {
  check_point(emb, x);
  Eigen::VectorXd y(emb.ambient_dim());
  y.head(emb.intrinsic_dim()) = x;
  for (int j = 0; j < emb.codim(); ++j) y(emb.intrinsic_dim() + j) = emb.form(j, x);
  return y;
}

DensityValue density(const QuadraticEmbedding& emb, const Eigen::VectorXd& x) {
  check_point(emb, x);
  DensityValue value;
  value.exact = metric_density(emb, x);
  double squared = 0.0;
  for (const auto& m : emb.forms()) squared += (m * x).squaredNorm();  // x^T M^2 x
  value.approx = 1.0 + 2.0 * squared;
  return value;
}

RadiusValue region_radius(const QuadraticEmbedding& emb, const Eigen::VectorXd& theta) {
  check_point(emb, theta);
  if (std::abs(theta.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("direction must be a unit vector");
  }
  const double q = emb.q(theta);
  RadiusValue value;
  // r^2 = (-1 + sqrt(1 + 4q)) / (2q), rationalized to stay accurate as q -> 0.
  value.exact = std::sqrt(2.0 / (1.0 + std::sqrt(1.0 + 4.0 * q)));
  value.approx = 1.0 - 0.5 * q;
  return value;
}

double sphere_moment(std::span<const int> exponents) {
  if (exponents.empty()) {
    throw InvalidArgument("sphere moment needs d >= 1");
  }
  double log_numerator = 0.0;
  double beta_sum = 0.0;
  for (int alpha : exponents) {
    if (alpha < 0) throw InvalidArgument("exponents must be nonnegative");
    if (alpha % 2 != 0) return 0.0;
    const double beta = 0.5 * (alpha + 1);
    log_numerator += std::lgamma(beta);
    beta_sum += beta;
  }
  return 2.0 * std::exp(log_numerator - std::lgamma(beta_sum));
}

double trace_sigma1(int d, double a, double b) {
  check_curvature(d, a, b);
  const double x = d;
  const double p = x + 2.0;
  return x / p + (4.0 * x - 2.0 * x * x) * a / (p * p * p * (x + 4.0)) - (3.0 * x + 4.0) * b / (p * p * (x + 4.0));
}

double trace_sigma2(int d, double a) {
  check_curvature(d, a, 0.0);
  const double p = d + 2.0;
  return 2.0 * a / (p * p);
}

double curvature_from_tail(int d, double tail_trace) {
  if (d < 1) throw InvalidArgument("intrinsic dimension must be >= 1");
  if (!(tail_trace >= 0.0)) throw InvalidArgument("tail trace must be >= 0");
  const double p = d + 2.0;
  return 0.5 * tail_trace * p * p;
}

EigenvalueBounds eigenvalue_bounds(int d, double a, double b) {
  check_curvature(d, a, b);
  const double x = d;
  const double p = x + 2.0;
  const double base = 1.0 / p;
  EigenvalueBounds bounds;
  bounds.low = base - (20.0 * x * x + 82.0 * x + 76.0) * a / (p * p * p * (x + 4.0)) -
               (11.0 * x + 24.0) * b / (2.0 * p * p * (x + 4.0));
  bounds.high = base + (5.0 * x * x + 18.0 * x + 24.0) * a / (p * p * p * (x + 4.0)) +
                x * b / (2.0 * p * p * (x + 4.0));
  return bounds;
}

double surface_area(const QuadraticEmbedding& emb) {
  const double x = emb.intrinsic_dim();
  const double p = x + 2.0;
  const double a = emb.a();
  const double b = emb.b();
  return sphere_prefactor(emb.intrinsic_dim()) *
         (2.0 / x - b / (p * (x + 4.0)) + 2.0 * (x + 6.0) * a / (p * p * (x + 4.0)));
}

double mean_q(const QuadraticEmbedding& emb, int j) {
  if (j < 0 || j >= emb.codim()) {
    throw InvalidArgument("form index " + std::to_string(j) + " out of range");
  }
  return emb.eigenvalues()[static_cast<std::size_t>(j)].sum() / (emb.intrinsic_dim() + 2.0);
}

namespace rederived {

double trace_sigma1(int d, double a, double b) {
  check_curvature(d, a, b);
  const double x = d;
  const double p = x + 2.0;
  return x / p - 2.0 * x * a / (p * p * (x + 4.0)) - b / (p * p);
}

double trace_sigma2(int d, double a, double b) {
  check_curvature(d, a, b);
  const double x = d;
  const double p = x + 2.0;
  return 2.0 * a / (p * (x + 4.0)) - 2.0 * b / (p * p * (x + 4.0));
}

double surface_area(int d, double a, double b) {
  check_curvature(d, a, b);
  const double x = d;
  const double p = x + 2.0;
  return sphere_prefactor(d) * (2.0 / x - b / (x * p) + 2.0 * a / (x * p));
}

}  // namespace rederived

namespace {

struct ShardSums {
  Eigen::VectorXd sum;
  Eigen::MatrixXd outer;
  std::size_t accepted = 0;
  std::size_t proposed = 0;
};

Eigen::MatrixXd covariance_from_sums(const Eigen::VectorXd& sum, const Eigen::MatrixXd& outer, std::size_t n) {
  const double count = static_cast<double>(n);
  const Eigen::VectorXd mean = sum / count;
  Eigen::MatrixXd cov = (outer - count * mean * mean.transpose()) / (count - 1.0);
  return 0.5 * (cov + cov.transpose());
}

/// Standard error of the pooled estimate: shard standard deviation / sqrt(shards).
double batch_stderr(const std::vector<double>& values) {
  const double count = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= count;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (count - 1.0) / count);
}

}  // namespace

McCovariance mc_covariance(const QuadraticEmbedding& emb, std::size_t n, std::uint64_t seed, McOptions options) {
  if (n < 10000) {
    throw InvalidArgument("mc_covariance needs n >= 10^4");
  }
  if (!(emb.max_norm() < 0.5)) {
    throw InvalidArgument("mc_covariance needs Lambda < 0.5");
  }
  if (options.shards < 2) {
    throw InvalidArgument("mc_covariance needs at least 2 shards");
  }
  const int d = emb.intrinsic_dim();
  const int ambient = emb.ambient_dim();
  const double lambda = emb.max_norm();
  const double bound = std::pow(1.0 + 4.0 * emb.codim() * lambda * lambda / d, 0.5 * d);

  const std::size_t shards = static_cast<std::size_t>(options.shards);
  std::vector<ShardSums> results(shards);
  detail::parallel_for(shards, options.threads, [&](std::size_t s) {
    const std::size_t target = n / shards + (s < n % shards ? 1 : 0);
    Rng rng = Rng::substream(seed, "mc_covariance", s);
    ShardSums& out = results[s];
    out.sum = Eigen::VectorXd::Zero(ambient);
    out.outer = Eigen::MatrixXd::Zero(ambient, ambient);
    Eigen::VectorXd x(d);
    Eigen::VectorXd y(ambient);
    while (out.accepted < target) {
      ++out.proposed;
      for (int i = 0; i < d; ++i) x(i) = rng.normal();
      const double radius = std::pow(rng.uniform(), 1.0 / d);
      x *= radius / x.norm();
      if (x.squaredNorm() + emb.q(x) > 1.0) {
        rng.uniform();  // keep one acceptance draw per proposal
        continue;
      }
      const double s_exact = metric_density(emb, x);
      if (s_exact > bound * (1.0 + 1e-12)) {
        throw Error("density bound violated in mc_covariance");
      }
      if (rng.uniform() * bound >= s_exact) continue;
      y.head(d) = x;
      for (int j = 0; j < emb.codim(); ++j) y(d + j) = emb.form(j, x);
      out.sum += y;
      out.outer.noalias() += y * y.transpose();
      ++out.accepted;
    }
  });

  McCovariance result;
  result.density_bound = bound;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(ambient);
  Eigen::MatrixXd outer = Eigen::MatrixXd::Zero(ambient, ambient);
  for (const auto& shard : results) {
    sum += shard.sum;
    outer += shard.outer;
    result.accepted += shard.accepted;
    result.proposed += shard.proposed;
  }
  result.covariance = covariance_from_sums(sum, outer, result.accepted);
  result.spectrum = eigenvalues_desc(result.covariance);
  result.upper_spectrum = eigenvalues_desc(result.covariance.topLeftCorner(d, d));
  result.upper_trace = result.covariance.topLeftCorner(d, d).trace();
  result.lower_trace = result.covariance.bottomRightCorner(ambient - d, ambient - d).trace();

  // Batch means over shards.
  std::vector<Eigen::MatrixXd> shard_cov;
  shard_cov.reserve(shards);
  for (const auto& shard : results) shard_cov.push_back(covariance_from_sums(shard.sum, shard.outer, shard.accepted));

  std::vector<double> scratch(shards);
  result.entry_stderr.resize(ambient, ambient);
  for (int i = 0; i < ambient; ++i) {
    for (int j = 0; j < ambient; ++j) {
      for (std::size_t s = 0; s < shards; ++s) scratch[s] = shard_cov[s](i, j);
      result.entry_stderr(i, j) = batch_stderr(scratch);
    }
  }
  for (std::size_t s = 0; s < shards; ++s) scratch[s] = shard_cov[s].topLeftCorner(d, d).trace();
  result.upper_trace_stderr = batch_stderr(scratch);
  for (std::size_t s = 0; s < shards; ++s) {
    scratch[s] = shard_cov[s].bottomRightCorner(ambient - d, ambient - d).trace();
  }
  result.lower_trace_stderr = batch_stderr(scratch);

  std::vector<std::vector<double>> full(shards);
  std::vector<std::vector<double>> upper(shards);
  for (std::size_t s = 0; s < shards; ++s) {
    full[s] = eigenvalues_desc(shard_cov[s]);
    upper[s] = eigenvalues_desc(shard_cov[s].topLeftCorner(d, d));
  }
  for (int i = 0; i < ambient; ++i) {
    for (std::size_t s = 0; s < shards; ++s) scratch[s] = full[s][static_cast<std::size_t>(i)];
    result.spectrum_stderr.push_back(batch_stderr(scratch));
  }
  for (int i = 0; i < d; ++i) {
    for (std::size_t s = 0; s < shards; ++s) scratch[s] = upper[s][static_cast<std::size_t>(i)];
    result.upper_spectrum_stderr.push_back(batch_stderr(scratch));
  }
  return result;
}

}  // namespace capca::analytic
