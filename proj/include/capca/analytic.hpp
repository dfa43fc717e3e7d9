#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

/// Closed forms for the covariance of the uniform measure on a quadratic graph
///
///     x -> (x, x^T M_1 x, ..., x^T M_{D-d} x),   |x|^2 + sum_j Q_j(x)^2 <= 1,
///
/// and a Monte-Carlo sampler of that measure used to check them. Closed forms
/// drop their O(Lambda^3) / O(Lambda^4) remainders; those live in the test
/// tolerances only.
namespace capca::analytic {

class QuadraticEmbedding {
 public:
  /// `forms` are the symmetric d x d matrices M_j, all of the same size.
  /// An empty list is rejected; pass zero matrices for a flat embedding.
  explicit QuadraticEmbedding(std::vector<Eigen::MatrixXd> forms);

  int intrinsic_dim() const { return dim_; }
  int ambient_dim() const { return dim_ + codim(); }
  int codim() const { return static_cast<int>(forms_.size()); }

  const std::vector<Eigen::MatrixXd>& forms() const { return forms_; }
  /// Eigenvalues of each M_j (ascending, as Eigen returns them).
  const std::vector<Eigen::VectorXd>& eigenvalues() const { return eigenvalues_; }

  /// Largest operator norm over the forms.
  double max_norm() const { return max_norm_; }
  double a(int j) const;  ///< sum_k lambda_{j,k}^2
  double b(int j) const;  ///< (sum_k lambda_{j,k})^2
  double a() const;       ///< sum_j a(j)
  double b() const;       ///< sum_j b(j)

  double form(int j, const Eigen::VectorXd& x) const { return x.dot(forms_[static_cast<std::size_t>(j)] * x); }
  /// sum_j Q_j(x)^2
  double q(const Eigen::VectorXd& x) const;

 private:
  int dim_ = 0;
  std::vector<Eigen::MatrixXd> forms_;
  std::vector<Eigen::VectorXd> eigenvalues_;
  double max_norm_ = 0.0;
};

Eigen::VectorXd embed(const QuadraticEmbedding& emb, const Eigen::VectorXd& x);

struct DensityValue {
  double exact = 1.0;   ///< sqrt(det g(x)), g_ij = delta_ij + sum_k (2 M_k e_i . x)(2 M_k e_j . x)
  double approx = 1.0;  ///< 1 + 2 sum_j x^T M_j^2 x
};

DensityValue density(const QuadraticEmbedding& emb, const Eigen::VectorXd& x);

struct RadiusValue {
  double exact = 1.0;   ///< positive root of r^2 + r^4 q(theta) = 1
  double approx = 1.0;  ///< 1 - q(theta)/2
};

/// Boundary radius of the region along the unit direction theta.
RadiusValue region_radius(const QuadraticEmbedding& emb, const Eigen::VectorXd& theta);

/// Integral of x^alpha over the unit sphere S^{d-1}, d = exponents.size().
double sphere_moment(std::span<const int> exponents);

/// Trace of the tangent block of the normalized covariance.
double trace_sigma1(int d, double a, double b);

/// Trace of the normal block of the normalized covariance.
double trace_sigma2(int d, double a);

/// Curvature aggregate A recovered from an observed normal-block trace.
double curvature_from_tail(int d, double tail_trace);

struct EigenvalueBounds {
  double low = 0.0;
  double high = 0.0;
};

/// Interval containing each tangent-block eigenvalue.
EigenvalueBounds eigenvalue_bounds(int d, double a, double b);

/// d-dimensional volume of the graph inside the unit ball.
double surface_area(const QuadraticEmbedding& emb);

/// First-order mean of Q_j over the region, j in [0, codim).
double mean_q(const QuadraticEmbedding& emb, int j);

/// Second-order expansions re-derived from the same integrals, including the
/// r^4 radial weight of Q_j(x)^2 and the Gamma-function simplifications. They
/// agree with exact quadrature to O(Lambda^4), whereas trace_sigma1,
/// trace_sigma2 and surface_area above (which the CA-PCA calibration is built
/// on) differ from it at O(Lambda^2).
namespace rederived {
double trace_sigma1(int d, double a, double b);
double trace_sigma2(int d, double a, double b);
double surface_area(int d, double a, double b);
}  // namespace rederived

struct McOptions {
  unsigned threads = 1;
  int shards = 64;  ///< fixed so results do not depend on `threads`
};

struct McCovariance {
  Eigen::MatrixXd covariance;           ///< D x D sample covariance of embedded points
  std::vector<double> spectrum;         ///< eigenvalues of `covariance`, nonincreasing
  std::vector<double> upper_spectrum;   ///< eigenvalues of the d x d tangent block
  double upper_trace = 0.0;
  double lower_trace = 0.0;

  // Batch-means standard errors from the per-shard estimates.
  Eigen::MatrixXd entry_stderr;
  std::vector<double> spectrum_stderr;
  std::vector<double> upper_spectrum_stderr;
  double upper_trace_stderr = 0.0;
  double lower_trace_stderr = 0.0;

  std::size_t accepted = 0;
  std::size_t proposed = 0;
  double density_bound = 1.0;

  double acceptance_rate() const { return proposed ? static_cast<double>(accepted) / proposed : 0.0; }
};

/// Samples n points uniformly with respect to the surface measure of the
/// graph inside the unit ball and returns their covariance.
///
/// Proposals are uniform in the unit d-ball, kept when inside the region and
/// then with probability density/S_max, where
/// S_max = (1 + 4 (D-d) Lambda^2 / d)^{d/2} bounds the density on the region.
/// Requires n >= 10^4 and Lambda < 0.5. Each shard draws from its own substream.
McCovariance mc_covariance(const QuadraticEmbedding& emb, std::size_t n, std::uint64_t seed, McOptions options = {});

}  // namespace capca::analytic
