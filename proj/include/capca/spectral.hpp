#pragma once

#include "capca/pointcloud.hpp"

#include <Eigen/Dense>

#include <vector>

namespace capca {

/// Eigenvalues of a local covariance divided by r^2, largest first.
struct EigenSpectrum {
  std::vector<double> values;
  double r = 1.0;
  Index k = 0;
  bool truncated = false;

  /// Effective ambient dimension: the number of retained eigenvalues.
  int dim() const { return static_cast<int>(values.size()); }

  /// Validates ordering and the PSD floor; values in [-1e-10, 0) are clamped
  /// to zero, anything lower throws InvalidArgument.
  static EigenSpectrum from_values(std::vector<double> values, double r = 1.0, Index k = 0,
                                   bool truncated = false);
};

/// Sample covariance (1/(k-1)) sum (x_i - mean)(x_i - mean)^T of the rows.
Eigen::MatrixXd covariance(const RowMatrix& points);

/// Eigenvalues of a symmetric matrix, nonincreasing.
/// Throws InvalidArgument if asymmetric beyond 1e-12 (relative to the largest entry).
std::vector<double> eigenvalues_desc(const Eigen::MatrixXd& matrix);

/// Normalized spectrum of the covariance of the first k neighbors.
///
/// When D > k the nonzero eigenvalues are taken from the k x k Gram matrix of
/// the centered neighbors, which shares them with the D x D covariance. With
/// `truncate` set (and D > k) only the leading k values are kept, so the
/// effective ambient dimension becomes k.
EigenSpectrum local_spectrum(const PointCloud& cloud, const Neighborhood& nbhd, bool truncate = false);

inline constexpr double kPsdFloor = 1e-10;

}  // namespace capca
