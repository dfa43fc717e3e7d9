#pragma once

#include "capca/pointcloud.hpp"
#include "capca/spectral.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace capca {

enum class EstimatorId { PCA, CAPCA, LB };

/// Lowercase CLI name: "pca", "capca", "lb".
std::string_view to_string(EstimatorId id);
/// Inverse of to_string; throws InvalidArgument on unknown names.
EstimatorId parse_estimator(std::string_view name);

/// Covariance spectrum of the uniform measure on a unit d-ball inside R^D:
/// d copies of 1/(d+2) followed by D-d zeros.
struct ReferenceSpectrum {
  int d = 0;
  int ambient = 0;
  std::vector<double> values;
};

ReferenceSpectrum reference_spectrum(int d, int ambient);

/// Curvature calibration constants for hypothesized dimension d.
///
/// `high` scales the curvature aggregate A in the average leading eigenvalue,
/// `low` scales A in the tail sum, and `ratio` = high / low is the weight with
/// which the tail mass is moved back onto each leading eigenvalue.
struct CurvatureCoefficients {
  double high = 0.0;
  double low = 0.0;
  double ratio = 0.0;
};

CurvatureCoefficients curvature_coefficients(int d);

/// Leading d eigenvalues shifted up by ratio(d) times the tail sum; tail zeroed.
struct AdjustedSpectrum {
  int d = 0;
  std::vector<double> values;
  EigenSpectrum source;
};

AdjustedSpectrum adjusted_spectrum(const EigenSpectrum& spectrum, int d);

/// l2 distance between the reference spectrum and the adjusted spectrum.
double l2_misfit(const EigenSpectrum& spectrum, int d);

/// l2_misfit plus the tail-average l1 penalty (1/(D-d)) |spectrum - adjusted|_1,
/// which is dropped at d = D.
double capca_objective(const EigenSpectrum& spectrum, int d);

/// l2 distance between the unadjusted spectrum and the reference spectrum.
double pca_misfit(const EigenSpectrum& spectrum, int d);

/// argmin over d in 1..D of capca_objective; ties go to the smaller d.
int capca_estimate(const EigenSpectrum& spectrum);

/// argmin over d in 1..D of pca_misfit; ties go to the smaller d.
int pca_estimate(const EigenSpectrum& spectrum);

enum class LbDenominator {
  Original,   ///< 1/(k-1)
  Corrected,  ///< 1/(k-2), the bias-corrected variant
};

/// Levina-Bickel maximum likelihood estimate from the sorted distances
/// T_1 <= ... <= T_k of the k nearest neighbors, at scale T_k.
double lb_estimate(std::span<const double> distances, LbDenominator denominator = LbDenominator::Original);

struct PointEstimateOptions {
  bool truncate = false;
  LbDenominator lb_denominator = LbDenominator::Original;
};

/// Per-point estimate from an already computed neighborhood (uses its k).
/// PCA and CA-PCA return integers cast to double; LB returns the real MLE.
double estimate_from_neighborhood(const PointCloud& cloud, const Neighborhood& nbhd, EstimatorId estimator,
                                  PointEstimateOptions options = {});

double estimate_at_point(const PointCloud& cloud, Index index, Index k, EstimatorId estimator,
                         PointEstimateOptions options = {});

}  // namespace capca
