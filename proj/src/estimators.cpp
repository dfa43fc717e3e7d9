#include "capca/estimators.hpp"

#include "capca/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace capca {

std::string_view to_string(EstimatorId id) {
  switch (id) {
    case EstimatorId::PCA:
      return "pca";
    case EstimatorId::CAPCA:
      return "capca";
    case EstimatorId::LB:
      return "lb";
  }
  return "?";
}

EstimatorId parse_estimator(std::string_view name) {
  if (name == "pca" || name == "PCA") return EstimatorId::PCA;
  if (name == "capca" || name == "CAPCA" || name == "ca-pca" || name == "CA-PCA") return EstimatorId::CAPCA;
  if (name == "lb" || name == "LB") return EstimatorId::LB;
  throw InvalidArgument("unknown estimator '" + std::string(name) + "'");
}

ReferenceSpectrum reference_spectrum(int d, int ambient) {
  if (ambient < 1 || d < 1 || d > ambient) {
    throw InvalidArgument("reference spectrum needs 1 <= d <= D, got d=" + std::to_string(d) +
                          ", D=" + std::to_string(ambient));
  }
  ReferenceSpectrum ref{d, ambient, std::vector<double>(static_cast<std::size_t>(ambient), 0.0)};
  for (int i = 0; i < d; ++i) ref.values[static_cast<std::size_t>(i)] = 1.0 / (d + 2);
  return ref;
}

CurvatureCoefficients curvature_coefficients(int d) {
  if (d < 1) {
    throw InvalidArgument("curvature coefficients need d >= 1");
  }
  const double x = d;
  const double numerator = 5.0 * x * x + 6.0 * x + 8.0;
  CurvatureCoefficients c;
  c.high = numerator / (x * (x + 2.0) * (x + 2.0) * (x + 2.0) * (x + 4.0));
  c.low = 1.0 / ((x + 2.0) * (x + 2.0));
  c.ratio = numerator / (x * (x + 2.0) * (x + 4.0));
  return c;
}

namespace {

void check_dimension(const EigenSpectrum& spectrum, int d) {
  if (d < 1 || d > spectrum.dim()) {
    throw InvalidArgument("hypothesized dimension " + std::to_string(d) + " outside [1, " +
                          std::to_string(spectrum.dim()) + "]");
  }
}

/// Suffix sums and the count of leading nonzero values, shared by all d.
///
/// Values past `support` are exactly zero, which lets the per-d objectives
/// collapse their contribution into a single multiplication. That matters for
/// untruncated image-sized spectra with thousands of structural zeros.
class SpectrumSums {
 public:
  explicit SpectrumSums(const std::vector<double>& values)
      : values_(values), tail_(values.size() + 1, 0.0), tail_sq_(values.size() + 1, 0.0) {
    for (std::size_t j = values.size(); j-- > 0;) {
      tail_[j] = tail_[j + 1] + values[j];
      tail_sq_[j] = tail_sq_[j + 1] + values[j] * values[j];
    }
    support_ = values.size();
    while (support_ > 0 && values[support_ - 1] == 0.0) --support_;
  }

  struct CapcaTerms {
    double l2 = 0.0;
    double penalty = 0.0;
  };

  CapcaTerms capca(int d) const {
    const std::size_t dd = static_cast<std::size_t>(d);
    const std::size_t ambient = values_.size();
    const double tail = tail_[dd];
    const double shift = curvature_coefficients(d).ratio * tail;
    const double ref = 1.0 / (d + 2);
    double sq = 0.0;
    const std::size_t dense = std::min(dd, support_);
    for (std::size_t i = 0; i < dense; ++i) {
      const double diff = ref - (values_[i] + shift);
      sq += diff * diff;
    }
    // Past the support the values are zero and so is the tail, hence shift = 0.
    sq += static_cast<double>(dd - dense) * ref * ref;

    CapcaTerms terms;
    terms.l2 = std::sqrt(sq);
    if (dd < ambient) {
      // |spectrum - adjusted|_1: d shifts on the leading block plus the tail mass.
      terms.penalty = (static_cast<double>(dd) * shift + tail) / static_cast<double>(ambient - dd);
    }
    return terms;
  }

  double pca(int d) const {
    const std::size_t dd = static_cast<std::size_t>(d);
    const double ref = 1.0 / (d + 2);
    double sq = 0.0;
    const std::size_t dense = std::min(dd, support_);
    for (std::size_t i = 0; i < dense; ++i) {
      const double diff = values_[i] - ref;
      sq += diff * diff;
    }
    sq += static_cast<double>(dd - dense) * ref * ref;
    sq += tail_sq_[dd];
    return std::sqrt(sq);
  }

 private:
  const std::vector<double>& values_;
  std::vector<double> tail_;
  std::vector<double> tail_sq_;
  std::size_t support_ = 0;
};

}  // namespace

AdjustedSpectrum adjusted_spectrum(const EigenSpectrum& spectrum, int d) {
  check_dimension(spectrum, d);
  const std::size_t dd = static_cast<std::size_t>(d);
  double tail = 0.0;
  for (std::size_t j = dd; j < spectrum.values.size(); ++j) tail += spectrum.values[j];
  const double shift = curvature_coefficients(d).ratio * tail;

  AdjustedSpectrum adjusted{d, std::vector<double>(spectrum.values.size(), 0.0), spectrum};
  for (std::size_t i = 0; i < dd; ++i) adjusted.values[i] = spectrum.values[i] + shift;
  return adjusted;
}

double l2_misfit(const EigenSpectrum& spectrum, int d) {
  check_dimension(spectrum, d);
  return SpectrumSums(spectrum.values).capca(d).l2;
}

double capca_objective(const EigenSpectrum& spectrum, int d) {
  check_dimension(spectrum, d);
  const auto terms = SpectrumSums(spectrum.values).capca(d);
  return terms.l2 + terms.penalty;
}

double pca_misfit(const EigenSpectrum& spectrum, int d) {
  check_dimension(spectrum, d);
  return SpectrumSums(spectrum.values).pca(d);
}

int capca_estimate(const EigenSpectrum& spectrum) {
  const SpectrumSums sums(spectrum.values);
  int best = 1;
  double best_value = 0.0;
  for (int d = 1; d <= spectrum.dim(); ++d) {
    const auto terms = sums.capca(d);
    const double value = terms.l2 + terms.penalty;
    if (d == 1 || value < best_value) {
      best = d;
      best_value = value;
    }
  }
  return best;
}

int pca_estimate(const EigenSpectrum& spectrum) {
  const SpectrumSums sums(spectrum.values);
  int best = 1;
  double best_value = 0.0;
  for (int d = 1; d <= spectrum.dim(); ++d) {
    const double value = sums.pca(d);
    if (d == 1 || value < best_value) {
      best = d;
      best_value = value;
    }
  }
  return best;
}

double lb_estimate(std::span<const double> distances, LbDenominator denominator) {
  const std::size_t k = distances.size();
  const std::size_t minimum = denominator == LbDenominator::Original ? 2 : 3;
  if (k < minimum) {
    throw InvalidArgument("LB estimate needs at least " + std::to_string(minimum) + " distances");
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!(distances[j] > 0.0)) {
      throw DegenerateNeighborhood("LB estimate needs strictly positive neighbor distances");
    }
    if (j > 0 && distances[j] < distances[j - 1]) {
      throw InvalidArgument("LB distances must be nondecreasing");
    }
  }
  const double scale = distances[k - 1];
  double log_sum = 0.0;
  for (std::size_t j = 0; j + 1 < k; ++j) log_sum += std::log(scale / distances[j]);
  if (!(log_sum > 0.0)) {
    throw DegenerateNeighborhood("LB estimate undefined: all neighbor distances are equal");
  }
  const double count = denominator == LbDenominator::Original ? static_cast<double>(k - 1)
                                                               : static_cast<double>(k - 2);
  return count / log_sum;
}

double estimate_from_neighborhood(const PointCloud& cloud, const Neighborhood& nbhd, EstimatorId estimator,
                                  PointEstimateOptions options) {
  switch (estimator) {
    case EstimatorId::LB: {
      const std::span<const double> distances(nbhd.distances.data(), static_cast<std::size_t>(nbhd.k()));
      return lb_estimate(distances, options.lb_denominator);
    }
    case EstimatorId::PCA:
      return pca_estimate(local_spectrum(cloud, nbhd, options.truncate));
    case EstimatorId::CAPCA:
      return capca_estimate(local_spectrum(cloud, nbhd, options.truncate));
  }
  throw InvalidArgument("unknown estimator");
}

double estimate_at_point(const PointCloud& cloud, Index index, Index k, EstimatorId estimator,
                         PointEstimateOptions options) {
  return estimate_from_neighborhood(cloud, knn(cloud, index, k), estimator, options);
}

}  // namespace capca
