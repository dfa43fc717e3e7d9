#include "capca/spectral.hpp"

#include "capca/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace capca {

EigenSpectrum EigenSpectrum::from_values(std::vector<double> values, double r, Index k, bool truncated) {
  if (values.empty()) {
    throw InvalidArgument("empty spectrum");
  }
  if (!(r > 0.0)) {
    throw DegenerateNeighborhood("spectrum normalization radius must be positive");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] > values[i - 1]) {
      throw InvalidArgument("spectrum values must be nonincreasing");
    }
    if (values[i] < 0.0) {
      if (values[i] < -kPsdFloor) {
        throw InvalidArgument("eigenvalue " + std::to_string(values[i]) + " below the PSD floor");
      }
      values[i] = 0.0;
    }
  }
  return EigenSpectrum{std::move(values), r, k, truncated};
}

Eigen::MatrixXd covariance(const RowMatrix& points) {
  const Index k = points.rows();
  if (k < 2) {
    throw InvalidArgument("covariance needs at least 2 points");
  }
  const Eigen::RowVectorXd mean = points.colwise().mean();
  const RowMatrix centered = points.rowwise() - mean;
  Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(k - 1);
  // Exact symmetry for the eigensolver.
  return 0.5 * (cov + cov.transpose());
}

std::vector<double> eigenvalues_desc(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw InvalidArgument("eigenvalues_desc needs a nonempty square matrix");
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& ascending = solver.eigenvalues();
  return std::vector<double>(ascending.reverse().begin(), ascending.reverse().end());
}

EigenSpectrum local_spectrum(const PointCloud& cloud, const Neighborhood& nbhd, bool truncate) {
  const Index k = nbhd.k();
  if (k < 2) {
    throw InvalidArgument("local spectrum needs k >= 2");
  }
  if (!(nbhd.r > 0.0)) {
    throw DegenerateNeighborhood("degenerate neighborhood at point " + std::to_string(nbhd.center));
  }
  const Index dim = cloud.dim();

  RowMatrix sample(k, dim);
  for (Index i = 0; i < k; ++i) {
    sample.row(i) = cloud.point(nbhd.indices[static_cast<std::size_t>(i)]);
  }

  std::vector<double> values;
  if (dim > k) {
    const Eigen::RowVectorXd mean = sample.colwise().mean();
    const RowMatrix centered = sample.rowwise() - mean;
    Eigen::MatrixXd gram = centered * centered.transpose() / static_cast<double>(k - 1);
    gram = 0.5 * (gram + gram.transpose());
    values = eigenvalues_desc(gram);
    if (!truncate) {
      values.resize(static_cast<std::size_t>(dim), 0.0);
    }
  } else {
    values = eigenvalues_desc(covariance(sample));
  }

  const double scale = 1.0 / (nbhd.r * nbhd.r);
  for (double& v : values) v *= scale;
  // The solver may return tiny negative values in the wrong order relative to zeros.
  std::sort(values.begin(), values.end(), std::greater<>());
  return EigenSpectrum::from_values(std::move(values), nbhd.r, k, truncate && dim > k);
}

}  // namespace capca
