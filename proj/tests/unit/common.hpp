#pragma once

#include "capca/pointcloud.hpp"
#include "capca/rng.hpp"

#include <filesystem>
#include <fstream>
#include <string>

namespace testing {

inline std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::path(CAPCA_TEST_TMPDIR) / name;
}

inline std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto path = temp_path(name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Uniform sample of the unit d-ball placed in the first d coordinates of R^D.
inline capca::RowMatrix ball_sample(int d, int ambient, capca::Index n, std::uint64_t seed) {
  capca::Rng rng(seed);
  capca::RowMatrix pts = capca::RowMatrix::Zero(n, ambient);
  for (capca::Index i = 0; i < n; ++i) {
    Eigen::VectorXd x(d);
    do {
      for (int j = 0; j < d; ++j) x(j) = rng.uniform(-1.0, 1.0);
    } while (x.squaredNorm() > 1.0);
    pts.row(i).head(d) = x.transpose();
  }
  return pts;
}

/// Axis-aligned integer lattice {0..side-1}^d, embedded in R^D by `frame`
/// (D x d with orthonormal columns) and shifted by `offset`.
inline capca::RowMatrix lattice(int d, int side, const Eigen::MatrixXd& frame, const Eigen::VectorXd& offset) {
  capca::Index count = 1;
  for (int j = 0; j < d; ++j) count *= side;
  capca::RowMatrix pts(count, frame.rows());
  for (capca::Index i = 0; i < count; ++i) {
    Eigen::VectorXd coords(d);
    capca::Index rest = i;
    for (int j = 0; j < d; ++j) {
      coords(j) = static_cast<double>(rest % side);
      rest /= side;
    }
    pts.row(i) = (frame * coords + offset).transpose();
  }
  return pts;
}

}  // namespace testing
