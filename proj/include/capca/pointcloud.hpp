#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace capca {

using Index = Eigen::Index;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// An immutable n x D sample, one point per row.
///
/// Construction enforces n >= 1, D >= 1 and finite coordinates. Row order is
/// kept exactly as given.
class PointCloud {
 public:
  explicit PointCloud(RowMatrix points, std::string label = {});

  Index size() const { return points_.rows(); }
  Index dim() const { return points_.cols(); }

  auto point(Index i) const { return points_.row(i); }
  const RowMatrix& points() const { return points_; }
  const std::string& label() const { return label_; }

 private:
  RowMatrix points_;
  std::string label_;
};

/// The k+1 nearest neighbors of a center point, nearest first.
///
/// The first k neighbors are the local sample; the (k+1)-th only enters the
/// normalization radius r = (T_k + T_{k+1}) / 2.
struct Neighborhood {
  Index center = 0;
  std::vector<Index> indices;
  std::vector<double> distances;
  double r = 0.0;

  Index k() const { return static_cast<Index>(indices.size()) - 1; }

  /// Neighborhood of the same center with a smaller k (the first k+1 entries).
  /// Throws DegenerateNeighborhood when the prefix radius is zero.
  Neighborhood prefix(Index k) const;
};

struct CsvOptions {
  bool header = false;  ///< skip the first line on load
};

PointCloud load_csv(const std::filesystem::path& path, CsvOptions options = {});

/// Writes shortest round-trip decimal representations, LF line endings.
void save_csv(const PointCloud& cloud, const std::filesystem::path& path);
void write_csv(const PointCloud& cloud, std::ostream& out);

/// Exact Euclidean k+1 nearest neighbors of `center`, excluding the center
/// itself by index. Ties are broken by ascending point index.
///
/// Requires 1 <= k <= n-2. Throws DegenerateNeighborhood when r = 0.
Neighborhood knn(const PointCloud& cloud, Index center, Index k);

}  // namespace capca
