#include "capca/pointcloud.hpp"

#include "capca/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>

namespace capca {

PointCloud::PointCloud(RowMatrix points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  if (points_.rows() < 1 || points_.cols() < 1) {
    throw InvalidArgument("empty cloud");
  }
  if (!points_.allFinite()) {
    throw InvalidArgument("point cloud contains a non-finite coordinate");
  }
}

Neighborhood Neighborhood::prefix(Index k) const {
  if (k < 1 || k > this->k()) {
    throw InvalidArgument("prefix k=" + std::to_string(k) + " outside [1, " +
                          std::to_string(this->k()) + "]");
  }
  Neighborhood out;
  out.center = center;
  out.indices.assign(indices.begin(), indices.begin() + k + 1);
  out.distances.assign(distances.begin(), distances.begin() + k + 1);
  out.r = 0.5 * (out.distances[k - 1] + out.distances[k]);
  if (!(out.r > 0.0)) {
    throw DegenerateNeighborhood("degenerate neighborhood at point " + std::to_string(center) +
                                 ", k=" + std::to_string(k));
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

PointCloud load_csv(const std::filesystem::path& path, CsvOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }

  std::vector<double> values;
  Index cols = -1;
  Index rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (options.header && line_no == 1) continue;
    std::string_view view = trim(line);
    if (view.empty()) continue;

    Index count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = view.find(',', start);
      const std::string_view cell =
          trim(view.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError("non-numeric cell at row " + std::to_string(line_no) + ", column " +
                         std::to_string(count + 1));
      }
      values.push_back(value);
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols < 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("ragged row " + std::to_string(line_no));
    }
    ++rows;
  }
  if (in.bad()) {
    throw IoError("read failure on " + path.string());
  }
  if (rows == 0) {
    throw ParseError("empty file " + path.string());
  }

  RowMatrix points = Eigen::Map<RowMatrix>(values.data(), rows, cols);
  return PointCloud(std::move(points), path.filename().string());
}

void write_csv(const PointCloud& cloud, std::ostream& out) {
  char buffer[64];
  std::string line;
  for (Index i = 0; i < cloud.size(); ++i) {
    line.clear();
    for (Index j = 0; j < cloud.dim(); ++j) {
      if (j > 0) line.push_back(',');
      const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), cloud.points()(i, j));
      line.append(buffer, ptr);
    }
    line.push_back('\n');
    out << line;
  }
}

void save_csv(const PointCloud& cloud, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  write_csv(cloud, out);
  if (!out) {
    throw IoError("write failure on " + path.string());
  }
}

Neighborhood knn(const PointCloud& cloud, Index center, Index k) {
  const Index n = cloud.size();
  if (center < 0 || center >= n) {
    throw InvalidArgument("center index " + std::to_string(center) + " out of range");
  }
  if (k < 1 || k > n - 2) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside [1, n-2] for n=" + std::to_string(n));
  }

  const auto x = cloud.point(center);
  std::vector<std::pair<double, Index>> candidates;
  candidates.reserve(static_cast<std::size_t>(n - 1));
  for (Index i = 0; i < n; ++i) {
    if (i == center) continue;
    candidates.emplace_back((cloud.point(i) - x).squaredNorm(), i);
  }
  // (squared distance, index) is a total order, so the selection is unique.
  const auto middle = candidates.begin() + (k + 1);
  std::partial_sort(candidates.begin(), middle, candidates.end());

  Neighborhood nbhd;
  nbhd.center = center;
  nbhd.indices.reserve(static_cast<std::size_t>(k + 1));
  nbhd.distances.reserve(static_cast<std::size_t>(k + 1));
  for (auto it = candidates.begin(); it != middle; ++it) {
    nbhd.indices.push_back(it->second);
    nbhd.distances.push_back(std::sqrt(it->first));
  }
  nbhd.r = 0.5 * (nbhd.distances[k - 1] + nbhd.distances[k]);
  if (!(nbhd.r > 0.0)) {
    throw DegenerateNeighborhood("degenerate neighborhood at point " + std::to_string(center) +
                                 ", k=" + std::to_string(k));
  }
  return nbhd;
}

}  // namespace capca
