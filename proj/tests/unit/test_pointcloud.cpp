#include "capca/errors.hpp"
#include "capca/pointcloud.hpp"
#include "capca/samplers.hpp"
#include "common.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace capca;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

/// Reference semantics: sort every other point by (distance, index).
std::vector<std::pair<double, Index>> brute_force(const PointCloud& cloud, Index center) {
  std::vector<std::pair<double, Index>> all;
  for (Index i = 0; i < cloud.size(); ++i) {
    if (i == center) continue;
    all.emplace_back((cloud.point(i) - cloud.point(center)).norm(), i);
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_SUITE("pointcloud") {

TEST_CASE("load_csv parses rows and columns") {
  const auto cloud = load_csv(testing::write_file("two.csv", "1,0\n0,1\n"));
  CHECK(cloud.size() == 2);
  CHECK(cloud.dim() == 2);
  CHECK(cloud.points()(0, 0) == 1.0);
  CHECK(cloud.points()(1, 1) == 1.0);
}

TEST_CASE("load_csv errors") {
  CHECK(error_of([] { load_csv(testing::write_file("ragged.csv", "1,0\n0")); }) == "ragged row 2");
  const auto message = error_of([] { load_csv(testing::write_file("nan.csv", "1,0\n0,abc\n")); });
  CHECK(message.find("row 2") != std::string::npos);
  CHECK(message.find("column 2") != std::string::npos);
  CHECK(error_of([] { load_csv(testing::write_file("empty.csv", "")); }).starts_with("empty file"));
  CHECK_THROWS_AS(load_csv(testing::temp_path("does-not-exist.csv")), IoError);
  CHECK_THROWS_AS(load_csv(testing::write_file("inf.csv", "1,inf\n")), Error);
}

TEST_CASE("header flag skips the first line") {
  const auto path = testing::write_file("header.csv", "x,y\n1,2\n3,4\n");
  CHECK_THROWS_AS(load_csv(path), ParseError);
  const auto cloud = load_csv(path, {true});
  CHECK(cloud.size() == 2);
  CHECK(cloud.points()(1, 0) == 3.0);
}

TEST_CASE("empty cloud is rejected") {
  CHECK(error_of([] { PointCloud(RowMatrix(0, 3)); }) == "empty cloud");
}

TEST_CASE("save then load reproduces coordinates") {
  Rng rng(11);
  RowMatrix pts(50, 6);
  for (Index i = 0; i < pts.rows(); ++i)
    for (Index j = 0; j < pts.cols(); ++j) pts(i, j) = rng.normal() * std::pow(10.0, rng.uniform(-8, 8));
  const PointCloud cloud(pts);
  const auto path = testing::temp_path("roundtrip.csv");
  save_csv(cloud, path);
  const auto back = load_csv(path);
  REQUIRE(back.size() == cloud.size());
  REQUIRE(back.dim() == cloud.dim());
  CHECK((back.points() - cloud.points()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(back.points() == cloud.points());
}

TEST_CASE("klein sample writes 400 lines of 4 columns") {
  const auto cloud = sample(KleinBottle{10, 5}, 400, 1);
  const auto path = testing::temp_path("klein400.csv");
  save_csv(cloud, path);
  const auto text = testing::read_file(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 400);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) REQUIRE(std::count(line.begin(), line.end(), ',') == 3);
}

TEST_CASE("image-shaped file loads as 698 x 4096") {
  const auto cloud = sample(RandomImages{64, 64}, 698, 3);
  const auto path = testing::temp_path("images.csv");
  save_csv(cloud, path);
  const auto back = load_csv(path);
  CHECK(back.size() == 698);
  CHECK(back.dim() == 4096);
}

TEST_CASE("knn on a hand-computable line") {
  RowMatrix pts(4, 1);
  pts << 0, 1, 2, 10;
  const auto nbhd = knn(PointCloud(pts), 0, 2);
  CHECK(nbhd.indices == std::vector<Index>{1, 2, 3});
  CHECK(nbhd.distances == std::vector<double>{1, 2, 10});
  CHECK(nbhd.r == 6.0);
  CHECK(nbhd.k() == 2);
}

TEST_CASE("knn rejects out of range k and degenerate neighborhoods") {
  RowMatrix pts(4, 2);
  pts << 0, 0, 0, 0, 0, 0, 1, 1;
  const PointCloud cloud(pts);
  CHECK(error_of([&] { knn(cloud, 0, 1); }).find("degenerate neighborhood") != std::string::npos);
  CHECK_THROWS_AS(knn(cloud, 0, 1), DegenerateNeighborhood);
  CHECK_THROWS_AS(knn(cloud, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(knn(cloud, 0, 3), InvalidArgument);
  CHECK_THROWS_AS(knn(cloud, 4, 1), InvalidArgument);
  CHECK_NOTHROW(knn(cloud, 0, 2));
}

TEST_CASE("knn matches the brute-force oracle on S^2") {
  const auto cloud = sample(Sphere{2}, 1000, 5);
  for (Index center : {0, 17, 500, 999}) {
    const auto nbhd = knn(cloud, center, 20);
    const auto ref = brute_force(cloud, center);
    REQUIRE(nbhd.indices.size() == 21);
    for (std::size_t i = 0; i < 21; ++i) {
      CHECK(nbhd.indices[i] == ref[i].second);
      CHECK(nbhd.distances[i] == doctest::Approx(ref[i].first).epsilon(1e-14));
    }
    CHECK(nbhd.r >= nbhd.distances[19]);
    CHECK(nbhd.r <= nbhd.distances[20]);
    CHECK(std::find(nbhd.indices.begin(), nbhd.indices.end(), center) == nbhd.indices.end());
    CHECK(std::is_sorted(nbhd.distances.begin(), nbhd.distances.end()));
  }
}

TEST_CASE("ties break by ascending index") {
  RowMatrix pts(5, 1);
  pts << 0, 1, -1, 1, -1;
  const auto nbhd = knn(PointCloud(pts), 0, 3);
  CHECK(nbhd.indices == std::vector<Index>{1, 2, 3, 4});
}

TEST_CASE("distances are invariant to row order") {
  const auto cloud = sample(Sphere{3}, 300, 8);
  std::vector<Index> perm(300);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(9);
  for (std::size_t i = perm.size(); i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
  RowMatrix shuffled(300, 4);
  for (Index i = 0; i < 300; ++i) shuffled.row(i) = cloud.point(perm[static_cast<std::size_t>(i)]);
  const PointCloud other(shuffled);
  for (Index i = 0; i < 300; i += 37) {
    const auto a = knn(other, i, 15);
    const auto b = knn(cloud, perm[static_cast<std::size_t>(i)], 15);
    for (std::size_t j = 0; j < a.distances.size(); ++j) CHECK(a.distances[j] == b.distances[j]);
    CHECK(a.r == b.r);
  }
}

TEST_CASE("prefix agrees with a direct query") {
  const auto cloud = sample(Sphere{2}, 200, 2);
  const auto full = knn(cloud, 3, 30);
  for (Index k : {1, 5, 29, 30}) {
    const auto direct = knn(cloud, 3, k);
    const auto pre = full.prefix(k);
    CHECK(pre.indices == direct.indices);
    CHECK(pre.distances == direct.distances);
    CHECK(pre.r == direct.r);
  }
}

}  // TEST_SUITE
