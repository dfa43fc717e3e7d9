#include "capca/samplers.hpp"

#include "capca/errors.hpp"

#include <cmath>
#include <numbers>

namespace capca {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void unit_sphere_point(Rng& rng, Eigen::Ref<Eigen::RowVectorXd> out) {
  double norm = 0.0;
  do {
    for (Index i = 0; i < out.size(); ++i) out(i) = rng.normal();
    norm = out.norm();
  } while (norm == 0.0);
  out /= norm;
}

}  // namespace

std::string_view kind_name(const ManifoldSpec& spec) {
  return std::visit(Overloaded{
                        [](const KleinBottle&) { return std::string_view("klein"); },
                        [](const Sphere&) { return std::string_view("sphere"); },
                        [](const FourierCurve&) { return std::string_view("fourier_curve"); },
                        [](const SpecialOrthogonal&) { return std::string_view("special_orthogonal"); },
                        [](const So3PlusTorus3&) { return std::string_view("so3_plus_torus3"); },
                        [](const Box&) { return std::string_view("box"); },
                        [](const CircleUnionS3&) { return std::string_view("circle_union_s3"); },
                        [](const RandomImages&) { return std::string_view("random_images"); },
                    },
                    spec);
}

int ambient_dim(const ManifoldSpec& spec) {
  return std::visit(Overloaded{
                        [](const KleinBottle&) { return 4; },
                        [](const Sphere& s) { return s.dim + 1; },
                        [](const FourierCurve& c) { return 2 * c.max_freq; },
                        [](const SpecialOrthogonal& g) { return g.n * g.n; },
                        [](const So3PlusTorus3&) { return 15; },
                        [](const Box& b) { return static_cast<int>(b.edges.size()); },
                        [](const CircleUnionS3&) { return 4; },
                        [](const RandomImages& r) { return r.width * r.height; },
                    },
                    spec);
}

int intrinsic_dim(const ManifoldSpec& spec) {
  return std::visit(Overloaded{
                        [](const KleinBottle&) { return 2; },
                        [](const Sphere& s) { return s.dim; },
                        [](const FourierCurve&) { return 1; },
                        [](const SpecialOrthogonal& g) { return g.n * (g.n - 1) / 2; },
                        [](const So3PlusTorus3&) { return 6; },
                        [](const Box& b) { return static_cast<int>(b.edges.size()); },
                        [](const CircleUnionS3&) { return 3; },
                        [](const RandomImages& r) { return r.width * r.height; },
                    },
                    spec);
}

void validate(const ManifoldSpec& spec) {
  std::visit(Overloaded{
                 [](const KleinBottle& k) {
                   if (!(k.a > k.b && k.b > 0.0)) throw InvalidArgument("klein requires a > b > 0");
                 },
                 [](const Sphere& s) {
                   if (s.dim < 1) throw InvalidArgument("sphere requires dim >= 1");
                 },
                 [](const FourierCurve& c) {
                   if (c.max_freq < 1) throw InvalidArgument("fourier_curve requires max_freq >= 1");
                 },
                 [](const SpecialOrthogonal& g) {
                   if (g.n < 2) throw InvalidArgument("special_orthogonal requires n >= 2");
                 },
                 [](const So3PlusTorus3&) {},
                 [](const Box& b) {
                   if (b.edges.empty()) throw InvalidArgument("box requires at least one edge length");
                   for (double e : b.edges) {
                     if (!(e > 0.0) || !std::isfinite(e)) throw InvalidArgument("box edge lengths must be > 0");
                   }
                 },
                 [](const CircleUnionS3&) {},
                 [](const RandomImages& r) {
                   if (r.width < 1 || r.height < 1) throw InvalidArgument("random_images requires a positive size");
                 },
             },
             spec);
}

ManifoldSpec make_manifold(std::string_view kind, const ManifoldParams& p) {
  ManifoldSpec spec;
  if (kind == "klein") {
    spec = KleinBottle{p.a, p.b};
  } else if (kind == "sphere") {
    spec = Sphere{p.dim};
  } else if (kind == "fourier_curve") {
    spec = FourierCurve{p.max_freq};
  } else if (kind == "special_orthogonal") {
    spec = SpecialOrthogonal{p.dim};
  } else if (kind == "so3_plus_torus3") {
    spec = So3PlusTorus3{};
  } else if (kind == "box") {
    spec = Box{p.edges};
  } else if (kind == "circle_union_s3") {
    spec = CircleUnionS3{};
  } else if (kind == "random_images") {
    spec = RandomImages{p.width, p.height};
  } else {
    throw InvalidArgument("unknown manifold kind '" + std::string(kind) + "'");
  }
  validate(spec);
  return spec;
}

Eigen::RowVectorXd klein_point(const KleinBottle& k, double u, double v) {
  const double ring = k.a + k.b * std::cos(v);
  Eigen::RowVectorXd p(4);
  p << ring * std::cos(u), ring * std::sin(u), k.b * std::sin(v) * std::cos(0.5 * u),
      k.b * std::sin(v) * std::sin(0.5 * u);
  return p;
}

Eigen::RowVectorXd fourier_point(const FourierCurve& c, double theta) {
  Eigen::RowVectorXd p(2 * c.max_freq);
  for (int m = 1; m <= c.max_freq; ++m) {
    p(2 * (m - 1)) = std::cos(m * theta);
    p(2 * (m - 1) + 1) = std::sin(m * theta);
  }
  return p;
}

Eigen::MatrixXd haar_orthogonal(int n, Rng& rng) {
  if (n < 1) throw InvalidArgument("haar_orthogonal needs n >= 1");
  Eigen::MatrixXd gaussian(n, n);
  // Row-major fill order so the stream consumption is layout independent.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gaussian(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

Eigen::MatrixXd haar_special_orthogonal(int n, Rng& rng) {
  Eigen::MatrixXd q = haar_orthogonal(n, rng);
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

PointCloud sample(const ManifoldSpec& spec, Index n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample needs n >= 1");
  validate(spec);
  const std::string tag(kind_name(spec));
  const int dim = ambient_dim(spec);
  RowMatrix points(n, dim);

  for (Index i = 0; i < n; ++i) {
    Rng rng = Rng::substream(seed, tag, static_cast<std::uint64_t>(i));
    auto row = points.row(i);
    std::visit(Overloaded{
                   [&](const KleinBottle& k) {
                     const double u = rng.uniform(0.0, kTwoPi);
                     const double v = rng.uniform(0.0, kTwoPi);
                     row = klein_point(k, u, v);
                   },
                   [&](const Sphere&) { unit_sphere_point(rng, row); },
                   [&](const FourierCurve& c) {
                     row = fourier_point(c, rng.uniform(0.0, kTwoPi));
                   },
                   [&](const SpecialOrthogonal& g) {
                     const Eigen::MatrixXd q = haar_special_orthogonal(g.n, rng);
                     for (int r = 0; r < g.n; ++r) {
                       for (int c = 0; c < g.n; ++c) row(r * g.n + c) = q(r, c);
                     }
                   },
                   [&](const So3PlusTorus3&) {
                     const Eigen::MatrixXd q = haar_special_orthogonal(3, rng);
                     for (int r = 0; r < 3; ++r) {
                       for (int c = 0; c < 3; ++c) row(r * 3 + c) = q(r, c);
                     }
                     for (int t = 0; t < 3; ++t) {
                       const double theta = rng.uniform(0.0, kTwoPi);
                       row(9 + 2 * t) = std::sin(theta);
                       row(9 + 2 * t + 1) = std::cos(theta);
                     }
                   },
                   [&](const Box& b) {
                     for (std::size_t j = 0; j < b.edges.size(); ++j) {
                       row(static_cast<Index>(j)) = rng.uniform(0.0, b.edges[j]);
                     }
                   },
                   [&](const CircleUnionS3&) {
                     if (i < n / 2) {
                       const double theta = rng.uniform(0.0, kTwoPi);
                       row << 4.0 + 4.0 * std::cos(theta), 4.0 * std::sin(theta), 0.0, 0.0;
                     } else {
                       unit_sphere_point(rng, row);
                     }
                   },
                   [&](const RandomImages&) {
                     for (Index j = 0; j < row.size(); ++j) row(j) = rng.uniform();
                   },
               },
               spec);
  }
  return PointCloud(std::move(points), std::string(kind_name(spec)));
}

PointCloud add_noise(const PointCloud& cloud, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument("noise half-width must be finite and >= 0");
  }
  if (eps == 0.0) return cloud;
  RowMatrix points = cloud.points();
  for (Index i = 0; i < points.rows(); ++i) {
    Rng rng = Rng::substream(seed, "noise", static_cast<std::uint64_t>(i));
    for (Index j = 0; j < points.cols(); ++j) points(i, j) += rng.uniform(-eps, eps);
  }
  return PointCloud(std::move(points), cloud.label());
}

}  // namespace capca
