#pragma once

#include "capca/pointcloud.hpp"
#include "capca/rng.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace capca {

/// (a + b cos v) cos u, (a + b cos v) sin u, b sin v cos(u/2), b sin v sin(u/2),
/// with (u, v) uniform on [0, 2 pi)^2. Requires a > b > 0.
struct KleinBottle {
  double a = 10.0;
  double b = 5.0;
};

/// Unit sphere S^dim in R^{dim+1}, uniform in surface measure.
struct Sphere {
  int dim = 2;
};

/// theta -> (cos theta, sin theta, ..., cos(m theta), sin(m theta)) in R^{2m},
/// theta uniform on [0, 2 pi).
struct FourierCurve {
  int max_freq = 4;
};

/// Haar-uniform SO(n), flattened row-major into R^{n*n}.
struct SpecialOrthogonal {
  int n = 3;
};

/// Haar SO(3) in R^9 followed by the 3-torus (sin t_i, cos t_i)_{i=1..3} in R^6.
struct So3PlusTorus3 {};

/// Uniform in [0, L_1] x ... x [0, L_D].
struct Box {
  std::vector<double> edges{1.0, 1.0, 1.0};
};

/// First floor(n/2) points on the circle (x1-4)^2 + x2^2 = 16 in the x1-x2
/// plane of R^4, the rest uniform on the unit S^3.
struct CircleUnionS3 {};

/// Uniform grey-scale images: the unit cube of R^{width*height}.
struct RandomImages {
  int width = 64;
  int height = 64;
};

using ManifoldSpec =
    std::variant<KleinBottle, Sphere, FourierCurve, SpecialOrthogonal, So3PlusTorus3, Box, CircleUnionS3, RandomImages>;

/// Short kind name, e.g. "klein", "special_orthogonal".
std::string_view kind_name(const ManifoldSpec& spec);
int ambient_dim(const ManifoldSpec& spec);
/// The dimension of the sampled set (for the union, the larger component).
int intrinsic_dim(const ManifoldSpec& spec);

/// Per-kind parameters as read from the command line.
struct ManifoldParams {
  double a = 10.0;
  double b = 5.0;
  int dim = 2;
  int max_freq = 4;
  std::vector<double> edges{1.0, 1.0, 1.0};
  int width = 64;
  int height = 64;
};

/// Builds a spec from a kind name and parameters; throws InvalidArgument on
/// unknown kinds or invalid parameters.
ManifoldSpec make_manifold(std::string_view kind, const ManifoldParams& params);

void validate(const ManifoldSpec& spec);

/// n points on the set. Point i is generated from its own substream of `seed`,
/// so the output is a pure function of (spec, n, seed).
PointCloud sample(const ManifoldSpec& spec, Index n, std::uint64_t seed);

/// Adds an independent uniform (-eps, eps) perturbation to each coordinate.
PointCloud add_noise(const PointCloud& cloud, double eps, std::uint64_t seed);

/// The Klein bottle parametrization at (u, v).
Eigen::RowVectorXd klein_point(const KleinBottle& klein, double u, double v);

/// The curve at angle theta.
Eigen::RowVectorXd fourier_point(const FourierCurve& curve, double theta);

/// Haar-distributed matrix in O(n): QR of a Gaussian matrix with the signs of
/// R's diagonal moved into Q.
Eigen::MatrixXd haar_orthogonal(int n, Rng& rng);

/// Haar-distributed matrix in SO(n): haar_orthogonal with the first column
/// negated when the determinant is -1.
Eigen::MatrixXd haar_special_orthogonal(int n, Rng& rng);

}  // namespace capca
