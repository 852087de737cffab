#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rhls/errors.hpp"

namespace rhls::geom {

// Point on the boundary hyperplane dR^n_+, identified with R^{n-1}.
struct BoundaryPoint {
    std::vector<double> coords;

    int ambient_dim() const { return static_cast<int>(coords.size()) + 1; }
};

// Point of the (closed) half space, split as (x', x_n) with x_n >= 0.
struct HalfSpacePoint {
    std::vector<double> tangential;
    double height = 0.0;

    int ambient_dim() const { return static_cast<int>(tangential.size()) + 1; }
};

// Sphere of inversion: center z on the boundary, radius lambda > 0.
struct InversionSpec {
    BoundaryPoint center;
    double radius = 1.0;
};

// Overflow-safe euclidean norm (two-pass rescaling, as in BLAS nrm2).
double stable_norm(std::span<const double> v);

// |x - y| for the various point combinations; boundary points are embedded at
// height zero.
double distance(const HalfSpacePoint& x, const BoundaryPoint& y);
double distance(const HalfSpacePoint& x, const HalfSpacePoint& y);
double distance(const BoundaryPoint& x, const BoundaryPoint& y);

// Extended kernel x_n^beta |x-y|^{alpha-n}; requires alpha > n. Vanishes at
// coincidence and, for beta > 0, on the boundary. 0^0 = 1 so beta = 0 reduces
// to the plain Riesz kernel on the closed half space.
double kernel(double alpha, double beta, const HalfSpacePoint& x, const BoundaryPoint& y);

// Sphere inversion x^{z,lambda} = lambda^2 (x-z)/|x-z|^2 + z. Involutive.
// Throws CenterSingularity within 1e-14 of the center.
HalfSpacePoint invert(const HalfSpacePoint& x, const InversionSpec& spec);
BoundaryPoint invert(const BoundaryPoint& y, const InversionSpec& spec);

// Kelvin-type transform of a boundary function:
//   u_{z,lambda}(y) = (lambda/|y-z|)^{n-alpha} u(y^{z,lambda}).
// Applying it twice gives back u pointwise away from the center.
std::function<double(const BoundaryPoint&)> kelvin_boundary(
    std::function<double(const BoundaryPoint&)> u, InversionSpec spec, double alpha);

// Comparison kernel of the moving-sphere argument,
//   K(z,lambda,y,x) = (lambda/|x-z|)^{n-alpha} |x^{z,lambda}-y|^{alpha-n} - |x-y|^{alpha-n},
// evaluated in the cancellation-free form
//   (|x-z| |x^{z,lambda}-y| / lambda)^{alpha-n} - |x-y|^{alpha-n}.
// Its sign equals the sign of (lambda^2-|x-z|^2)(lambda^2-|y-z|^2).
double ms_kernel(const InversionSpec& spec, const BoundaryPoint& y, const HalfSpacePoint& x,
                 double alpha);

// sign((lambda^2-|x-z|^2)(lambda^2-|y-z|^2)), the predicted sign of ms_kernel.
int ms_kernel_predicted_sign(const InversionSpec& spec, const BoundaryPoint& y,
                             const HalfSpacePoint& x);

// Inversion of the half space onto the ball B_{lambda/2}((0,...,-lambda/2)):
// the image of xi under inversion about x_0 = (0,...,-lambda) with radius
// lambda. Boundary points land on the sphere, interior points inside.
// Returned as full ambient coordinates (the image leaves the half space).
std::vector<double> ball_map(const HalfSpacePoint& xi, double lambda);

// Residual of the pointwise identity tying the map to the ball:
//   lambda^{-1} |zeta - x_0|^2 xi_n  =  lambda^2/4 - |zeta - x_1|^2,
// zeta = ball_map(xi), x_1 = (0,...,-lambda/2). Zero up to rounding.
double ball_map_identity_residual(const HalfSpacePoint& xi, double lambda);

}  // namespace rhls::geom
