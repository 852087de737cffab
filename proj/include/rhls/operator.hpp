#pragma once

#include <functional>

#include "rhls/indices.hpp"
#include "rhls/quadrature.hpp"

namespace rhls::op {

// Radial function on the boundary hyperplane, given as a callable profile plus
// the decay metadata the adaptive machinery needs. Tf converges only when
// decay_exponent > alpha - 1 (the integrand behaves like s^{alpha-2-decay}).
struct RadialBoundaryFunction {
    std::function<double(double)> profile;
    double decay_exponent = 0.0;
    bool positive = true;
    double scale = 1.0;          // characteristic radius of the profile
    double support_radius = 0.0; // 0 means unbounded support
};

// The rescaled family f^lambda(y) = lambda^{(n-1)/p} f(lambda y); both sides of
// the inequality are invariant under it in the critical regime.
RadialBoundaryFunction scaled(const RadialBoundaryFunction& f, double lambda, int n, double p);

// omega_{n-2} int_0^inf f(s) s^{n-2} ds (the large-height limit of Tf).
double radial_profile_integral(const RadialBoundaryFunction& f, int n,
                               const quad::QuadratureConfig& cfg);

// Tf(x) = x_n^beta int_{dR^n_+} |x-y|^{alpha-n} f(y) dy at x = (|x'|, x_n) = (r, x_n),
// reduced to a 1-D radial integral through the angular factor. Evaluation at
// x_n = 0 is the closure trace (exact for beta = 0, zero for beta > 0).
double apply_T(const RadialBoundaryFunction& f, double r, double x_n,
               const indices::ExponentSet& es, const quad::QuadratureConfig& cfg);

// (omega_{n-2} int_0^inf f(r)^p r^{n-2} dr)^{1/p} for 0 < p < 1. Not a norm;
// no triangle inequality is used anywhere.
double lp_boundary_norm(const RadialBoundaryFunction& f, int n, double p,
                        const quad::QuadratureConfig& cfg);

// Positive function on the half space, radial in the tangential block, with
// the growth/boundary metadata needed to integrate its negative powers:
// g(r, x_n) ~ x_n^boundary_exponent near the boundary and
// g ~ x_n^boundary_exponent |x|^growth_exponent far out.
struct HalfSpaceFunction {
    std::function<double(double, double)> value;
    double boundary_exponent = 0.0;
    double growth_exponent = 0.0;
    double scale = 1.0;
};

// Wraps apply_T with the metadata implied by the exponent set; the inner
// quadrature budget is tightened so that the |q|-fold error amplification of
// the negative power stays inside cfg's tolerance.
HalfSpaceFunction t_field(const RadialBoundaryFunction& f, const indices::ExponentSet& es,
                          const quad::QuadratureConfig& cfg);

// (omega_{n-2} int_0^inf int_0^inf g(r,x_n)^q r^{n-2} dr dx_n)^{1/q} for q < 0.
// The x_n integral near 0 runs through the flattening substitution with
// exponent boundary_exponent * q (integrable precisely when beta q + 1 > 0).
double lq_halfspace_norm(const HalfSpaceFunction& g, int n, double q,
                         const quad::QuadratureConfig& cfg);

// Plain power functional (int_rect g^q)^{1/q} on a coordinate rectangle,
// without surface weights; test support for the q < 0 machinery.
double lq_norm_on_rectangle(const std::function<double(double, double)>& g, double q, double r_lo,
                            double r_hi, double x_lo, double x_hi,
                            const quad::QuadratureConfig& cfg);

// ||Tf||_q / ||f||_p; bounded below by the sharp constant for admissible f.
double functional_ratio(const RadialBoundaryFunction& f, const indices::ExponentSet& es,
                        const quad::QuadratureConfig& cfg);

}  // namespace rhls::op
