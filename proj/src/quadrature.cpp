#include "rhls/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace rhls::quad {

namespace {

// Fixed tight budget for the angular reduction; it sits innermost in nested
// integrals and must not inherit loose outer tolerances.
const QuadratureConfig kAngularCfg{1e-10, 1e-14, 30, 2.0};

}  // namespace

double angular_factor(int n, double r, double s, double x_n, double alpha) {
    if (!(alpha > n)) throw InvalidIndex("angular_factor requires alpha > n");
    if (n < 2) throw InvalidIndex("angular_factor requires n >= 2");
    if (r < 0 || s < 0 || x_n < 0) throw Error("angular_factor requires nonnegative r, s, x_n");
    if (r == 0 && s == 0 && x_n == 0) throw Error("angular_factor undefined at the origin");

    const double e = 0.5 * (alpha - n);
    if (n == 2) {
        const double dm = (r - s) * (r - s) + x_n * x_n;
        const double dp = (r + s) * (r + s) + x_n * x_n;
        return std::pow(dm, e) + std::pow(dp, e);
    }
    const double A = r * r + s * s + x_n * x_n;
    const double B = 2.0 * r * s;
    if (n == 3) {
        auto f = [&](double t) { return std::pow(A - B * std::cos(t), e); };
        return 2.0 * adaptive_1d(f, 0.0, std::numbers::pi, kAngularCfg).value;
    }
    const double w = sphere_surface_area(n - 3);
    auto f = [&](double t) {
        return std::pow(A - B * std::cos(t), e) * std::pow(std::sin(t), n - 3);
    };
    return w * adaptive_1d(f, 0.0, std::numbers::pi, kAngularCfg).value;
}

IntegralResult sphere_pair(int n, double rho, double alpha, const QuadratureConfig& cfg) {
    if (!(alpha > n)) throw InvalidIndex("sphere_pair requires alpha > n");
    if (!(rho >= 0.0 && rho <= 1.0)) throw Error("sphere_pair requires 0 <= rho <= 1");
    const double e = 0.5 * (alpha - n);
    const double w = sphere_surface_area(n - 2);
    auto f = [&](double t) {
        const double d2 = 1.0 + rho * rho - 2.0 * rho * std::cos(t);
        return std::pow(d2, e) * (n == 2 ? 1.0 : std::pow(std::sin(t), n - 2));
    };
    IntegralResult r = adaptive_1d(f, 0.0, std::numbers::pi, cfg);
    r.value *= w;
    r.error_estimate *= w;
    return r;
}

IntegralResult ball_radial(int n, const std::function<double(double)>& h,
                           const QuadratureConfig& cfg, double endpoint_exponent) {
    if (n < 1) throw InvalidIndex("ball_radial requires n >= 1");
    const double front = n * unit_ball_volume(n);
    auto w = [&](double rho) { return h(rho) * std::pow(rho, n - 1); };

    IntegralResult r;
    if (endpoint_exponent < 0.0) {
        IntegralResult inner = adaptive_1d(w, 0.0, 0.5, cfg);
        IntegralResult outer = right_singular_integral(w, 0.5, 1.0, endpoint_exponent, cfg);
        r.value = inner.value + outer.value;
        r.error_estimate = inner.error_estimate + outer.error_estimate;
        r.evaluations = inner.evaluations + outer.evaluations;
        r.converged = inner.converged && outer.converged;
    } else {
        r = adaptive_1d(w, 0.0, 1.0, cfg);
    }
    r.value *= front;
    r.error_estimate *= front;
    return r;
}

}  // namespace rhls::quad
