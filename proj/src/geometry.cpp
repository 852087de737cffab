#include "rhls/geometry.hpp"

#include <cmath>

namespace rhls::geom {

namespace {

constexpr double kCenterTol = 1e-14;

std::vector<double> embed(const BoundaryPoint& y) {
    std::vector<double> v = y.coords;
    v.push_back(0.0);
    return v;
}

std::vector<double> embed(const HalfSpacePoint& x) {
    std::vector<double> v = x.tangential;
    v.push_back(x.height);
    return v;
}

std::vector<double> diff(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw Error("dimension mismatch");
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// w -> lambda^2 w / |w|^2, relative to an arbitrary full-space center c.
std::vector<double> invert_about(std::span<const double> pt, std::span<const double> c,
                                 double lambda) {
    if (!(lambda > 0.0)) throw Error("inversion radius must be positive");
    std::vector<double> w = diff(pt, c);
    const double norm = stable_norm(w);
    if (norm <= kCenterTol) throw CenterSingularity("point coincides with the inversion center");
    const double factor = (lambda / norm) * (lambda / norm);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = c[i] + factor * w[i];
    return w;
}

}  // namespace

double stable_norm(std::span<const double> v) {
    double amax = 0.0;
    for (double x : v) amax = std::max(amax, std::abs(x));
    if (amax == 0.0) return 0.0;
    if (!std::isfinite(amax)) throw Error("non-finite coordinate");
    double s = 0.0;
    for (double x : v) {
        const double t = x / amax;
        s += t * t;
    }
    return amax * std::sqrt(s);
}

double distance(const HalfSpacePoint& x, const BoundaryPoint& y) {
    return stable_norm(diff(embed(x), embed(y)));
}

double distance(const HalfSpacePoint& x, const HalfSpacePoint& y) {
    return stable_norm(diff(embed(x), embed(y)));
}

double distance(const BoundaryPoint& x, const BoundaryPoint& y) {
    return stable_norm(diff(x.coords, y.coords));
}

double kernel(double alpha, double beta, const HalfSpacePoint& x, const BoundaryPoint& y) {
    const int n = x.ambient_dim();
    if (!(alpha > n)) throw InvalidIndex("kernel requires alpha > n");
    if (beta < 0.0) throw InvalidIndex("kernel requires beta >= 0");
    const double d = distance(x, y);
    const double weight = beta == 0.0 ? 1.0 : std::pow(x.height, beta);
    return weight * std::pow(d, alpha - n);
}

HalfSpacePoint invert(const HalfSpacePoint& x, const InversionSpec& spec) {
    std::vector<double> img = invert_about(embed(x), embed(spec.center), spec.radius);
    HalfSpacePoint out;
    out.height = img.back();
    img.pop_back();
    out.tangential = std::move(img);
    return out;
}

BoundaryPoint invert(const BoundaryPoint& y, const InversionSpec& spec) {
    BoundaryPoint out;
    out.coords = invert_about(y.coords, spec.center.coords, spec.radius);
    return out;
}

std::function<double(const BoundaryPoint&)> kelvin_boundary(
    std::function<double(const BoundaryPoint&)> u, InversionSpec spec, double alpha) {
    return [u = std::move(u), spec = std::move(spec), alpha](const BoundaryPoint& y) {
        const int n = y.ambient_dim();
        const double dist = distance(y, spec.center);
        if (dist <= kCenterTol) throw CenterSingularity("kelvin transform at the center");
        const double pre = std::pow(spec.radius / dist, n - alpha);
        return pre * u(invert(y, spec));
    };
}

double ms_kernel(const InversionSpec& spec, const BoundaryPoint& y, const HalfSpacePoint& x,
                 double alpha) {
    const int n = x.ambient_dim();
    if (!(alpha > n)) throw InvalidIndex("ms_kernel requires alpha > n");
    const double dyz = distance(y, spec.center);
    if (dyz <= kCenterTol) throw CenterSingularity("ms_kernel with y at the center");
    const double dxz = distance(x, HalfSpacePoint{spec.center.coords, 0.0});
    const HalfSpacePoint xi = invert(x, spec);
    const double a = dxz * distance(xi, y) / spec.radius;
    const double b = distance(x, y);
    return std::pow(a, alpha - n) - std::pow(b, alpha - n);
}

int ms_kernel_predicted_sign(const InversionSpec& spec, const BoundaryPoint& y,
                             const HalfSpacePoint& x) {
    const double dxz = distance(x, HalfSpacePoint{spec.center.coords, 0.0});
    const double dyz = distance(y, spec.center);
    const double l2 = spec.radius * spec.radius;
    const double prod = (l2 - dxz * dxz) * (l2 - dyz * dyz);
    return prod > 0.0 ? 1 : (prod < 0.0 ? -1 : 0);
}

std::vector<double> ball_map(const HalfSpacePoint& xi, double lambda) {
    if (!(lambda > 0.0)) throw Error("ball_map requires lambda > 0");
    if (xi.height < 0.0) throw Error("ball_map expects a closed half-space point");
    std::vector<double> pt = embed(xi);
    std::vector<double> x0(pt.size(), 0.0);
    x0.back() = -lambda;
    return invert_about(pt, x0, lambda);
}

double ball_map_identity_residual(const HalfSpacePoint& xi, double lambda) {
    const std::vector<double> zeta = ball_map(xi, lambda);
    std::vector<double> x0(zeta.size(), 0.0), x1(zeta.size(), 0.0);
    x0.back() = -lambda;
    x1.back() = -0.5 * lambda;
    const double dz0 = stable_norm(diff(zeta, x0));
    const double dz1 = stable_norm(diff(zeta, x1));
    const double lhs = dz0 * dz0 * xi.height / lambda;
    const double rhs = 0.25 * lambda * lambda - dz1 * dz1;
    return lhs - rhs;
}

}  // namespace rhls::geom
