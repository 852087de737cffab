#include "rhls/operator.hpp"

#include <algorithm>
#include <cmath>

#include "rhls/special.hpp"

namespace rhls::op {

using quad::IntegralResult;
using quad::QuadratureConfig;
using quad::TailDecay;

namespace {

// Integrates w over (0, inf) where w has breakpoints (kinks/jumps) at the
// given radii and the declared power-law tail kicks in beyond them.
template <class F>
double piecewise_semi_infinite(F&& w, std::vector<double> breaks, double support,
                               double tail_decay, const QuadratureConfig& cfg,
                               double probe_scale) {
    double total = 0.0;
    if (support > 0.0) breaks.push_back(support);
    std::sort(breaks.begin(), breaks.end());
    double left = 0.0;
    for (double b : breaks) {
        if (b <= left * (1.0 + 1e-12) || b <= 0.0) continue;
        if (support > 0.0 && left >= support) break;
        total += quad::adaptive_1d(w, left, b, cfg).value;
        left = b;
    }
    if (support > 0.0) return total;  // nothing beyond the support
    total += quad::semi_infinite(w, left, TailDecay::power_law(tail_decay), cfg,
                                 std::max(probe_scale, left)).value;
    return total;
}

}  // namespace

RadialBoundaryFunction scaled(const RadialBoundaryFunction& f, double lambda, int n, double p) {
    if (!(lambda > 0.0)) throw Error("scaling parameter must be positive");
    RadialBoundaryFunction g = f;
    const double amp = std::pow(lambda, (n - 1) / p);
    g.profile = [profile = f.profile, lambda, amp](double r) { return amp * profile(lambda * r); };
    g.scale = f.scale / lambda;
    g.support_radius = f.support_radius > 0.0 ? f.support_radius / lambda : 0.0;
    return g;
}

double radial_profile_integral(const RadialBoundaryFunction& f, int n,
                               const QuadratureConfig& cfg) {
    if (f.support_radius == 0.0 && !(f.decay_exponent > n - 1))
        throw NonIntegrableTail("profile does not decay fast enough for its mass integral");
    auto w = [&](double s) { return f.profile(s) * std::pow(s, n - 2); };
    const double tail = f.decay_exponent - (n - 2);
    return sphere_surface_area(n - 2) *
           piecewise_semi_infinite(w, {f.scale}, f.support_radius, tail, cfg, f.scale);
}

double apply_T(const RadialBoundaryFunction& f, double r, double x_n,
               const indices::ExponentSet& es, const QuadratureConfig& cfg) {
    const int n = es.n;
    if (!(x_n >= 0.0) || !(r >= 0.0)) throw Error("apply_T needs r >= 0 and x_n >= 0");
    if (f.support_radius == 0.0 && !(f.decay_exponent > es.alpha - 1.0))
        throw NonIntegrableTail("profile decay too slow for Tf (needs decay > alpha - 1)");

    const double weight = es.beta == 0.0 ? 1.0 : std::pow(x_n, es.beta);
    if (weight == 0.0) return 0.0;
    auto w = [&](double s) {
        return f.profile(s) * std::pow(s, n - 2) * quad::angular_factor(n, r, s, x_n, es.alpha);
    };
    const double tail = f.decay_exponent + 2.0 - es.alpha;
    const double probe = std::max({r, x_n, f.scale});
    const double value =
        piecewise_semi_infinite(w, {r, f.scale}, f.support_radius, tail, cfg, probe);
    return weight * value;
}

double lp_boundary_norm(const RadialBoundaryFunction& f, int n, double p,
                        const QuadratureConfig& cfg) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidIndex("lp_boundary_norm requires 0 < p < 1");
    if (f.support_radius == 0.0 && !(p * f.decay_exponent > n - 1))
        throw NonIntegrableTail("f^p is not integrable on the boundary");
    auto w = [&](double s) { return std::pow(f.profile(s), p) * std::pow(s, n - 2); };
    const double tail = p * f.decay_exponent - (n - 2);
    const double mass = sphere_surface_area(n - 2) *
                        piecewise_semi_infinite(w, {f.scale}, f.support_radius, tail, cfg, f.scale);
    return std::pow(mass, 1.0 / p);
}

HalfSpaceFunction t_field(const RadialBoundaryFunction& f, const indices::ExponentSet& es,
                          const QuadratureConfig& cfg) {
    HalfSpaceFunction g;
    const QuadratureConfig inner = cfg.tightened(0.1 / std::max(1.0, -es.q));
    g.value = [f, es, inner](double r, double x_n) { return apply_T(f, r, x_n, es, inner); };
    g.boundary_exponent = es.beta;
    g.growth_exponent = es.alpha - es.n;
    g.scale = std::max(f.scale, f.support_radius);
    return g;
}

double lq_halfspace_norm(const HalfSpaceFunction& g, int n, double q,
                         const QuadratureConfig& cfg) {
    if (!(q < 0.0)) throw InvalidIndex("lq_halfspace_norm requires q < 0");
    const double bq = g.boundary_exponent * q;
    if (!(bq > -1.0)) throw NonIntegrableTail("beta q + 1 <= 0: boundary blow-up not integrable");
    const double decay_x = -q * (g.growth_exponent + g.boundary_exponent);
    const double decay_r = -q * g.growth_exponent - (n - 2);
    if (!(decay_x > 1.0) || !(decay_r > 1.0))
        throw NonIntegrableTail("negative power of g is not integrable at infinity");

    const QuadratureConfig icfg = cfg.tightened(0.2);
    auto gq = [&](double r, double x) {
        const double v = g.value(r, x);
        if (!(v > 0.0)) throw NonPositiveSample("g must be strictly positive for q < 0");
        return std::pow(v, q);
    };
    auto inner = [&](double r) {
        auto w = [&](double x) { return gq(r, x); };
        const double split = std::max(g.scale, r);
        double near;
        if (g.boundary_exponent > 0.0)
            near = quad::left_singular_integral(w, 0.0, split, bq, icfg).value;
        else
            near = quad::adaptive_1d(w, 0.0, split, icfg).value;
        const double far =
            quad::semi_infinite(w, split, TailDecay::power_law(decay_x), icfg, split).value;
        return near + far;
    };
    auto outer = [&](double r) { return inner(r) * std::pow(r, n - 2); };
    const double head = quad::adaptive_1d(outer, 0.0, g.scale, cfg).value;
    const double tail =
        quad::semi_infinite(outer, g.scale, TailDecay::power_law(decay_r), cfg, g.scale).value;
    return std::pow(sphere_surface_area(n - 2) * (head + tail), 1.0 / q);
}

double lq_norm_on_rectangle(const std::function<double(double, double)>& g, double q, double r_lo,
                            double r_hi, double x_lo, double x_hi,
                            const QuadratureConfig& cfg) {
    if (!(q < 0.0)) throw InvalidIndex("lq_norm_on_rectangle requires q < 0");
    auto inner = [&](double r) {
        auto w = [&](double x) {
            const double v = g(r, x);
            if (!(v > 0.0)) throw NonPositiveSample("g must be strictly positive for q < 0");
            return std::pow(v, q);
        };
        return quad::adaptive_1d(w, x_lo, x_hi, cfg.tightened(0.2)).value;
    };
    return std::pow(quad::adaptive_1d(inner, r_lo, r_hi, cfg).value, 1.0 / q);
}

double functional_ratio(const RadialBoundaryFunction& f, const indices::ExponentSet& es,
                        const QuadratureConfig& cfg) {
    const double num = lq_halfspace_norm(t_field(f, es, cfg), es.n, es.q, cfg);
    const double den = lp_boundary_norm(f, es.n, es.p, cfg);
    return num / den;
}

}  // namespace rhls::op
