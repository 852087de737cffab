#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "rhls/errors.hpp"
#include "rhls/special.hpp"

namespace rhls::quad {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_refinements = 30;       // max bisection depth of any subinterval
    double tail_decay_margin = 2.0; // safety multiplier on analytic truncation bounds

    QuadratureConfig tightened(double factor) const {
        QuadratureConfig c = *this;
        c.rel_tol *= factor;
        c.abs_tol *= factor;
        return c;
    }
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double value;
    double error;
};

template <class F>
PanelEstimate gk15(F&& f, double a, double b) {
    const double hlgth = 0.5 * (b - a);
    const double centr = 0.5 * (a + b);

    const double fc = f(centr);
    if (!std::isfinite(fc)) throw NonFiniteSample("non-finite integrand sample");
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = hlgth * kXgk[j];
        const double f1 = f(centr - dx);
        const double f2 = f(centr + dx);
        if (!std::isfinite(f1) || !std::isfinite(f2))
            throw NonFiniteSample("non-finite integrand sample");
        fv[j] = f1;
        fv[14 - j] = f2;
        const double fsum = f1 + f2;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));

    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        err = std::max(err, eps50 * resabs);
    return {resk * hlgth, err};
}

struct Segment {
    double a, b, value, error;
    int depth;
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over the finite interval
// (a, b). Endpoints are never sampled, so integrable endpoint blow-ups are
// tolerated. Returns a non-converged result instead of throwing.
template <class F>
IntegralResult try_adaptive_1d(F&& f, double a, double b, const QuadratureConfig& cfg) {
    constexpr std::size_t kMaxSegments = 20000;
    IntegralResult out;
    if (!(a < b)) throw Error("adaptive_1d requires a < b");

    std::vector<detail::Segment> segs;
    auto first = detail::gk15(f, a, b);
    out.evaluations = 15;
    segs.push_back({a, b, first.value, first.error, 0});

    double total = first.value;
    double toterr = first.error;
    while (true) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (toterr <= tol) {
            out.converged = true;
            break;
        }
        // split the segment with the largest error, if still splittable
        std::size_t worst = segs.size();
        double werr = 0.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].depth >= cfg.max_refinements) continue;
            if (segs[i].error > werr) {
                werr = segs[i].error;
                worst = i;
            }
        }
        if (worst == segs.size() || segs.size() >= kMaxSegments) break;

        detail::Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (!(s.a < mid && mid < s.b)) {  // interval exhausted at machine precision
            segs[worst].depth = cfg.max_refinements;
            continue;
        }
        auto left = detail::gk15(f, s.a, mid);
        auto right = detail::gk15(f, mid, s.b);
        out.evaluations += 30;
        total += left.value + right.value - s.value;
        toterr += left.error + right.error - s.error;
        segs[worst] = {s.a, mid, left.value, left.error, s.depth + 1};
        segs.push_back({mid, s.b, right.value, right.error, s.depth + 1});
    }
    // recompute the sums once to shed accumulated cancellation
    total = 0.0;
    toterr = 0.0;
    for (const auto& s : segs) {
        total += s.value;
        toterr += s.error;
    }
    out.value = total;
    out.error_estimate = toterr;
    if (!out.converged)
        out.converged = toterr <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    return out;
}

template <class F>
IntegralResult adaptive_1d(F&& f, double a, double b, const QuadratureConfig& cfg) {
    IntegralResult r = try_adaptive_1d(std::forward<F>(f), a, b, cfg);
    if (!r.converged)
        throw NotConverged("adaptive quadrature did not reach tolerance", r.value,
                           r.error_estimate);
    return r;
}

// Declared tail behaviour of an integrand on (a, infinity).
struct TailDecay {
    enum class Kind { power, exponential };
    Kind kind = Kind::power;
    double exponent = 2.0;  // power: f = O(t^-exponent); exponential: rate in e^{-rate t}

    static TailDecay power_law(double e) { return {Kind::power, e}; }
    static TailDecay exponential(double rate = 1.0) { return {Kind::exponential, rate}; }
};

// Integrates f over (a, infinity). The domain is swept in geometrically
// growing segments; the sweep stops once the analytic tail bound implied by
// the declared decay (with the configured safety margin) drops below the
// tolerance. The bound is calibrated from samples near the current truncation
// radius, so a declared decay that is too optimistic shows up as a failure to
// converge rather than a silently wrong value.
template <class F>
IntegralResult semi_infinite(F&& f, double a, const TailDecay& decay,
                             const QuadratureConfig& cfg, double probe_scale = 1.0) {
    if (decay.kind == TailDecay::Kind::power && decay.exponent <= 1.0)
        throw NonIntegrableTail("declared power-law tail is not integrable");
    if (decay.kind == TailDecay::Kind::exponential && decay.exponent <= 0.0)
        throw NonIntegrableTail("exponential tail needs a positive rate");
    if (!(probe_scale > 0.0)) throw Error("probe_scale must be positive");

    constexpr int kMaxDoublings = 64;
    IntegralResult out;
    QuadratureConfig scfg = cfg;
    scfg.abs_tol = cfg.abs_tol * 0.25;

    double left = a;
    double width = probe_scale;
    for (int k = 0; k < kMaxDoublings; ++k) {
        const double right = left + width;
        IntegralResult seg = try_adaptive_1d(f, left, right, scfg);
        out.value += seg.value;
        out.error_estimate += seg.error_estimate;
        out.evaluations += seg.evaluations;
        if (!seg.converged) {
            out.converged = false;
            return out;
        }

        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
        double tail_bound = 0.0;
        for (double m : {1.0, 1.4142135623730951, 2.0}) {
            const double t = right * m;
            const double ft = std::abs(f(t));
            ++out.evaluations;
            if (!std::isfinite(ft)) throw NonFiniteSample("non-finite integrand sample");
            double b;
            if (decay.kind == TailDecay::Kind::power) {
                const double d = decay.exponent;
                b = ft * t / (d - 1.0);  // = C t^{1-d}/(d-1), C = ft * t^d
            } else {
                b = ft / decay.exponent;
            }
            tail_bound = std::max(tail_bound, b);
        }
        if (k >= 2 && tail_bound * cfg.tail_decay_margin <= target) {
            out.error_estimate += tail_bound;
            out.converged = true;
            return out;
        }
        left = right;
        width *= 2.0;
    }
    throw NonIntegrableTail("truncation radius exceeded the doubling budget");
}

// Integral of w over (a, b) with an integrable algebraic singularity
// w ~ C (x-a)^gamma at the left endpoint, gamma in (-1, 0). The substitution
// x = a + (b-a) u^{1/(1+gamma)} flattens the singularity exactly.
template <class F>
IntegralResult left_singular_integral(F&& w, double a, double b, double gamma,
                                      const QuadratureConfig& cfg) {
    if (!(gamma > -1.0)) throw NonIntegrableTail("endpoint exponent must exceed -1");
    const double L = b - a;
    const double pw = 1.0 / (1.0 + gamma);
    auto g = [&](double u) {
        const double x = a + L * std::pow(u, pw);
        return w(x) * L * pw * std::pow(u, pw - 1.0);
    };
    return adaptive_1d(g, 0.0, 1.0, cfg);
}

// Same with the singularity at the right endpoint: w ~ C (b-x)^gamma.
template <class F>
IntegralResult right_singular_integral(F&& w, double a, double b, double gamma,
                                       const QuadratureConfig& cfg) {
    if (!(gamma > -1.0)) throw NonIntegrableTail("endpoint exponent must exceed -1");
    const double L = b - a;
    const double pw = 1.0 / (1.0 + gamma);
    auto g = [&](double u) {
        const double x = b - L * std::pow(u, pw);
        return w(x) * L * pw * std::pow(u, pw - 1.0);
    };
    return adaptive_1d(g, 0.0, 1.0, cfg);
}

// Angular reduction weight
//   W(n, r, s, x_n) = int_{S^{n-2}} (r^2 + s^2 - 2 r s w_1 + x_n^2)^{(alpha-n)/2} dsigma(w).
// n = 2 uses the exact two-point sum over S^0; n = 3 integrates over the unit
// circle; n >= 4 reduces to a weighted 1-D integral with the sin^{n-3} factor.
double angular_factor(int n, double r, double s, double x_n, double alpha);

// g(rho) = int_{dB_1} |eta - xi|^{alpha-n} deta for |xi| = rho in [0, 1],
// reduced to omega_{n-2} int_0^pi (1 + rho^2 - 2 rho cos t)^{(alpha-n)/2} sin^{n-2} t dt.
IntegralResult sphere_pair(int n, double rho, double alpha, const QuadratureConfig& cfg);

// n nu_n int_0^1 h(rho) rho^{n-1} drho. A negative endpoint_exponent declares
// an integrable blow-up h ~ (1-rho)^{gamma} at rho = 1 and routes the outer
// piece through the flattening substitution.
IntegralResult ball_radial(int n, const std::function<double(double)>& h,
                           const QuadratureConfig& cfg, double endpoint_exponent = 0.0);

}  // namespace rhls::quad
