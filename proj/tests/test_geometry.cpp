#include <cmath>
#include <random>

#include "doctest.h"
#include "rhls/geometry.hpp"

using namespace rhls;
using namespace rhls::geom;

namespace {

struct SampleGen {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> uni{-1.0, 1.0};
    std::uniform_real_distribution<double> mag{-3.0, 3.0};

    explicit SampleGen(std::uint64_t seed) : rng(seed) {}

    double coord() { return uni(rng) * std::pow(10.0, mag(rng)); }

    BoundaryPoint boundary(int n) {
        BoundaryPoint y;
        for (int i = 0; i + 1 < n; ++i) y.coords.push_back(coord());
        return y;
    }
    HalfSpacePoint halfspace(int n) {
        HalfSpacePoint x;
        for (int i = 0; i + 1 < n; ++i) x.tangential.push_back(coord());
        x.height = std::abs(coord()) + 1e-12;
        return x;
    }
};

}  // namespace

TEST_CASE("kernel examples") {
    CHECK(kernel(3.0, 0.0, HalfSpacePoint{{3.0}, 4.0}, BoundaryPoint{{0.0}}) ==
          doctest::Approx(5.0).epsilon(1e-14));
    CHECK(kernel(3.0, 1.0, HalfSpacePoint{{0.0}, 2.0}, BoundaryPoint{{0.0}}) ==
          doctest::Approx(4.0).epsilon(1e-14));
    // coincidence on the boundary closure gives zero for alpha > n
    CHECK(kernel(3.0, 0.5, HalfSpacePoint{{1.0}, 0.0}, BoundaryPoint{{1.0}}) == 0.0);
    CHECK(kernel(2.5, 0.0, HalfSpacePoint{{1.0}, 0.0}, BoundaryPoint{{1.0}}) == 0.0);
    CHECK_THROWS_AS(kernel(1.5, 0.0, HalfSpacePoint{{1.0}, 1.0}, BoundaryPoint{{0.0}}),
                    InvalidIndex);
}

TEST_CASE("invert examples") {
    InversionSpec s{BoundaryPoint{{0.0}}, 2.0};
    auto img = invert(HalfSpacePoint{{0.0}, 1.0}, s);
    CHECK(img.tangential[0] == doctest::Approx(0.0));
    CHECK(img.height == doctest::Approx(4.0).epsilon(1e-14));

    InversionSpec unit{BoundaryPoint{{0.0}}, 1.0};
    auto fx = invert(BoundaryPoint{{1.0}}, unit);
    CHECK(fx.coords[0] == doctest::Approx(1.0).epsilon(1e-14));

    // |x^{z,l} - y^{z,l}| = l^2 |x-y| / (|x-z||y-z|) at unit distances
    auto xi = invert(HalfSpacePoint{{0.0}, 1.0}, unit);
    auto yi = invert(BoundaryPoint{{1.0}}, unit);
    CHECK(distance(xi, yi) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(invert(BoundaryPoint{{0.0}}, unit), CenterSingularity);
}

TEST_CASE("inversion identities over 1000 random samples") {
    SampleGen gen(20250810);
    int checked = 0;
    while (checked < 1000) {
        const int n = 2 + static_cast<int>(gen.rng() % 3);
        auto z = gen.boundary(n);
        const double lambda = std::abs(gen.coord()) + 1e-6;
        auto x = gen.halfspace(n);
        auto y = gen.boundary(n);
        const double dxz = distance(x, HalfSpacePoint{z.coords, 0.0});
        const double dyz = distance(y, z);
        if (dxz < 1e-9 || dyz < 1e-9) continue;
        ++checked;

        InversionSpec s{z, lambda};
        auto xi = invert(x, s);
        auto yi = invert(y, s);

        // (2.1)
        const double lhs1 = distance(xi, yi);
        const double rhs1 = lambda * lambda * distance(x, y) / (dxz * dyz);
        CHECK(std::abs(lhs1 - rhs1) <= 1e-12 * std::abs(rhs1));
        // (2.2)
        const double lhs2 = dyz * distance(x, yi);
        const double rhs2 = dxz * distance(xi, y);
        CHECK(std::abs(lhs2 - rhs2) <= 1e-12 * std::abs(rhs2));
        // (2.3)
        const double pred = (lambda / dxz) * (lambda / dxz) * x.height;
        CHECK(std::abs(xi.height - pred) <= 1e-12 * std::abs(pred));
        // involution
        auto xb = invert(xi, s);
        CHECK(distance(xb, x) <= 1e-12 * (1.0 + dxz));
    }
}

TEST_CASE("kelvin transform examples and involution") {
    InversionSpec s{BoundaryPoint{{0.0, 0.0}}, 1.5};
    auto one = [](const BoundaryPoint&) { return 1.0; };
    auto k1 = kelvin_boundary(one, s, 3.5);
    CHECK(k1(BoundaryPoint{{1.5, 0.0}}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k1(BoundaryPoint{{0.0, 1.5}}) == doctest::Approx(1.0).epsilon(1e-14));

    // u(y) = |y|^{alpha-n} is fixed on the sphere |y| = lambda
    const double alpha = 3.5;
    auto pow_l = [alpha](const BoundaryPoint& y) {
        return std::pow(stable_norm(y.coords), alpha - 3.0);
    };
    auto kp = kelvin_boundary(pow_l, s, alpha);
    CHECK(kp(BoundaryPoint{{1.5, 0.0}}) ==
          doctest::Approx(std::pow(1.5, alpha - 3.0)).epsilon(1e-13));

    SampleGen gen(777);
    auto u = [](const BoundaryPoint& y) { return 1.0 + std::cos(y.coords[0]) * 0.3; };
    auto twice = kelvin_boundary(kelvin_boundary(u, s, alpha), s, alpha);
    for (int i = 0; i < 100; ++i) {
        auto y = gen.boundary(3);
        if (distance(y, s.center) < 1e-6) continue;
        CHECK(std::abs(twice(y) - u(y)) <= 1e-12 * std::abs(u(y)));
    }
}

TEST_CASE("ms_kernel examples") {
    InversionSpec s{BoundaryPoint{{0.0}}, 1.0};
    const double k1 = ms_kernel(s, BoundaryPoint{{0.5}}, HalfSpacePoint{{0.0}, 0.5}, 3.0);
    const double expect = 0.5 * std::sqrt(4.25) - std::sqrt(0.5);
    CHECK(k1 == doctest::Approx(expect).epsilon(1e-13));
    CHECK(k1 > 0.32);
    CHECK(k1 < 0.33);

    // on the sphere the kernel vanishes
    const double k0 = ms_kernel(s, BoundaryPoint{{0.5}}, HalfSpacePoint{{0.6}, 0.8}, 3.0);
    CHECK(std::abs(k0) < 1e-14);

    // x inside, y outside: negative
    const double km = ms_kernel(s, BoundaryPoint{{2.0}}, HalfSpacePoint{{0.0}, 0.5}, 3.0);
    CHECK(km < 0.0);

    CHECK_THROWS_AS(ms_kernel(s, BoundaryPoint{{0.0}}, HalfSpacePoint{{0.0}, 0.5}, 3.0),
                    CenterSingularity);
}

TEST_CASE("ms_kernel sign law across all three regimes") {
    SampleGen gen(13 * 17);
    std::uniform_real_distribution<double> uni01(0.05, 0.95);
    std::uniform_real_distribution<double> uniout(1.05, 20.0);
    int checked = 0;
    while (checked < 1000) {
        const int n = 2 + static_cast<int>(gen.rng() % 3);
        const double lambda = 0.3 + 3.0 * uni01(gen.rng);
        InversionSpec s{gen.boundary(n), lambda};

        // force inside/outside radii per regime, random directions
        const int regime = checked % 3;
        const double rx = (regime == 0 || regime == 2) ? lambda * uni01(gen.rng)
                                                       : lambda * uniout(gen.rng);
        const double ry = (regime == 0) ? lambda * uni01(gen.rng) : lambda * uniout(gen.rng);

        auto dir = gen.boundary(n);
        const double dn = stable_norm(dir.coords);
        if (dn < 1e-12) continue;
        HalfSpacePoint x{s.center.coords, 0.0};
        const double cosh_part = uni01(gen.rng);
        for (std::size_t i = 0; i < x.tangential.size(); ++i)
            x.tangential[i] += rx * cosh_part * dir.coords[i] / dn;
        x.height = rx * std::sqrt(1.0 - cosh_part * cosh_part) + 1e-14;
        BoundaryPoint y = s.center;
        for (std::size_t i = 0; i < y.coords.size(); ++i)
            y.coords[i] -= ry * dir.coords[i] / dn;

        const int pred = ms_kernel_predicted_sign(s, y, x);
        if (pred == 0) continue;
        const double k = ms_kernel(s, y, x, n + 0.5 + (gen.rng() % 2));
        if (k == 0.0) continue;  // on-sphere rounding
        ++checked;
        CHECK((k > 0 ? 1 : -1) == pred);
    }
}

TEST_CASE("sign change is located on the sphere to 1e-8") {
    InversionSpec s{BoundaryPoint{{0.25, -0.1}}, 1.3};
    BoundaryPoint y{{0.7, 0.1}};  // inside
    const double alpha = 3.7;
    for (double dirx : {0.2, 0.5, 0.9}) {
        auto at = [&](double t) {
            HalfSpacePoint x{{s.center.coords[0] + t * dirx, s.center.coords[1]},
                             t * std::sqrt(1.0 - dirx * dirx)};
            return ms_kernel(s, y, x, alpha);
        };
        double lo = 0.5, hi = 2.5;  // radius along the ray; crossing at t = lambda
        REQUIRE(at(lo) > 0.0);
        REQUIRE(at(hi) < 0.0);
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (at(mid) > 0.0 ? lo : hi) = mid;
        }
        CHECK(std::abs(0.5 * (lo + hi) - s.radius) < 1e-8);
    }
}

TEST_CASE("ball_map sends the boundary onto the sphere") {
    // y = 0, lambda = 2: image is the origin, on the sphere about (0,-1)
    auto img = ball_map(HalfSpacePoint{{0.0}, 0.0}, 2.0);
    CHECK(img[0] == doctest::Approx(0.0));
    CHECK(img[1] == doctest::Approx(0.0));

    for (double r : {0.0, 0.3, 2.0, 50.0, 1e6}) {
        auto im = ball_map(HalfSpacePoint{{r}, 0.0}, 2.0);
        const double dx1 = std::hypot(im[0], im[1] + 1.0);
        CHECK(dx1 == doctest::Approx(1.0).epsilon(1e-10));
    }
    // far boundary points approach x0 = (0,-lambda), with |x0 - x1| = lambda/2
    auto far = ball_map(HalfSpacePoint{{1e9}, 0.0}, 2.0);
    CHECK(std::hypot(far[0], far[1] + 2.0) < 1e-8);

    // interior points map inside and satisfy the pointwise identity
    for (double h : {0.1, 1.0, 2.0, 7.0}) {
        HalfSpacePoint xi{{0.4}, h};
        auto im = ball_map(xi, 2.0);
        CHECK(std::hypot(im[0], im[1] + 1.0) < 1.0);
        CHECK(std::abs(ball_map_identity_residual(xi, 2.0)) < 1e-12);
    }
    // the half-space point mapping to the ball center x1
    CHECK(std::abs(ball_map_identity_residual(HalfSpacePoint{{0.0}, 2.0}, 2.0)) < 1e-14);
}
