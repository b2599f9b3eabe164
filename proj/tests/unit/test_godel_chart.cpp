#include <doctest.h>

#include <cmath>

#include "liegeo/godel_chart.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/metric.hpp"
#include "liegeo/presets.hpp"
#include "liegeo/sampling.hpp"

using namespace liegeo;

TEST_CASE("metric components") {
    Mat g = metric_at({}, 1.0);
    CHECK(g(0, 0) == 1.0);
    CHECK(g(0, 2) == 1.0);
    CHECK(g(2, 0) == 1.0);
    CHECK(g(2, 2) == 0.5);
    CHECK(g(1, 1) == -1.0);
    CHECK(g(3, 3) == -1.0);
    CHECK(g(0, 1) == 0.0);
    CHECK(g(1, 2) == 0.0);

    Rng rng(131);
    for (int i = 0; i < 50; ++i) {
        ChartPoint x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                     rng.uniform(-2, 2)};
        double a = rng.uniform(0.5, 2.0);
        Mat m = metric_at(x, a);
        // the x3 line is an orthogonal flat factor
        for (int j = 0; j < 3; ++j) {
            CHECK(m(3, j) == 0.0);
            CHECK(m(j, 3) == 0.0);
        }
        CHECK(m(3, 3) == -a * a);
        // metric depends on the point only through x1
        ChartPoint y{0.0, x.x1, 9.0, -3.0};
        CHECK(max_abs_diff(m, metric_at(y, a)) == 0.0);
    }

    // shifting x1 by log 2 doubles g02 and quadruples g22
    ChartPoint x{0.3, 0.7, -1.2, 0.4};
    ChartPoint shifted{0.3, 0.7 + std::log(2.0), -1.2, 0.4};
    Mat m0 = metric_at(x, 1.5), m1 = metric_at(shifted, 1.5);
    CHECK(m1(0, 2) == doctest::Approx(2.0 * m0(0, 2)).epsilon(1e-14));
    CHECK(m1(2, 2) == doctest::Approx(4.0 * m0(2, 2)).epsilon(1e-14));

    CHECK_THROWS_AS(metric_at(x, 0.0), std::domain_error);
    CHECK_THROWS_AS(metric_at(x, -1.0), std::domain_error);
}

TEST_CASE("pullback residual of the isometry action") {
    // translations in x0, x2, x3 are exact at b = 0
    CHECK(pullback_residual({1.0, 0.0, -2.0, 0.5}, {0.4, 0.8, -0.3, 0.1}, 1.0) == 0.0);

    Rng rng(137);
    for (int i = 0; i < 100; ++i) {
        IsometryParams p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                         rng.uniform(-1, 1)};
        ChartPoint x{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                     rng.uniform(-1, 1)};
        CHECK(pullback_residual(p, x, 1.0) < 1e-12);
        // finite-difference Jacobian fallback agrees
        CHECK(pullback_residual(p, x, 1.0, true) < 1e-8);
    }

    // negative control: x1 -> 2 x1 is not an isometry
    ChartPoint x{0.0, 1.0, 0.0, 0.0};
    Mat j = Mat::identity(4);
    j(1, 1) = 2.0;
    ChartPoint stretched{x.x0, 2.0 * x.x1, x.x2, x.x3};
    double residual = max_abs_diff(j.transpose() * metric_at(stretched, 1.0) * j,
                                   metric_at(x, 1.0));
    CHECK(residual > 0.1);
}

TEST_CASE("christoffel symbols") {
    Rng rng(139);
    for (int i = 0; i < 20; ++i) {
        ChartPoint x{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                     rng.uniform(-1.5, 1.5)};
        double a = rng.uniform(0.5, 2.0);
        Christoffel exact = christoffel_at(x, a);
        CHECK(christoffel_max_diff(exact, christoffel_fd(x, a)) < 1e-6);
        for (int k = 0; k < 4; ++k)
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) {
                    CHECK(exact.c[k][p][q] == exact.c[k][q][p]);  // symmetric lower indices
                    if (k == 3 || p == 3 || q == 3) CHECK(exact.c[k][p][q] == 0.0);
                }
    }

    // the x0 coordinate line is a geodesic: xddot = 0 and Gamma(v, v) = 0
    for (double t : {0.0, 0.7, -2.0}) {
        Christoffel c = christoffel_at({t, 0.0, 0.0, 0.0}, 1.0);
        auto acc = christoffel_quadratic(c, {1.0, 0.0, 0.0, 0.0});
        for (int k = 0; k < 4; ++k) CHECK(std::abs(acc[k]) == 0.0);
    }
}

TEST_CASE("identity point matches the exact Gram matrices") {
    auto ok = identity_consistency(1.0);
    CHECK(ok.pass);
    CHECK(ok.max_abs_dev == 0.0);

    auto off = identity_consistency(2.0);
    CHECK(!off.pass);
    CHECK(off.max_abs_dev == doctest::Approx(3.0));  // a^2 = 4 against unit entries

    // a perturbed Gram is detected
    Mat g = metric_at({}, 1.0);
    Mat perturbed = to_double(preset("goedel4").gram);
    perturbed(0, 2) += 0.25;
    perturbed(2, 0) += 0.25;
    CHECK(max_abs_diff(g, perturbed) > 0.0);
}

TEST_CASE("chart signature is Lorentzian everywhere sampled") {
    Rng rng(149);
    for (double a : {0.5, 1.0 / std::sqrt(2.0), 1.0, 2.0})
        for (int i = 0; i < 100; ++i) {
            ChartPoint x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2)};
            CHECK(signature(metric_at(x, a)) == std::pair<int, int>{1, 3});
        }
}
