#include <doctest.h>

#include <cmath>

#include "liegeo/geodesic.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/presets.hpp"
#include "liegeo/sampling.hpp"

using namespace liegeo;

namespace {

const QSqrt2 kZero(0), kOne(1);

}  // namespace

TEST_CASE("one-parameter subgroup test") {
    const auto& sl2 = preset("sl2-lorentz");
    CHECK(is_geodesic_oneparam(sl2, {kOne, kZero, kZero}));
    CHECK(is_geodesic_oneparam(sl2, {kZero, kOne, kZero}));
    CHECK(is_geodesic_oneparam(sl2, {kZero, kZero, kOne}));

    // central directions are geodesic
    CHECK(is_geodesic_oneparam(preset("g3-goedel"), {kOne, kZero, kZero}));

    // W = Y + Z on rxsol2 fails with nabla_W W = Y - Z
    const auto& rx = preset("rxsol2");
    XVec w = {kZero, kOne, kOne};
    CHECK(!is_geodesic_oneparam(rx, w));
    XVec acc = koszul_connection(rx).covariant(w, w);
    CHECK(acc[0] == kZero);
    CHECK(acc[1] == kOne);
    CHECK(acc[2] == QSqrt2(-1));
}

TEST_CASE("integrator reproduces one-parameter geodesics") {
    const auto& sl2 = preset("sl2-lorentz");
    auto traj = integrate(sl2, {1.0, 0.0, 0.0}, 1.0, 1000);
    CHECK(traj.size() == 1001);
    Mat expected = mat_exp(to_double(sl2.realization->basis[0]));
    CHECK(max_abs_diff(traj.back().g, expected) < 1e-8);
    for (const auto& s : traj) {
        CHECK(std::abs(s.v[0] - 1.0) < 1e-12);  // velocity stays X
        CHECK(std::abs(s.v[1]) < 1e-12);
        CHECK(std::abs(s.v[2]) < 1e-12);
    }

    const auto& rx = preset("rxsol2");
    auto ty = integrate(rx, {0.0, 1.0, 0.0}, 1.0, 1000);
    CHECK(max_abs_diff(ty.back().g, mat_exp(to_double(rx.realization->basis[1]))) < 1e-8);

    // zero velocity stays at the identity
    auto rest = integrate(sl2, {0.0, 0.0, 0.0}, 1.0, 10);
    for (const auto& s : rest) CHECK(max_abs_diff(s.g, Mat::identity(2)) == 0.0);
}

TEST_CASE("energy is conserved along integrated geodesics") {
    Rng rng(151);
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        const auto& p = preset(name);
        std::vector<double> v0(p.sc.dim());
        double norm = 0.0;
        for (auto& c : v0) {
            c = rng.uniform(-1, 1);
            norm += c * c;
        }
        norm = std::sqrt(norm);
        for (auto& c : v0) c /= std::max(1.0, norm);
        auto traj = integrate(p, v0, 1.0, 1000);
        double e0 = frame_energy(p, v0);
        for (const auto& s : traj) CHECK(std::abs(frame_energy(p, s.v) - e0) < 1e-10);
    }
}

TEST_CASE("one-parameter geodesics track the matrix exponential") {
    for (const auto& name : preset_names()) {
        const auto& p = preset(name);
        int n = p.sc.dim();
        for (int i = 0; i < n; ++i) {
            XVec w(n, kZero);
            w[i] = kOne;
            if (!is_geodesic_oneparam(p, w)) continue;
            CAPTURE(name);
            CAPTURE(i);
            std::vector<double> v0(n, 0.0);
            v0[i] = 1.0;
            auto traj = integrate(p, v0, 1.0, 1000);
            CHECK(max_abs_diff(traj.back().g, mat_exp(to_double(p.realization->basis[i]))) <
                  1e-8);
        }
    }
}

TEST_CASE("integrator is fourth order") {
    const auto& rx = preset("rxsol2");
    std::vector<double> v0 = {0.3, 0.7, -0.4};
    Mat ref = integrate(rx, v0, 1.0, 20000).back().g;
    double err_coarse = max_abs_diff(integrate(rx, v0, 1.0, 100).back().g, ref);
    double err_fine = max_abs_diff(integrate(rx, v0, 1.0, 200).back().g, ref);
    double ratio = err_coarse / err_fine;
    CHECK(ratio > 10.0);
    CHECK(ratio < 24.0);
}

TEST_CASE("integrator input validation") {
    const auto& sl2 = preset("sl2-lorentz");
    CHECK_THROWS_AS(integrate(sl2, {1.0, 0.0, 0.0}, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(integrate(sl2, {1.0}, 1.0, 10), std::invalid_argument);
    LieAlgebraPreset stripped = sl2;
    stripped.realization.reset();
    CHECK_THROWS_AS(integrate(stripped, {1.0, 0.0, 0.0}, 1.0, 10), std::invalid_argument);
}
