#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liegeo/godel_chart.hpp"
#include "liegeo/group_maps.hpp"
#include "liegeo/linalg.hpp"

using namespace liegeo;

TEST_CASE("membership predicates") {
    CHECK(member_within(GroupTag::SL2, rot(0.3)));
    CHECK(member_within(GroupTag::SO2, rot(-1.2)));
    CHECK(member_within(GroupTag::SOL2, sol2_an(0.5, -0.7)));
    CHECK(member_within(GroupTag::G3X4, g3x4(0.2, -0.4, 1.1)));
    CHECK(member_within(GroupTag::G5, g5_element(0.1, 0.2, 0.3, 0.4)));
    CHECK(!member_within(GroupTag::SL2, Mat::identity(2) * 2.0));
    CHECK(!member_within(GroupTag::SOL2, rot(0.5)));
    CHECK_THROWS_AS(make_element(GroupTag::SO2, Mat::identity(2) * 2.0), std::domain_error);
}

TEST_CASE("psi on the two factor orders") {
    CHECK(max_abs_diff(psi_iso(0, 0, PsiOrder::AN).m, Mat::identity(4)) == 0.0);

    Mat an = psi_iso(1.0, 1.0, PsiOrder::AN).m;
    CHECK(an(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(an(0, 3) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(an(1, 3) == doctest::Approx(1.0).epsilon(1e-14));

    Mat na = psi_iso(1.0, 1.0, PsiOrder::NA).m;
    CHECK(na(0, 3) == doctest::Approx(1.0).epsilon(1e-14));

    // the two parameterizations describe the same map; they agree iff s r = 0
    for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0})
        for (double r : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            double d = max_abs_diff(psi_iso(s, r, PsiOrder::AN).m, psi_iso(s, r, PsiOrder::NA).m);
            if (s == 0.0 || r == 0.0)
                CHECK(d < 1e-14);
            else
                CHECK(d > 1e-3);
        }

    Rng rng(61);
    auto psi_map = [](const Mat& m) { return psi_sol2(m).m; };
    CHECK(hom_residual(psi_map, random_sol2, 100, rng) < 1e-12);

    // closed forms as oracles for both orders
    for (int i = 0; i < 100; ++i) {
        double s = rng.uniform(-2, 2), r = rng.uniform(-2, 2);
        CHECK(max_abs_diff(psi_iso(s, r, PsiOrder::AN).m, psi_iso_closed_an(s, r)) < 1e-13);
        CHECK(max_abs_diff(psi_iso(s, r, PsiOrder::NA).m, psi_iso_closed_na(s, r)) < 1e-13);
    }
}

TEST_CASE("psi extended over the central line") {
    Rng rng(67);
    for (int i = 0; i < 50; ++i) {
        double t1 = rng.uniform(-2, 2), t2 = rng.uniform(-2, 2);
        Mat m1 = random_sol2(rng), m2 = random_sol2(rng);
        Mat lhs = psi_full(t1 + t2, m1 * m2).m;
        Mat rhs = psi_full(t1, m1).m * psi_full(t2, m2).m;
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("covering onto Sol(2) x SO(2)") {
    auto [s0, k0] = covering_F(0, 0, 0);
    CHECK(max_abs_diff(s0.m, Mat::identity(2)) == 0.0);
    CHECK(max_abs_diff(k0.m, Mat::identity(2)) == 0.0);

    // nontrivial kernel element of the covering
    auto [s1, k1] = covering_F(0, 0, 2.0 * std::numbers::pi);
    CHECK(max_abs_diff(s1.m, Mat::identity(2)) < 1e-12);
    CHECK(max_abs_diff(k1.m, Mat::identity(2)) < 1e-12);

    Rng rng(71);
    auto f_map = [](const Mat& m) {
        auto [sol, so2] = covering_F(m);
        Mat block(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                block(i, j) = sol.m(i, j);
                block(i + 2, j + 2) = so2.m(i, j);
            }
        return block;
    };
    CHECK(hom_residual(f_map, random_affr3, 100, rng) < 1e-12);

    // restricted to x3 = 0 the covering is injective on sampled points
    for (int i = 0; i < 50; ++i) {
        double a1 = rng.uniform(-2, 2), a2 = rng.uniform(-2, 2);
        double b1 = rng.uniform(-2, 2), b2 = rng.uniform(-2, 2);
        if (std::abs(a1 - b1) + std::abs(a2 - b2) < 1e-3) continue;
        auto pa = covering_F(a1, a2, 0.0), pb = covering_F(b1, b2, 0.0);
        CHECK(max_abs_diff(pa.first.m, pb.first.m) > 0.0);
    }
}

TEST_CASE("reduction from the 4x4 chart to A+(R) x R") {
    CHECK(max_abs_diff(reduce_4to3(Mat::identity(4)).m, Mat::identity(3)) == 0.0);

    Mat g = embed_renamed_chart(/*x3=*/1.0, /*x2=*/1.0, /*x1=*/1.0);
    Mat r = reduce_4to3(g).m;
    Mat expected = Mat::from_rows(
        {{std::exp(-1.0), 0.0, 1.0}, {0.0, 1.0, 1.0}, {0.0, 0.0, 1.0}});
    CHECK(max_abs_diff(r, expected) < 1e-15);

    Rng rng(73);
    auto red_map = [](const Mat& m) { return reduce_4to3(m).m; };
    CHECK(hom_residual(red_map, random_g3x4, 100, rng) < 1e-12);

    // composing the renamed chart embedding with the reduction preserves products
    for (int i = 0; i < 50; ++i) {
        Mat a = random_g3x4(rng), b = random_g3x4(rng);
        CHECK(max_abs_diff(reduce_4to3(a * b).m, reduce_4to3(a).m * reduce_4to3(b).m) < 1e-12);
    }

    Mat bad = Mat::identity(4);
    bad(2, 0) = 0.5;
    CHECK_THROWS_AS(reduce_4to3(bad), std::domain_error);
}

TEST_CASE("hom_residual controls") {
    Rng rng(79);
    auto sample_sl2 = [](Rng& r) { return random_sl(2, r); };
    auto ident = [](const Mat& m) { return m; };
    CHECK(hom_residual(ident, sample_sl2, 50, rng) == 0.0);
    // transpose is an anti-homomorphism, far from a homomorphism
    auto transpose_map = [](const Mat& m) { return m.transpose(); };
    CHECK(hom_residual(transpose_map, sample_sl2, 50, rng) > 0.1);
}

TEST_CASE("isometry-action matrices act as the coordinate action") {
    Rng rng(83);
    for (int i = 0; i < 50; ++i) {
        IsometryParams p{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                         rng.uniform(-1.5, 1.5)};
        ChartPoint x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                     rng.uniform(-2, 2)};
        // vector convention (x2, x1, x0, x3, 1)
        Mat v(5, 1);
        v(0, 0) = x.x2;
        v(1, 0) = x.x1;
        v(2, 0) = x.x0;
        v(3, 0) = x.x3;
        v(4, 0) = 1.0;
        Mat moved = g5_element(p.a, p.b, p.c, p.d) * v;
        ChartPoint t = apply_action(p, x);
        CHECK(moved(0, 0) == doctest::Approx(t.x2).epsilon(1e-14));
        CHECK(moved(1, 0) == doctest::Approx(t.x1).epsilon(1e-14));
        CHECK(moved(2, 0) == doctest::Approx(t.x0).epsilon(1e-14));
        CHECK(moved(3, 0) == doctest::Approx(t.x3).epsilon(1e-14));
        // products stay in the group
        Mat prod = g5_element(p.a, p.b, p.c, p.d) * g5_element(p.d, p.c, p.b, p.a);
        CHECK(member_within(GroupTag::G5, prod));
    }
}

TEST_CASE("group element serialization") {
    GroupElement g = make_element(GroupTag::SOL2, sol2_an(0.8, -1.3));
    auto j = element_to_json(g);
    CHECK(j["tag"] == "SOL2");
    GroupElement back = element_from_json(j);
    CHECK(back.tag == g.tag);
    CHECK(max_abs_diff(back.m, g.m) == 0.0);

    auto bad = j;
    bad["tag"] = "SO2";  // a Sol(2) matrix is not a rotation
    CHECK_THROWS_AS(element_from_json(bad), std::domain_error);
    bad["tag"] = "XYZ";
    CHECK_THROWS_AS(element_from_json(bad), std::invalid_argument);
}

TEST_CASE("so2 covering wraps") {
    CHECK(max_abs_diff(so2_cover(0.0).m, Mat::identity(2)) == 0.0);
    CHECK(max_abs_diff(so2_cover(2.0 * std::numbers::pi).m, Mat::identity(2)) < 1e-12);
    Rng rng(89);
    for (int i = 0; i < 50; ++i) {
        double a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
        CHECK(max_abs_diff(so2_cover(a + b).m, so2_cover(a).m * so2_cover(b).m) < 1e-14);
    }
}
