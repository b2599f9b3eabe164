#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liegeo/exact_linalg.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/sampling.hpp"

using namespace liegeo;

namespace {

Mat random_mat(int n, Rng& rng, double lo = -2.0, double hi = 2.0) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(lo, hi);
    return m;
}

// classical Gram-Schmidt on columns, the independent factorization oracle
void gram_schmidt_qr(const Mat& m, Mat& q, Mat& r) {
    int n = m.rows();
    q = Mat(n, n);
    r = Mat(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = m(i, j);
        for (int p = 0; p < j; ++p) {
            double dot = 0;
            for (int i = 0; i < n; ++i) dot += q(i, p) * m(i, j);
            r(p, j) = dot;
            for (int i = 0; i < n; ++i) v[i] -= dot * q(i, p);
        }
        double nrm = 0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        r(j, j) = nrm;
        for (int i = 0; i < n; ++i) q(i, j) = v[i] / nrm;
    }
}

}  // namespace

TEST_CASE("matrix shape errors") {
    Mat a(2, 3), b(2, 2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(b * a.transpose() * a * b, std::invalid_argument);
    CHECK_THROWS_AS(det(a), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        Mat a = random_mat(3, rng), b = random_mat(3, rng);
        CHECK(det(a * b) == doctest::Approx(det(a) * det(b)).epsilon(1e-10));
    }
    // exact version over Q(sqrt2)
    Rng xr(11);
    for (int i = 0; i < 20; ++i) {
        XMat a(3, 3), b(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                a(r, c) = QSqrt2(Rational(xr.uniform_int(-3, 3)),
                                 Rational(xr.uniform_int(-2, 2)));
                b(r, c) = QSqrt2(Rational(xr.uniform_int(-3, 3)),
                                 Rational(xr.uniform_int(-2, 2)));
            }
        CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("exact inverse") {
    XMat m = XMat::from_rows({{QSqrt2(1), QSqrt2::sqrt2()}, {QSqrt2(0), QSqrt2(2)}});
    XMat inv = inverse_exact(m);
    CHECK(m * inv == XMat::identity(2));
    CHECK(inv * m == XMat::identity(2));
    XMat sing(2, 2);
    sing(0, 0) = QSqrt2(1);
    sing(1, 0) = QSqrt2(1);
    CHECK_THROWS_AS(inverse_exact(sing), std::domain_error);
}

TEST_CASE("mat_exp examples") {
    CHECK(max_abs_diff(mat_exp(Mat(3, 3)), Mat::identity(3)) == 0.0);

    Mat d = Mat::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    Mat ed = mat_exp(d);
    CHECK(ed(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
    CHECK(ed(1, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
    CHECK(std::abs(ed(0, 1)) + std::abs(ed(1, 0)) == 0.0);

    // exp(t f0) is the rotation by t; freeze t = pi/2
    Mat f0 = Mat::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
    Mat r = mat_exp(f0 * (std::numbers::pi / 2.0));
    CHECK(max_abs_diff(r, Mat::from_rows({{0.0, 1.0}, {-1.0, 0.0}})) < 1e-13);

    CHECK_THROWS_AS(mat_exp(Mat(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(mat_exp(Mat::identity(2), -1.0), std::invalid_argument);
}

TEST_CASE("mat_exp one-parameter property") {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        Mat m = random_mat(2, rng, -1.0, 1.0);
        double s = rng.uniform(-1.5, 1.5), t = rng.uniform(-1.5, 1.5);
        CHECK(max_abs_diff(mat_exp(m * (s + t)), mat_exp(m * s) * mat_exp(m * t)) < 1e-10);
    }
}

TEST_CASE("qr_positive") {
    auto id = qr_positive(Mat::identity(3));
    CHECK(max_abs_diff(id.q, Mat::identity(3)) == 0.0);
    CHECK(max_abs_diff(id.r, Mat::identity(3)) == 0.0);

    Mat so2 = Mat::from_rows({{std::cos(0.7), std::sin(0.7)}, {-std::sin(0.7), std::cos(0.7)}});
    auto rot_fac = qr_positive(so2);
    CHECK(max_abs_diff(rot_fac.q, so2) < 1e-14);
    CHECK(max_abs_diff(rot_fac.r, Mat::identity(2)) < 1e-14);

    Rng rng(19);
    for (int i = 0; i < 50; ++i) {
        Mat m = random_mat(2, rng);
        if (std::abs(det(m)) < 0.1) continue;
        auto f = qr_positive(m);
        CHECK(max_abs_diff(f.q * f.r, m) < 1e-12);
        CHECK(max_abs_diff(f.q.transpose() * f.q, Mat::identity(2)) < 1e-13);
        CHECK(f.r(0, 0) > 0);
        CHECK(f.r(1, 1) > 0);
        CHECK(std::abs(f.r(1, 0)) == 0.0);
        // against the Gram-Schmidt oracle
        Mat oq, orr;
        gram_schmidt_qr(m, oq, orr);
        CHECK(max_abs_diff(f.q, oq) < 1e-10);
        CHECK(max_abs_diff(f.r, orr) < 1e-10);
    }

    Mat sing(2, 2);
    sing(0, 0) = 1.0;
    sing(1, 0) = 1.0;
    CHECK_THROWS_AS(qr_positive(sing), std::domain_error);
}

TEST_CASE("qr and lq refactorization is stable") {
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
        Mat m = random_mat(3, rng);
        if (std::abs(det(m)) < 0.1) continue;
        auto f = qr_positive(m);
        auto f2 = qr_positive(f.q * f.r);
        CHECK(max_abs_diff(f.q, f2.q) < 1e-14);
        CHECK(max_abs_diff(f.r, f2.r) < 1e-14);
        auto l = lq_positive(m);
        auto l2 = lq_positive(l.l * l.q);
        CHECK(max_abs_diff(l.l, l2.l) < 1e-14);
        CHECK(max_abs_diff(l.q, l2.q) < 1e-14);
    }
}

TEST_CASE("lq_positive") {
    auto id = lq_positive(Mat::identity(2));
    CHECK(max_abs_diff(id.l, Mat::identity(2)) == 0.0);

    Mat uni = Mat::from_rows({{1.0, 0.0}, {0.7, 1.0}});
    auto f = lq_positive(uni);
    CHECK(max_abs_diff(f.l, uni) < 1e-14);
    CHECK(max_abs_diff(f.q, Mat::identity(2)) < 1e-14);

    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        // random det-1 input
        double t = rng.uniform(-1, 1), u = rng.uniform(-2, 2), th = rng.uniform(0, 6.28);
        Mat m = Mat::from_rows({{std::cos(th), std::sin(th)}, {-std::sin(th), std::cos(th)}}) *
                Mat::from_rows({{std::exp(t), 0.0}, {0.0, std::exp(-t)}}) *
                Mat::from_rows({{1.0, u}, {0.0, 1.0}});
        auto g = lq_positive(m);
        CHECK(max_abs_diff(g.l * g.q, m) < 1e-12);
        CHECK(g.l(0, 0) > 0);
        CHECK(g.l(1, 1) > 0);
        CHECK(std::abs(g.l(0, 1)) == 0.0);
        CHECK(max_abs_diff(g.q.transpose() * g.q, Mat::identity(2)) < 1e-13);
        CHECK(det(g.q) == doctest::Approx(1.0).epsilon(1e-12));  // rotation, not reflection
    }
}
