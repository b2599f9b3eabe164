#include "liegeo/iwasawa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "liegeo/group_maps.hpp"
#include "liegeo/linalg.hpp"

namespace liegeo {

namespace {

void require_det_one(const Mat& m, double det_tol, const char* who) {
    if (!m.is_square()) throw std::domain_error(std::string(who) + ": square matrix required");
    if (std::abs(det(m) - 1.0) > det_tol)
        throw std::domain_error(std::string(who) + ": determinant must be 1");
}

double wrap_2pi(double t) {
    const double two_pi = 2.0 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    if (t < 0) t += two_pi;
    return t;
}

}  // namespace

IwasawaFactors kan(const Mat& m, double det_tol) {
    require_det_one(m, det_tol, "kan");
    auto [q, r] = qr_positive(m);
    int n = m.rows();
    Mat a(n, n), nu = Mat::identity(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = r(i, i);
        for (int j = i + 1; j < n; ++j) nu(i, j) = r(i, j) / r(i, i);
    }
    return {FactorOrder::KAN, q, a, nu};
}

IwasawaFactors nak(const Mat& m, double det_tol) {
    if (m.rows() != 2 || m.cols() != 2) throw std::domain_error("nak: 2x2 matrix required");
    require_det_one(m, det_tol, "nak");
    auto [l, q] = lq_positive(m);
    Mat a(2, 2), nl = Mat::identity(2);
    a(0, 0) = l(0, 0);
    a(1, 1) = l(1, 1);
    nl(1, 0) = l(1, 0) / l(0, 0);
    return {FactorOrder::NAK, q, a, nl};
}

bool psi_in_domain(const PsiCoords& c) {
    const double half_pi = std::numbers::pi / 2.0;
    return c.rho > 0.0 && c.theta > -half_pi && c.theta < half_pi && c.phi >= 0.0 &&
           c.phi < 2.0 * std::numbers::pi && std::isfinite(c.rho) && std::isfinite(c.theta) &&
           std::isfinite(c.phi);
}

Mat psi_eval(const PsiCoords& c) {
    if (!psi_in_domain(c)) throw std::domain_error("psi_eval: coordinates outside the domain");
    double f = 1.0 / std::sqrt(c.rho * std::cos(c.theta));
    return Mat::from_rows(
               {{std::cos(c.phi), std::sin(c.phi)},
                {c.rho * std::sin(c.theta - c.phi), c.rho * std::cos(c.theta - c.phi)}}) *
           f;
}

PsiCoords psi_inverse(const Mat& m, double det_tol) {
    IwasawaFactors f = nak(m, det_tol);
    double b = f.n(1, 0);
    double a = f.a(1, 1) * f.a(1, 1);  // A = diag(a^{-1/2}, a^{1/2})
    PsiCoords c;
    c.rho = std::hypot(a, b);
    c.theta = std::atan2(b, a);  // a > 0 keeps theta strictly inside (-pi/2, pi/2)
    c.phi = wrap_2pi(std::atan2(f.k(0, 1), f.k(0, 0)));
    return c;
}

double verify_psiab(const PsiCoords& c) {
    if (!psi_in_domain(c)) throw std::domain_error("verify_psiab: coordinates outside the domain");
    double a = c.rho * std::cos(c.theta);
    double b = c.rho * std::sin(c.theta);
    Mat n = Mat::from_rows({{1.0, 0.0}, {b, 1.0}});
    Mat abar = Mat::from_rows({{1.0 / std::sqrt(a), 0.0}, {0.0, std::sqrt(a)}});
    return max_abs_diff(n * abar * rot(c.phi), psi_eval(c));
}

Mat frame_e1bar() { return Mat::from_rows({{0.0, 1.0}, {0.0, 0.0}}); }
Mat frame_e2bar() { return Mat::from_rows({{-0.5, 0.0}, {0.0, 0.5}}); }
Mat frame_e3bar() { return Mat::from_rows({{0.0, 1.0}, {-1.0, 0.0}}); }

namespace {

std::array<double, 3> expand_in_frame(const Mat& d) {
    // d = c1 e1bar + c2 e2bar + c3 e3bar = [[-c2/2, c1+c3], [-c3, c2/2]]
    double c3 = -d(1, 0);
    double c1 = d(0, 1) - c3;
    double c2 = d(1, 1) - d(0, 0);
    return {c1, c2, c3};
}

Mat psiab_group_point(const PsiCoords& c) {
    double a = c.rho * std::cos(c.theta);
    double b = c.rho * std::sin(c.theta);
    Mat n = Mat::from_rows({{1.0, 0.0}, {b, 1.0}});
    Mat abar = Mat::from_rows({{1.0 / std::sqrt(a), 0.0}, {0.0, std::sqrt(a)}});
    return n * abar;
}

Mat pushed_direction(const Mat& s, const Mat& k, const Mat& w_sol, const Mat& w_so2, double h) {
    auto moved = [&](double t) { return s * mat_exp(w_sol * t) * k * mat_exp(w_so2 * t); };
    Mat diff = (moved(h) - moved(-h)) * (1.0 / (2.0 * h));
    return inverse(s * k) * diff;
}

}  // namespace

FrameTransition pushforward_frame(const PsiCoords& c, double h) {
    if (!psi_in_domain(c))
        throw std::domain_error("pushforward_frame: coordinates outside the domain");
    if (!(h > 0.0)) throw std::domain_error("pushforward_frame: step must be positive");

    Mat s = psiab_group_point(c), k = rot(c.phi);
    Mat zero(2, 2);

    Mat d1 = pushed_direction(s, k, frame_e2bar(), zero, h);
    Mat d2 = pushed_direction(s, k, frame_e1bar(), frame_e3bar(), h);
    Mat d1_half = pushed_direction(s, k, frame_e2bar(), zero, h / 2.0);
    Mat d2_half = pushed_direction(s, k, frame_e1bar(), frame_e3bar(), h / 2.0);

    double disagree = std::max(max_abs_diff(d1, d1_half), max_abs_diff(d2, d2_half));
    double scale = 1.0 + std::max(max_abs(d1), max_abs(d2));
    if (h < 1e-6 && disagree > 1e-4 * scale)
        throw std::runtime_error(
            "pushforward_frame: step too small, cancellation detected by step-halving "
            "disagreement");

    return {expand_in_frame(d1), expand_in_frame(d2)};
}

FrameTransition pushforward_closed_form(const PsiCoords& c) {
    if (!psi_in_domain(c))
        throw std::domain_error("pushforward_closed_form: coordinates outside the domain");
    Mat k = rot(c.phi), kinv = rot(-c.phi);
    Mat v1 = kinv * frame_e2bar() * k;
    Mat v2 = kinv * frame_e1bar() * k + frame_e3bar();
    return {expand_in_frame(v1), expand_in_frame(v2)};
}

}  // namespace liegeo
