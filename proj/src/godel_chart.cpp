#include "liegeo/godel_chart.hpp"

#include <cmath>
#include <stdexcept>

#include "liegeo/linalg.hpp"
#include "liegeo/presets.hpp"

namespace liegeo {

Mat metric_at(const ChartPoint& x, double a) {
    if (!(a > 0.0)) throw std::domain_error("metric_at: scale parameter must be positive");
    double a2 = a * a, ex = std::exp(x.x1);
    Mat g(4, 4);
    g(0, 0) = a2;
    g(0, 2) = g(2, 0) = a2 * ex;
    g(2, 2) = a2 * ex * ex / 2.0;
    g(1, 1) = -a2;
    g(3, 3) = -a2;
    return g;
}

ChartPoint apply_action(const IsometryParams& p, const ChartPoint& x) {
    return {x.x0 + p.a, x.x1 + p.b, x.x2 * std::exp(-p.b) + p.c, x.x3 + p.d};
}

Mat action_jacobian(const IsometryParams& p) {
    Mat j = Mat::identity(4);
    j(2, 2) = std::exp(-p.b);
    return j;
}

namespace {

std::array<double, 4> coords_of(const ChartPoint& q) { return {q.x0, q.x1, q.x2, q.x3}; }
ChartPoint point_of(const std::array<double, 4>& c) { return {c[0], c[1], c[2], c[3]}; }

}  // namespace

Mat action_jacobian_fd(const IsometryParams& p, const ChartPoint& x, double h) {
    Mat j(4, 4);
    for (int c = 0; c < 4; ++c) {
        auto cp = coords_of(x), cm = coords_of(x);
        cp[c] += h;
        cm[c] -= h;
        auto fp = coords_of(apply_action(p, point_of(cp)));
        auto fm = coords_of(apply_action(p, point_of(cm)));
        for (int r = 0; r < 4; ++r) j(r, c) = (fp[r] - fm[r]) / (2.0 * h);
    }
    return j;
}

double pullback_residual(const IsometryParams& p, const ChartPoint& x, double scale,
                         bool use_fd_jacobian) {
    Mat j = use_fd_jacobian ? action_jacobian_fd(p, x) : action_jacobian(p);
    Mat pulled = j.transpose() * metric_at(apply_action(p, x), scale) * j;
    return max_abs_diff(pulled, metric_at(x, scale));
}

namespace {

// d/dx1 of the metric; all other coordinate derivatives vanish.
Mat metric_dx1(const ChartPoint& x, double a) {
    double a2 = a * a, ex = std::exp(x.x1);
    Mat d(4, 4);
    d(0, 2) = d(2, 0) = a2 * ex;
    d(2, 2) = a2 * ex * ex;
    return d;
}

Christoffel contract(const Mat& ginv, const std::array<Mat, 4>& dg) {
    Christoffel out;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int l = 0; l < 4; ++l)
                    s += ginv(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
                out.c[k][i][j] = 0.5 * s;
            }
    return out;
}

}  // namespace

Christoffel christoffel_at(const ChartPoint& x, double a) {
    Mat ginv = inverse(metric_at(x, a));
    std::array<Mat, 4> dg = {Mat(4, 4), metric_dx1(x, a), Mat(4, 4), Mat(4, 4)};
    return contract(ginv, dg);
}

Christoffel christoffel_fd(const ChartPoint& x, double a, double h) {
    Mat ginv = inverse(metric_at(x, a));
    std::array<Mat, 4> dg = {Mat(4, 4), Mat(4, 4), Mat(4, 4), Mat(4, 4)};
    for (int i = 0; i < 4; ++i) {
        auto cp = coords_of(x), cm = coords_of(x);
        cp[i] += h;
        cm[i] -= h;
        dg[i] = (metric_at(point_of(cp), a) - metric_at(point_of(cm), a)) * (1.0 / (2.0 * h));
    }
    return contract(ginv, dg);
}

double christoffel_max_diff(const Christoffel& a, const Christoffel& b) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                worst = std::max(worst, std::abs(a.c[k][i][j] - b.c[k][i][j]));
    return worst;
}

std::array<double, 4> christoffel_quadratic(const Christoffel& c, const std::array<double, 4>& v) {
    std::array<double, 4> out = {};
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[k] += c.c[k][i][j] * v[i] * v[j];
    return out;
}

ConsistencyResult identity_consistency(double a) {
    Mat g = metric_at(ChartPoint{}, a);
    Mat g4 = to_double(preset("goedel4").gram);
    Mat g3 = to_double(preset("g3-goedel").gram);
    double dev = max_abs_diff(g, g4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dev = std::max(dev, std::abs(g(i, j) - g3(i, j)));
    return {dev == 0.0, dev};
}

}  // namespace liegeo
