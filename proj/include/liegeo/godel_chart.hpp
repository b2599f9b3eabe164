#pragma once

#include <array>

#include "liegeo/matrix.hpp"

namespace liegeo {

struct ChartPoint {
    double x0 = 0, x1 = 0, x2 = 0, x3 = 0;
};

// Parameters of the simply transitive isometry action:
//   x0' = x0 + a,  x1' = x1 + b,  x2' = x2 e^{-b} + c,  x3' = x3 + d.
struct IsometryParams {
    double a = 0, b = 0, c = 0, d = 0;
};

// Metric components at x for scale parameter a > 0:
//   g00 = a^2, g02 = a^2 e^{x1}, g22 = a^2 e^{2 x1} / 2, g11 = g33 = -a^2.
// Only x1 enters; the x3 line splits off as a flat factor.
Mat metric_at(const ChartPoint& x, double a);

ChartPoint apply_action(const IsometryParams& p, const ChartPoint& x);

// The Jacobian of the action is constant in x: diag(1, 1, e^{-b}, 1).
Mat action_jacobian(const IsometryParams& p);
Mat action_jacobian_fd(const IsometryParams& p, const ChartPoint& x, double h = 1e-6);

// || J^T g(T(x)) J - g(x) || for the action; zero when the action is an
// isometry. Set use_fd_jacobian to cross-check against finite differences.
double pullback_residual(const IsometryParams& p, const ChartPoint& x, double scale,
                         bool use_fd_jacobian = false);

// Christoffel symbols c[k][i][j] = Gamma^k_{ij} from the analytic
// x1-derivatives of the metric.
struct Christoffel {
    double c[4][4][4] = {};
};

Christoffel christoffel_at(const ChartPoint& x, double a);
// Finite-difference cross-check of the same contraction.
Christoffel christoffel_fd(const ChartPoint& x, double a, double h = 1e-5);

double christoffel_max_diff(const Christoffel& a, const Christoffel& b);

// Acceleration Gamma(v, v) of a curve through x with velocity v; the geodesic
// residual of a straight coordinate line is xddot + this.
std::array<double, 4> christoffel_quadratic(const Christoffel& c, const std::array<double, 4>& v);

struct ConsistencyResult {
    bool pass = false;
    double max_abs_dev = 0.0;
};

// metric_at(0, a) against the exact Gram matrices of the g3-goedel (upper 3x3
// block) and goedel4 presets; passes exactly at a = 1.
ConsistencyResult identity_consistency(double a = 1.0);

}  // namespace liegeo
