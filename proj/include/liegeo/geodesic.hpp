#pragma once

#include <vector>

#include "liegeo/metric.hpp"

namespace liegeo {

// One-parameter subgroup test: exp(tW) is a geodesic iff nabla_W W = 0,
// evaluated exactly through the connection table.
bool is_geodesic_oneparam(const LieAlgebraPreset& p, const XVec& w);

struct GeodesicState {
    double t = 0.0;
    Mat g;                  // group element along the curve
    std::vector<double> v;  // body velocity in the preset basis
};

// Fixed-step classical 4th-order integration of the left-trivialized geodesic
// system  vdot^k = -Gamma^k_{ij} v^i v^j,  gdot = g (sum v^k B_k),
// with B_k the preset's matrix realization. Returns the sampled trajectory
// including the initial state.
std::vector<GeodesicState> integrate(const LieAlgebraPreset& p, const std::vector<double>& v0,
                                     double t_final, int steps);

// (v, v) under the preset Gram, in floating point.
double frame_energy(const LieAlgebraPreset& p, const std::vector<double>& v);

}  // namespace liegeo
