#include "liegeo/geodesic.hpp"

#include <stdexcept>

namespace liegeo {

bool is_geodesic_oneparam(const LieAlgebraPreset& p, const XVec& w) {
    ConnectionTable conn = koszul_connection(p);
    XVec acc = conn.covariant(w, w);
    for (const auto& c : acc)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

struct FlatConnection {
    int dim;
    std::vector<double> gamma;
    double at(int i, int j, int k) const {
        return gamma[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
};

FlatConnection flatten(const ConnectionTable& conn) {
    FlatConnection f{conn.dim(), {}};
    f.gamma.resize(static_cast<size_t>(f.dim) * f.dim * f.dim);
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
            for (int k = 0; k < f.dim; ++k)
                f.gamma[(static_cast<size_t>(i) * f.dim + j) * f.dim + k] =
                    conn.at(i, j, k).to_double();
    return f;
}

struct Deriv {
    Mat dg;
    std::vector<double> dv;
};

Deriv rhs(const FlatConnection& conn, const std::vector<Mat>& basis, const Mat& g,
          const std::vector<double>& v) {
    int n = conn.dim;
    int m = basis[0].rows();
    Mat body(m, m);
    for (int k = 0; k < n; ++k)
        if (v[k] != 0.0) body = body + basis[k] * v[k];
    std::vector<double> dv(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += conn.at(i, j, k) * v[i] * v[j];
        dv[k] = -s;
    }
    return {g * body, std::move(dv)};
}

}  // namespace

std::vector<GeodesicState> integrate(const LieAlgebraPreset& p, const std::vector<double>& v0,
                                     double t_final, int steps) {
    if (!p.realization)
        throw std::invalid_argument("integrate: preset has no matrix realization");
    if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
    int n = p.sc.dim();
    if (static_cast<int>(v0.size()) != n)
        throw std::invalid_argument("integrate: velocity dimension mismatch");

    FlatConnection conn = flatten(koszul_connection(p));
    std::vector<Mat> basis;
    for (const auto& b : p.realization->basis) basis.push_back(to_double(b));

    double h = t_final / steps;
    std::vector<GeodesicState> traj;
    traj.reserve(steps + 1);

    Mat g = Mat::identity(basis[0].rows());
    std::vector<double> v = v0;
    traj.push_back({0.0, g, v});

    auto axpy = [n](const std::vector<double>& a, double s, const std::vector<double>& b) {
        std::vector<double> r(n);
        for (int i = 0; i < n; ++i) r[i] = a[i] + s * b[i];
        return r;
    };

    for (int step = 0; step < steps; ++step) {
        Deriv k1 = rhs(conn, basis, g, v);
        Deriv k2 = rhs(conn, basis, g + k1.dg * (h / 2), axpy(v, h / 2, k1.dv));
        Deriv k3 = rhs(conn, basis, g + k2.dg * (h / 2), axpy(v, h / 2, k2.dv));
        Deriv k4 = rhs(conn, basis, g + k3.dg * h, axpy(v, h, k3.dv));
        g = g + (k1.dg + k2.dg * 2.0 + k3.dg * 2.0 + k4.dg) * (h / 6.0);
        for (int i = 0; i < n; ++i)
            v[i] += h / 6.0 * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
        traj.push_back({h * (step + 1), g, v});
    }
    return traj;
}

double frame_energy(const LieAlgebraPreset& p, const std::vector<double>& v) {
    int n = p.sc.dim();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("frame_energy: dimension mismatch");
    Mat g = to_double(p.gram);
    double e = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e += v[i] * g(i, j) * v[j];
    return e;
}

}  // namespace liegeo
