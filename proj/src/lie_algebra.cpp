#include "liegeo/lie_algebra.hpp"

#include <stdexcept>

namespace liegeo {

StructureConstants::StructureConstants(int dim) : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("StructureConstants: dim must be positive");
    c_.assign(static_cast<size_t>(dim) * dim * dim, QSqrt2());
}

const QSqrt2& StructureConstants::at(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
        throw std::out_of_range("StructureConstants: index");
    return c_[idx(i, j, k)];
}

void StructureConstants::set_bracket(int i, int j, const XVec& coeffs) {
    if (static_cast<int>(coeffs.size()) != dim_)
        throw std::invalid_argument("StructureConstants: coefficient length");
    for (int k = 0; k < dim_; ++k) {
        c_[idx(i, j, k)] = coeffs[k];
        c_[idx(j, i, k)] = -coeffs[k];
    }
}

void StructureConstants::set_entry(int i, int j, int k, const QSqrt2& v) { c_[idx(i, j, k)] = v; }

bool StructureConstants::antisymmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!(c_[idx(i, j, k)] + c_[idx(j, i, k)]).is_zero()) return false;
    return true;
}

XVec bracket(std::span<const QSqrt2> v, std::span<const QSqrt2> w, const StructureConstants& sc) {
    int n = sc.dim();
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
        throw std::invalid_argument("bracket: dimension mismatch");
    XVec out(n, QSqrt2());
    for (int i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (w[j].is_zero()) continue;
            QSqrt2 f = v[i] * w[j];
            for (int k = 0; k < n; ++k) out[k] += f * sc.at(i, j, k);
        }
    }
    return out;
}

JacobiResult jacobi_check(const StructureConstants& sc) {
    int n = sc.dim();
    auto basis = [&](int i) {
        XVec e(n, QSqrt2());
        e[i] = QSqrt2(1);
        return e;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                XVec s(n, QSqrt2());
                auto add_term = [&](int a, int b, int c) {
                    XVec inner = bracket(basis(b), basis(c), sc);
                    XVec outer = bracket(basis(a), inner, sc);
                    for (int m = 0; m < n; ++m) s[m] += outer[m];
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                for (int m = 0; m < n; ++m)
                    if (!s[m].is_zero()) return {false, i, j, k};
            }
    return {};
}

QSqrt2 realization_deviation(const StructureConstants& sc, const MatrixRealization& real) {
    int n = sc.dim();
    if (static_cast<int>(real.basis.size()) != n)
        throw std::invalid_argument("realization_deviation: basis count mismatch");
    QSqrt2 worst(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            XMat lhs = real.basis[i] * real.basis[j] - real.basis[j] * real.basis[i];
            for (int k = 0; k < n; ++k) lhs = lhs - real.basis[k] * sc.at(i, j, k);
            QSqrt2 dev = max_abs_exact(lhs);
            if (dev > worst) worst = dev;
        }
    return worst;
}

StructureConstants change_basis(const StructureConstants& sc, const XMat& t) {
    int n = sc.dim();
    if (t.rows() != n || t.cols() != n) throw std::invalid_argument("change_basis: shape");
    XMat tinv = inverse_exact(t);  // throws on singular T
    StructureConstants out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // [b'_i, b'_j] in the old basis, then expand in the new one.
            XVec vi(n), vj(n);
            for (int p = 0; p < n; ++p) {
                vi[p] = t(p, i);
                vj[p] = t(p, j);
            }
            XVec old_coords = bracket(vi, vj, sc);
            XVec coeffs(n, QSqrt2());
            for (int s = 0; s < n; ++s)
                for (int r = 0; r < n; ++r) coeffs[s] += tinv(s, r) * old_coords[r];
            out.set_bracket(i, j, coeffs);
        }
    return out;
}

}  // namespace liegeo
