#include "liegeo/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace liegeo {

namespace {

QSqrt2 inner(const XMat& gram, const XVec& v, const XVec& w) {
    QSqrt2 s(0);
    int n = gram.rows();
    for (int i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) s += v[i] * gram(i, j) * w[j];
    }
    return s;
}

XVec basis_vec(int n, int i) {
    XVec e(n, QSqrt2());
    e[i] = QSqrt2(1);
    return e;
}

}  // namespace

XVec ConnectionTable::covariant(const XVec& v, const XVec& w) const {
    if (static_cast<int>(v.size()) != dim_ || static_cast<int>(w.size()) != dim_)
        throw std::invalid_argument("ConnectionTable: dimension mismatch");
    XVec out(dim_, QSqrt2());
    for (int i = 0; i < dim_; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (w[j].is_zero()) continue;
            QSqrt2 f = v[i] * w[j];
            for (int k = 0; k < dim_; ++k) out[k] += f * at(i, j, k);
        }
    }
    return out;
}

ConnectionTable koszul_connection(const StructureConstants& sc, const XMat& gram) {
    int n = sc.dim();
    if (gram.rows() != n || gram.cols() != n)
        throw std::invalid_argument("koszul_connection: gram shape");
    XMat ginv;
    try {
        ginv = inverse_exact(gram);
    } catch (const std::domain_error&) {
        throw std::domain_error("koszul_connection: degenerate Gram matrix");
    }

    const QSqrt2 half(Rational(1, 2));
    ConnectionTable table(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // w_k = (nabla_i b_j, b_k)
            XVec w(n, QSqrt2());
            XVec bi = basis_vec(n, i), bj = basis_vec(n, j);
            for (int k = 0; k < n; ++k) {
                XVec bk = basis_vec(n, k);
                QSqrt2 s = inner(gram, bk, bracket(bi, bj, sc)) +
                           inner(gram, bj, bracket(bk, bi, sc)) -
                           inner(gram, bi, bracket(bj, bk, sc));
                w[k] = half * s;
            }
            for (int k = 0; k < n; ++k) {
                QSqrt2 g(0);
                for (int l = 0; l < n; ++l) g += w[l] * ginv(l, k);
                table.set(i, j, k, std::move(g));
            }
        }
    return table;
}

ConnectionTable koszul_connection(const LieAlgebraPreset& p) {
    return koszul_connection(p.sc, p.gram);
}

CurvatureReport curvature(const StructureConstants& sc, const XMat& gram) {
    int n = sc.dim();
    ConnectionTable conn = koszul_connection(sc, gram);

    auto nabla_dir = [&](const XVec& dir, const XVec& w) { return conn.covariant(dir, w); };

    CurvatureReport rep;
    rep.dim = n;
    rep.riem.assign(static_cast<size_t>(n) * n * n * n, QSqrt2());
    rep.k_raw.assign(static_cast<size_t>(n) * n, QSqrt2());
    rep.k_normalized.assign(static_cast<size_t>(n) * n, std::nullopt);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            XVec bi = basis_vec(n, i), bj = basis_vec(n, j);
            XVec br(n);
            for (int k = 0; k < n; ++k) br[k] = sc.at(i, j, k);
            for (int k = 0; k < n; ++k) {
                XVec bk = basis_vec(n, k);
                XVec term1 = nabla_dir(bi, nabla_dir(bj, bk));
                XVec term2 = nabla_dir(bj, nabla_dir(bi, bk));
                XVec term3 = nabla_dir(br, bk);
                for (int l = 0; l < n; ++l) {
                    rep.riem[((static_cast<size_t>(i) * n + j) * n + k) * n + l] =
                        term1[l] - term2[l] - term3[l];
                }
            }
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            XVec rij_j(n);
            for (int l = 0; l < n; ++l) rij_j[l] = rep.r(i, j, j, l);
            rep.k_raw[static_cast<size_t>(i) * n + j] = inner(gram, rij_j, basis_vec(n, i));
            QSqrt2 denom = gram(i, i) * gram(j, j) - gram(i, j) * gram(i, j);
            if (!denom.is_zero())
                rep.k_normalized[static_cast<size_t>(i) * n + j] =
                    rep.k_raw[static_cast<size_t>(i) * n + j] / denom;
        }
    return rep;
}

CurvatureReport curvature(const LieAlgebraPreset& p) { return curvature(p.sc, p.gram); }

std::pair<int, int> signature(const Mat& sym, double tol) {
    if (!sym.is_square()) throw std::invalid_argument("signature: square matrix required");
    int n = sym.rows();
    Mat a = sym;
    // plain Jacobi eigenvalue iteration; plenty for symmetric 8x8
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < 1e-14 * std::max(1.0, max_abs(a))) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                double theta = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
                double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    int plus = 0, minus = 0;
    double scale = std::max(1.0, max_abs(sym));
    for (int i = 0; i < n; ++i) {
        if (a(i, i) > tol * scale)
            ++plus;
        else if (a(i, i) < -tol * scale)
            ++minus;
        else
            throw std::domain_error("signature: matrix is numerically degenerate");
    }
    return {plus, minus};
}

std::pair<int, int> signature(const XMat& gram) {
    if (!gram.is_square()) throw std::invalid_argument("signature: square matrix required");
    if (!(gram == gram.transpose()))
        throw std::invalid_argument("signature: symmetric matrix required");
    int n = gram.rows();
    XMat a = gram;
    int plus = 0, minus = 0;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && !a(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) {
            // no nonzero diagonal left; look for a hyperbolic pair and fold it
            int r = -1, c = -1;
            for (int i = 0; i < n && r < 0; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!done[j] && j != i && !a(i, j).is_zero()) {
                        r = i;
                        c = j;
                        break;
                    }
            }
            if (r < 0) throw std::domain_error("signature: degenerate matrix");
            // congruence b_r <- b_r + b_c makes (r,r) = 2 a(r,c) nonzero
            for (int j = 0; j < n; ++j) a(r, j) += a(c, j);
            for (int i = 0; i < n; ++i) a(i, r) += a(i, c);
            p = r;
        }
        int sgn = a(p, p).signum();
        if (sgn > 0)
            ++plus;
        else
            ++minus;
        for (int i = 0; i < n; ++i) {
            if (i == p || done[i] || a(i, p).is_zero()) continue;
            QSqrt2 f = a(i, p) / a(p, p);
            for (int j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
            for (int j = 0; j < n; ++j) a(j, i) -= f * a(j, p);
        }
        done[p] = true;
    }
    // float cross-check; the exact result is authoritative
    try {
        auto fl = signature(to_double(gram));
        if (fl != std::pair<int, int>{plus, minus})
            throw std::runtime_error("signature: exact and float paths disagree");
    } catch (const std::domain_error&) {
        // float path cannot confidently sign a tiny eigenvalue; keep exact
    }
    return {plus, minus};
}

OrthoBasis pseudo_gram_schmidt(const XMat& gram, const std::vector<int>& order) {
    int n = gram.rows();
    if (!gram.is_square()) throw std::invalid_argument("pseudo_gram_schmidt: square Gram");
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("pseudo_gram_schmidt: order must be a permutation");
    std::vector<bool> seen(n, false);
    for (int i : order) {
        if (i < 0 || i >= n || seen[i])
            throw std::invalid_argument("pseudo_gram_schmidt: order must be a permutation");
        seen[i] = true;
    }

    std::vector<XVec> basis;
    std::vector<int> signs;
    for (int step = 0; step < n; ++step) {
        XVec w = basis_vec(n, order[step]);
        for (int prev = 0; prev < step; ++prev) {
            // previous vectors are unit up to sign, so the projection
            // coefficient is sign * (w, u)
            QSqrt2 coef = inner(gram, w, basis[prev]) * QSqrt2(signs[prev]);
            for (int k = 0; k < n; ++k) w[k] -= coef * basis[prev][k];
        }
        QSqrt2 len2 = inner(gram, w, w);
        if (len2.is_zero())
            throw std::domain_error(
                "pseudo_gram_schmidt: isotropic intermediate vector at position " +
                std::to_string(step) + "; the chosen order fails");
        auto norm = QSqrt2::sqrt(len2.abs());
        if (!norm)
            throw std::domain_error(
                "pseudo_gram_schmidt: vector length is not representable in Q(sqrt 2)");
        QSqrt2 inv = norm->inverse();
        for (auto& v : w) v *= inv;
        basis.push_back(std::move(w));
        signs.push_back(len2.signum());
    }

    OrthoBasis out;
    out.transform = XMat(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.transform(i, j) = basis[j][i];
    out.signs = std::move(signs);
    return out;
}

CurvatureReport scale_metric(const LieAlgebraPreset& p, const QSqrt2& c) {
    if (c.signum() <= 0) throw std::domain_error("scale_metric: c must be positive");
    return curvature(p.sc, p.gram * c);
}

}  // namespace liegeo
