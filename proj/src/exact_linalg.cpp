#include "liegeo/exact_linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace liegeo {

QSqrt2 det_exact(const XMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: square matrix required");
    int n = m.rows();
    XMat a = m;
    QSqrt2 det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!a(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return QSqrt2(0);
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det = det * a(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            QSqrt2 f = a(r, c) / a(c, c);
            for (int j = c; j < n; ++j) a(r, j) = a(r, j) - f * a(c, j);
        }
    }
    return det;
}

XMat inverse_exact(const XMat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse_exact: square matrix required");
    int n = m.rows();
    XMat a = m;
    XMat inv = XMat::identity(n);
    std::vector<int> col_perm(n);
    std::iota(col_perm.begin(), col_perm.end(), 0);

    for (int step = 0; step < n; ++step) {
        int pr = -1, pc = -1;
        for (int r = step; r < n && pr < 0; ++r)
            for (int c = step; c < n; ++c)
                if (!a(r, c).is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) throw std::domain_error("inverse_exact: singular matrix");
        if (pr != step)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pr, j), a(step, j));
                std::swap(inv(pr, j), inv(step, j));
            }
        if (pc != step) {
            for (int i = 0; i < n; ++i) std::swap(a(i, pc), a(i, step));
            std::swap(col_perm[pc], col_perm[step]);
        }
        QSqrt2 piv = a(step, step).inverse();
        for (int j = 0; j < n; ++j) {
            a(step, j) = a(step, j) * piv;
            inv(step, j) = inv(step, j) * piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == step || a(r, step).is_zero()) continue;
            QSqrt2 f = a(r, step);
            for (int j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(step, j);
                inv(r, j) = inv(r, j) - f * inv(step, j);
            }
        }
    }
    // Column swaps on A permute rows of the inverse.
    XMat result(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) result(col_perm[i], j) = inv(i, j);
    return result;
}

QSqrt2 max_abs_exact(const XMat& m) {
    QSqrt2 best(0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            QSqrt2 v = m(i, j).abs();
            if (v > best) best = v;
        }
    return best;
}

}  // namespace liegeo
