#include "liegeo/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace liegeo {

namespace {

double inf_norm(const Mat& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

double det(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("det: square matrix required");
    int n = m.rows();
    Mat a = m;
    double d = 1.0;
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
        if (a(pivot, c) == 0.0) return 0.0;
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            double f = a(r, c) / a(c, c);
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: square matrix required");
    int n = m.rows();
    Mat a = m, inv = Mat::identity(n);
    double scale = std::max(1e-300, max_abs(m));
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
        if (std::abs(a(pivot, c)) < 1e-14 * scale)
            throw std::domain_error("inverse: singular matrix");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        double p = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            double f = a(r, c);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

QRFactors qr_positive(const Mat& m, double tol) {
    if (!m.is_square()) throw std::invalid_argument("qr_positive: square matrix required");
    int n = m.rows();
    Mat r = m, q = Mat::identity(n);
    double scale = std::max(1e-300, max_abs(m));

    for (int k = 0; k < n - 1; ++k) {
        double nrm = 0.0;
        for (int i = k; i < n; ++i) nrm += r(i, k) * r(i, k);
        nrm = std::sqrt(nrm);
        if (nrm < tol * scale) throw std::domain_error("qr_positive: singular matrix");

        std::vector<double> v(n - k, 0.0);
        double alpha = r(k, k) >= 0 ? -nrm : nrm;
        for (int i = k; i < n; ++i) v[i - k] = r(i, k);
        v[0] -= alpha;
        double vn2 = 0.0;
        for (double x : v) vn2 += x * x;
        if (vn2 > 0.0) {
            // r <- H r, q <- q H with H = I - 2 v v^T / (v^T v)
            for (int j = 0; j < n; ++j) {
                double dot = 0.0;
                for (int i = k; i < n; ++i) dot += v[i - k] * r(i, j);
                double f = 2.0 * dot / vn2;
                for (int i = k; i < n; ++i) r(i, j) -= f * v[i - k];
            }
            for (int i = 0; i < n; ++i) {
                double dot = 0.0;
                for (int j = k; j < n; ++j) dot += q(i, j) * v[j - k];
                double f = 2.0 * dot / vn2;
                for (int j = k; j < n; ++j) q(i, j) -= f * v[j - k];
            }
        }
        for (int i = k + 1; i < n; ++i) r(i, k) = 0.0;
    }
    for (int i = 0; i < n; ++i)
        if (std::abs(r(i, i)) < tol * scale)
            throw std::domain_error("qr_positive: singular matrix");
    // Force a positive diagonal; the sign flips stay inside Q R = const.
    for (int i = 0; i < n; ++i) {
        if (r(i, i) < 0) {
            for (int j = 0; j < n; ++j) {
                r(i, j) = -r(i, j);
                q(j, i) = -q(j, i);
            }
        }
    }
    return {q, r};
}

LQFactors lq_positive(const Mat& m, double tol) {
    auto qr = qr_positive(m.transpose(), tol);
    return {qr.r.transpose(), qr.q.transpose()};
}

Mat mat_exp(const Mat& m, double tol) {
    if (!m.is_square()) throw std::invalid_argument("mat_exp: square matrix required");
    if (!(tol > 0.0)) throw std::invalid_argument("mat_exp: tol must be positive");
    int n = m.rows();

    int squarings = 0;
    double nrm = inf_norm(m);
    while (nrm > 0.5 && squarings < 60) {
        nrm *= 0.5;
        ++squarings;
    }
    Mat b = m * std::ldexp(1.0, -squarings);

    Mat term = Mat::identity(n), sum = Mat::identity(n);
    double cutoff = tol * std::ldexp(1.0, -squarings) / 16.0;
    for (int k = 1; k <= 80; ++k) {
        term = term * b * (1.0 / k);
        sum = sum + term;
        if (inf_norm(term) < cutoff) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

}  // namespace liegeo
