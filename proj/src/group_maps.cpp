#include "liegeo/group_maps.hpp"

#include <cmath>
#include <stdexcept>

#include "liegeo/linalg.hpp"

namespace liegeo {

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool unit_last_row(const Mat& m, double tol) {
    int n = m.rows();
    for (int j = 0; j < n - 1; ++j)
        if (!near(m(n - 1, j), 0.0, tol)) return false;
    return near(m(n - 1, n - 1), 1.0, tol);
}

// Checks the (x0,x1,x2)-chart pattern shared by G3X4 and G5: identity block,
// translations in the last column, exponent tied to its translation slot.
bool chart_pattern(const Mat& m, int exp_slot_row, double tol) {
    int n = m.rows();
    if (!unit_last_row(m, tol)) return false;
    if (m(0, 0) <= 0.0) return false;
    for (int i = 1; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j)
            if (!near(m(i, j), i == j ? 1.0 : 0.0, tol)) return false;
    for (int j = 1; j < n - 1; ++j)
        if (!near(m(0, j), 0.0, tol)) return false;
    double u = m(exp_slot_row, n - 1);
    return near(m(0, 0), std::exp(-u), tol * std::max(1.0, std::exp(-u)));
}

}  // namespace

bool member_within(GroupTag tag, const Mat& m, double tol) {
    switch (tag) {
        case GroupTag::SL2:
            return m.rows() == 2 && m.cols() == 2 && near(det(m), 1.0, tol);
        case GroupTag::SO2: {
            if (m.rows() != 2 || m.cols() != 2) return false;
            Mat g = m.transpose() * m;
            return max_abs_diff(g, Mat::identity(2)) <= tol && det(m) > 0.0;
        }
        case GroupTag::SOL2:
            return m.rows() == 2 && m.cols() == 2 && near(m(1, 0), 0.0, tol) &&
                   m(0, 0) > 0.0 && near(det(m), 1.0, tol);
        case GroupTag::AFFR3:
            return m.rows() == 3 && m.cols() == 3 && m(0, 0) > 0.0 &&
                   near(m(0, 1), 0.0, tol) && near(m(1, 0), 0.0, tol) &&
                   near(m(1, 1), 1.0, tol) && unit_last_row(m, tol);
        case GroupTag::G3X4:
            return m.rows() == 4 && m.cols() == 4 && chart_pattern(m, 1, tol);
        case GroupTag::G5:
            return m.rows() == 5 && m.cols() == 5 && chart_pattern(m, 1, tol);
    }
    return false;
}

GroupElement make_element(GroupTag tag, Mat m, double tol) {
    if (!member_within(tag, m, tol))
        throw std::domain_error("make_element: matrix fails the group membership check");
    return {tag, std::move(m)};
}

std::string tag_name(GroupTag tag) {
    switch (tag) {
        case GroupTag::SL2: return "SL2";
        case GroupTag::SO2: return "SO2";
        case GroupTag::SOL2: return "SOL2";
        case GroupTag::AFFR3: return "AFFR3";
        case GroupTag::G3X4: return "G3X4";
        case GroupTag::G5: return "G5";
    }
    return "?";
}

nlohmann::ordered_json element_to_json(const GroupElement& g) {
    nlohmann::ordered_json j;
    j["tag"] = tag_name(g.tag);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < g.m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < g.m.cols(); ++c) row.push_back(g.m(i, c));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

GroupElement element_from_json(const nlohmann::json& j, double tol) {
    std::string tag = j.at("tag").get<std::string>();
    GroupTag t;
    if (tag == "SL2") t = GroupTag::SL2;
    else if (tag == "SO2") t = GroupTag::SO2;
    else if (tag == "SOL2") t = GroupTag::SOL2;
    else if (tag == "AFFR3") t = GroupTag::AFFR3;
    else if (tag == "G3X4") t = GroupTag::G3X4;
    else if (tag == "G5") t = GroupTag::G5;
    else throw std::invalid_argument("element_from_json: unknown tag " + tag);
    const auto& rows = j.at("rows");
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) m(i, c) = rows[i][c].get<double>();
    return make_element(t, std::move(m), tol);
}

Mat rot(double t) {
    return Mat::from_rows({{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}});
}

GroupElement so2_cover(double t) { return {GroupTag::SO2, rot(t)}; }

Mat sol2_an(double s, double r) {
    double e = std::exp(-s / 2.0);
    return Mat::from_rows({{e, e * r}, {0.0, 1.0 / e}});
}

Mat sol2_na(double s, double r) {
    double e = std::exp(-s / 2.0);
    return Mat::from_rows({{e, r / e}, {0.0, 1.0 / e}});
}

Mat g3x4(double x0, double x1, double x2) {
    Mat m = Mat::identity(4);
    m(0, 0) = std::exp(-x1);
    m(0, 3) = x2;
    m(1, 3) = x1;
    m(2, 3) = x0;
    return m;
}

Mat g5_element(double x0, double x1, double x2, double x3) {
    Mat m = Mat::identity(5);
    m(0, 0) = std::exp(-x1);
    m(0, 4) = x2;
    m(1, 4) = x1;
    m(2, 4) = x0;
    m(3, 4) = x3;
    return m;
}

GroupElement psi_sol2(const Mat& sol2) {
    if (!member_within(GroupTag::SOL2, sol2))
        throw std::domain_error("psi_sol2: input is not a Sol(2) element");
    double u = sol2(0, 0), v = sol2(0, 1);
    double s = -2.0 * std::log(u);
    double r = v / u;  // AN coordinates of the input
    // image of the diagonal generator times image of the unipotent generator
    Mat img_a = g3x4(0.0, s, 0.0);
    Mat img_n = Mat::identity(4);
    img_n(0, 3) = r;
    return {GroupTag::G3X4, img_a * img_n};
}

GroupElement psi_full(double t, const Mat& sol2) {
    GroupElement g = psi_sol2(sol2);
    g.m(2, 3) = t;
    return g;
}

GroupElement psi_iso(double s, double r, PsiOrder order) {
    return psi_sol2(order == PsiOrder::AN ? sol2_an(s, r) : sol2_na(s, r));
}

Mat psi_iso_closed_an(double s, double r) {
    Mat m = Mat::identity(4);
    m(0, 0) = std::exp(-s);
    m(0, 3) = std::exp(-s) * r;
    m(1, 3) = s;
    return m;
}

Mat psi_iso_closed_na(double s, double r) {
    Mat m = Mat::identity(4);
    m(0, 0) = std::exp(-s);
    m(0, 3) = r;
    m(1, 3) = s;
    return m;
}

std::pair<GroupElement, GroupElement> covering_F(double x1, double x2, double x3) {
    double e = std::exp(x2 / 2.0);
    Mat sol = Mat::from_rows({{1.0 / e, x1 * e}, {0.0, e}});
    return {GroupElement{GroupTag::SOL2, sol}, so2_cover(x3)};
}

std::pair<GroupElement, GroupElement> covering_F(const Mat& affr3) {
    if (!member_within(GroupTag::AFFR3, affr3))
        throw std::domain_error("covering_F: input is not an A+(R) x R element");
    double x2 = -std::log(affr3(0, 0));
    return covering_F(affr3(0, 2), x2, affr3(1, 2));
}

GroupElement reduce_4to3(const Mat& g4, double tol) {
    if (!member_within(GroupTag::G3X4, g4, tol))
        throw std::domain_error("reduce_4to3: input does not match the 4x4 chart shape");
    Mat m(3, 3);
    int src_r = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == 1) continue;
        int src_c = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == 1) continue;
            m(src_r, src_c++) = g4(i, j);
        }
        ++src_r;
    }
    return {GroupTag::AFFR3, std::move(m)};
}

Mat embed_renamed_chart(double x0, double x1, double x2) {
    // renamed slots: x1 <-> x2, x0 -> x3; the matrix entries land in the same
    // places as in g3x4, only their chart meaning changes
    return g3x4(x0, x1, x2);
}

Mat random_sl(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_sl: n >= 2");
    if (n == 2) {
        Mat k = rot(rng.uniform(0.0, 6.283185307179586));
        double t = rng.uniform(-1.0, 1.0);
        Mat a = Mat::from_rows({{std::exp(t), 0.0}, {0.0, std::exp(-t)}});
        Mat u = Mat::from_rows({{1.0, rng.uniform(-2.0, 2.0)}, {0.0, 1.0}});
        return k * a * u;
    }
    // rejection-sample a well-conditioned matrix, then normalize by det^{1/n}
    for (int attempt = 0; attempt < 256; ++attempt) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
        double d = det(m);
        if (std::abs(d) < 0.05) continue;
        double scale;
        if (d > 0.0) {
            scale = std::pow(d, -1.0 / n);
        } else {
            if (n % 2 == 0) {  // flip a row to make the determinant positive
                for (int j = 0; j < n; ++j) m(0, j) = -m(0, j);
                d = -d;
                scale = std::pow(d, -1.0 / n);
            } else {
                scale = -std::pow(-d, -1.0 / n);
            }
        }
        return m * scale;
    }
    throw std::runtime_error("random_sl: sampling failed");
}

Mat random_sol2(Rng& rng) { return sol2_an(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)); }

Mat random_affr3(Rng& rng) {
    Mat m = Mat::identity(3);
    m(0, 0) = std::exp(-rng.uniform(-1.5, 1.5));
    m(0, 2) = rng.uniform(-1.5, 1.5);
    m(1, 2) = rng.uniform(-1.5, 1.5);
    return m;
}

Mat random_g3x4(Rng& rng) {
    return g3x4(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
}

double hom_residual(const std::function<Mat(const Mat&)>& f,
                    const std::function<Mat(Rng&)>& sample, int n, Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Mat g1 = sample(rng), g2 = sample(rng);
        worst = std::max(worst, max_abs_diff(f(g1 * g2), f(g1) * f(g2)));
    }
    return worst;
}

}  // namespace liegeo
