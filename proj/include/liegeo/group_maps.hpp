#pragma once

#include <functional>
#include <string>
#include <utility>

#include <json.hpp>

#include "liegeo/matrix.hpp"
#include "liegeo/sampling.hpp"

namespace liegeo {

// Matrix groups appearing in the charts:
//   SL2    2x2, det 1
//   SO2    rotations [[cos t, sin t], [-sin t, cos t]]
//   SOL2   upper triangular 2x2, det 1, positive diagonal
//   AFFR3  [[p, 0, q], [0, 1, r], [0, 0, 1]], p > 0  (A+(R) x R)
//   G3X4   [[e^-u, 0, 0, v], [0, 1, 0, u], [0, 0, 1, w], [0, 0, 0, 1]]
//   G5     the 5x5 isometry-action form, one extra translation row
enum class GroupTag { SL2, SO2, SOL2, AFFR3, G3X4, G5 };

struct GroupElement {
    GroupTag tag;
    Mat m;
};

bool member_within(GroupTag tag, const Mat& m, double tol = 1e-10);

// Validates membership, throws std::domain_error otherwise.
GroupElement make_element(GroupTag tag, Mat m, double tol = 1e-10);

std::string tag_name(GroupTag tag);

// {"tag": ..., "rows": [[...], ...]}
nlohmann::ordered_json element_to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j, double tol = 1e-10);

Mat rot(double t);
GroupElement so2_cover(double t);  // the covering (R,+) -> SO(2)

Mat sol2_an(double s, double r);  // diag(e^{-s/2}, e^{s/2}) * upper-unipotent(r)
Mat sol2_na(double s, double r);  // upper-unipotent(r) * diag(e^{-s/2}, e^{s/2})

// 4x4 chart element with coordinates (x0, x1, x2).
Mat g3x4(double x0, double x1, double x2);
// 5x5 isometry-action element with parameters (a, b, c, d) = coords (x0..x3).
Mat g5_element(double x0, double x1, double x2, double x3);

// Group isomorphism Sol(2) -> G2 inside the 4x4 chart group, built on the
// diagonal and unipotent generators and extended multiplicatively.
GroupElement psi_sol2(const Mat& sol2);
// Extension to (R,+) x Sol(2) -> G3: the central parameter lands in the x0 slot.
GroupElement psi_full(double t, const Mat& sol2);

enum class PsiOrder { AN, NA };
// psi evaluated on the Sol(2) element assembled in the requested factor order.
GroupElement psi_iso(double s, double r, PsiOrder order);
// Closed forms of the two parameterizations, kept as independent oracles.
Mat psi_iso_closed_an(double s, double r);
Mat psi_iso_closed_na(double s, double r);

// Universal covering epimorphism A+(R) x R -> Sol(2) x SO(2) in the
// (x1, x2, x3) chart: x2 drives the diagonal, x1 the affine shift, x3 the
// rotation angle.
std::pair<GroupElement, GroupElement> covering_F(double x1, double x2, double x3);
std::pair<GroupElement, GroupElement> covering_F(const Mat& affr3);

// Drops the redundant exponent row of the 4x4 chart form: deletes row and
// column 1, an isomorphism onto AFFR3.
GroupElement reduce_4to3(const Mat& g4, double tol = 1e-10);

// Chart embedding (x0, x1, x2) -> 4x4 with the coordinate roles renamed
// x1 <-> x2 and x0 -> x3; the matrix itself is unchanged, only the slot
// meaning moves, so this is kept as an explicit named map.
Mat embed_renamed_chart(double x0, double x1, double x2);

// Samplers (explicit seeds, see Rng).
Mat random_sl(int n, Rng& rng);
Mat random_sol2(Rng& rng);
Mat random_affr3(Rng& rng);
Mat random_g3x4(Rng& rng);

// Max ||f(g1 g2) - f(g1) f(g2)|| over n sampled pairs.
double hom_residual(const std::function<Mat(const Mat&)>& f,
                    const std::function<Mat(Rng&)>& sample, int n, Rng& rng);

}  // namespace liegeo
