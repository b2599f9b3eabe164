#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liegeo/lie_algebra.hpp"

namespace liegeo {

// Connection coefficients of a left-invariant metric in a left-invariant
// frame: nabla_{b_i} b_j = sum_k gamma(i,j,k) b_k, all exact.
class ConnectionTable {
public:
    ConnectionTable() = default;
    explicit ConnectionTable(int dim)
        : dim_(dim), gamma_(static_cast<size_t>(dim) * dim * dim) {}

    int dim() const { return dim_; }
    const QSqrt2& at(int i, int j, int k) const { return gamma_[idx(i, j, k)]; }
    void set(int i, int j, int k, QSqrt2 v) { gamma_[idx(i, j, k)] = std::move(v); }

    // nabla_v w for constant-coefficient vectors in the frame.
    XVec covariant(const XVec& v, const XVec& w) const;

    friend bool operator==(const ConnectionTable& a, const ConnectionTable& b) {
        return a.dim_ == b.dim_ && a.gamma_ == b.gamma_;
    }

private:
    int dim_ = 0;
    std::vector<QSqrt2> gamma_;
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
    }
};

// Koszul formula specialized to a left-invariant frame:
//   2 (nabla_i b_j, b_k) = (b_k,[b_i,b_j]) + (b_j,[b_k,b_i]) - (b_i,[b_j,b_k]),
// coefficients recovered through the exact Gram inverse.
ConnectionTable koszul_connection(const StructureConstants& sc, const XMat& gram);
ConnectionTable koszul_connection(const LieAlgebraPreset& p);

struct CurvatureReport {
    int dim = 0;
    // riem[((i*dim+j)*dim+k)*dim+l]: R(b_i,b_j) b_k = sum_l riem b_l
    std::vector<QSqrt2> riem;
    std::vector<QSqrt2> k_raw;                      // dim*dim, (R(b_i,b_j)b_j, b_i)
    std::vector<std::optional<QSqrt2>> k_normalized;  // absent where the plane is degenerate

    const QSqrt2& r(int i, int j, int k, int l) const {
        return riem[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
    }
    const QSqrt2& raw(int i, int j) const { return k_raw[static_cast<size_t>(i) * dim + j]; }
    const std::optional<QSqrt2>& normalized(int i, int j) const {
        return k_normalized[static_cast<size_t>(i) * dim + j];
    }
};

// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z on the frame.
CurvatureReport curvature(const StructureConstants& sc, const XMat& gram);
CurvatureReport curvature(const LieAlgebraPreset& p);

// Signature (n_plus, n_minus) of a symmetric exact matrix, by congruence
// pivoting; a float eigenvalue count cross-checks the result.
std::pair<int, int> signature(const XMat& gram);

// Float-side signature via Jacobi eigenvalue iteration.
std::pair<int, int> signature(const Mat& sym, double tol = 1e-9);

struct OrthoBasis {
    XMat transform;          // columns are the new vectors in the input basis
    std::vector<int> signs;  // resulting Gram is diag(signs), each +-1
};

// Gram-Schmidt against an indefinite exact metric, processing basis vectors in
// the given order. Each output vector keeps a positive coefficient along the
// input vector it was built from. Throws if an intermediate vector is
// isotropic or its length is not exactly representable in Q(sqrt 2).
OrthoBasis pseudo_gram_schmidt(const XMat& gram, const std::vector<int>& order);

// Curvature of the same algebra with Gram scaled by c > 0. The connection is
// unchanged, k_raw scales by c and the normalized curvature by 1/c.
CurvatureReport scale_metric(const LieAlgebraPreset& p, const QSqrt2& c);

}  // namespace liegeo
