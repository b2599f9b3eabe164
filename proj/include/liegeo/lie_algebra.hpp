#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liegeo/exact_linalg.hpp"
#include "liegeo/matrix.hpp"

namespace liegeo {

using XVec = std::vector<QSqrt2>;

// Structure constants over Q(sqrt 2): [b_i, b_j] = sum_k c(i,j,k) b_k.
// Stored densely; every algebra here has dim <= 4.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(int dim);

    int dim() const { return dim_; }
    const QSqrt2& at(int i, int j, int k) const;

    // Sets c(i,j,*) and the antisymmetric counterpart c(j,i,*).
    void set_bracket(int i, int j, const XVec& coeffs);

    // Raw entry write; callers are responsible for antisymmetry.
    void set_entry(int i, int j, int k, const QSqrt2& v);

    bool antisymmetric() const;

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    int dim_ = 0;
    std::vector<QSqrt2> c_;
    size_t idx(int i, int j, int k) const { return (static_cast<size_t>(i) * dim_ + j) * dim_ + k; }
};

// [v, w] expanded in the same basis.
XVec bracket(std::span<const QSqrt2> v, std::span<const QSqrt2> w, const StructureConstants& sc);

struct JacobiResult {
    bool ok = true;
    int i = -1, j = -1, k = -1;  // first violating triple when !ok
};

// Exact check of sum_cyc [b_i, [b_j, b_k]] = 0 over all triples i < j < k.
// Expects antisymmetry to hold already.
JacobiResult jacobi_check(const StructureConstants& sc);

struct MatrixRealization {
    std::vector<XMat> basis;  // one exact square matrix per basis vector
};

struct LieAlgebraPreset {
    std::string name;
    std::vector<std::string> labels;
    StructureConstants sc;
    XMat gram;  // symmetric, exactly nondegenerate
    std::optional<MatrixRealization> realization;
};

// Largest |B_i B_j - B_j B_i - sum_k c(i,j,k) B_k| entry, exact; zero iff the
// matrices realize the structure constants.
QSqrt2 realization_deviation(const StructureConstants& sc, const MatrixRealization& real);

// New basis vectors are the columns of T, expressed in the old basis.
// Constants transform as a (1,2)-tensor. Throws on singular T.
StructureConstants change_basis(const StructureConstants& sc, const XMat& t);

}  // namespace liegeo
