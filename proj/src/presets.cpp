#include "liegeo/presets.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace liegeo {

namespace {

QSqrt2 Q(long long pn, long long pd, long long rn, long long rd) {
    return QSqrt2(Rational(pn, pd), Rational(rn, rd));
}
QSqrt2 Qi(long long n) { return QSqrt2(n); }
const QSqrt2 kSqrt2 = QSqrt2::sqrt2();
const QSqrt2 kHalfSqrt2 = Q(0, 1, 1, 2);

XVec vec3(QSqrt2 a, QSqrt2 b, QSqrt2 c) { return {std::move(a), std::move(b), std::move(c)}; }

LieAlgebraPreset make_sl2_natural() {
    LieAlgebraPreset p;
    p.name = "sl2-natural";
    p.labels = {"f0", "f1", "f2"};
    p.sc = StructureConstants(3);
    p.sc.set_bracket(0, 1, vec3(Qi(2), Qi(0), Qi(-4)));  // [f0,f1] = 2 f0 - 4 f2
    p.sc.set_bracket(0, 2, vec3(Qi(0), Qi(1), Qi(0)));   // [f0,f2] = f1
    p.sc.set_bracket(1, 2, vec3(Qi(0), Qi(0), Qi(2)));   // [f1,f2] = 2 f2
    // Gram of the sl2-lorentz metric written in this basis, so the two presets
    // describe the same geometry in different frames.
    p.gram = XMat::from_rows({{Qi(2), Qi(0), Qi(1)},
                              {Qi(0), Qi(-1), Qi(0)},
                              {Qi(1), Qi(0), Q(1, 4, 0, 1)}});
    MatrixRealization real;
    real.basis.push_back(XMat::from_rows({{Qi(0), Qi(1)}, {Qi(-1), Qi(0)}}));
    real.basis.push_back(XMat::from_rows({{Qi(1), Qi(0)}, {Qi(0), Qi(-1)}}));
    real.basis.push_back(XMat::from_rows({{Qi(0), Qi(1)}, {Qi(0), Qi(0)}}));
    p.realization = std::move(real);
    return p;
}

LieAlgebraPreset make_sl2_lorentz() {
    LieAlgebraPreset p;
    p.name = "sl2-lorentz";
    p.labels = {"X", "Y", "Z"};
    p.sc = StructureConstants(3);
    p.sc.set_bracket(0, 1, vec3(Qi(0), Qi(0), -kSqrt2));          // [X,Y] = -sqrt2 Z
    p.sc.set_bracket(0, 2, vec3(Qi(0), kSqrt2, Qi(0)));           // [X,Z] = sqrt2 Y
    p.sc.set_bracket(1, 2, vec3(Qi(2) * kSqrt2, Qi(0), Qi(0)));   // [Y,Z] = 2 sqrt2 X
    p.gram = XMat::from_rows({{Qi(1), Qi(0), Qi(0)},
                              {Qi(0), Qi(-1), Qi(0)},
                              {Qi(0), Qi(0), Qi(-1)}});
    MatrixRealization real;
    real.basis.push_back(
        XMat::from_rows({{Qi(0), kHalfSqrt2}, {-kHalfSqrt2, Qi(0)}}));
    real.basis.push_back(XMat::from_rows({{Qi(1), Qi(0)}, {Qi(0), Qi(-1)}}));
    real.basis.push_back(XMat::from_rows({{Qi(0), Qi(1)}, {Qi(1), Qi(0)}}));
    p.realization = std::move(real);
    return p;
}

LieAlgebraPreset make_so2sol2_lorentz() {
    LieAlgebraPreset p;
    p.name = "so2sol2-lorentz";
    p.labels = {"X", "Y", "Z"};
    p.sc = StructureConstants(3);
    p.sc.set_bracket(1, 2, vec3(Qi(2) * kSqrt2, Qi(0), Qi(2)));  // [Y,Z] = 2 sqrt2 X + 2 Z
    p.gram = XMat::from_rows({{Qi(1), Qi(0), Qi(0)},
                              {Qi(0), Qi(-1), Qi(0)},
                              {Qi(0), Qi(0), Qi(-1)}});
    // Block realization of so(2) + sol(2); the central X sits in the rotation
    // block, Z mixes the blocks exactly as in the bracket table.
    MatrixRealization real;
    XMat x(4, 4), y(4, 4), z(4, 4);
    x(0, 1) = kHalfSqrt2;
    x(1, 0) = -kHalfSqrt2;
    y(2, 2) = Qi(1);
    y(3, 3) = Qi(-1);
    z(0, 1) = Qi(-1);
    z(1, 0) = Qi(1);
    z(2, 3) = Qi(2);
    real.basis = {x, y, z};
    p.realization = std::move(real);
    return p;
}

LieAlgebraPreset make_rxsol2() {
    LieAlgebraPreset p;
    p.name = "rxsol2";
    p.labels = {"X", "Y", "Z"};
    p.sc = StructureConstants(3);
    p.sc.set_bracket(1, 2, vec3(kSqrt2, Qi(0), Qi(1)));  // [Y,Z] = sqrt2 X + Z
    p.gram = XMat::from_rows({{Qi(1), Qi(0), Qi(0)},
                              {Qi(0), Qi(-1), Qi(0)},
                              {Qi(0), Qi(0), Qi(-1)}});
    MatrixRealization real;
    XMat x(3, 3), y(3, 3), z(3, 3);
    x(0, 0) = Qi(1);
    y(1, 1) = Q(1, 2, 0, 1);
    y(2, 2) = Q(-1, 2, 0, 1);
    z(0, 0) = -kSqrt2;
    z(1, 2) = kSqrt2;
    real.basis = {x, y, z};
    p.realization = std::move(real);
    return p;
}

LieAlgebraPreset make_g3_goedel() {
    LieAlgebraPreset p;
    p.name = "g3-goedel";
    p.labels = {"e0", "e1", "e2"};
    p.sc = StructureConstants(3);
    p.sc.set_bracket(1, 2, vec3(Qi(0), Qi(0), Qi(-1)));  // [e1,e2] = -e2, e0 central
    p.gram = XMat::from_rows({{Qi(1), Qi(0), Qi(1)},
                              {Qi(0), Qi(-1), Qi(0)},
                              {Qi(1), Qi(0), Q(1, 2, 0, 1)}});
    MatrixRealization real;
    XMat e0(4, 4), e1(4, 4), e2(4, 4);
    e0(2, 3) = Qi(1);
    e1(0, 0) = Qi(-1);
    e1(1, 3) = Qi(1);
    e2(0, 3) = Qi(1);
    real.basis = {e0, e1, e2};
    p.realization = std::move(real);
    return p;
}

LieAlgebraPreset make_goedel4() {
    LieAlgebraPreset p;
    p.name = "goedel4";
    p.labels = {"e0", "e1", "e2", "e3"};
    p.sc = StructureConstants(4);
    p.sc.set_bracket(1, 2, {Qi(0), Qi(0), Qi(-1), Qi(0)});
    p.gram = XMat::from_rows({{Qi(1), Qi(0), Qi(1), Qi(0)},
                              {Qi(0), Qi(-1), Qi(0), Qi(0)},
                              {Qi(1), Qi(0), Q(1, 2, 0, 1), Qi(0)},
                              {Qi(0), Qi(0), Qi(0), Qi(-1)}});
    MatrixRealization real;
    XMat e0(5, 5), e1(5, 5), e2(5, 5), e3(5, 5);
    e0(2, 4) = Qi(1);
    e1(0, 0) = Qi(-1);
    e1(1, 4) = Qi(1);
    e2(0, 4) = Qi(1);
    e3(3, 4) = Qi(1);
    real.basis = {e0, e1, e2, e3};
    p.realization = std::move(real);
    return p;
}

LieAlgebraPreset make_aff_r3() {
    LieAlgebraPreset p;
    p.name = "aff-r3";
    p.labels = {"e1", "e2", "e3"};
    p.sc = StructureConstants(3);
    p.sc.set_bracket(0, 1, vec3(Qi(1), Qi(0), Qi(0)));  // [e1,e2] = e1
    p.gram = XMat::identity(3);
    MatrixRealization real;
    XMat e1(3, 3), e2(3, 3), e3(3, 3);
    e1(0, 2) = Qi(1);
    e2(0, 0) = Qi(-1);
    e3(1, 2) = Qi(1);
    real.basis = {e1, e2, e3};
    p.realization = std::move(real);
    return p;
}

const std::map<std::string, LieAlgebraPreset, std::less<>>& registry() {
    static const std::map<std::string, LieAlgebraPreset, std::less<>> reg = [] {
        std::map<std::string, LieAlgebraPreset, std::less<>> r;
        for (auto&& p : {make_sl2_natural(), make_sl2_lorentz(), make_so2sol2_lorentz(),
                         make_rxsol2(), make_g3_goedel(), make_goedel4(), make_aff_r3()})
            r.emplace(p.name, p);
        return r;
    }();
    return reg;
}

}  // namespace

const LieAlgebraPreset& preset(std::string_view name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown preset: " + std::string(name));
    return it->second;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

nlohmann::json qsqrt2_to_json(const QSqrt2& v) {
    auto int_or_string = [](const BigInt& b) -> nlohmann::json {
        if (auto i = b.to_int64()) return *i;
        return b.to_string();
    };
    return nlohmann::json::array({int_or_string(v.rational_part().num()),
                                  int_or_string(v.rational_part().den()),
                                  int_or_string(v.sqrt2_part().num()),
                                  int_or_string(v.sqrt2_part().den())});
}

QSqrt2 qsqrt2_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("exact scalar must be a 4-integer array");
    auto big = [](const nlohmann::json& e) {
        if (e.is_number_integer()) return BigInt(e.get<long long>());
        if (e.is_string()) return BigInt::from_string(e.get<std::string>());
        throw std::invalid_argument("exact scalar entries must be integers");
    };
    return QSqrt2(Rational(big(j[0]), big(j[1])), Rational(big(j[2]), big(j[3])));
}

namespace {

XMat xmat_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a row array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    XMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (int c = 0; c < cols; ++c) m(i, c) = qsqrt2_from_json(j[i][c]);
    }
    return m;
}

nlohmann::json xmat_to_json(const XMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(qsqrt2_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

LieAlgebraPreset algebra_from_json(const nlohmann::json& j, std::string name) {
    LieAlgebraPreset p;
    p.name = std::move(name);
    if (p.name.empty() && j.contains("name")) p.name = j.at("name").get<std::string>();
    int dim = j.at("dim").get<int>();
    if (dim <= 0) throw std::invalid_argument("algebra file: dim must be positive");
    p.labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(p.labels.size()) != dim)
        throw std::invalid_argument("algebra file: label count must equal dim");

    p.sc = StructureConstants(dim);
    std::vector<bool> given(static_cast<size_t>(dim) * dim * dim, false);
    for (const auto& entry : j.at("c")) {
        if (!entry.is_array() || entry.size() != 4)
            throw std::invalid_argument("algebra file: c entries are [i,j,k,[p,q,r,s]]");
        int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>();
        if (i < 0 || jj < 0 || k < 0 || i >= dim || jj >= dim || k >= dim)
            throw std::invalid_argument("algebra file: c index out of range");
        QSqrt2 v = qsqrt2_from_json(entry[3]);
        size_t fwd = (static_cast<size_t>(i) * dim + jj) * dim + k;
        size_t rev = (static_cast<size_t>(jj) * dim + i) * dim + k;
        if (given[fwd] && !(p.sc.at(i, jj, k) == v))
            throw std::invalid_argument("algebra file: conflicting c entries");
        if (given[rev] && !(p.sc.at(jj, i, k) == -v))
            throw std::invalid_argument("algebra file: antisymmetry violated");
        p.sc.set_entry(i, jj, k, v);
        if (!given[rev]) p.sc.set_entry(jj, i, k, -v);
        given[fwd] = true;
    }
    if (!p.sc.antisymmetric())
        throw std::invalid_argument("algebra file: antisymmetry violated");

    p.gram = xmat_from_json(j.at("gram"));
    if (p.gram.rows() != dim || p.gram.cols() != dim)
        throw std::invalid_argument("algebra file: gram must be dim x dim");
    if (!(p.gram == p.gram.transpose()))
        throw std::invalid_argument("algebra file: gram must be symmetric");

    if (j.contains("realization")) {
        MatrixRealization real;
        for (const auto& mj : j.at("realization")) real.basis.push_back(xmat_from_json(mj));
        if (static_cast<int>(real.basis.size()) != dim)
            throw std::invalid_argument("algebra file: realization needs dim matrices");
        for (const auto& m : real.basis)
            if (!m.is_square() || m.rows() != real.basis[0].rows())
                throw std::invalid_argument("algebra file: realization matrices must match");
        p.realization = std::move(real);
    }
    return p;
}

LieAlgebraPreset load_algebra_file(const std::string& path, std::string name) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
    nlohmann::json j;
    in >> j;
    if (name.empty()) {
        // default the name to the file stem
        size_t slash = path.find_last_of("/\\");
        std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
        size_t dot = stem.rfind('.');
        name = dot == std::string::npos ? stem : stem.substr(0, dot);
    }
    return algebra_from_json(j, std::move(name));
}

nlohmann::ordered_json algebra_to_json(const LieAlgebraPreset& p) {
    nlohmann::ordered_json j;
    int dim = p.sc.dim();
    j["dim"] = dim;
    j["labels"] = p.labels;
    nlohmann::json c = nlohmann::json::array();
    for (int i = 0; i < dim; ++i)
        for (int jj = i + 1; jj < dim; ++jj)
            for (int k = 0; k < dim; ++k)
                if (!p.sc.at(i, jj, k).is_zero())
                    c.push_back({i, jj, k, qsqrt2_to_json(p.sc.at(i, jj, k))});
    j["c"] = c;
    j["gram"] = xmat_to_json(p.gram);
    if (p.realization) {
        nlohmann::json real = nlohmann::json::array();
        for (const auto& m : p.realization->basis) real.push_back(xmat_to_json(m));
        j["realization"] = real;
    }
    return j;
}

}  // namespace liegeo
