#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liegeo/lie_algebra.hpp"

namespace liegeo {

// Registry of the Lie algebras this project works with. Each entry is also
// checked in under data/presets/ in the JSON format below.
//
//   sl2-natural       f0, f1, f2 basis of sl(2,R), Iwasawa-adapted
//   sl2-lorentz       X, Y, Z orthonormal basis of sl(2,R), Gram diag(1,-1,-1)
//   so2sol2-lorentz   so(2) + sol(2), X central, [Y,Z] = 2Z + 2*sqrt2*X
//   rxsol2            R + sol(2), X central, [Y,Z] = Z + sqrt2*X
//   g3-goedel         e0 central, [e1,e2] = -e2, Gram of the 3d chart block
//   goedel4           g3-goedel plus a central e3, full 4d chart Gram
//   aff-r3            aff(1) + R, [e1,e2] = e1 the only nonzero bracket
const LieAlgebraPreset& preset(std::string_view name);  // throws on unknown name
std::vector<std::string> preset_names();

// File format:
//   { "dim": n, "labels": [...],
//     "c": [[i, j, k, [p, q, r, s]], ...],          // [b_i,b_j] components
//     "gram": [[[p,q,r,s], ...], ...],
//     "realization": [ [[[p,q,r,s], ...], ...], ... ]  // optional
//   }
// where [p, q, r, s] encodes p/q + (r/s)*sqrt2 with q > 0, s > 0, reduced.
LieAlgebraPreset load_algebra_file(const std::string& path, std::string name = "");
LieAlgebraPreset algebra_from_json(const nlohmann::json& j, std::string name);
nlohmann::ordered_json algebra_to_json(const LieAlgebraPreset& p);

nlohmann::json qsqrt2_to_json(const QSqrt2& v);
QSqrt2 qsqrt2_from_json(const nlohmann::json& j);

}  // namespace liegeo
