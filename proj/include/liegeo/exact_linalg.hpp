#pragma once

#include "liegeo/matrix.hpp"

namespace liegeo {

// Exact linear algebra over Q(sqrt 2). No tolerances anywhere on this path.

QSqrt2 det_exact(const XMat& m);

// Gauss-Jordan with full pivoting on nonzero exact entries.
// Throws std::domain_error on a singular matrix.
XMat inverse_exact(const XMat& m);

QSqrt2 max_abs_exact(const XMat& m);

}  // namespace liegeo
