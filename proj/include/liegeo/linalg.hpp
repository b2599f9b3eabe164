#pragma once

#include "liegeo/matrix.hpp"

namespace liegeo {

double det(const Mat& m);
Mat inverse(const Mat& m);  // throws std::domain_error on singular input

struct QRFactors {
    Mat q;  // orthogonal
    Mat r;  // upper triangular, strictly positive diagonal
};

struct LQFactors {
    Mat l;  // lower triangular, strictly positive diagonal
    Mat q;  // orthogonal
};

// Householder QR with the diagonal of R forced positive; with that convention
// the factorization of an invertible matrix is unique.
QRFactors qr_positive(const Mat& m, double tol = 1e-12);

// M = L Q via QR of the transpose. If det M = 1 then Q is a rotation.
LQFactors lq_positive(const Mat& m, double tol = 1e-12);

// Scaling-and-squaring matrix exponential on a truncated series.
Mat mat_exp(const Mat& m, double tol = 1e-13);

}  // namespace liegeo
