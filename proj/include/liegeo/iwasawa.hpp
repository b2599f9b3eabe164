#pragma once

#include <array>

#include "liegeo/matrix.hpp"

namespace liegeo {

enum class FactorOrder { KAN, NAK };

// K rotation-like orthogonal, A positive diagonal with det 1, N unipotent
// triangular (upper for KAN, lower for NAK). The product in the stated order
// reconstructs the input; for det-1 input the factorization is unique.
struct IwasawaFactors {
    FactorOrder order;
    Mat k, a, n;
    Mat product() const { return order == FactorOrder::KAN ? k * a * n : n * a * k; }
};

// Global factorization M = K A N for M in SL(n,R), any n >= 2.
IwasawaFactors kan(const Mat& m, double det_tol = 1e-10);

// Reversed factorization M = N A K with N lower unipotent; SL(2,R) only.
IwasawaFactors nak(const Mat& m, double det_tol = 1e-10);

// Polar-coordinate chart of the half-plane times a circle:
// rho > 0, theta strictly inside (-pi/2, pi/2), phi in [0, 2*pi).
struct PsiCoords {
    double rho;
    double theta;
    double phi;
};

bool psi_in_domain(const PsiCoords& c);

// The half-plane-times-circle to SL(2,R) diffeomorphism
//   (rho, theta, phi) |-> (rho cos theta)^{-1/2}
//       [[cos phi, sin phi], [rho sin(theta - phi), rho cos(theta - phi)]].
// The determinant is identically 1.
Mat psi_eval(const PsiCoords& c);

// Inverse through the NAK factorization: b from N, a from A, phi from K,
// then rho = sqrt(a^2 + b^2), theta = atan2(b, a).
PsiCoords psi_inverse(const Mat& m, double det_tol = 1e-10);

// || n(b) abar(a) k(phi) - psi_eval(c) || with a = rho cos theta,
// b = rho sin theta: the factored form of the map, checked entrywise.
double verify_psiab(const PsiCoords& c);

// Transition data of the two distribution frame fields pushed through the
// multiplication map (S, k) |-> S k and left-translated back to the identity,
// expanded in the sl(2,R) basis {e1bar, e2bar, e3bar}.
struct FrameTransition {
    std::array<double, 3> first;   // image of (e2bar, 0)
    std::array<double, 3> second;  // image of (e1bar, e3bar)
};

// Central-difference pushforward at step h; throws when h is so small that
// cancellation dominates (detected by step-halving disagreement).
FrameTransition pushforward_frame(const PsiCoords& c, double h);

// Independent closed form Ad(k^{-1}) W_sol + W_so2 via explicit conjugation.
FrameTransition pushforward_closed_form(const PsiCoords& c);

// Frame matrices of the rank-2 distribution and the circle direction.
Mat frame_e1bar();  // [[0,1],[0,0]]
Mat frame_e2bar();  // [[-1/2,0],[0,1/2]]
Mat frame_e3bar();  // [[0,1],[-1,0]]

}  // namespace liegeo
