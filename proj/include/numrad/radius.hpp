#pragma once

#include <cstdint>

#include "numrad/matrix.hpp"
#include "numrad/norms.hpp"

namespace numrad {

/// Discretization of the angle search. The coarse grid covers [0, pi); the
/// top local maxima are then narrowed by golden-section refinement.
struct GridConfig {
    int coarse_points = 1024;
    double refine_tol = 1e-10;  // radians
    int max_refine_iters = 200;
};

/// Certified enclosure of w_N(a): lo is the best evaluated value (a true
/// lower bound), hi = lo + L * (final bracket width)/2 with L the Lipschitz
/// constant N(H) + N(K) of theta -> N(cos(theta) H - sin(theta) K).
struct RadiusEstimate {
    double lo = 0.0;
    double hi = 0.0;
    double theta_star = 0.0;  // in [0, pi)
    double lipschitz = 0.0;
};

/// Re(e^{i theta} a) = cos(theta) H - sin(theta) K, built from the exactly
/// Hermitian Cartesian parts so the result is Hermitian bit-for-bit.
ComplexMatrix rotated_real_part(const ComplexMatrix& a, double theta);

/// w_N(a) = sup over theta of N(Re(e^{i theta} a)). Since N(-X) = N(X) the
/// objective is pi-periodic and the search runs over [0, pi) only. Ties in
/// the maximizer resolve to the smallest coarse grid angle.
RadiusEstimate generalized_radius(const ComplexMatrix& a, const NormSpec& spec,
                                  const GridConfig& cfg = {});

/// Closed-form w_2 for the Frobenius norm, used as an independent oracle:
/// f(theta)^2 is a sinusoid in 2*theta with analytic maximum
/// (|H|^2+|K|^2)/2 + sqrt(((|H|^2-|K|^2)/2)^2 + Re<H,K>^2).
double frobenius_closed_form(const ComplexMatrix& a);

/// Sampling lower bound on the classical numerical radius max |x* a x|:
/// random unit starts, each improved by 50 steps of shifted power ascent on
/// Re(e^{-i arg(x* a x)} a). Never exceeds w(a).
double classical_radius_lower_oracle(const ComplexMatrix& a, int samples, uint64_t seed);

}  // namespace numrad
