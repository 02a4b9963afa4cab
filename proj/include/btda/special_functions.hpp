/**
 * Scalar special-function kernels: log-gamma, regularized incomplete beta,
 * k-ball volume and hyperspherical-cap volume.
 *
 * All functions are pure and thread-safe. Volumes are computed in log space
 * internally and exponentiated once, so ratios of volumes of very different
 * magnitudes stay accurate.
 */

#pragma once

#include <stdexcept>

namespace btda {

/// ln Gamma(x) for x > 0 (Lanczos approximation, relative error < 1e-13
/// on [0.5, 200]). Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// Regularized incomplete beta function I_x(a, b) for x in [0, 1], a, b > 0.
/// Continued-fraction evaluation with the symmetry switch at
/// x > (a+1)/(a+b+2). Monotone nondecreasing in x; I_0 = 0, I_1 = 1 exactly.
double reg_inc_beta(double x, double a, double b);

/// ln of the volume of the k-dimensional ball of radius r:
/// ln(pi^{k/2} r^k / Gamma(k/2 + 1)). Requires k >= 1, r > 0.
double ln_ball_volume(int k, double r);

/// Volume of the k-dimensional ball of radius r.
double ball_volume(int k, double r);

/// A hyperspherical cap: the smaller piece of a k-ball of radius r cut by a
/// hyperplane. phi = arcsin(a/r) is the half-angle subtended by the cap base
/// of radius a, so 0 <= phi <= pi/2.
struct cap_spec {
    int k;        ///< dimension of the ball (>= 1)
    double r;     ///< ball radius (> 0)
    double phi;   ///< cap half-angle in radians, in [0, pi/2]

    cap_spec(int k_, double r_, double phi_);

    /// Radius of the cap base, a = r sin(phi).
    double base_radius() const;
};

/// Cap volume, (1/2) V_k(r) I_{sin^2 phi}((k+1)/2, 1/2).
double cap_volume(const cap_spec& spec);

/// Convenience overload.
double cap_volume(int k, double r, double phi);

} // namespace btda
