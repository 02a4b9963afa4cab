/**
 * Sampling bounds for compact manifolds with boundary: the beta function,
 * the sample-size bound n*, and the volume lower bounds on vol(M ∩ B_eps(p))
 * for boundary, interior and arbitrary base points.
 *
 * All functions are pure and thread-safe.
 */

#pragma once

#include <cstdint>
#include <stdexcept>

namespace btda {

/// Parameters of a manifold entering the bounds: intrinsic dimension k,
/// k-volume, and the condition number delta (delta < min reach of the
/// manifold and of its boundary).
struct bound_params {
    int k;          ///< intrinsic dimension, >= 1
    double vol_m;   ///< k-dimensional volume, > 0
    double delta;   ///< condition number, > 0

    bound_params(int k_, double vol_m_, double delta_);
};

/// A query against the sample-size bound: offset radius eps in
/// (0, delta/2) and failure probability gamma in (0, 1).
struct bound_query {
    double eps;
    double gamma;
};

/// theta(x) = arcsin(x / (4 delta)), in [0, pi/2].
/// Requires 0 < x <= 4 delta.
double theta(double x, double delta);

/// beta(x) = vol(M) / ( cos^k(theta)/2^{k+1}
///           * I_{1 - x^2 cos^2 theta / (16 delta^2)}((k+1)/2, 1/2)
///           * vol(B_x^k) ),   theta = arcsin(x/(4 delta)).
/// Requires 0 < x < 2 delta. Throws std::overflow_error if the value
/// exceeds the double range.
double beta_fn(double x, const bound_params& p);

/// The sample-size bound n*: the smallest integer strictly greater than
/// beta(eps) (ln beta(eps/2) + ln(1/gamma)). At least 1.
std::int64_t sample_size(const bound_query& q, const bound_params& p);

/// Lower bound on vol(M ∩ B_eps(p)) for p on the boundary:
/// (cos^k theta / 2) I_{1 - eps^2 cos^2 theta / (4 delta^2)}((k+1)/2, 1/2)
/// vol(B_eps^k), with theta = arcsin(eps/(2 delta)). Requires 0 < eps < delta.
double vol_lower_bound_boundary(double eps, const bound_params& p);

/// Lower bound for p with B_eps(p) disjoint from the boundary:
/// cos^k(theta) vol(B_eps^k), theta = arcsin(eps/(2 delta)).
/// Requires 0 < eps < delta.
double vol_lower_bound_interior(double eps, const bound_params& p);

/// Lower bound valid for every p in M:
/// (cos^k theta' / 2^{k+1}) I_{1 - eps^2 cos^2 theta' / (16 delta^2)}((k+1)/2, 1/2)
/// vol(B_eps^k), theta' = arcsin(eps/(4 delta)). Requires 0 < eps < delta.
/// Satisfies vol_lower_bound(eps, p) * beta_fn(eps, p) = p.vol_m exactly.
double vol_lower_bound(double eps, const bound_params& p);

} // namespace btda
