/**
 * Test-only oracles, independent of the library's implementation paths:
 *  - tanh-sinh quadrature and a quadrature-based incomplete beta ratio,
 *  - closed-form circular-segment and 3-ball cap volumes,
 *  - brute-force persistent homology over GF(2) via rank computations,
 *  - a portable uniform RNG helper and the true chopped-torus area.
 */

#pragma once

#include "btda/persistence.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace btda::oracle {

/// Tanh-sinh (double exponential) quadrature of f over [a, b]; handles
/// integrable endpoint singularities.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13);

/// I_x(a, b) by quadrature of t^(a-1) (1-t)^(b-1), normalized by the
/// complete integral computed the same way. No gamma functions, no
/// continued fractions.
double reg_inc_beta_quadrature(double x, double a, double b);

/// Area of the circular segment of the disk of radius r with half-angle
/// phi: r^2 (phi - sin phi cos phi).
double circular_segment_area(double r, double phi);

/// Volume of the 3-ball cap of height h = r (1 - cos phi):
/// pi h^2 (3 r - h) / 3.
double spherical_cap_volume_3d(double r, double phi);

/// The k-volume of the chopped torus (tube 1, center radius 2, x >= 2
/// removed) by quadrature of the area element over the kept region.
double chopped_torus_true_area();

/// Uniform double in [0, 1) from the engine's top 53 bits (portable).
double uniform01(std::mt19937_64& rng);

/// Persistence intervals (positive-length and infinite) of dimensions 0 and
/// 1, computed from persistent Betti numbers: beta^{i,j} = dim Z_d(K_i) -
/// dim(Z_d(K_i) ∩ B_d(K_j)) via GF(2) rank computations at every critical
/// value, intervals extracted by inclusion-exclusion. Exponential-time in
/// principle; intended for clouds of at most a dozen simplex values.
std::vector<bar> brute_force_persistence(const filtration& f);

} // namespace btda::oracle
