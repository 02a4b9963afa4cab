/**
 * The built-in compact manifolds with boundary: the unit semicircle, the
 * unit cylinder of height 1, and the chopped torus (tube radius 1, center
 * radius 2, part with x >= 2 removed). Each model exposes uniform sampling,
 * nearest-point projection, a covering reference mesh, and the parameters
 * feeding the sampling bounds.
 */

#pragma once

#include "btda/bounds.hpp"
#include "btda/point_cloud.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace btda {

enum class manifold_kind { semicircle, cylinder, chopped_torus };

std::string_view to_string(manifold_kind kind);
std::optional<manifold_kind> parse_manifold_kind(std::string_view name);

struct manifold {
    manifold_kind kind;
    int intrinsic_dim;   ///< k
    int ambient_dim;     ///< N
    double volume;       ///< k-dimensional volume
    double delta;        ///< condition number
    double reach_m;      ///< reach of the manifold
    double reach_bm;     ///< reach of the boundary
};

/// The three built-in models with their stored constants. Asserts
/// delta <= min(reach_m, reach_bm) at construction.
manifold make_manifold(manifold_kind kind);

/// Bound parameters (k, vol, delta) of a model.
bound_params params_of(const manifold& m);

/// Thrown by project() when the nearest point is not unique to tolerance
/// (the query sits on the medial axis).
struct projection_ambiguity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by reference_mesh() when the requested resolution would exceed
/// the mesh size cap.
struct mesh_too_large_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n i.i.d. points uniform w.r.t. k-volume on the manifold, deterministic
/// given the seed.
point_cloud sample_uniform(const manifold& m, std::size_t n, std::uint64_t seed);

/// The 8 points dividing the unit semicircle evenly into 7 arcs
/// (angles j*pi/7, j = 0..7; the first and last are endpoints of a diameter).
point_cloud semicircle_example_points();

/// Nearest point of the manifold to an ambient query point. Idempotent on
/// manifold points. Throws projection_ambiguity_error when the nearest point
/// is not unique to within 1e-9.
std::vector<double> project(const manifold& m, std::span<const double> q);

/// Deterministic point set on the manifold with covering radius <= h
/// (every manifold point is within h of some mesh point); covers the
/// boundary explicitly. Throws mesh_too_large_error above max_points.
point_cloud reference_mesh(const manifold& m, double h,
                           std::size_t max_points = 20'000'000);

/// How far a point violates the model's implicit equations (0 = on the
/// manifold). Used to validate clouds against their source model.
double surface_residual(const manifold& m, std::span<const double> p);

} // namespace btda
