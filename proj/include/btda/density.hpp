/**
 * Density certification: one-sided sup distance from a covering mesh to a
 * point cloud, and sound eps-density certificates with an explicit mesh
 * resolution margin. A finite mesh can only certify density up to its
 * covering radius, hence the three-valued verdict.
 */

#pragma once

#include "btda/manifolds.hpp"
#include "btda/point_cloud.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace btda {

enum class density_verdict { dense, not_dense, unknown };

std::string_view to_string(density_verdict v);

struct density_certificate {
    density_verdict verdict;
    double eps;
    double sup_dist;               ///< max over mesh of distance to the cloud
    double mesh_h;                 ///< covering radius of the mesh used
    std::vector<double> witness;   ///< mesh point achieving sup_dist

    /// Single-line key=value record.
    std::string to_line() const;
};

struct sup_distance_result {
    double value;
    std::vector<double> witness;
    std::size_t mesh_index;
};

/// max over mesh points m of min over cloud points x of |m - x|, with an
/// achieving mesh point. Both clouds must be nonempty and share a dimension.
sup_distance_result sup_distance_to_cloud(const point_cloud& mesh,
                                          const point_cloud& cloud);

/// Certifies eps-density of the cloud on the manifold using a covering mesh
/// of resolution h (requires 0 < h < eps/4 so the unknown band is narrow):
///   dense      if sup_dist + h <= eps  (sound covering certificate),
///   not_dense  if sup_dist > eps       (the witness alone disproves density),
///   unknown    otherwise.
density_certificate certify_density(const manifold& m, const point_cloud& cloud,
                                    double eps, double h);

/// Same, against a prebuilt mesh with known covering radius mesh_h.
density_certificate certify_density(const point_cloud& mesh, double mesh_h,
                                    const point_cloud& cloud, double eps);

struct precondition_report {
    double eps;
    double delta;
    bool eps_positive;         ///< eps > 0
    bool below_half_delta;     ///< eps < delta / 2 (strict)
    bool pass() const { return eps_positive && below_half_delta; }
};

/// Named checks of the sampling-theorem regime for a given eps.
precondition_report check_preconditions(const manifold& m, double eps);

/// Size of the maximal greedy r-separated subset, scanning in cloud order;
/// a lower bound on the packing number.
std::size_t greedy_packing_number(const point_cloud& cloud, double r);

} // namespace btda
