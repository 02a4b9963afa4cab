/**
 * Uniform grid-bucket index over a point cloud for exact nearest-neighbor
 * and fixed-radius queries. Cells are scanned in expanding Chebyshev rings;
 * a ring at distance rho can only contain points at Euclidean distance
 * >= (rho - 1) * cell, which bounds the search.
 *
 * Read-only after construction; safe for concurrent queries.
 */

#pragma once

#include "btda/point_cloud.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace btda {

class grid_index {
public:
    /// cell_size <= 0 picks a heuristic from the bounding box and count.
    explicit grid_index(const point_cloud& cloud, double cell_size = 0.0);

    /// Index and Euclidean distance of the nearest point to q.
    std::pair<std::size_t, double> nearest(std::span<const double> q) const;

    /// Calls fn(index) for every point within radius of q (inclusive).
    void for_each_within(std::span<const double> q, double radius,
                         const std::function<void(std::size_t)>& fn) const;

    double cell_size() const { return cell_; }

private:
    const point_cloud* cloud_;
    int dim_;
    double cell_;
    std::array<double, 3> lo_{};
    std::array<int, 3> cells_{};
    std::vector<std::uint32_t> start_;  // CSR offsets, one per cell + 1
    std::vector<std::uint32_t> ids_;    // point ids grouped by cell

    int cell_of(std::span<const double> p) const;
    int clamped_coord(double x, int axis) const;
};

} // namespace btda
