#include "btda/grid_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace btda {

grid_index::grid_index(const point_cloud& cloud, double cell_size)
    : cloud_(&cloud), dim_(cloud.dim), cell_(cell_size) {
    if (cloud.empty()) throw std::invalid_argument("grid_index: empty cloud");
    if (dim_ != 2 && dim_ != 3)
        throw std::invalid_argument("grid_index: supports ambient dimension 2 or 3");

    std::array<double, 3> hi{};
    for (int d = 0; d < dim_; ++d) {
        lo_[d] = std::numeric_limits<double>::infinity();
        hi[d] = -std::numeric_limits<double>::infinity();
    }
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (int d = 0; d < dim_; ++d) {
            lo_[d] = std::min(lo_[d], p[d]);
            hi[d] = std::max(hi[d], p[d]);
        }
    }
    double extent = 0.0;
    for (int d = 0; d < dim_; ++d) extent = std::max(extent, hi[d] - lo_[d]);
    if (cell_ <= 0.0) {
        // aim for a few points per cell
        const double per_axis =
            std::pow(static_cast<double>(cloud.size()), 1.0 / dim_);
        cell_ = extent / std::max(1.0, per_axis);
    }
    if (cell_ <= 0.0) cell_ = 1.0;  // degenerate cloud (single point)

    int total = 1;
    for (int d = 0; d < dim_; ++d) {
        cells_[d] = std::max(1, static_cast<int>((hi[d] - lo_[d]) / cell_) + 1);
        // keep the table bounded for sparse far-flung clouds
        cells_[d] = std::min(cells_[d], 512);
        total *= cells_[d];
    }
    start_.assign(total + 1, 0);
    for (std::size_t i = 0; i < cloud.size(); ++i)
        ++start_[cell_of(cloud.point(i)) + 1];
    for (int c = 0; c < total; ++c) start_[c + 1] += start_[c];
    ids_.resize(cloud.size());
    std::vector<std::uint32_t> cursor(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < cloud.size(); ++i)
        ids_[cursor[cell_of(cloud.point(i))]++] = static_cast<std::uint32_t>(i);
}

int grid_index::clamped_coord(double x, int axis) const {
    int c = static_cast<int>(std::floor((x - lo_[axis]) / cell_));
    return std::clamp(c, 0, cells_[axis] - 1);
}

int grid_index::cell_of(std::span<const double> p) const {
    int id = clamped_coord(p[0], 0);
    for (int d = 1; d < dim_; ++d) id = id * cells_[d] + clamped_coord(p[d], d);
    return id;
}

std::pair<std::size_t, double> grid_index::nearest(std::span<const double> q) const {
    std::array<int, 3> c0{};
    for (int d = 0; d < dim_; ++d) c0[d] = clamped_coord(q[d], d);

    std::size_t best_id = 0;
    double best2 = std::numeric_limits<double>::infinity();

    const int max_ring = *std::max_element(cells_.begin(), cells_.begin() + dim_);
    for (int ring = 0; ring < max_ring; ++ring) {
        if (best2 < std::numeric_limits<double>::infinity()) {
            const double lb = (ring - 1) * cell_;
            if (lb > 0.0 && lb * lb >= best2) break;
        }
        // visit all cells at Chebyshev distance exactly `ring` from c0
        std::array<int, 3> c{};
        const auto scan_cell = [&]() {
            int id = c[0];
            for (int d = 1; d < dim_; ++d) id = id * cells_[d] + c[d];
            for (std::uint32_t k = start_[id]; k < start_[id + 1]; ++k) {
                const double d2 = squared_distance(q, cloud_->point(ids_[k]));
                if (d2 < best2) {
                    best2 = d2;
                    best_id = ids_[k];
                }
            }
        };
        const int zlo = (dim_ == 3) ? std::max(0, c0[2] - ring) : 0;
        const int zhi = (dim_ == 3) ? std::min(cells_[2] - 1, c0[2] + ring) : 0;
        for (int x = std::max(0, c0[0] - ring);
             x <= std::min(cells_[0] - 1, c0[0] + ring); ++x) {
            for (int y = std::max(0, c0[1] - ring);
                 y <= std::min(cells_[1] - 1, c0[1] + ring); ++y) {
                for (int z = zlo; z <= zhi; ++z) {
                    const int cheb =
                        std::max({std::abs(x - c0[0]), std::abs(y - c0[1]),
                                  dim_ == 3 ? std::abs(z - c0[2]) : 0});
                    if (cheb != ring) continue;
                    c = {x, y, z};
                    scan_cell();
                }
            }
        }
    }
    return {best_id, std::sqrt(best2)};
}

void grid_index::for_each_within(std::span<const double> q, double radius,
                                 const std::function<void(std::size_t)>& fn) const {
    const double r2 = radius * radius;
    std::array<int, 3> clo{}, chi{};
    for (int d = 0; d < dim_; ++d) {
        clo[d] = clamped_coord(q[d] - radius, d);
        chi[d] = clamped_coord(q[d] + radius, d);
    }
    const int zlo = (dim_ == 3) ? clo[2] : 0, zhi = (dim_ == 3) ? chi[2] : 0;
    for (int x = clo[0]; x <= chi[0]; ++x)
        for (int y = clo[1]; y <= chi[1]; ++y)
            for (int z = zlo; z <= zhi; ++z) {
                int id = x;
                id = id * cells_[1] + y;
                if (dim_ == 3) id = id * cells_[2] + z;
                for (std::uint32_t k = start_[id]; k < start_[id + 1]; ++k)
                    if (squared_distance(q, cloud_->point(ids_[k])) <= r2)
                        fn(ids_[k]);
            }
}

} // namespace btda
