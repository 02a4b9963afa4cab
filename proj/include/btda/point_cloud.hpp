/**
 * Point clouds in 2- or 3-dimensional ambient space, with the text file
 * format used by the CLI: one point per line, comma-separated coordinates,
 * header line `# dim=<N> source=<kind> seed=<seed>`.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace btda {

struct point_cloud {
    int dim = 0;                        ///< ambient dimension
    std::vector<double> coords;         ///< size() * dim, row-major
    std::optional<std::uint64_t> seed;  ///< RNG seed, or none for deterministic sets
    std::string source;                 ///< manifold kind or free-form origin tag

    point_cloud() = default;
    explicit point_cloud(int dim_) : dim(dim_) {}

    std::size_t size() const { return dim > 0 ? coords.size() / dim : 0; }
    bool empty() const { return coords.empty(); }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }

    void add(std::span<const double> p);
    void add(double x, double y);
    void add(double x, double y, double z);

    void reserve(std::size_t n) { coords.reserve(n * dim); }
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

void write_point_cloud(const point_cloud& cloud, std::ostream& os);
void write_point_cloud(const point_cloud& cloud, const std::filesystem::path& path);
point_cloud read_point_cloud(std::istream& is);
point_cloud read_point_cloud(const std::filesystem::path& path);

} // namespace btda
