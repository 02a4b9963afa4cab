/**
 * Vietoris-Rips filtrations and persistent homology over the two-element
 * field via boundary-matrix reduction.
 *
 * Simplices are stored packed per dimension (vertex ids plus a float32
 * filtration value) and ordered by (value, dimension, lexicographic
 * vertices). The default reduction uses the twist/clearing optimization
 * with sparse columns; a plain textbook reduction is kept as the oracle
 * path. Coefficients are Z/2.
 *
 * Inputs are immutable during computation; distinct filtrations may be
 * processed concurrently.
 */

#pragma once

#include "btda/point_cloud.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace btda {

using vertex_id = std::uint32_t;

/// Thrown by build_rips when the complex would exceed the configured caps.
struct rips_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by compute_persistence when a simplex has a missing face or a
/// face with a larger filtration value.
struct filtration_inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A filtered simplicial complex of dimension <= 3. Vertices of every
/// simplex must be distinct and every face must be present with a value
/// no larger than the coface's.
class filtration {
public:
    static constexpr int max_supported_dim = 3;

    /// Adds one simplex (1 to 4 distinct vertex ids, any order).
    void add(std::span<const vertex_id> vertices, double value);
    void add(std::initializer_list<vertex_id> vertices, double value);

    /// Sorts every dimension by (value, lexicographic vertices).
    /// Must be called before queries and persistence; idempotent.
    void finalize();
    bool finalized() const { return finalized_; }

    std::size_t size() const;
    std::size_t count(int dim) const;
    int top_dim() const;  ///< largest dimension present, -1 if empty

    /// Value of the i-th dim-simplex in filtration order.
    double value(int dim, std::size_t i) const;
    /// Vertices (ascending) of the i-th dim-simplex; fills dim+1 entries.
    void vertices(int dim, std::size_t i, vertex_id out[4]) const;

    struct packed0 { vertex_id v[1]; float value; };
    struct packed1 { vertex_id v[2]; float value; };
    struct packed2 { vertex_id v[3]; float value; };
    struct packed3 { vertex_id v[4]; float value; };

    std::vector<packed0> d0;
    std::vector<packed1> d1;
    std::vector<packed2> d2;
    std::vector<packed3> d3;

private:
    bool finalized_ = false;
};

/// Caps for Rips construction (points and total simplex count).
struct rips_limits {
    std::size_t max_points = 12'000;
    std::size_t max_simplices = 120'000'000;
};

/// All simplices of dimension <= max_dim whose vertex set has Euclidean
/// diameter <= r_max; values are diameters (max pairwise distance).
/// The result is finalized. Requires max_dim in [0, 3].
filtration build_rips(const point_cloud& cloud, double r_max, int max_dim,
                      const rips_limits& limits = {});

constexpr double infinite_death = std::numeric_limits<double>::infinity();

struct bar {
    int dim;
    double birth;
    double death;  ///< infinite_death for essential classes

    double length() const { return death - birth; }
};

/// Persistence intervals, including zero-length ones (filtered at
/// presentation). Sorted by (dim, birth, death). Dimensions above
/// top_dim - 1 are not reported: without cofaces their deaths are
/// truncation artifacts.
struct barcode {
    std::vector<bar> intervals;
};

/// Twist/clearing reduction (connected components via union-find, higher
/// dimensions via sparse column reduction processed top dimension first).
barcode compute_persistence(const filtration& f);

/// Plain textbook reduction over the globally sorted boundary matrix.
/// Same output contract; kept as the independent oracle path.
barcode compute_persistence_plain(const filtration& f);

/// Number of intervals of the given dimension with birth <= r < death.
int betti_at(const barcode& b, double r, int dim);

/// The k longest positive-length intervals of a dimension, sorted by
/// descending length, ties by earlier birth. With the default clamp only
/// finite intervals participate; a finite clamp also ranks essential
/// intervals, returning them with death replaced by the clamp value.
std::vector<bar> top_k_intervals(const barcode& b, int dim, std::size_t k,
                                 double clamp = infinite_death);

/// Leading group size under a dominance factor: the smallest m >= 1 with
/// length(bars[m-1]) >= factor * length(bars[m]) (absent bars count as
/// length 0), or 0 when the list is empty or no such m exists.
std::size_t dominance_count(std::span<const bar> bars, double factor);

} // namespace btda
