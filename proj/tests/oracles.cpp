#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace btda::oracle {

namespace {

constexpr double pi = 3.14159265358979323846;

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    // t = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh u); trapezoid in u, halving h
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double u_max = 4.0;

    auto node_sum = [&](double h, bool odd_only) {
        double s = 0.0;
        const int k_max = static_cast<int>(u_max / h);
        for (int k = odd_only ? 1 : 0; k <= k_max; k += odd_only ? 2 : 1) {
            for (const int sign : {1, -1}) {
                if (k == 0 && sign < 0) continue;
                const double u = sign * k * h;
                const double sh = 0.5 * pi * std::sinh(u);
                const double ch = std::cosh(sh);
                const double w = 0.5 * pi * std::cosh(u) / (ch * ch);
                if (w < 1e-290) continue;
                const double t = mid + half * std::tanh(sh);
                if (t <= a || t >= b) continue;
                s += w * f(t);
            }
        }
        return s;
    };

    double h = 1.0;
    double sum = node_sum(h, false);
    double result = half * h * sum;
    for (int level = 0; level < 12; ++level) {
        h *= 0.5;
        sum += node_sum(h, true);
        const double next = half * h * sum;
        if (level >= 2 && std::fabs(next - result) <= tol * std::max(1.0, std::fabs(next))) {
            return next;
        }
        result = next;
    }
    return result;
}

double reg_inc_beta_quadrature(double x, double a, double b) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    auto integrand = [&](double t) {
        return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0);
    };
    const double part = integrate(integrand, 0.0, x, 1e-14);
    const double whole = integrate(integrand, 0.0, 1.0, 1e-14);
    return part / whole;
}

double circular_segment_area(double r, double phi) {
    return r * r * (phi - std::sin(phi) * std::cos(phi));
}

double spherical_cap_volume_3d(double r, double phi) {
    const double h = r * (1.0 - std::cos(phi));
    return pi * h * h * (3.0 * r - h) / 3.0;
}

double chopped_torus_true_area() {
    auto u0 = [](double v) {
        const double c = std::cos(v);
        if (c <= 0.0) return 0.0;
        return std::acos(std::min(1.0, 2.0 / (2.0 + c)));
    };
    auto integrand = [&](double v) {
        return (2.0 * pi - 2.0 * u0(v)) * (2.0 + std::cos(v));
    };
    return integrate(integrand, -pi, pi, 1e-12);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// brute-force persistence via GF(2) ranks
// ---------------------------------------------------------------------------

namespace {

// dense GF(2) matrix as column vectors of 64-bit words
struct gf2_matrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::uint64_t>> cols;

    explicit gf2_matrix(std::size_t rows_) : rows(rows_) {}

    void add_column(const std::vector<std::size_t>& ones) {
        std::vector<std::uint64_t> col((rows + 63) / 64, 0);
        for (const std::size_t r : ones) col[r / 64] ^= 1ull << (r % 64);
        cols.push_back(std::move(col));
    }
};

int lowest_one(const std::vector<std::uint64_t>& col) {
    for (int w = static_cast<int>(col.size()) - 1; w >= 0; --w)
        if (col[w]) return w * 64 + 63 - std::countl_zero(col[w]);
    return -1;
}

// column-echelon rank; optionally collects a basis of the kernel in terms
// of the original columns (needed to span Z_d)
std::size_t rank(gf2_matrix m, std::vector<std::vector<std::uint64_t>>* kernel,
                 std::size_t n_original_cols) {
    const std::size_t nc = m.cols.size();
    // identity tracking for kernel extraction
    std::vector<std::vector<std::uint64_t>> track;
    if (kernel) {
        track.assign(nc, std::vector<std::uint64_t>((n_original_cols + 63) / 64, 0));
        for (std::size_t j = 0; j < nc; ++j) track[j][j / 64] ^= 1ull << (j % 64);
    }
    std::map<int, std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t j = 0; j < nc; ++j) {
        int low = lowest_one(m.cols[j]);
        while (low >= 0) {
            auto it = pivot_col.find(low);
            if (it == pivot_col.end()) break;
            const std::size_t o = it->second;
            for (std::size_t w = 0; w < m.cols[j].size(); ++w)
                m.cols[j][w] ^= m.cols[o][w];
            if (kernel)
                for (std::size_t w = 0; w < track[j].size(); ++w)
                    track[j][w] ^= track[o][w];
            low = lowest_one(m.cols[j]);
        }
        if (low >= 0) {
            pivot_col[low] = j;
            ++rk;
        } else if (kernel) {
            kernel->push_back(track[j]);
        }
    }
    return rk;
}

std::size_t rank_only(gf2_matrix m) { return rank(std::move(m), nullptr, 0); }

} // namespace

std::vector<bar> brute_force_persistence(const filtration& f) {
    if (!f.finalized())
        throw std::logic_error("brute_force_persistence: filtration not finalized");

    // critical values
    std::set<float> value_set;
    for (int d = 0; d <= f.top_dim(); ++d)
        for (std::size_t i = 0; i < f.count(d); ++i)
            value_set.insert(static_cast<float>(f.value(d, i)));
    const std::vector<float> crit(value_set.begin(), value_set.end());
    const std::size_t m = crit.size();

    // global simplex tables per dimension with vertex keys
    struct simp {
        std::vector<vertex_id> v;
        float value;
    };
    std::array<std::vector<simp>, 4> simplices;
    for (int d = 0; d <= f.top_dim(); ++d)
        for (std::size_t i = 0; i < f.count(d); ++i) {
            vertex_id vv[4];
            f.vertices(d, i, vv);
            simplices[d].push_back(
                {std::vector<vertex_id>(vv, vv + d + 1), static_cast<float>(f.value(d, i))});
        }
    // index of a (d-1)-face within simplices[d-1]
    auto face_index = [&](int d, const std::vector<vertex_id>& key) {
        const auto& arr = simplices[d];
        for (std::size_t i = 0; i < arr.size(); ++i)
            if (arr[i].v == key) return i;
        throw std::logic_error("brute_force_persistence: missing face");
    };

    // boundary columns of dim-d simplices (row indices into simplices[d-1])
    auto boundary_ones = [&](int d, const simp& s) {
        std::vector<std::size_t> ones;
        for (int drop = 0; drop <= d; ++drop) {
            std::vector<vertex_id> face;
            for (int i = 0; i <= d; ++i)
                if (i != drop) face.push_back(s.v[i]);
            ones.push_back(face_index(d - 1, face));
        }
        return ones;
    };

    // dim Z_d(K_i): kernel of boundary restricted to simplices with value <= crit[i]
    // dim (Z_d(K_i) ∩ B_d(K_j)) = dim Z + dim B - dim(Z + B)
    auto z_kernel = [&](int d, float cutoff,
                        std::vector<std::vector<std::uint64_t>>& kernel_out) {
        const std::size_t rows = d == 0 ? 1 : simplices[d - 1].size();
        gf2_matrix mat(std::max<std::size_t>(rows, 1));
        std::size_t ncols = 0;
        for (const auto& s : simplices[d]) {
            if (s.value > cutoff) break;  // sorted by (value, lex)
            if (d == 0)
                mat.add_column({});  // zero column: every vertex is a cycle
            else
                mat.add_column(
                    [&] {
                        auto ones = boundary_ones(d, s);
                        return ones;
                    }());
            ++ncols;
        }
        kernel_out.clear();
        rank(std::move(mat), &kernel_out, ncols);
        return ncols;
    };

    auto b_columns = [&](int d, float cutoff) {
        // boundaries of (d+1)-simplices in K_j, as rows over ALL d-simplices
        std::vector<std::vector<std::size_t>> cols;
        if (d + 1 <= f.top_dim())
            for (const auto& s : simplices[d + 1]) {
                if (s.value > cutoff) break;
                cols.push_back(boundary_ones(d + 1, s));
            }
        return cols;
    };

    auto persistent_betti = [&](int d, std::size_t i, std::size_t j) -> long {
        if (i == 0) return 0;  // beta^{0,*} = 0 (empty complex convention)
        std::vector<std::vector<std::uint64_t>> kernel;
        const std::size_t ncols_zi = z_kernel(d, crit[i - 1], kernel);
        const long dim_z = static_cast<long>(kernel.size());
        const auto bcols = b_columns(d, crit[j - 1]);
        // rank of B
        gf2_matrix bm(std::max<std::size_t>(simplices[d].size(), 1));
        for (const auto& ones : bcols) bm.add_column(ones);
        const long dim_b = static_cast<long>(rank_only(std::move(bm)));
        // dim (Z + B): stack kernel vectors (over d-simplex coordinates) and B
        gf2_matrix zb(std::max<std::size_t>(simplices[d].size(), 1));
        for (const auto& kv : kernel) {
            std::vector<std::size_t> ones;
            for (std::size_t c = 0; c < ncols_zi; ++c)
                if (kv[c / 64] >> (c % 64) & 1) ones.push_back(c);
            zb.add_column(ones);
        }
        for (const auto& ones : bcols) zb.add_column(ones);
        const long dim_zb = static_cast<long>(rank_only(std::move(zb)));
        return dim_z - (dim_z + dim_b - dim_zb);
    };

    std::vector<bar> bars;
    for (int d = 0; d <= 1; ++d) {
        if (d > f.top_dim()) break;
        // beta^{i,j} table, 0..m
        std::vector<std::vector<long>> beta(m + 1, std::vector<long>(m + 1, 0));
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = i; j <= m; ++j) beta[i][j] = persistent_betti(d, i, j);
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = i + 1; j <= m; ++j) {
                const long mult = (beta[i][j - 1] - beta[i][j]) -
                                  (beta[i - 1][j - 1] - beta[i - 1][j]);
                for (long c = 0; c < mult; ++c)
                    bars.push_back(bar{d, crit[i - 1], crit[j - 1]});
            }
            const long inf_mult = beta[i][m] - beta[i - 1][m];
            for (long c = 0; c < inf_mult; ++c)
                bars.push_back(bar{d, crit[i - 1], infinite_death});
        }
    }
    std::sort(bars.begin(), bars.end(), [](const bar& x, const bar& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        if (x.birth != y.birth) return x.birth < y.birth;
        return x.death < y.death;
    });
    return bars;
}

} // namespace btda::oracle
