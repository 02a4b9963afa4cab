#include "btda/manifolds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace btda {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double ambiguity_tol = 1e-9;

// chopped-torus geometry: tube radius a, center-circle radius big_r,
// the part with x >= chop_x removed
constexpr double torus_a = 1.0;
constexpr double torus_r = 2.0;
constexpr double torus_chop_x = 2.0;

// uniform double in [0, 1) with exactly 53 random bits; portable across
// standard libraries, unlike std::uniform_real_distribution
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct candidate {
    double pt[3];
    double dist2;
};

void consider(std::vector<candidate>& cands, double x, double y, double z,
              std::span<const double> q) {
    candidate c{{x, y, z}, 0.0};
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double d = c.pt[i] - q[i];
        c.dist2 += d * d;
    }
    cands.push_back(c);
}

// picks the best candidate and checks uniqueness: a runner-up at the same
// distance (to tolerance) but a different location means the query sits on
// the medial axis
std::vector<double> pick_unique(std::vector<candidate>& cands, int dim) {
    auto best = std::min_element(cands.begin(), cands.end(),
                                 [](const candidate& a, const candidate& b) {
                                     return a.dist2 < b.dist2;
                                 });
    const double bd = std::sqrt(best->dist2);
    for (const auto& c : cands) {
        if (&c == &*best) continue;
        if (std::sqrt(c.dist2) - bd > ambiguity_tol) continue;
        double sep2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double d = c.pt[i] - best->pt[i];
            sep2 += d * d;
        }
        if (sep2 > 1e-12)
            throw projection_ambiguity_error(
                "project: nearest point not unique to tolerance (medial axis)");
    }
    return std::vector<double>(best->pt, best->pt + dim);
}

// --- chopped torus helpers ------------------------------------------------

// The cut curve is the torus slice {x = 2}. In polar coordinates of the
// (y, z)-plane, direction t, the curve point is s(t) * (cos t, sin t) with
// s the unique root of (sqrt(4 + s^2 cos^2 t) - 2)^2 + s^2 sin^2 t = 1.
double cut_curve_radius(double t) {
    const double c = std::cos(t), s = std::sin(t);
    auto f = [&](double r) {
        const double rho = std::sqrt(torus_chop_x * torus_chop_x + r * r * c * c);
        const double u = rho - torus_r;
        return u * u + r * r * s * s - torus_a * torus_a;
    };
    double lo = 0.0, hi = 2.4;  // f(0) = -1 < 0; s(t) <= sqrt(5) < 2.4
    while (f(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void cut_curve_point(double t, double out[3]) {
    const double s = cut_curve_radius(t);
    out[0] = torus_chop_x;
    out[1] = s * std::cos(t);
    out[2] = s * std::sin(t);
}

double cut_curve_dist2(double t, std::span<const double> q) {
    double p[3];
    cut_curve_point(t, p);
    double d2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double d = p[i] - q[i];
        d2 += d * d;
    }
    return d2;
}

// nearest point on the cut curve by grid scan plus golden-section refinement
void nearest_on_cut_curve(std::span<const double> q, double out[3]) {
    constexpr int grid = 512;
    int best_i = 0;
    double best = cut_curve_dist2(0.0, q);
    for (int i = 1; i < grid; ++i) {
        const double d2 = cut_curve_dist2(2.0 * pi * i / grid, q);
        if (d2 < best) {
            best = d2;
            best_i = i;
        }
    }
    double a = 2.0 * pi * (best_i - 1) / grid;
    double b = 2.0 * pi * (best_i + 1) / grid;
    const double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = cut_curve_dist2(x1, q), f2 = cut_curve_dist2(x2, q);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = cut_curve_dist2(x1, q);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = cut_curve_dist2(x2, q);
        }
    }
    cut_curve_point(0.5 * (a + b), out);
}

std::vector<double> project_semicircle(std::span<const double> q) {
    const double x = q[0], y = q[1];
    const double rho = std::hypot(x, y);
    if (rho < ambiguity_tol)
        throw projection_ambiguity_error("project: query at the circle center");
    std::vector<candidate> cands;
    if (y >= 0.0) consider(cands, x / rho, y / rho, 0.0, q);
    consider(cands, 1.0, 0.0, 0.0, q);
    consider(cands, -1.0, 0.0, 0.0, q);
    return pick_unique(cands, 2);
}

std::vector<double> project_cylinder(std::span<const double> q) {
    const double rho = std::hypot(q[0], q[1]);
    if (rho < ambiguity_tol)
        throw projection_ambiguity_error("project: query on the cylinder axis");
    const double z = std::clamp(q[2], 0.0, 1.0);
    std::vector<candidate> cands;
    consider(cands, q[0] / rho, q[1] / rho, z, q);
    return pick_unique(cands, 3);
}

std::vector<double> project_chopped_torus(std::span<const double> q) {
    const double rho = std::hypot(q[0], q[1]);
    if (rho < ambiguity_tol)
        throw projection_ambiguity_error("project: query on the torus axis");
    std::vector<candidate> cands;
    // normal feet of the full torus: near/far point of the tube cross-circle
    // on each side of the hole
    for (const double side : {1.0, -1.0}) {
        const double cx = side * torus_r * q[0] / rho;
        const double cy = side * torus_r * q[1] / rho;
        const double dx = q[0] - cx, dy = q[1] - cy, dz = q[2];
        const double dn = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (dn < ambiguity_tol)
            throw projection_ambiguity_error("project: query on the tube center circle");
        for (const double dir : {1.0, -1.0}) {
            const double px = cx + dir * torus_a * dx / dn;
            const double py = cy + dir * torus_a * dy / dn;
            const double pz = dir * torus_a * dz / dn;
            if (px <= torus_chop_x + 1e-15) consider(cands, px, py, pz, q);
        }
    }
    double cut[3];
    nearest_on_cut_curve(q, cut);
    consider(cands, cut[0], cut[1], cut[2], q);
    return pick_unique(cands, 3);
}

// torus sampling acceptance weight (R + a cos v) / (R + a)
point_cloud sample_chopped_torus(std::size_t n, std::uint64_t seed) {
    point_cloud cloud(3);
    cloud.reserve(n);
    std::mt19937_64 rng(seed);
    while (cloud.size() < n) {
        const double u = -pi + 2.0 * pi * uniform01(rng);
        const double v = -pi + 2.0 * pi * uniform01(rng);
        const double w = uniform01(rng);
        const double radial = torus_r + torus_a * std::cos(v);
        if (w * (torus_r + torus_a) > radial) continue;
        const double x = radial * std::cos(u);
        if (x >= torus_chop_x) continue;
        cloud.add(x, radial * std::sin(u), torus_a * std::sin(v));
    }
    return cloud;
}

} // namespace

std::string_view to_string(manifold_kind kind) {
    switch (kind) {
        case manifold_kind::semicircle: return "semicircle";
        case manifold_kind::cylinder: return "cylinder";
        case manifold_kind::chopped_torus: return "torus";
    }
    return "unknown";
}

std::optional<manifold_kind> parse_manifold_kind(std::string_view name) {
    if (name == "semicircle") return manifold_kind::semicircle;
    if (name == "cylinder") return manifold_kind::cylinder;
    if (name == "torus" || name == "chopped_torus" || name == "chopped-torus")
        return manifold_kind::chopped_torus;
    return std::nullopt;
}

manifold make_manifold(manifold_kind kind) {
    manifold m{};
    m.kind = kind;
    switch (kind) {
        case manifold_kind::semicircle:
            m.intrinsic_dim = 1;
            m.ambient_dim = 2;
            m.volume = pi;
            m.delta = 1.0;
            m.reach_m = 1.0;
            m.reach_bm = 1.0;
            break;
        case manifold_kind::cylinder:
            m.intrinsic_dim = 2;
            m.ambient_dim = 3;
            m.volume = 2.0 * pi;
            m.delta = 1.0;
            m.reach_m = 1.0;
            m.reach_bm = 1.0;
            break;
        case manifold_kind::chopped_torus:
            m.intrinsic_dim = 2;
            m.ambient_dim = 3;
            // the constant that reproduces the reference sample-size values;
            // the full torus (a=1, R=2) has area 8 pi^2
            m.volume = (8.0 - 0.522) * pi * pi;
            m.delta = 1.0;
            m.reach_m = 1.0;
            m.reach_bm = 1.0;
            break;
    }
    if (!(m.delta <= std::min(m.reach_m, m.reach_bm)))
        throw std::logic_error("manifold: delta must not exceed min reach");
    return m;
}

bound_params params_of(const manifold& m) {
    return bound_params(m.intrinsic_dim, m.volume, m.delta);
}

point_cloud sample_uniform(const manifold& m, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_uniform: requires n >= 1");
    point_cloud cloud;
    switch (m.kind) {
        case manifold_kind::semicircle: {
            cloud = point_cloud(2);
            cloud.reserve(n);
            std::mt19937_64 rng(seed);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = pi * uniform01(rng);
                cloud.add(std::cos(t), std::sin(t));
            }
            break;
        }
        case manifold_kind::cylinder: {
            cloud = point_cloud(3);
            cloud.reserve(n);
            std::mt19937_64 rng(seed);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = 2.0 * pi * uniform01(rng);
                const double z = uniform01(rng);
                cloud.add(std::cos(t), std::sin(t), z);
            }
            break;
        }
        case manifold_kind::chopped_torus:
            cloud = sample_chopped_torus(n, seed);
            break;
    }
    cloud.seed = seed;
    cloud.source = std::string(to_string(m.kind));
    return cloud;
}

point_cloud semicircle_example_points() {
    point_cloud cloud(2);
    for (int j = 0; j <= 7; ++j) {
        const double t = pi * j / 7.0;
        cloud.add(std::cos(t), std::sin(t));
    }
    cloud.source = "semicircle";
    return cloud;
}

std::vector<double> project(const manifold& m, std::span<const double> q) {
    if (static_cast<int>(q.size()) != m.ambient_dim)
        throw std::invalid_argument("project: wrong ambient dimension");
    switch (m.kind) {
        case manifold_kind::semicircle: return project_semicircle(q);
        case manifold_kind::cylinder: return project_cylinder(q);
        case manifold_kind::chopped_torus: return project_chopped_torus(q);
    }
    throw std::logic_error("project: unknown manifold kind");
}

point_cloud reference_mesh(const manifold& m, double h, std::size_t max_points) {
    if (!(h > 0.0) || !(h < m.delta))
        throw std::invalid_argument("reference_mesh: requires 0 < h < delta");
    point_cloud mesh;
    switch (m.kind) {
        case manifold_kind::semicircle: {
            // arc-length step h, covering radius h/2
            const std::size_t steps = static_cast<std::size_t>(std::ceil(pi / h));
            if (steps + 1 > max_points)
                throw mesh_too_large_error("reference_mesh: semicircle mesh exceeds cap");
            mesh = point_cloud(2);
            mesh.reserve(steps + 1);
            for (std::size_t j = 0; j <= steps; ++j) {
                const double t = pi * j / steps;
                mesh.add(std::cos(t), std::sin(t));
            }
            break;
        }
        case manifold_kind::cylinder: {
            // steps <= h/sqrt(2) in both arc-length coordinates; the chart
            // (theta, z) is an isometry, so the covering radius is <= h/2
            const double step = h / std::sqrt(2.0);
            const std::size_t na = static_cast<std::size_t>(std::ceil(2.0 * pi / step));
            const std::size_t nz = static_cast<std::size_t>(std::ceil(1.0 / step));
            if (na * (nz + 1) > max_points)
                throw mesh_too_large_error("reference_mesh: cylinder mesh exceeds cap");
            mesh = point_cloud(3);
            mesh.reserve(na * (nz + 1));
            for (std::size_t i = 0; i <= nz; ++i) {
                const double z = static_cast<double>(i) / nz;
                for (std::size_t j = 0; j < na; ++j) {
                    const double t = 2.0 * pi * j / na;
                    mesh.add(std::cos(t), std::sin(t), z);
                }
            }
            break;
        }
        case manifold_kind::chopped_torus: {
            // (u, v)-grid with steps scaled by the maximal metric factors
            // (R + a for u, a for v). Rows crossing the chop keep
            // u in [u0(v), 2 pi - u0(v)]; since u0 varies steeply where
            // cos v approaches 0, the v-grid is refined there so that the
            // chop endpoint moves by at most one u-step between rows.
            const double du = h / (std::sqrt(2.0) * (torus_r + torus_a));
            const double dv = h / (std::sqrt(2.0) * torus_a);
            auto u0_of = [](double v) {
                const double c = std::cos(v);
                if (c <= 0.0) return 0.0;
                return std::acos(std::min(1.0, torus_chop_x / (torus_r + torus_a * c)));
            };
            std::vector<double> rows;
            for (double v = -pi; v < pi;) {
                rows.push_back(v);
                double step = dv;
                while (step > 1e-4 * dv &&
                       std::fabs(u0_of(v + step) - u0_of(v)) > du)
                    step *= 0.5;
                v += step;
            }
            rows.push_back(pi);
            mesh = point_cloud(3);
            for (const double v : rows) {
                const double radial = torus_r + torus_a * std::cos(v);
                const double u0 = u0_of(v);
                const double u_span = 2.0 * pi - 2.0 * u0;
                const std::size_t nu =
                    std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(u_span / du)));
                if (mesh.size() + nu + 1 > max_points)
                    throw mesh_too_large_error("reference_mesh: torus mesh exceeds cap");
                for (std::size_t i = 0; i <= nu; ++i) {
                    const double u = u0 + u_span * i / nu;
                    mesh.add(radial * std::cos(u), radial * std::sin(u),
                             torus_a * std::sin(v));
                }
            }
            // the cut curve at Euclidean step <= h (curve speed is < 3)
            const std::size_t nc =
                static_cast<std::size_t>(std::ceil(3.0 * 2.0 * pi / h));
            if (mesh.size() + nc > max_points)
                throw mesh_too_large_error("reference_mesh: torus mesh exceeds cap");
            for (std::size_t i = 0; i < nc; ++i) {
                double p[3];
                cut_curve_point(2.0 * pi * i / nc, p);
                mesh.add(p[0], p[1], p[2]);
            }
            break;
        }
    }
    mesh.source = std::string(to_string(m.kind));
    return mesh;
}

double surface_residual(const manifold& m, std::span<const double> p) {
    switch (m.kind) {
        case manifold_kind::semicircle: {
            const double r2 = p[0] * p[0] + p[1] * p[1];
            return std::max(std::fabs(r2 - 1.0), std::max(0.0, -p[1]));
        }
        case manifold_kind::cylinder: {
            const double r2 = p[0] * p[0] + p[1] * p[1];
            double res = std::fabs(r2 - 1.0);
            res = std::max(res, std::max(0.0, -p[2]));
            res = std::max(res, std::max(0.0, p[2] - 1.0));
            return res;
        }
        case manifold_kind::chopped_torus: {
            const double rho = std::hypot(p[0], p[1]);
            const double u = rho - torus_r;
            const double impl = u * u + p[2] * p[2] - torus_a * torus_a;
            return std::max(std::fabs(impl), std::max(0.0, p[0] - torus_chop_x));
        }
    }
    throw std::logic_error("surface_residual: unknown manifold kind");
}

} // namespace btda
