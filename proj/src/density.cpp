#include "btda/density.hpp"

#include "btda/grid_index.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace btda {

std::string_view to_string(density_verdict v) {
    switch (v) {
        case density_verdict::dense: return "Dense";
        case density_verdict::not_dense: return "NotDense";
        case density_verdict::unknown: return "Unknown";
    }
    return "Unknown";
}

std::string density_certificate::to_line() const {
    char buf[64];
    std::string line = "verdict=";
    line += to_string(verdict);
    std::snprintf(buf, sizeof(buf), " eps=%.17g", eps);
    line += buf;
    std::snprintf(buf, sizeof(buf), " sup_dist=%.17g", sup_dist);
    line += buf;
    std::snprintf(buf, sizeof(buf), " mesh_h=%.17g", mesh_h);
    line += buf;
    line += " witness=";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", witness[i]);
        if (i) line += ',';
        line += buf;
    }
    return line;
}

sup_distance_result sup_distance_to_cloud(const point_cloud& mesh,
                                          const point_cloud& cloud) {
    if (mesh.empty() || cloud.empty())
        throw std::invalid_argument("sup_distance_to_cloud: empty input");
    if (mesh.dim != cloud.dim)
        throw std::invalid_argument("sup_distance_to_cloud: dimension mismatch");

    const grid_index index(cloud);
    sup_distance_result result{-1.0, {}, 0};
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        const auto [id, dist] = index.nearest(mesh.point(i));
        (void)id;
        if (dist > result.value) {
            result.value = dist;
            result.mesh_index = i;
        }
    }
    const auto w = mesh.point(result.mesh_index);
    result.witness.assign(w.begin(), w.end());
    return result;
}

density_certificate certify_density(const point_cloud& mesh, double mesh_h,
                                    const point_cloud& cloud, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("certify_density: requires eps > 0");
    if (!(mesh_h > 0.0) || !(mesh_h < eps / 4.0))
        throw std::invalid_argument("certify_density: requires 0 < h < eps/4");
    const auto sup = sup_distance_to_cloud(mesh, cloud);
    density_certificate cert{};
    cert.eps = eps;
    cert.sup_dist = sup.value;
    cert.mesh_h = mesh_h;
    cert.witness = sup.witness;
    if (sup.value + mesh_h <= eps)
        cert.verdict = density_verdict::dense;
    else if (sup.value > eps)
        cert.verdict = density_verdict::not_dense;
    else
        cert.verdict = density_verdict::unknown;
    return cert;
}

density_certificate certify_density(const manifold& m, const point_cloud& cloud,
                                    double eps, double h) {
    if (!(eps > 0.0)) throw std::invalid_argument("certify_density: requires eps > 0");
    if (!(h > 0.0) || !(h < eps / 4.0))
        throw std::invalid_argument("certify_density: requires 0 < h < eps/4");
    const point_cloud mesh = reference_mesh(m, h);
    return certify_density(mesh, h, cloud, eps);
}

std::size_t greedy_packing_number(const point_cloud& cloud, double r) {
    if (cloud.empty())
        throw std::invalid_argument("greedy_packing_number: empty cloud");
    if (!(r > 0.0))
        throw std::invalid_argument("greedy_packing_number: requires r > 0");
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        bool separated = true;
        for (const std::size_t j : kept) {
            if (distance(p, cloud.point(j)) <= r) {
                separated = false;
                break;
            }
        }
        if (separated) kept.push_back(i);
    }
    return kept.size();
}

precondition_report check_preconditions(const manifold& m, double eps) {
    precondition_report rep{};
    rep.eps = eps;
    rep.delta = m.delta;
    rep.eps_positive = eps > 0.0;
    rep.below_half_delta = eps < 0.5 * m.delta;
    return rep;
}

} // namespace btda
