#include "btda/criteria.hpp"

#include "btda/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace btda {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

mu_reach_profile::mu_reach_profile(std::vector<std::pair<double, double>> pieces_,
                                   double tail_)
    : pieces(std::move(pieces_)), tail(tail_) {
    double prev_edge = 0.0;
    double prev_value = std::numeric_limits<double>::infinity();
    for (const auto& [edge, value] : pieces) {
        if (!(edge > prev_edge))
            throw std::invalid_argument("mu_reach_profile: edges must increase");
        if (value > prev_value)
            throw std::invalid_argument("mu_reach_profile: values must be nonincreasing");
        if (value < 0.0)
            throw std::invalid_argument("mu_reach_profile: values must be nonnegative");
        prev_edge = edge;
        prev_value = value;
    }
    if (tail > prev_value)
        throw std::invalid_argument("mu_reach_profile: tail must not exceed last piece");
}

double mu_reach_profile::value_at(double mu) const {
    if (!(mu > 0.0)) throw std::domain_error("mu_reach_profile: requires mu > 0");
    for (const auto& [edge, value] : pieces)
        if (mu <= edge) return value;
    return tail;
}

mu_reach_profile mu_reach_profile::semicircle() {
    return mu_reach_profile({{1.0, 1.0}}, 0.0);
}

chazal_result chazal_feasible(double d_h, const mu_reach_profile& profile) {
    if (!(d_h > 0.0)) throw std::domain_error("chazal_feasible: requires d_H > 0");
    double best = -std::numeric_limits<double>::infinity();
    // 4 d_H / mu^2 decreases in mu, so each piece's optimum is its right edge
    for (const auto& [edge, value] : profile.pieces)
        best = std::max(best, value - 3.0 * d_h - 4.0 * d_h / (edge * edge));
    // the unbounded tail: 4 d_H / mu^2 -> 0
    best = std::max(best, profile.tail - 3.0 * d_h);
    return {best > 0.0, best};
}

double lambda_cech(double mu) {
    if (!(mu > 0.0) || !(mu <= 1.0))
        throw std::domain_error("lambda_cech: requires 0 < mu <= 1");
    // radicand mu^6 - 4 mu^5 + 2 mu^4 + 4 mu^3 - 8 mu^2 + 18 mu + 9 (Horner)
    const double rad =
        ((((((mu - 4.0) * mu + 2.0) * mu + 4.0) * mu - 8.0) * mu + 18.0) * mu + 9.0);
    // denominator mu^4 - 4 mu^3 - 7 mu^2 + 22 mu + 1
    const double den = (((mu - 4.0) * mu - 7.0) * mu + 22.0) * mu + 1.0;
    const double num = 3.0 * mu * mu - 3.0 * mu - 3.0 + std::sqrt(rad);
    return num / den;
}

attali_result attali_cech_feasible(double d_h, const mu_reach_profile& profile) {
    if (!(d_h > 0.0)) throw std::domain_error("attali_cech_feasible: requires d_H > 0");
    // restricted to mu in (0, 1], where the closed form is valid and
    // increasing; each piece contributes at its right edge clamped to 1
    double sup = 0.0;
    double prev_edge = 0.0;
    for (const auto& [edge, value] : profile.pieces) {
        if (prev_edge >= 1.0) break;  // piece lies entirely above mu = 1
        sup = std::max(sup, lambda_cech(std::min(edge, 1.0)) * value);
        prev_edge = edge;
    }
    if (prev_edge < 1.0) sup = std::max(sup, lambda_cech(1.0) * profile.tail);
    return {d_h < sup, sup};
}

bool ours_feasible(const manifold& m, double d_h, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("ours_feasible: requires eps > 0");
    return eps < 0.5 * m.delta && d_h < 0.5 * eps;
}

std::string criteria_report::to_text() const {
    std::string out;
    out += "d_H=" + fmt(d_h) + "\n";
    out += "ours_applicable=" + std::string(ours_applicable ? "true" : "false") + "\n";
    out += "ours_eps=" + fmt(ours_eps) + "\n";
    out += "ours_delta=" + fmt(ours_delta) + "\n";
    out += "chazal_applicable=" + std::string(chazal.applicable ? "true" : "false") + "\n";
    out += "chazal_best_margin=" + fmt(chazal.best_margin) + "\n";
    out += "attali_cech_applicable=" +
           std::string(attali_cech.applicable ? "true" : "false") + "\n";
    out += "attali_cech_sup_threshold=" + fmt(attali_cech.sup_threshold) + "\n";
    out += "attali_rips_applicable=";
    out += attali_rips_applicable ? (*attali_rips_applicable ? "true" : "false")
                                  : "unknown";
    out += "\n";
    return out;
}

std::string criteria_report::csv_header() {
    return "d_H,ours_applicable,ours_eps,ours_delta,chazal_applicable,"
           "chazal_best_margin,attali_cech_applicable,attali_cech_sup_threshold,"
           "attali_rips_applicable";
}

std::string criteria_report::to_csv_row() const {
    std::string row = fmt(d_h);
    row += ours_applicable ? ",true" : ",false";
    row += "," + fmt(ours_eps);
    row += "," + fmt(ours_delta);
    row += chazal.applicable ? ",true" : ",false";
    row += "," + fmt(chazal.best_margin);
    row += attali_cech.applicable ? ",true" : ",false";
    row += "," + fmt(attali_cech.sup_threshold);
    row += ",";
    row += attali_rips_applicable ? (*attali_rips_applicable ? "true" : "false")
                                  : "unknown";
    return row;
}

criteria_report compare_all(const manifold& m, const point_cloud& cloud,
                            double eps, const mu_reach_profile& profile,
                            double mesh_h) {
    const point_cloud mesh = reference_mesh(m, mesh_h);
    const double d_h = sup_distance_to_cloud(mesh, cloud).value;

    criteria_report report{};
    report.d_h = d_h;
    report.ours_applicable = ours_feasible(m, d_h, eps);
    report.ours_eps = eps;
    report.ours_delta = m.delta;
    report.chazal = chazal_feasible(d_h, profile);
    report.attali_cech = attali_cech_feasible(d_h, profile);
    if (!report.attali_cech.applicable)
        report.attali_rips_applicable = false;  // dominated by the Cech bound
    return report;
}

} // namespace btda
