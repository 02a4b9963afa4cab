/**
 * Applicability tests of three reconstruction criteria against one dataset:
 * the deformation-retract criterion of this library (eps < delta/2 and
 * d_H < eps/2), the mu-reach inequality 4 d_H / mu^2 <= alpha < r_mu - 3 d_H,
 * and the Cech bound d_H < lambda_cech(mu) * r_mu. The Rips variant is
 * reported only through domination by the Cech bound (its threshold function
 * is strictly smaller), never computed from a formula of its own.
 */

#pragma once

#include "btda/manifolds.hpp"
#include "btda/point_cloud.hpp"

#include <optional>
#include <string>
#include <vector>

namespace btda {

/// Piecewise-constant nonincreasing mu-reach profile: value pieces[i].second
/// on the interval (prev edge, pieces[i].first], and `tail` beyond the last
/// edge. Edges are strictly increasing, values nonincreasing.
struct mu_reach_profile {
    std::vector<std::pair<double, double>> pieces;  // (right edge, value)
    double tail = 0.0;

    mu_reach_profile(std::vector<std::pair<double, double>> pieces_, double tail_);

    double value_at(double mu) const;

    /// The semicircle profile: r_mu = 1 on (0, 1], 0 beyond.
    static mu_reach_profile semicircle();
};

struct chazal_result {
    bool applicable;
    double best_margin;  ///< sup over mu of (r_mu - 3 d_H - 4 d_H / mu^2)
};

struct attali_result {
    bool applicable;
    double sup_threshold;  ///< sup over mu in (0,1] of lambda_cech(mu) r_mu
};

/// True iff some mu > 0 admits an offset radius alpha, i.e.
/// 4 d_H / mu^2 < r_mu(mu) - 3 d_H. For a step profile the per-piece
/// optimum sits at the right edge of the piece.
chazal_result chazal_feasible(double d_h, const mu_reach_profile& profile);

/// The Cech threshold function on (0, 1] (closed form; increasing there).
double lambda_cech(double mu);

/// True iff some mu in (0, 1] has d_H < lambda_cech(mu) * r_mu(mu), strict.
attali_result attali_cech_feasible(double d_h, const mu_reach_profile& profile);

/// True iff eps < delta/2 and d_H < eps/2 (both strict).
bool ours_feasible(const manifold& m, double d_h, double eps);

struct criteria_report {
    double d_h;
    bool ours_applicable;
    double ours_eps;
    double ours_delta;
    chazal_result chazal;
    attali_result attali_cech;
    /// false when dominated (Cech infeasible implies Rips infeasible);
    /// unset when the Cech bound is feasible and the Rips case is undetermined.
    std::optional<bool> attali_rips_applicable;

    std::string to_text() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

/// Runs all three tests on one dataset; d_H is measured as the one-sided
/// sup distance from a covering mesh of resolution mesh_h to the cloud
/// (the cloud lies on the manifold, so the other side vanishes).
criteria_report compare_all(const manifold& m, const point_cloud& cloud,
                            double eps, const mu_reach_profile& profile,
                            double mesh_h);

} // namespace btda
