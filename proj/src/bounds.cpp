#include "btda/bounds.hpp"

#include "btda/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace btda {

namespace {

// ln of the generic cap-style lower-bound factor
//   cos^k(th) / 2^pow2 * I_{1 - e^2 cos^2 th / (4 delta^2 * quarter)}((k+1)/2, 1/2)
// shared by the three volume lower bounds and beta_fn.
double ln_bound_factor(int k, double cos_th, double ibeta) {
    return k * std::log(cos_th) + std::log(ibeta);
}

} // namespace

bound_params::bound_params(int k_, double vol_m_, double delta_)
    : k(k_), vol_m(vol_m_), delta(delta_) {
    if (k < 1) throw std::domain_error("bound_params: requires k >= 1");
    if (!(vol_m > 0.0)) throw std::domain_error("bound_params: requires vol_m > 0");
    if (!(delta > 0.0)) throw std::domain_error("bound_params: requires delta > 0");
}

double theta(double x, double delta) {
    if (!(x > 0.0)) throw std::domain_error("theta: requires x > 0");
    if (!(delta > 0.0)) throw std::domain_error("theta: requires delta > 0");
    const double s = x / (4.0 * delta);
    if (s > 1.0)
        throw std::domain_error("theta: requires x <= 4 delta (arcsin argument), got x=" +
                                std::to_string(x) + ", delta=" + std::to_string(delta));
    return std::asin(s);
}

double beta_fn(double x, const bound_params& p) {
    if (!(x > 0.0) || !(x < 2.0 * p.delta))
        throw std::domain_error("beta_fn: requires 0 < x < 2 delta, got x=" +
                                std::to_string(x));
    const double th = theta(x, p.delta);
    const double c = std::cos(th);
    const double arg = 1.0 - x * x * c * c / (16.0 * p.delta * p.delta);
    const double ix = reg_inc_beta(arg, 0.5 * (p.k + 1), 0.5);
    const double ln_denom = ln_bound_factor(p.k, c, ix) - (p.k + 1) * std::log(2.0) +
                            ln_ball_volume(p.k, x);
    const double ln_beta = std::log(p.vol_m) - ln_denom;
    if (ln_beta >= std::log(std::numeric_limits<double>::max()))
        throw std::overflow_error("beta_fn: value exceeds double range at x=" +
                                  std::to_string(x));
    return std::exp(ln_beta);
}

std::int64_t sample_size(const bound_query& q, const bound_params& p) {
    if (!(q.gamma > 0.0) || !(q.gamma < 1.0))
        throw std::domain_error("sample_size: requires 0 < gamma < 1");
    if (!(q.eps > 0.0) || !(q.eps < 0.5 * p.delta))
        throw std::domain_error("sample_size: requires 0 < eps < delta/2, got eps=" +
                                std::to_string(q.eps));
    const double value =
        beta_fn(q.eps, p) * (std::log(beta_fn(0.5 * q.eps, p)) - std::log(q.gamma));
    if (value >= 9.2e18)
        throw std::overflow_error("sample_size: bound exceeds integer range");
    // smallest integer strictly greater than the bound
    const double c = std::ceil(value);
    std::int64_t n = (c == value) ? static_cast<std::int64_t>(value) + 1
                                  : static_cast<std::int64_t>(c);
    return n < 1 ? 1 : n;
}

double vol_lower_bound_boundary(double eps, const bound_params& p) {
    if (!(eps > 0.0) || !(eps < p.delta))
        throw std::domain_error("vol_lower_bound_boundary: requires 0 < eps < delta");
    const double th = std::asin(eps / (2.0 * p.delta));
    const double c = std::cos(th);
    const double arg = 1.0 - eps * eps * c * c / (4.0 * p.delta * p.delta);
    const double ix = reg_inc_beta(arg, 0.5 * (p.k + 1), 0.5);
    return std::exp(ln_bound_factor(p.k, c, ix) - std::log(2.0) +
                    ln_ball_volume(p.k, eps));
}

double vol_lower_bound_interior(double eps, const bound_params& p) {
    if (!(eps > 0.0) || !(eps < p.delta))
        throw std::domain_error("vol_lower_bound_interior: requires 0 < eps < delta");
    const double th = std::asin(eps / (2.0 * p.delta));
    return std::exp(p.k * std::log(std::cos(th)) + ln_ball_volume(p.k, eps));
}

double vol_lower_bound(double eps, const bound_params& p) {
    if (!(eps > 0.0) || !(eps < p.delta))
        throw std::domain_error("vol_lower_bound: requires 0 < eps < delta");
    const double th = theta(eps, p.delta);
    const double c = std::cos(th);
    const double arg = 1.0 - eps * eps * c * c / (16.0 * p.delta * p.delta);
    const double ix = reg_inc_beta(arg, 0.5 * (p.k + 1), 0.5);
    return std::exp(ln_bound_factor(p.k, c, ix) - (p.k + 1) * std::log(2.0) +
                    ln_ball_volume(p.k, eps));
}

} // namespace btda
