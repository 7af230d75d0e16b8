#include "wz/constants.hpp"

#include <cmath>

namespace wz::constants {

double heat_kernel(double t, double x) {
    if (!(t > 0)) return 0;
    return std::exp(-x * x / (4 * t)) / std::sqrt(4 * M_PI * t);
}

double heat_pair_closed(double s, double t) { return 1 / std::sqrt(4 * M_PI * (s + t)); }

double heat_triple_closed(double s, double t, double u) {
    return 1 / (4 * M_PI * std::sqrt(s * t + t * u + s * u));
}

quad::Result heat_pair_quadrature(double s, double t) {
    return quad::adaptive_infinite(
        [=](double x) { return heat_kernel(s, x) * heat_kernel(t, x); }, 1e-13, 1e-12);
}

quad::Result heat_triple_quadrature(double s, double t, double u) {
    return quad::adaptive_infinite(
        [=](double x) { return heat_kernel(s, x) * heat_kernel(t, x) * heat_kernel(u, x); }, 1e-13,
        1e-12);
}

quad::Result compute_c(const Rho2& r, double epsabs) {
    double Ra = r.time_radius(), Rb = r.space_radius();
    double inner_tol = epsabs / 100;
    double inner_err = 0;
    // t = s^2 removes the 1/sqrt(t) singularity of the heat kernel
    auto outer = [&](double s) {
        double t = s * s;
        double w = r.time_factor(t);
        if (w == 0) return 0.0;
        quad::Result in = quad::adaptive_breaks(
            [&](double x) { return heat_kernel(t, x) * r.space_factor(x); }, -Rb, Rb, {0.0},
            inner_tol / (Ra * r.time_factor(0) + 1));
        inner_err = std::max(inner_err, in.error);
        return 2 * s * w * in.value;
    };
    quad::Result out = quad::adaptive(outer, 0, std::sqrt(Ra), epsabs / 2);
    out.error += inner_err * Ra * r.time_factor(0);
    if (out.error > epsabs)
        throw quad::ToleranceNotMet("compute_c: tolerance not met", out.value, out.error);
    return out;
}

quad::Result compute_c_heaviside(const Rho2& r) {
    return quad::adaptive([&](double t) { return r.time_factor(t); }, 0, r.time_radius(), 1e-12);
}

double spatial_limit_c(const Rho2& r) {
    return quad::adaptive([&](double t) { return r(t, 0); }, 0, r.time_radius(), 1e-12).value;
}

double temporal_limit_c(const Rho2& r) {
    return quad::adaptive(
               [&](double s) {
                   double t = s * s;
                   return 2 * r.time_marginal(t) / std::sqrt(4 * M_PI);
               },
               0, std::sqrt(r.time_radius()), 1e-12)
        .value;
}

}  // namespace wz::constants
