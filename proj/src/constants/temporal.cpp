#include "wz/constants.hpp"

#include <algorithm>
#include <cmath>

namespace wz::constants {

namespace {

// Square-root substitutions t = y^2 remove the corner singularities of 1/sqrt(st+tu+su).
double nested3(const quad::Fn& rb, double R, double epsrel, bool second) {
    double sR = std::sqrt(R);
    auto outer = [&](double y) {
        double t = y * y;
        double shi = second ? std::sqrt(t + R) : std::sqrt(std::max(0.0, R - t));
        double uhi = std::sqrt(std::max(0.0, R - t));
        if (shi == 0 || uhi == 0) return 0.0;
        auto middle = [&](double w) {
            double s = w * w;
            double fs = second ? rb(t - s) : rb(t + s);
            if (fs == 0) return 0.0;
            auto inner = [&](double v) {
                double u = v * v;
                double q = s * t + t * u + s * u;
                if (!(q > 0)) return 0.0;
                return 8 * y * w * v * fs * rb(t + u) / std::sqrt(q);
            };
            return quad::adaptive(inner, 0, uhi, 1e-15, epsrel / 10).value;
        };
        return quad::adaptive(middle, 0, shi, 1e-15, epsrel / 3).value;
    };
    return quad::adaptive(outer, 0, sR, 1e-14, epsrel).value / (4 * M_PI);
}

}  // namespace

TemporalLimits temporal_reduced(const quad::Fn& rb, double R, double epsrel) {
    TemporalLimits L;
    double sR = std::sqrt(R);
    double s4pi = std::sqrt(4 * M_PI);
    L.c = quad::adaptive([&](double v) { return 2 * rb(v * v) / s4pi; }, 0, sR, 1e-14, epsrel)
              .value;
    L.c11 = nested3(rb, R, epsrel, false);
    L.c21 = nested3(rb, R, epsrel, true);

    // int_0^inf du rb(d+u) rb(u) / sqrt(u), with u = v^2
    auto loop = [&](double d) {
        double lo = std::max(0.0, -R - d), hi = std::min(R, R - d);
        if (!(hi > lo)) return 0.0;
        return quad::adaptive([&](double v) { return 2 * rb(d + v * v) * rb(v * v); },
                              std::sqrt(lo), std::sqrt(hi), 1e-15, epsrel / 10)
            .value;
    };
    double a12 = quad::adaptive([&](double y) { return 2 * y * y * loop(y * y); }, 0, sR, 1e-15,
                                epsrel / 3)
                     .value;
    double b12 = quad::adaptive([&](double y) { return 2 * y * y * rb(y * y); }, 0, sR, 1e-15,
                                epsrel / 3)
                     .value;
    L.c12 = (a12 - s4pi * L.c * b12) / (4 * M_PI);

    // c22 = -(1/4pi) int g(d) sqrt|d| dd with g = loop - sqrt(4 pi) c rb
    auto g = [&](double d) { return loop(d) - s4pi * L.c * rb(d); };
    double s2R = std::sqrt(2 * R);
    double neg = quad::adaptive([&](double y) { return 2 * y * y * g(-y * y); }, 0, s2R, 1e-15,
                                epsrel / 3)
                     .value;
    double pos = quad::adaptive([&](double y) { return 2 * y * y * g(y * y); }, 0, sR, 1e-15,
                                epsrel / 3)
                     .value;
    L.c22 = -(neg + pos) / (4 * M_PI);
    L.c1 = L.c11 + L.c12;
    L.c2 = L.c21 + L.c22;
    return L;
}

TemporalLimits temporal_reduced(const Rho2& r, double epsrel) {
    return temporal_reduced([&](double t) { return r.time_marginal(t); }, r.time_radius(), epsrel);
}

}  // namespace wz::constants
