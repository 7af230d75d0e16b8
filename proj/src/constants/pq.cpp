#include "wz/constants.hpp"

#include <algorithm>
#include <cmath>

namespace wz::constants {

namespace {

// P*(P rho2)(t,x) / P(t,x) - c; the product of two heat kernels at a common point is a
// heat kernel times a Gaussian density in the intermediate position.
double pq_bracket(const Rho2& r, double c, double t, double x) {
    static const quad::Rule ref = quad::gauss_legendre(16, -1, 1);
    const int panels = 8;
    double Ra = r.time_radius(), s = 0;
    if (t <= Ra) {
        // s = t (1 - cos(pi th)) / 2 resolves both ends of [0, t]
        double half = 0.5 / panels;
        for (int k = 0; k < panels; ++k) {
            double mid = (2 * k + 1) * half;
            for (std::size_t i = 0; i < ref.x.size(); ++i) {
                double th = mid + half * ref.x[i];
                double u = 0.5 * t * (1 - std::cos(M_PI * th));
                double w = r.time_factor(u);
                if (w == 0) continue;
                double jac = 0.5 * t * M_PI * std::sin(M_PI * th);
                s += ref.w[i] * jac * w * r.heat_smoothed(u * (t - u) / t, x * u / t);
            }
        }
        return s * half - c;
    }
    // s = v^2 on [0, Ra]
    double half = 0.5 * std::sqrt(Ra) / panels;
    for (int k = 0; k < panels; ++k) {
        double mid = (2 * k + 1) * half;
        for (std::size_t i = 0; i < ref.x.size(); ++i) {
            double v = mid + half * ref.x[i];
            double u = v * v;
            double w = r.time_factor(u);
            if (w == 0) continue;
            s += ref.w[i] * 2 * v * w * r.heat_smoothed(u * (t - u) / t, x * u / t);
        }
    }
    return s * half - c;
}

// (rho2 * P)(t,x), integrated over the heat-kernel time tau = t - s = v^2
double smoothed_heat(const Rho2& r, double t, double x) {
    static const quad::Rule ref = quad::gauss_legendre(16, -1, 1);
    double Ra = r.time_radius();
    if (!(t > -Ra)) return 0;
    double lo = std::sqrt(std::max(0.0, t - Ra)), hi = std::sqrt(t + Ra);
    const int panels = 8;
    double half = 0.5 * (hi - lo) / panels, s = 0;
    for (int k = 0; k < panels; ++k) {
        double mid = lo + (2 * k + 1) * half;
        for (std::size_t i = 0; i < ref.x.size(); ++i) {
            double v = mid + half * ref.x[i];
            double w = r.time_factor(t - v * v);
            if (w == 0) continue;
            s += ref.w[i] * 2 * v * w * r.heat_smoothed(v * v, x);
        }
    }
    return s * half;
}

struct TimeNode {
    double t, w;
};

// Nodes for int_0^T dt: sqrt substitution on [0, Ra], then doubling panels.
std::vector<TimeNode> time_nodes(double Ra, double T, std::vector<double>* breaks) {
    static const quad::Rule ref = quad::gauss_legendre(16, -1, 1);
    std::vector<TimeNode> out;
    auto panel = [&](double lo, double hi, bool sqrt_sub) {
        double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        for (std::size_t i = 0; i < ref.x.size(); ++i) {
            double u = mid + half * ref.x[i];
            if (sqrt_sub)
                out.push_back({u * u, ref.w[i] * half * 2 * u});
            else
                out.push_back({u, ref.w[i] * half});
        }
    };
    double sr = std::sqrt(Ra);
    for (int k = 0; k < 4; ++k) panel(sr * k / 4, sr * (k + 1) / 4, true);
    if (breaks) breaks->push_back(out.size());
    double lo = Ra;
    while (lo < T) {
        double hi = std::min(2 * lo, T);
        panel(lo, hi, false);
        lo = hi;
        if (breaks) breaks->push_back(out.size());
    }
    return out;
}

// Nodes for int dx P(t,x) f(x) with f even: panels on [0, 9 sqrt(2t)] that double in width
// away from the mollifier scale, so kinks of width b at x = 0 are resolved.
std::vector<TimeNode> space_nodes(double t, double Rb) {
    static const quad::Rule ref = quad::gauss_legendre(16, -1, 1);
    std::vector<TimeNode> out;
    double L = 9 * std::sqrt(2 * t);
    std::vector<double> br{0};
    double step = Rb / 2;
    while (br.back() + step < L) {
        br.push_back(br.back() + step);
        if (br.back() >= Rb) step *= 2;
    }
    br.push_back(L);
    for (std::size_t k = 0; k + 1 < br.size(); ++k) {
        double half = 0.5 * (br[k + 1] - br[k]), mid = 0.5 * (br[k + 1] + br[k]);
        for (std::size_t i = 0; i < ref.x.size(); ++i) {
            double x = mid + half * ref.x[i];
            out.push_back({x, 2 * ref.w[i] * half * heat_kernel(t, x)});
        }
    }
    return out;
}

}  // namespace

double pq_value(const Rho2& r, double c, double t, double x) {
    if (!(t > 0)) return 0;
    return heat_kernel(t, x) * pq_bracket(r, c, t, x);
}

double pq_moment(const Rho2& r) {
    double Rb = r.space_radius();
    auto f = [&](double s) {
        double w = r.time_factor(s);
        if (w == 0) return 0.0;
        double sd = std::sqrt(2 * s);
        double second = gauss_expect(sd, 0, [&](double y) { return 0.5 * y * y * r.space_factor(y); },
                                     -Rb, Rb);
        return w * (second - s * r.heat_smoothed(s, 0));
    };
    return quad::adaptive(f, 0, r.time_radius(), 1e-13).value;
}

PQTable pq_table(const Rho2& r, double c, std::size_t radii, std::size_t angles, double r_min,
                 double r_max) {
    PQTable tab;
    for (std::size_t k = 0; k < radii; ++k) {
        double rad = r_min * std::pow(r_max / r_min, double(k) / (radii - 1));
        double m = 0;
        for (std::size_t j = 1; j <= angles; ++j) {
            double th = double(j) / angles;
            double t = rad * th * rad * th, x = rad * (1 - th);
            double v = pq_value(r, c, t, x);
            tab.points.push_back({t, x, v});
            m = std::max(m, std::fabs(v));
        }
        tab.radius.push_back(rad);
        tab.max_abs.push_back(m);
        tab.C = std::max(tab.C, m / std::min(1 / rad, 1 / (rad * rad * rad)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t k = 0; k < radii; ++k) {
        double rad = tab.radius[k];
        if (rad < tab.fit_lo * (1 - 1e-12) || rad > tab.fit_hi * (1 + 1e-12)) continue;
        if (!(tab.max_abs[k] > 0)) continue;
        double lx = std::log(rad), ly = std::log(tab.max_abs[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n >= 2) tab.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return tab;
}

double pq_slab_integral(const Rho2& r, double c, double T) {
    double s = 0;
    for (const TimeNode& n : time_nodes(r.time_radius(), T, nullptr)) {
        double inner = 0;
        for (const TimeNode& x : space_nodes(n.t, r.space_radius()))
            inner += x.w * pq_bracket(r, c, n.t, x.t);
        s += n.w * inner;
    }
    return s;
}

Estimate compute_c22(const Rho2& r, double c) {
    // c22 = int (P*Q)(z) (rho2*P)(z) dz
    double Ra = r.time_radius(), Rb = r.space_radius();
    double L = std::max(Ra, Rb * Rb);
    double T = Ra;
    while (T < 512 * L) T *= 2;
    std::vector<double> breaks;
    std::vector<TimeNode> nodes = time_nodes(Ra, T, &breaks);
    std::vector<double> partial{0};
    double s = 0;
    std::size_t next = 0, evals = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        double t = nodes[k].t, inner = 0;
        for (const TimeNode& x : space_nodes(t, Rb)) {
            inner += x.w * pq_bracket(r, c, t, x.t) * smoothed_heat(r, t, x.t);
            ++evals;
        }
        s += nodes[k].w * inner;
        while (next < breaks.size() && k + 1 == breaks[next]) {
            partial.push_back(s);
            ++next;
        }
    }
    // beyond T the integrand is m dP/dt times P up to O(t^-5/2)
    double m = pq_moment(r);
    auto tail = [m](double T) { return -m / (2 * std::sqrt(8 * M_PI * T)); };
    double full = s + tail(T);
    double coarse = partial[partial.size() - 3] + tail(T / 4);
    Estimate e;
    e.value = full;
    e.stderr_ = std::fabs(full - coarse);
    e.samples = evals;
    return e;
}

}  // namespace wz::constants
