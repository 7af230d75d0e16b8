#pragma once

#include "wz/quadrature.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace wz::constants {

// Compactly supported function on [-R, R], tabulated with cubic Hermite interpolation.
class Profile {
public:
    Profile() = default;
    static Profile from_function(std::string name, const quad::Fn& f, const quad::Fn& df,
                                 double radius, std::size_t cells = 4096);
    // psi(u) proportional to exp(-1/(1-u^2)) on (-1,1), unit mass.
    static Profile bump();
    // Indicator of [-w,w] averaged against a bump of radius eta; support radius w+eta.
    static Profile smoothed_box(double half_width = 0.6, double smoothing = 0.4);

    double operator()(double u) const;
    double derivative(double u) const;
    double radius() const { return radius_; }
    const std::string& name() const { return name_; }
    // Exact integral of the interpolant.
    double mass() const;
    // max |f(u) - f(-u)| over the tabulation nodes.
    double max_asymmetry() const;
    Profile self_convolution() const;

private:
    std::string name_;
    double radius_ = 0;
    double h_ = 0;
    std::vector<double> v_, d_;
};

// rho(t,x) = a^-1 T(t/a) b^-1 S(x/b) for time and space profiles T, S.
struct MollifierSpec {
    std::string name;
    Profile time;
    Profile space;
    double time_scale = 1;
    double space_scale = 1;

    static MollifierSpec tensor_bump();
    static MollifierSpec smoothed_box();
    // "tensor-bump" or "smoothed-box"; throws std::invalid_argument otherwise.
    static MollifierSpec by_name(const std::string& name);

    // rho -> delta^-1 rho(delta^-1 t, x)
    MollifierSpec spatial_squeeze(double delta) const;
    // rho -> delta^-1 rho(t, delta^-1 x)
    MollifierSpec temporal_squeeze(double delta) const;
    // rho -> eps^-3 rho(eps^-2 t, eps^-1 x)
    MollifierSpec parabolic(double eps) const;

    double operator()(double t, double x) const;
    double time_radius() const { return time_scale * time.radius(); }
    double space_radius() const { return space_scale * space.radius(); }
    double mass() const { return time.mass() * space.mass(); }
    bool even(double tol = 1e-12) const;
};

// rho * rho for a tensor mollifier: phi_a(t) phi_b(x).
struct Rho2 {
    Profile time;
    Profile space;
    double a = 1;
    double b = 1;

    double operator()(double t, double x) const { return time_factor(t) * space_factor(x); }
    double time_factor(double t) const { return time(t / a) / a; }
    double space_factor(double x) const { return space(x / b) / b; }
    // int rho2(t,x) dx
    double time_marginal(double t) const { return time_factor(t) * space.mass(); }
    double time_radius() const { return a * time.radius(); }
    double space_radius() const { return b * space.radius(); }
    double mass() const { return time.mass() * space.mass(); }
    // int P(tau, x - y) phi_b(y) dy; equals phi_b(x) at tau = 0.
    double heat_smoothed(double tau, double x) const;
};

Rho2 self_convolve(const MollifierSpec& rho);

// E g(center + sd Z) for Z standard normal, where g vanishes outside [lo, hi].
double gauss_expect(double sd, double center, const quad::Fn& g, double lo, double hi);

double heat_kernel(double t, double x);
double heat_pair_closed(double s, double t);
double heat_triple_closed(double s, double t, double u);
// int P_s(x) P_t(x) dx and int P_s P_t P_u dx by adaptive quadrature.
quad::Result heat_pair_quadrature(double s, double t);
quad::Result heat_triple_quadrature(double s, double t, double u);

// c = int P rho2 over t > 0.
quad::Result compute_c(const Rho2& r, double epsabs = 1e-6);
// One-dimensional analogue with P replaced by the Heaviside function.
quad::Result compute_c_heaviside(const Rho2& r);
// int_0^inf rho2(t,0) dt
double spatial_limit_c(const Rho2& r);
// int_0^inf rhobar(t) / sqrt(4 pi t) dt
double temporal_limit_c(const Rho2& r);

// (P * Q)(t,x) with Q = P rho2 - c delta.
double pq_value(const Rho2& r, double c, double t, double x);
// int P rho2 (y^2/2 - s); leading coefficient of P*Q ~ m dP/dt at large scales.
double pq_moment(const Rho2& r);

struct PQPoint {
    double t, x, value;
};

struct PQTable {
    std::vector<double> radius;   // parabolic |z| = |x| + sqrt(t)
    std::vector<double> max_abs;  // max |P*Q| over the sampled annulus
    std::vector<PQPoint> points;
    double C = 0;                 // |P*Q| <= C min(|z|^-1, |z|^-3) on the table
    double slope = 0;             // least-squares log-log slope on [fit_lo, fit_hi]
    double fit_lo = 4;
    double fit_hi = 20;
};

PQTable pq_table(const Rho2& r, double c, std::size_t radii = 40, std::size_t angles = 16,
                 double r_min = 0.05, double r_max = 20);

// int over [0,T] x R of P*Q, which tends to -int P rho2 s as T grows.
double pq_slab_integral(const Rho2& r, double c, double T);

struct Estimate {
    double value = 0;
    double stderr_ = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool converged = true;
};

struct MCBudget {
    double target_rel_err = 0.02;
    std::size_t batch_size = 4096;
    std::size_t min_batches = 32;
    std::size_t max_batches = 4096;
    std::size_t round = 16;
    unsigned threads = 1;
};

using Rng = std::mt19937_64;

// Integrand over a box of time variables; spatial variables are drawn inside.
struct SlabIntegrand {
    std::array<double, 3> box{1, 1, 1};
    std::function<double(const std::array<double, 3>& t, Rng& rng)> f;
};

// Deterministic seeding of batch k of stream s.
std::uint64_t batch_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t batch);

// Uniform proposal on the box; estimate = volume * mean(f) with batch-means stderr.
// The relative error target is measured against |estimate - shift|.
Estimate mc_integrate(const SlabIntegrand& g, std::uint64_t seed, std::uint64_t stream,
                      const MCBudget& budget, double shift = 0);

SlabIntegrand c11_integrand(const Rho2& r);
SlabIntegrand c21_integrand(const Rho2& r);
// First term of c12: int P P P rho2(z3) rho2(z1+z2+z3).
SlabIntegrand c12_first_integrand(const Rho2& r);
// Second term of c12 without the factor c: int P(z1) P(z2) rho2(z1+z2).
quad::Result c12_second_term(const Rho2& r);

// which in {11, 12, 21, 22}; c22 is deterministic and reports a quadrature error as stderr.
Estimate compute_cij(const Rho2& r, int which, double c, std::uint64_t seed,
                     const MCBudget& budget);
Estimate compute_c22(const Rho2& r, double c);

struct ConstantsResult {
    double c = 0;
    double c_err = 0;
    Estimate c11, c12, c21, c22;
    double c1 = 0;
    double c2 = 0;
    std::uint64_t seed = 0;
    bool converged() const {
        return c11.converged && c12.converged && c21.converged && c22.converged;
    }
};

ConstantsResult compute_constants(const MollifierSpec& rho, std::uint64_t seed,
                                  const MCBudget& budget);

std::vector<std::string> constants_csv_header();
std::vector<std::string> constants_csv_row(const ConstantsResult& r);

struct TemporalLimits {
    double c = 0;
    double c11 = 0, c12 = 0, c21 = 0, c22 = 0;
    double c1 = 0, c2 = 0;
};

// Limits of the constants when rho2 degenerates to rhobar(t) delta(x).
TemporalLimits temporal_reduced(const quad::Fn& rhobar, double radius, double epsrel = 1e-7);
TemporalLimits temporal_reduced(const Rho2& r, double epsrel = 1e-7);

}  // namespace wz::constants
