#include "wz/spde.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace wz::spde {

// Cyclic tridiagonal solve by Sherman-Morrison on top of a Thomas factorisation.
HeatStep::HeatStep(std::size_t N, double dt, double dx) : N_(N), r_(dt / (dx * dx)) {
    if (N < 3) throw std::invalid_argument("HeatStep: N must be at least 3");
    double a = -r_, b = 1 + 2 * r_, gamma = -b;
    std::vector<double> diag(N, b);
    diag[0] = b - gamma;
    diag[N - 1] = b - a * a / gamma;
    c_.assign(N, 0.0);
    d_.assign(N, 0.0);
    d_[0] = 1 / diag[0];
    c_[0] = a * d_[0];
    for (std::size_t i = 1; i < N; ++i) {
        d_[i] = 1 / (diag[i] - a * c_[i - 1]);
        c_[i] = a * d_[i];
    }
    v_ = a / gamma;
    z_.assign(N, 0.0);
    z_[0] = gamma;
    z_[N - 1] = a;
    auto thomas = [&](std::vector<double>& f) {
        f[0] *= d_[0];
        for (std::size_t i = 1; i < N; ++i) f[i] = (f[i] - a * f[i - 1]) * d_[i];
        for (std::size_t i = N - 1; i-- > 0;) f[i] -= c_[i] * f[i + 1];
    };
    thomas(z_);
    double fact = 1 / (1 + z_[0] + v_ * z_[N - 1]);
    for (double& z : z_) z *= fact;
}

void HeatStep::solve(std::vector<double>& f) const {
    const double a = -r_;
    f[0] *= d_[0];
    for (std::size_t i = 1; i < N_; ++i) f[i] = (f[i] - a * f[i - 1]) * d_[i];
    for (std::size_t i = N_ - 1; i-- > 0;) f[i] -= c_[i] * f[i + 1];
    double s = f[0] + v_ * f[N_ - 1];
    for (std::size_t i = 0; i < N_; ++i) f[i] -= s * z_[i];
}

double HeatStep::symbol(std::size_t k) const {
    double s = std::sin(M_PI * double(k) / double(N_));
    return 1 / (1 + 4 * r_ * s * s);
}

RegularizedScheme::RegularizedScheme(const SimConfig& cfg, const Field& xi)
    : cfg_(cfg), xi_(xi), heat_(cfg.N, cfg.dt, cfg.dx()), ceps_(cfg.constants.c / cfg.eps) {}

double RegularizedScheme::hbar(double u) const {
    const FunctionSpec& G = cfg_.G;
    double g = G(u), g1 = G.d1(u);
    return cfg_.H(u) - cfg_.constants.c1 * g1 * g1 * g1 * g -
           cfg_.constants.c2 * G.d2(u) * g1 * g * g;
}

void RegularizedScheme::step(std::vector<double>& u, std::size_t n) const {
    const double* xi = xi_.row(n);
    const double dt = cfg_.dt;
    for (std::size_t j = 0; j < u.size(); ++j) {
        double v = u[j], g = cfg_.G(v);
        u[j] = v + dt * (hbar(v) - ceps_ * cfg_.G.d1(v) * g + g * xi[j]);
    }
    heat_.solve(u);
}

ItoScheme::ItoScheme(const SimConfig& cfg, const NoiseRealization& noise)
    : cfg_(cfg), noise_(noise), heat_(cfg.N, cfg.dt, cfg.dx()) {}

void ItoScheme::step(std::vector<double>& u, std::size_t n) const {
    const double* dW = noise_.row(long(n));
    const double dt = cfg_.dt, idx = 1 / cfg_.dx();
    for (std::size_t j = 0; j < u.size(); ++j) {
        double v = u[j];
        u[j] = v + dt * cfg_.H(v) + cfg_.G(v) * dW[j] * idx;
    }
    heat_.solve(u);
}

namespace {

std::size_t stride(const SimConfig& cfg) {
    std::size_t s = cfg.samples ? cfg.steps() / cfg.samples : cfg.steps();
    return s ? s : 1;
}

bool blown_up(const std::vector<double>& u, double threshold) {
    for (double v : u)
        if (!std::isfinite(v) || std::fabs(v) > threshold) return true;
    return false;
}

template <class Scheme>
Trajectory solve(const SimConfig& cfg, const Scheme& scheme) {
    Trajectory tr;
    std::vector<double> u = cfg.u0.on_grid(cfg.N);
    const std::size_t steps = cfg.steps(), every = stride(cfg);
    tr.times.push_back(0);
    tr.u.push_back(u);
    for (std::size_t n = 0; n < steps; ++n) {
        scheme.step(u, n);
        if (blown_up(u, cfg.blowup)) {
            tr.blowup = true;
            tr.blowup_time = double(n + 1) * cfg.dt;
            break;
        }
        if ((n + 1) % every == 0 || n + 1 == steps) {
            tr.times.push_back(double(n + 1) * cfg.dt);
            tr.u.push_back(u);
        }
    }
    return tr;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::fabs(a[j] - b[j]));
    return m;
}

}  // namespace

Trajectory solve_regularized(const SimConfig& cfg, const Field& xi) {
    cfg.validate();
    return solve(cfg, RegularizedScheme(cfg, xi));
}

Trajectory solve_ito(const SimConfig& cfg, const NoiseRealization& noise) {
    cfg.validate();
    return solve(cfg, ItoScheme(cfg, noise));
}

RunResult run_coupled(const SimConfig& cfg) { return run_coupled(cfg, sample_noise(cfg)); }

RunResult run_coupled(const SimConfig& cfg, const NoiseRealization& noise) {
    auto start = std::chrono::steady_clock::now();
    cfg.validate();
    if (noise.N != cfg.N || noise.steps != cfg.steps() || noise.window != cfg.window())
        throw std::invalid_argument("run_coupled: noise grid does not match config");
    Field xi = mollified_field(noise, wz::constants::MollifierSpec::by_name(cfg.mollifier), cfg.eps);
    RegularizedScheme reg(cfg, xi);
    ItoScheme ito(cfg, noise);

    RunResult res;
    res.config = cfg;
    std::vector<double> u = cfg.u0.on_grid(cfg.N), v = u;
    const std::size_t steps = cfg.steps(), every = stride(cfg);
    auto record = [&](double t) {
        res.regularized.times.push_back(t);
        res.regularized.u.push_back(u);
        res.ito.times.push_back(t);
        res.ito.u.push_back(v);
        res.slice_distance.push_back(sup_diff(u, v));
    };
    record(0);
    if (cfg.t0 <= 0) res.sup_distance = sup_diff(u, v);
    for (std::size_t n = 0; n < steps; ++n) {
        reg.step(u, n);
        ito.step(v, n);
        double t = double(n + 1) * cfg.dt;
        bool bu = blown_up(u, cfg.blowup), bv = blown_up(v, cfg.blowup);
        if (bu || bv) {
            res.blowup = true;
            res.regularized.blowup = bu;
            res.ito.blowup = bv;
            res.regularized.blowup_time = res.ito.blowup_time = t;
            break;
        }
        if (t >= cfg.t0 - 1e-12) res.sup_distance = std::max(res.sup_distance, sup_diff(u, v));
        if ((n + 1) % every == 0 || n + 1 == steps) record(t);
    }
    res.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

HopfColeReport hopf_cole_study(const SimConfig& cfg) {
    cfg.validate();
    if (cfg.G.kind != FunctionSpec::Kind::linear || cfg.G.a != 1 ||
        cfg.H.kind != FunctionSpec::Kind::zero)
        throw std::invalid_argument("hopf_cole_study: requires G = linear(1) and H = zero");
    std::vector<double> u = cfg.u0.on_grid(cfg.N);
    for (double x : u)
        if (!(x > 0)) throw std::invalid_argument("hopf_cole_study: initial condition must be positive");
    NoiseRealization noise = sample_noise(cfg);
    Field xi = mollified_field(noise, wz::constants::MollifierSpec::by_name(cfg.mollifier), cfg.eps);
    RegularizedScheme reg(cfg, xi);
    ItoScheme ito(cfg, noise);
    HeatStep heat(cfg.N, cfg.dt, cfg.dx());

    const std::size_t N = cfg.N, steps = cfg.steps();
    const double dt = cfg.dt, h = 1 / (2 * cfg.dx());
    const double drift = cfg.constants.c1 + reg.c_eps();
    std::vector<double> v = u, z(N), grad(N);
    for (std::size_t j = 0; j < N; ++j) z[j] = std::log(u[j]);

    HopfColeReport rep;
    auto compare = [&]() {
        for (std::size_t j = 0; j < N; ++j) {
            double lu = std::log(u[j]);
            rep.z_vs_kpz = std::max(rep.z_vs_kpz, std::fabs(lu - z[j]));
            rep.z_vs_ito = std::max(rep.z_vs_ito, std::fabs(lu - std::log(v[j])));
        }
    };
    if (cfg.t0 <= 0) compare();
    for (std::size_t n = 0; n < steps; ++n) {
        const double* xr = xi.row(n);
        for (std::size_t j = 0; j < N; ++j) {
            double d = (z[(j + 1) % N] - z[(j + N - 1) % N]) * h;
            grad[j] = d * d;
        }
        for (std::size_t j = 0; j < N; ++j) z[j] += dt * (grad[j] - drift + xr[j]);
        heat.solve(z);
        reg.step(u, n);
        ito.step(v, n);
        for (std::size_t j = 0; j < N; ++j)
            if (!(u[j] > 0) || !(v[j] > 0)) {
                rep.positivity_lost = true;
                return rep;
            }
        if (double(n + 1) * dt >= cfg.t0 - 1e-12) compare();
    }
    return rep;
}

}  // namespace wz::spde
