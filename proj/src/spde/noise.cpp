#include "wz/spde.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wz::spde {

SimConfig SimConfig::defaults(double eps, double T) {
    SimConfig c;
    c.eps = eps;
    c.T = T;
    c.N = std::size_t(std::ceil(8 / eps - 1e-9));
    double dtmax = c.dx() * c.dx() / 4;
    auto steps = std::size_t(std::ceil(T / dtmax - 1e-9));
    c.dt = T / double(steps);
    return c;
}

std::size_t SimConfig::steps() const { return std::size_t(std::llround(T / dt)); }

std::size_t SimConfig::window() const { return std::size_t(std::ceil(eps * eps / dt - 1e-9)); }

void SimConfig::validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument("invalid config: " + m); };
    if (!(eps > 0 && eps < 0.25)) fail("eps must lie in (0, 1/4)");
    if (N < 3) fail("N must be at least 3");
    if (dx() > eps / 8 * (1 + 1e-12)) fail("dx must not exceed eps/8");
    if (!(dt > 0) || dt > dx() * dx() / 4 * (1 + 1e-12)) fail("dt must lie in (0, dx^2/4]");
    if (!(T > 0) || std::fabs(double(steps()) * dt - T) > 1e-9 * T) fail("T must be a multiple of dt");
    if (t0 < 0 || t0 > T) fail("t0 must lie in [0, T]");
    if (!(blowup > 0)) fail("blowup threshold must be positive");
}

NoiseRealization sample_noise(const SimConfig& cfg) {
    cfg.validate();
    NoiseRealization w;
    w.N = cfg.N;
    w.steps = cfg.steps();
    w.window = cfg.window();
    w.dt = cfg.dt;
    w.dx = cfg.dx();
    w.seed = cfg.seed;
    std::seed_seq seq{std::uint32_t(cfg.seed), std::uint32_t(cfg.seed >> 32), std::uint32_t(w.N),
                      std::uint32_t(w.steps), std::uint32_t(w.window)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> nd(0, std::sqrt(w.dt * w.dx));
    w.dW.resize(w.rows() * w.N);
    for (double& v : w.dW) v = nd(rng);
    return w;
}

NoiseRealization NoiseRealization::coarsen(std::size_t fx, std::size_t ft) const {
    if (N % fx != 0 || steps % ft != 0 || window % ft != 0)
        throw std::invalid_argument("coarsen: block sizes must divide the grid");
    NoiseRealization c;
    c.N = N / fx;
    c.steps = steps / ft;
    c.window = window / ft;
    c.dt = dt * double(ft);
    c.dx = dx * double(fx);
    c.seed = seed;
    c.dW.assign(c.rows() * c.N, 0.0);
    // the final fine row maps onto the final coarse row on its own
    for (std::size_t r = 0; r < rows(); ++r) {
        std::size_t cr = std::min(r / ft, c.rows() - 1);
        for (std::size_t j = 0; j < N; ++j) c.dW[cr * c.N + j / fx] += dW[r * N + j];
    }
    return c;
}

DiscreteMollifier discrete_mollifier(const wz::constants::MollifierSpec& rho, double eps, double dt,
                                     double dx) {
    wz::constants::MollifierSpec r = rho.parabolic(eps);
    DiscreteMollifier m;
    m.M = long(std::floor(r.time_radius() / dt));
    m.K = long(std::floor(r.space_radius() / dx));
    double st = 0, sx = 0;
    for (long d = -m.M; d <= m.M; ++d) {
        double v = r.time(double(d) * dt / r.time_scale) / r.time_scale;
        m.time.push_back(v);
        st += v * dt;
    }
    for (long k = -m.K; k <= m.K; ++k) {
        double v = r.space(double(k) * dx / r.space_scale) / r.space_scale;
        m.space.push_back(v);
        sx += v * dx;
    }
    m.raw_mass = st * sx;
    for (double& v : m.time) v /= st;
    for (double& v : m.space) v /= sx;
    return m;
}

Field mollified_field(const NoiseRealization& noise, const DiscreteMollifier& rho) {
    const std::size_t N = noise.N;
    if (long(noise.window) < rho.M) throw std::invalid_argument("mollified_field: window too short");
    if (2 * rho.K + 1 > long(N)) throw std::invalid_argument("mollified_field: support exceeds circle");
    // spatial pass on every noise row
    std::vector<double> Y(noise.dW.size());
    for (std::size_t r = 0; r < noise.rows(); ++r) {
        const double* in = noise.dW.data() + r * N;
        double* out = Y.data() + r * N;
        for (std::size_t j = 0; j < N; ++j) {
            double s = 0;
            for (long k = -rho.K; k <= rho.K; ++k) {
                long idx = (long(j) - k) % long(N);
                if (idx < 0) idx += long(N);
                s += rho.space[std::size_t(k + rho.K)] * in[idx];
            }
            out[j] = s;
        }
    }
    Field f;
    f.N = N;
    f.steps = noise.steps;
    f.values.assign((noise.steps + 1) * N, 0.0);
    for (std::size_t n = 0; n <= noise.steps; ++n) {
        double* out = f.values.data() + n * N;
        for (long d = -rho.M; d <= rho.M; ++d) {
            double w = rho.time[std::size_t(d + rho.M)];
            if (w == 0) continue;
            const double* in = Y.data() + (long(n) - d + long(noise.window)) * long(N);
            for (std::size_t j = 0; j < N; ++j) out[j] += w * in[j];
        }
    }
    return f;
}

Field mollified_field(const NoiseRealization& noise, const wz::constants::MollifierSpec& rho,
                      double eps) {
    return mollified_field(noise, discrete_mollifier(rho, eps, noise.dt, noise.dx));
}

}  // namespace wz::spde
