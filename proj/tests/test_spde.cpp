#include "doctest.h"

#include "wz/spde.hpp"

#include <cmath>
#include <complex>
#include <numeric>

using namespace wz::spde;
using wz::constants::MollifierSpec;

namespace {

SimConfig small_config(double eps, double T, std::uint64_t seed) {
    SimConfig c = SimConfig::defaults(eps, T);
    c.seed = seed;
    c.t0 = 0;
    return c;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::fabs(a[j] - b[j]));
    return m;
}

}  // namespace

TEST_CASE("function catalog derivatives match finite differences") {
    std::vector<FunctionSpec> fs{FunctionSpec::zero(),
                                 FunctionSpec::constant(0.7),
                                 FunctionSpec::linear(1.3),
                                 FunctionSpec::affine(0.5, -2),
                                 FunctionSpec::tanh_saturating(1, 0.5),
                                 FunctionSpec::polynomial({1, -0.5, 0.25, 0.1}, 3)};
    const double h = 1e-5;
    for (const FunctionSpec& f : fs) {
        CHECK(function_kind(f.name()) == f.kind);
        for (double u : {-2.1, -0.3, 0.0, 0.8, 2.4}) {
            CHECK(f.d1(u) == doctest::Approx((f(u + h) - f(u - h)) / (2 * h)).epsilon(1e-7));
            CHECK(f.d2(u) == doctest::Approx((f.d1(u + h) - f.d1(u - h)) / (2 * h)).epsilon(1e-6));
        }
    }
    FunctionSpec p = FunctionSpec::polynomial({0, 0, 1}, 2);
    CHECK(p(5) == 4);
    CHECK(p.d1(5) == 0);
    CHECK(p(1.5) == doctest::Approx(2.25));
    CHECK_THROWS_AS(function_kind("cubic"), std::invalid_argument);
    CHECK_THROWS_AS(FunctionSpec::polynomial({1}, 0), std::invalid_argument);
}

TEST_CASE("default grids satisfy the invariants") {
    for (double eps : {0.2, 0.1, 0.05, 0.03}) {
        SimConfig c = SimConfig::defaults(eps);
        CHECK_NOTHROW(c.validate());
        CHECK(c.dx() <= eps / 8 * (1 + 1e-12));
        CHECK(c.dt <= c.dx() * c.dx() / 4 * (1 + 1e-12));
        CHECK(double(c.N) * c.dx() == doctest::Approx(1.0));
        CHECK(double(c.steps()) * c.dt == doctest::Approx(c.T));
        DiscreteMollifier m = discrete_mollifier(MollifierSpec::tensor_bump(), eps, c.dt, c.dx());
        CHECK(2 * m.K + 1 >= 16);
    }
    SimConfig c = SimConfig::defaults(0.1);
    SimConfig bad = c;
    bad.eps = 0.3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.N = 40;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.dt *= 2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.T = c.T + c.dt / 3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("noise: determinism, moments, total mass") {
    SimConfig c = SimConfig::defaults(0.0625, 0.01);
    c.N = 128;
    c.dt = 1e-5;
    c.t0 = 0;
    c.seed = 11;
    NoiseRealization a = sample_noise(c), b = sample_noise(c);
    CHECK(a.dW == b.dW);
    c.seed = 12;
    CHECK(sample_noise(c).dW != a.dW);
    CHECK(a.rows() == a.steps + 2 * a.window + 1);

    double n = double(a.dW.size()), mean = 0, var = 0, s2 = a.dt * a.dx;
    for (double v : a.dW) mean += v;
    mean /= n;
    for (double v : a.dW) var += (v - mean) * (v - mean);
    var /= n - 1;
    CHECK(std::fabs(mean) < 5 * std::sqrt(s2 / n));
    CHECK(std::fabs(var - s2) < 5 * s2 * std::sqrt(2 / n));

    // sum over [0,T] x S^1 is N(0, T)
    SimConfig s = small_config(0.2, 0.05, 0);
    const int seeds = 200;
    std::vector<double> tot;
    for (int k = 0; k < seeds; ++k) {
        s.seed = 1000 + k;
        NoiseRealization w = sample_noise(s);
        double t = 0;
        for (std::size_t r = 0; r < w.steps; ++r)
            for (std::size_t j = 0; j < w.N; ++j) t += w.row(long(r))[j];
        tot.push_back(t / std::sqrt(s.T));
    }
    double m1 = 0, m2 = 0, m3 = 0, m4 = 0;
    for (double v : tot) m1 += v / seeds;
    for (double v : tot) {
        double d = v - m1;
        m2 += d * d / seeds;
        m3 += d * d * d / seeds;
        m4 += d * d * d * d / seeds;
    }
    CHECK(std::fabs(m1) < 5 / std::sqrt(double(seeds)));
    CHECK(std::fabs(m2 - 1) < 5 * std::sqrt(2.0 / seeds));
    CHECK(std::fabs(m3 / std::pow(m2, 1.5)) < 5 * std::sqrt(6.0 / seeds));
    CHECK(std::fabs(m4 / (m2 * m2) - 3) < 5 * std::sqrt(24.0 / seeds));
}

TEST_CASE("noise coarsening preserves block sums") {
    SimConfig f = small_config(0.1, 0.01, 3);
    f.N = 160;
    f.dt /= 4;
    NoiseRealization w = sample_noise(f);
    NoiseRealization c = w.coarsen(2, 4);
    CHECK(c.N == 80);
    CHECK(c.window * 4 == w.window);
    CHECK(c.rows() == c.steps + 2 * c.window + 1);
    double a = std::accumulate(w.dW.begin(), w.dW.end(), 0.0);
    double b = std::accumulate(c.dW.begin(), c.dW.end(), 0.0);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    CHECK(c.row(0)[5] == doctest::Approx(w.row(0)[10] + w.row(0)[11] + w.row(1)[10] + w.row(1)[11] +
                                         w.row(2)[10] + w.row(2)[11] + w.row(3)[10] + w.row(3)[11]));
    CHECK(w.coarsen(1, 1).dW == w.dW);
    CHECK_THROWS_AS(w.coarsen(3, 4), std::invalid_argument);
}

TEST_CASE("discrete mollifier mass and point-mass response") {
    for (double eps : {0.2, 0.1, 0.05}) {
        SimConfig c = SimConfig::defaults(eps);
        DiscreteMollifier m = discrete_mollifier(MollifierSpec::tensor_bump(), eps, c.dt, c.dx());
        double st = 0, sx = 0;
        for (double v : m.time) st += v * c.dt;
        for (double v : m.space) sx += v * c.dx();
        CHECK(std::fabs(st * sx - 1) < 1e-6);
        CHECK(std::fabs(m.raw_mass - 1) < 1e-3);
    }
    // single unit increment at the origin
    double eps = 0.2;
    SimConfig c = small_config(eps, 0.08, 0);
    NoiseRealization w = sample_noise(c);
    std::fill(w.dW.begin(), w.dW.end(), 0.0);
    w.dW[w.window * w.N] = 1;
    Field f = mollified_field(w, MollifierSpec::tensor_bump(), eps);
    MollifierSpec r = MollifierSpec::tensor_bump().parabolic(eps);
    DiscreteMollifier m = discrete_mollifier(MollifierSpec::tensor_bump(), eps, c.dt, c.dx());
    double worst = 0, peak = r(0, 0);
    for (std::size_t n = 0; n <= f.steps; ++n)
        for (std::size_t j = 0; j < f.N; ++j) {
            double x = double(j) * c.dx();
            if (x > 0.5) x -= 1;
            double exact = r(double(n) * c.dt, x) / m.raw_mass;
            worst = std::max(worst, std::fabs(f.row(n)[j] - exact));
        }
    CHECK(worst < 1e-10 * peak);
}

TEST_CASE("mollified field covariance matches rho2") {
    double eps = 0.2;
    SimConfig c = small_config(eps, 0.04, 0);
    wz::constants::Rho2 r2 = wz::constants::self_convolve(MollifierSpec::tensor_bump().parabolic(eps));
    double v0 = 0, v2 = 0, cnt = 0;
    for (int k = 0; k < 500; ++k) {
        c.seed = 5000 + k;
        Field f = mollified_field(sample_noise(c), MollifierSpec::tensor_bump(), eps);
        // sample a few well-separated points per realisation
        for (std::size_t n : {0ul, f.steps / 2, f.steps})
            for (std::size_t j = 0; j < f.N; j += 20) {
                double a = f.row(n)[j];
                v0 += a * a;
                v2 += a * f.row(n)[(j + 2) % f.N];
                cnt += 1;
            }
    }
    CHECK(v0 / cnt == doctest::Approx(r2(0, 0)).epsilon(0.05));
    CHECK(v2 / cnt == doctest::Approx(r2(0, 2 * c.dx())).epsilon(0.05));
}

TEST_CASE("implicit heat step: exact inverse, Fourier symbol, stability") {
    const std::size_t N = 37;
    double dt = 2e-4, dx = 1.0 / N, r = dt / (dx * dx);
    HeatStep h(N, dt, dx);
    std::vector<double> f(N), x;
    for (std::size_t j = 0; j < N; ++j) f[j] = std::sin(0.7 * j) + 0.1 * j;
    x = f;
    h.solve(x);
    for (std::size_t j = 0; j < N; ++j) {
        double ax = (1 + 2 * r) * x[j] - r * (x[(j + 1) % N] + x[(j + N - 1) % N]);
        CHECK(ax == doctest::Approx(f[j]).epsilon(1e-12));
    }
    for (std::size_t k = 0; k < N; ++k) {
        std::vector<double> m(N);
        for (std::size_t j = 0; j < N; ++j) m[j] = std::cos(2 * M_PI * double(k * j) / N);
        std::vector<double> y = m;
        h.solve(y);
        for (std::size_t j = 0; j < N; ++j) CHECK(y[j] == doctest::Approx(h.symbol(k) * m[j]).epsilon(1e-10));
        CHECK(h.symbol(k) <= 1.0);
        CHECK(h.symbol(k) > 0);
    }
    // second difference is symmetric negative semidefinite: <v, D2 v> = -sum (v_{j+1}-v_j)^2
    double q = 0, d = 0;
    for (std::size_t j = 0; j < N; ++j) {
        q += f[j] * (f[(j + 1) % N] - 2 * f[j] + f[(j + N - 1) % N]);
        d += (f[(j + 1) % N] - f[j]) * (f[(j + 1) % N] - f[j]);
    }
    CHECK(q == doctest::Approx(-d).epsilon(1e-12));
}

TEST_CASE("deterministic heat decay and mean conservation") {
    SimConfig c = small_config(0.1, 0.1, 1);
    c.u0.kind = InitialCondition::Kind::sine;
    NoiseRealization w = sample_noise(c);
    Trajectory tr = solve_ito(c, w);
    double err = 0;
    for (std::size_t k = 0; k < tr.times.size(); ++k)
        for (std::size_t j = 0; j < c.N; ++j) {
            double x = double(j) * c.dx();
            double exact = std::exp(-4 * M_PI * M_PI * tr.times[k]) * std::sin(2 * M_PI * x);
            err = std::max(err, std::fabs(tr.u[k][j] - exact));
        }
    CHECK(err <= 5 * (c.dt + c.dx() * c.dx()));

    // G = 0 makes the regularised and Ito schemes coincide
    Field xi = mollified_field(w, MollifierSpec::tensor_bump(), c.eps);
    Trajectory tr2 = solve_regularized(c, xi);
    REQUIRE(tr2.u.size() == tr.u.size());
    for (std::size_t k = 0; k < tr.u.size(); ++k) CHECK(tr2.u[k] == tr.u[k]);

    c.u0.offset = 0.3;
    std::vector<double> u = c.u0.on_grid(c.N);
    HeatStep h(c.N, c.dt, c.dx());
    double m0 = std::accumulate(u.begin(), u.end(), 0.0) / double(c.N), drift = 0;
    for (std::size_t n = 0; n < c.steps(); ++n) {
        h.solve(u);
        double m = std::accumulate(u.begin(), u.end(), 0.0) / double(c.N);
        drift = std::max(drift, std::fabs(m - m0) / double(n + 1));
    }
    CHECK(drift <= 1e-10);
}

TEST_CASE("renormalised drift reduces to H for constant G") {
    SimConfig c = small_config(0.1, 0.01, 2);
    c.H = FunctionSpec::affine(0.2, -1);
    c.G = FunctionSpec::constant(0.8);
    c.constants = {0.2, 0.05, 0.07};
    Field xi = mollified_field(sample_noise(c), MollifierSpec::tensor_bump(), c.eps);
    RegularizedScheme s(c, xi);
    for (double u : {-1.0, 0.0, 2.5}) CHECK(s.hbar(u) == c.H(u));
    CHECK(s.c_eps() == doctest::Approx(0.2 / 0.1));
    c.G = FunctionSpec::tanh_saturating(1, 0.5);
    RegularizedScheme t(c, xi);
    double u = 0.4, g = c.G(u), g1 = c.G.d1(u);
    CHECK(t.hbar(u) == doctest::Approx(c.H(u) - 0.05 * g1 * g1 * g1 * g - 0.07 * c.G.d2(u) * g1 * g * g));
}

TEST_CASE("linear G against a spectral implementation on the same time grid") {
    SimConfig c = small_config(0.1, 0.25, 4);
    c.G = FunctionSpec::linear(0.5);
    c.constants = {0.1991514, 0.00126, 0.00869};
    c.u0.kind = InitialCondition::Kind::sine;
    c.u0.offset = 1;
    c.u0.amplitude = 0.3;
    c.samples = 10;
    NoiseRealization w = sample_noise(c);
    Field xi = mollified_field(w, MollifierSpec::tensor_bump(), c.eps);
    Trajectory tr = solve_regularized(c, xi);

    // same update, diffusion applied through a naive DFT with the difference-operator symbol
    const std::size_t N = c.N;
    const double ceps = c.constants.c / c.eps, c1 = c.constants.c1, s = c.G.a;
    std::vector<double> u = c.u0.on_grid(N), lam(N);
    for (std::size_t k = 0; k < N; ++k) {
        double sn = std::sin(M_PI * double(k) / double(N));
        lam[k] = 1 / (1 + 4 * c.dt / (c.dx() * c.dx()) * sn * sn);
    }
    std::vector<std::complex<double>> tw(N), hat(N);
    for (std::size_t k = 0; k < N; ++k) tw[k] = std::polar(1.0, -2 * M_PI * double(k) / double(N));
    double worst = 0;
    std::size_t sample = 1, every = c.steps() / c.samples;
    for (std::size_t n = 0; n < c.steps(); ++n) {
        for (std::size_t j = 0; j < N; ++j)
            u[j] += c.dt * (-c1 * s * s * s * s * u[j] - ceps * s * s * u[j] + s * u[j] * xi.row(n)[j]);
        for (std::size_t k = 0; k < N; ++k) {
            std::complex<double> a = 0;
            for (std::size_t j = 0; j < N; ++j) a += u[j] * tw[(k * j) % N];
            hat[k] = a * lam[k];
        }
        for (std::size_t j = 0; j < N; ++j) {
            std::complex<double> a = 0;
            for (std::size_t k = 0; k < N; ++k) a += hat[k] * std::conj(tw[(k * j) % N]);
            u[j] = a.real() / double(N);
        }
        if ((n + 1) % every == 0) worst = std::max(worst, sup_diff(u, tr.u[sample++]));
    }
    CHECK(sample == tr.u.size());
    CHECK(worst < 1e-3);
}

TEST_CASE("Ito scheme: additive variance, linearity") {
    // Var u^n_j = sigma^2 dt/dx sum_{d=1}^n (1/N) sum_k lambda_k^{2d}
    SimConfig c = small_config(0.2, 0.05, 0);
    c.G = FunctionSpec::constant(0.7);
    c.samples = 1;
    const int seeds = 500;
    double acc = 0;
    for (int k = 0; k < seeds; ++k) {
        c.seed = 20000 + k;
        Trajectory tr = solve_ito(c, sample_noise(c));
        for (double v : tr.u.back()) acc += v * v;
    }
    double emp = acc / (seeds * double(c.N));
    HeatStep h(c.N, c.dt, c.dx());
    double oracle = 0;
    for (std::size_t k = 0; k < c.N; ++k) {
        double l2 = h.symbol(k) * h.symbol(k), p = 1;
        for (std::size_t d = 1; d <= c.steps(); ++d) {
            p *= l2;
            oracle += p;
        }
    }
    oracle *= c.G.a * c.G.a * c.dt / c.dx() / double(c.N);
    CHECK(emp == doctest::Approx(oracle).epsilon(0.05));

    SimConfig l = small_config(0.1, 0.05, 9);
    l.G = FunctionSpec::linear(0.8);
    l.samples = 1;
    NoiseRealization w = sample_noise(l);
    l.u0.kind = InitialCondition::Kind::sine;
    std::vector<double> a = solve_ito(l, w).u.back();
    SimConfig l2 = l;
    l2.u0 = InitialCondition{};
    l2.u0.kind = InitialCondition::Kind::samples;
    l2.u0.samples = {0.2, 1.0, -0.4, 0.6};
    std::vector<double> b = solve_ito(l2, w).u.back();
    SimConfig l3 = l;
    l3.u0 = InitialCondition{};
    l3.u0.kind = InitialCondition::Kind::samples;
    std::vector<double> sa = l.u0.on_grid(l.N), sb = l2.u0.on_grid(l.N);
    for (std::size_t j = 0; j < l.N; ++j) l3.u0.samples.push_back(sa[j] + sb[j]);
    std::vector<double> ab = solve_ito(l3, w).u.back();
    for (std::size_t j = 0; j < l.N; ++j) CHECK(ab[j] == doctest::Approx(a[j] + b[j]).epsilon(1e-10));
}

TEST_CASE("coupled runs are bit-reproducible and share one noise") {
    SimConfig c = small_config(0.1, 0.1, 77);
    c.G = FunctionSpec::tanh_saturating(1, 0.5);
    c.constants = {0.1991514, 0.00126, 0.00869};
    c.t0 = 0.05;
    RunResult a = run_coupled(c), b = run_coupled(c);
    CHECK(a.sup_distance == b.sup_distance);
    CHECK(a.regularized.u == b.regularized.u);
    CHECK(a.ito.u == b.ito.u);
    CHECK(a.regularized.times == a.ito.times);
    CHECK(a.slice_distance.size() == a.ito.times.size());
    for (double d : a.slice_distance) CHECK(d >= 0);

    NoiseRealization w = sample_noise(c);
    Field xi = mollified_field(w, MollifierSpec::by_name(c.mollifier), c.eps);
    CHECK(solve_regularized(c, xi).u == a.regularized.u);
    CHECK(solve_ito(c, w).u == a.ito.u);
    double tail = 0;
    for (std::size_t k = 0; k < a.ito.times.size(); ++k)
        if (a.ito.times[k] >= c.t0) tail = std::max(tail, a.slice_distance[k]);
    CHECK(a.sup_distance >= tail);
    c.seed = 78;
    CHECK(run_coupled(c).sup_distance != a.sup_distance);
}

TEST_CASE("blow-up is reported with a time stamp") {
    SimConfig c = small_config(0.2, 0.25, 1);
    c.H = FunctionSpec::affine(0, 100);
    c.u0.value = 1;
    RunResult r = run_coupled(c);
    CHECK(r.blowup);
    CHECK(r.ito.blowup_time > 0);
    CHECK(r.ito.blowup_time < c.T);
    CHECK(r.ito.blowup_time == doctest::Approx(std::log(1e6) / 100).epsilon(0.05));
}

TEST_CASE("discrete scheme constant matches c / eps") {
    // sum_{d>=1} dt sum_j [R^d]_{0j} rho2_disc(d dt, j dx) against the continuum c
    double c = wz::constants::compute_c(wz::constants::self_convolve(MollifierSpec::tensor_bump())).value;
    for (double eps : {0.2, 0.05}) {
        SimConfig s = SimConfig::defaults(eps);
        DiscreteMollifier m = discrete_mollifier(MollifierSpec::tensor_bump(), eps, s.dt, s.dx());
        const std::size_t N = s.N;
        std::vector<double> at(2 * m.M + 1, 0.0), ax(N, 0.0);
        for (std::size_t d = 0; d < at.size(); ++d)
            for (std::size_t i = 0; i + d < m.time.size(); ++i) at[d] += m.time[i] * m.time[i + d] * s.dt;
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t jj = std::min(j, N - j);
            for (std::size_t i = 0; i + jj < m.space.size(); ++i)
                ax[j] += m.space[i] * m.space[i + jj] * s.dx();
        }
        HeatStep h(N, s.dt, s.dx());
        std::vector<double> e(N, 0.0);
        e[0] = 1;
        double sum = 0;
        for (std::size_t d = 1; d < at.size(); ++d) {
            h.solve(e);
            sum += s.dt * at[d] * std::inner_product(e.begin(), e.end(), ax.begin(), 0.0);
        }
        CHECK(std::fabs(eps * sum / c - 1) < 1e-2);
    }
}

TEST_CASE("Hopf-Cole: log transform agrees with the KPZ-type scheme") {
    SimConfig c = small_config(0.1, 0.002, 3);
    c.G = FunctionSpec::linear(1);
    c.u0.value = 1;
    c.constants = {0.1991514, 0.00126, 0.00869};
    HopfColeReport r = hopf_cole_study(c);
    CHECK_FALSE(r.positivity_lost);
    CHECK(r.z_vs_kpz <= 10 * (c.dt + c.dx() * c.dx()) * c.T / c.dt);
    CHECK(r.z_vs_ito >= 0);

    SimConfig bad = c;
    bad.G = FunctionSpec::linear(2);
    CHECK_THROWS_AS(hopf_cole_study(bad), std::invalid_argument);
    bad = c;
    bad.u0.value = 0;
    CHECK_THROWS_AS(hopf_cole_study(bad), std::invalid_argument);
}

TEST_CASE("convergence study is independent of the thread count") {
    SimConfig base = SimConfig::defaults(0.2, 0.06);
    base.G = FunctionSpec::tanh_saturating(1, 0.5);
    base.constants = {0.1991514, 0.00126, 0.00869};
    base.t0 = 0.05;
    StudyTable a = convergence_study(base, {0.2, 0.1}, {1, 2, 3}, 1);
    StudyTable b = convergence_study(base, {0.2, 0.1}, {1, 2, 3}, 3);
    REQUIRE(a.rows.size() == 6);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].sup_err == b.rows[i].sup_err);
        CHECK(a.rows[i].eps == b.rows[i].eps);
        CHECK(a.rows[i].seed == b.rows[i].seed);
    }
    CHECK(a.median == b.median);
    CHECK(median({3, 1, 2}) == 2);
    CHECK(median({4, 1, 2, 3}) == 2.5);
}

TEST_CASE("grid refinement at fixed eps changes the sup-distance by less than 20%") {
    double eps = 0.1;
    std::vector<double> coarse, fine;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        SimConfig f = SimConfig::defaults(eps);
        f.N *= 2;
        f.dt /= 4;
        f.seed = seed;
        f.G = FunctionSpec::tanh_saturating(1, 0.5);
        f.constants = {0.1991514, 0.00126, 0.00869};
        NoiseRealization w = sample_noise(f);
        SimConfig c = f;
        c.N /= 2;
        c.dt *= 4;
        fine.push_back(run_coupled(f, w).sup_distance);
        coarse.push_back(run_coupled(c, w.coarsen(2, 4)).sup_distance);
    }
    double mc = median(coarse), mf = median(fine);
    CHECK(std::fabs(mf - mc) < 0.2 * mc);
}
