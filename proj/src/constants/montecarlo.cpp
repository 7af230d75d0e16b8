#include "wz/constants.hpp"

#include <atomic>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wz::constants {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double batch_mean(const SlabIntegrand& g, std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double vol = g.box[0] * g.box[1] * g.box[2];
    double s = 0;
    std::array<double, 3> t;
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < 3; ++k) t[k] = g.box[k] * unif(rng);
        s += g.f(t, rng);
    }
    return vol * s / n;
}

}  // namespace

std::uint64_t batch_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t batch) {
    return splitmix(splitmix(splitmix(master) ^ stream) + batch);
}

Estimate mc_integrate(const SlabIntegrand& g, std::uint64_t seed, std::uint64_t stream,
                      const MCBudget& budget, double shift) {
    if (budget.batch_size == 0 || budget.round == 0)
        throw std::invalid_argument("mc_integrate: empty batches");
    std::vector<double> means;
    Estimate e;
    e.seed = seed;
    unsigned threads = std::max(1u, budget.threads);
    for (;;) {
        std::size_t first = means.size();
        means.resize(first + budget.round);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t k; (k = next++) < budget.round;)
                means[first + k] =
                    batch_mean(g, batch_seed(seed, stream, first + k), budget.batch_size);
        };
        if (threads == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        double sum = 0;
        for (double m : means) sum += m;
        double mean = sum / means.size();
        double ss = 0;
        for (double m : means) ss += (m - mean) * (m - mean);
        double nb = means.size();
        e.value = mean;
        e.stderr_ = std::sqrt(ss / (nb - 1) / nb);
        e.samples = means.size() * budget.batch_size;
        bool enough = means.size() >= budget.min_batches &&
                      e.stderr_ <= budget.target_rel_err * std::fabs(mean - shift);
        if (enough) {
            e.converged = true;
            return e;
        }
        if (means.size() >= budget.max_batches) {
            e.converged = false;
            return e;
        }
    }
}

SlabIntegrand c11_integrand(const Rho2& r) {
    double Ra = r.time_radius();
    SlabIntegrand g;
    g.box = {Ra, Ra, Ra};
    g.f = [r](const std::array<double, 3>& t, Rng& rng) {
        double w = r.time_factor(t[0] + t[1]) * r.time_factor(t[1] + t[2]);
        std::normal_distribution<double> nd;
        double z = nd(rng);
        if (w == 0) return 0.0;
        double x2 = std::sqrt(2 * t[1]) * z;
        return w * r.heat_smoothed(t[0], x2) * r.heat_smoothed(t[2], x2);
    };
    return g;
}

SlabIntegrand c21_integrand(const Rho2& r) {
    double Ra = r.time_radius();
    SlabIntegrand g;
    g.box = {Ra, Ra, 2 * Ra};
    g.f = [r](const std::array<double, 3>& t, Rng& rng) {
        double w = r.time_factor(t[0] + t[1]) * r.time_factor(t[1] - t[2]);
        std::normal_distribution<double> nd;
        double z = nd(rng);
        if (w == 0) return 0.0;
        double x2 = std::sqrt(2 * t[1]) * z;
        return w * r.heat_smoothed(t[0], x2) * r.heat_smoothed(t[2], x2);
    };
    return g;
}

SlabIntegrand c12_first_integrand(const Rho2& r) {
    double Ra = r.time_radius();
    SlabIntegrand g;
    g.box = {Ra, Ra, Ra};
    g.f = [r](const std::array<double, 3>& t, Rng& rng) {
        double w = r.time_factor(t[2]) * r.time_factor(t[0] + t[1] + t[2]);
        std::normal_distribution<double> nd;
        double z = nd(rng);
        if (w == 0) return 0.0;
        double x3 = std::sqrt(2 * t[2]) * z;
        double f3 = r.space_factor(x3);
        if (f3 == 0) return 0.0;
        return w * f3 * r.heat_smoothed(t[0] + t[1], x3);
    };
    return g;
}

quad::Result c12_second_term(const Rho2& r) {
    // P*P(t,x) = t P(t,x)
    return quad::adaptive(
        [&](double s) { return s * r.time_factor(s) * r.heat_smoothed(s, 0); }, 0, r.time_radius(),
        1e-13);
}

Estimate compute_cij(const Rho2& r, int which, double c, std::uint64_t seed,
                     const MCBudget& budget) {
    switch (which) {
        case 11:
            return mc_integrate(c11_integrand(r), seed, 11, budget);
        case 21:
            return mc_integrate(c21_integrand(r), seed, 21, budget);
        case 12: {
            double b = c12_second_term(r).value;
            Estimate e = mc_integrate(c12_first_integrand(r), seed, 12, budget, c * b);
            e.value -= c * b;
            return e;
        }
        case 22:
            return compute_c22(r, c);
    }
    throw std::invalid_argument("compute_cij: which must be 11, 12, 21 or 22");
}

ConstantsResult compute_constants(const MollifierSpec& rho, std::uint64_t seed,
                                  const MCBudget& budget) {
    Rho2 r = self_convolve(rho);
    ConstantsResult out;
    out.seed = seed;
    quad::Result c = compute_c(r, 1e-9);
    out.c = c.value;
    out.c_err = c.error;
    out.c11 = compute_cij(r, 11, out.c, seed, budget);
    out.c12 = compute_cij(r, 12, out.c, seed, budget);
    out.c21 = compute_cij(r, 21, out.c, seed, budget);
    out.c22 = compute_cij(r, 22, out.c, seed, budget);
    out.c1 = out.c11.value + out.c12.value;
    out.c2 = out.c21.value + out.c22.value;
    return out;
}

std::vector<std::string> constants_csv_header() {
    return {"c",    "c11",  "c12",  "c21", "c22", "c1",  "c2",  "se11",      "se12",
            "se21", "se22", "n11",  "n12", "n21", "n22", "seed", "converged"};
}

std::vector<std::string> constants_csv_row(const ConstantsResult& r) {
    auto num = [](double v) {
        std::ostringstream os;
        os << std::setprecision(10) << v;
        return os.str();
    };
    return {num(r.c),
            num(r.c11.value),
            num(r.c12.value),
            num(r.c21.value),
            num(r.c22.value),
            num(r.c1),
            num(r.c2),
            num(r.c11.stderr_),
            num(r.c12.stderr_),
            num(r.c21.stderr_),
            num(r.c22.stderr_),
            std::to_string(r.c11.samples),
            std::to_string(r.c12.samples),
            std::to_string(r.c21.samples),
            std::to_string(r.c22.samples),
            std::to_string(r.seed),
            r.converged() ? "1" : "0"};
}

}  // namespace wz::constants
