#include "wz/spde.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace wz::spde {

double median(std::vector<double> v) {
    if (v.empty()) return std::nan("");
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

StudyTable convergence_study(const SimConfig& base, const std::vector<double>& eps_list,
                             const std::vector<std::uint64_t>& seeds, unsigned threads) {
    StudyTable tab;
    tab.eps = eps_list;
    std::vector<SimConfig> jobs;
    for (double eps : eps_list)
        for (std::uint64_t seed : seeds) {
            SimConfig c = SimConfig::defaults(eps, base.T);
            c.t0 = base.t0;
            c.seed = seed;
            c.H = base.H;
            c.G = base.G;
            c.constants = base.constants;
            c.mollifier = base.mollifier;
            c.u0 = base.u0;
            c.blowup = base.blowup;
            c.samples = base.samples;
            c.validate();
            jobs.push_back(c);
        }
    tab.rows.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex m;
    auto worker = [&]() {
        for (std::size_t i; (i = next++) < jobs.size();) {
            try {
                RunResult r = run_coupled(jobs[i]);
                const SimConfig& c = jobs[i];
                tab.rows[i] = {c.eps, c.seed, r.sup_distance, c.t0, c.T, c.N, c.dt, r.blowup};
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!err) err = std::current_exception();
            }
        }
    };
    unsigned nt = std::max(1u, std::min<unsigned>(threads, unsigned(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    for (double eps : eps_list) {
        std::vector<double> v;
        for (const StudyRow& r : tab.rows)
            if (r.eps == eps && !r.blowup) v.push_back(r.sup_err);
        tab.median.push_back(median(v));
    }
    return tab;
}

}  // namespace wz::spde
