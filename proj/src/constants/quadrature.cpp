#include "wz/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace wz::quad {

namespace {

double trampoline(double x, void* p) { return (*static_cast<const Fn*>(p))(x); }

struct Workspace {
    explicit Workspace(std::size_t n) : w(gsl_integration_workspace_alloc(n)) {}
    ~Workspace() { gsl_integration_workspace_free(w); }
    gsl_integration_workspace* w;
};

struct ErrorHandlerOff {
    ErrorHandlerOff() { gsl_set_error_handler_off(); }
};
const ErrorHandlerOff error_handler_off;

Result finish(int status, double value, double error, double epsabs, double epsrel) {
    if (status != GSL_SUCCESS) {
        double target = std::max(epsabs, epsrel * std::fabs(value));
        if (!(error <= 10 * target))
            throw ToleranceNotMet(std::string("quadrature: ") + gsl_strerror(status), value, error);
    }
    return {value, error};
}

}  // namespace

Result adaptive(const Fn& f, double a, double b, double epsabs, double epsrel, std::size_t limit) {
    if (a == b) return {};
    Workspace ws(limit);
    gsl_function g{&trampoline, const_cast<Fn*>(&f)};
    double v = 0, e = 0;
    int st = gsl_integration_qags(&g, a, b, epsabs, epsrel, limit, ws.w, &v, &e);
    return finish(st, v, e, epsabs, epsrel);
}

Result adaptive_breaks(const Fn& f, double a, double b, std::vector<double> breaks, double epsabs,
                       double epsrel, std::size_t limit) {
    if (a == b) return {};
    std::vector<double> pts{a};
    for (double p : breaks)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin() + 1, pts.end() - 1);
    if (pts.size() == 2) return adaptive(f, a, b, epsabs, epsrel, limit);
    Workspace ws(limit);
    gsl_function g{&trampoline, const_cast<Fn*>(&f)};
    double v = 0, e = 0;
    int st = gsl_integration_qagp(&g, pts.data(), pts.size(), epsabs, epsrel, limit, ws.w, &v, &e);
    return finish(st, v, e, epsabs, epsrel);
}

Result adaptive_infinite(const Fn& f, double epsabs, double epsrel) {
    Workspace ws(1000);
    gsl_function g{&trampoline, const_cast<Fn*>(&f)};
    double v = 0, e = 0;
    int st = gsl_integration_qagi(&g, epsabs, epsrel, 1000, ws.w, &v, &e);
    return finish(st, v, e, epsabs, epsrel);
}

Rule gauss_legendre(std::size_t n, double a, double b) {
    static std::mutex mu;
    static std::map<std::size_t, Rule> cache;
    Rule ref;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end()) {
            gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(n);
            Rule r;
            for (std::size_t i = 0; i < n; ++i) {
                double xi = 0, wi = 0;
                gsl_integration_glfixed_point(-1, 1, i, &xi, &wi, t);
                r.x.push_back(xi);
                r.w.push_back(wi);
            }
            gsl_integration_glfixed_table_free(t);
            it = cache.emplace(n, std::move(r)).first;
        }
        ref = it->second;
    }
    double h = 0.5 * (b - a), m = 0.5 * (a + b);
    for (std::size_t i = 0; i < n; ++i) {
        ref.x[i] = m + h * ref.x[i];
        ref.w[i] *= h;
    }
    return ref;
}

Rule gauss_legendre_panels(std::size_t n, const std::vector<double>& breaks) {
    Rule out;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        if (!(breaks[k + 1] > breaks[k])) continue;
        Rule r = gauss_legendre(n, breaks[k], breaks[k + 1]);
        out.x.insert(out.x.end(), r.x.begin(), r.x.end());
        out.w.insert(out.w.end(), r.w.begin(), r.w.end());
    }
    return out;
}

const Rule& gauss_hermite_normal(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<Rule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        // weight exp(-x^2/2), normalised to a probability measure
        gsl_integration_fixed_workspace* w =
            gsl_integration_fixed_alloc(gsl_integration_fixed_hermite, n, 0.0, 0.5, 0.0, 0.0);
        slot = std::make_unique<Rule>();
        const double* x = gsl_integration_fixed_nodes(w);
        const double* wt = gsl_integration_fixed_weights(w);
        double norm = std::sqrt(2 * M_PI);
        for (std::size_t i = 0; i < n; ++i) {
            slot->x.push_back(x[i]);
            slot->w.push_back(wt[i] / norm);
        }
        gsl_integration_fixed_free(w);
    }
    return *slot;
}

double apply(const Rule& r, const Fn& f) {
    double s = 0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(r.x[i]);
    return s;
}

}  // namespace wz::quad
