#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wz::quad {

struct Result {
    double value = 0;
    double error = 0;
};

class ToleranceNotMet : public std::runtime_error {
public:
    ToleranceNotMet(const std::string& what, double best, double error)
        : std::runtime_error(what), best(best), error(error) {}
    double best;
    double error;
};

using Fn = std::function<double(double)>;

// Adaptive Gauss-Kronrod on [a,b] with endpoint-singularity extrapolation.
// Throws ToleranceNotMet when the requested accuracy is not reached.
Result adaptive(const Fn& f, double a, double b, double epsabs, double epsrel = 0,
                std::size_t limit = 1000);
// Same with interior break points.
Result adaptive_breaks(const Fn& f, double a, double b, std::vector<double> breaks,
                       double epsabs, double epsrel = 0, std::size_t limit = 1000);
// Integral over the whole real line.
Result adaptive_infinite(const Fn& f, double epsabs, double epsrel = 0);

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

// n-point Gauss-Legendre nodes mapped to [a,b].
Rule gauss_legendre(std::size_t n, double a, double b);
// Composite Gauss-Legendre over consecutive break points.
Rule gauss_legendre_panels(std::size_t n, const std::vector<double>& breaks);
// n-point rule for E[f(Z)], Z standard normal.
const Rule& gauss_hermite_normal(std::size_t n);

double apply(const Rule& r, const Fn& f);

}  // namespace wz::quad
