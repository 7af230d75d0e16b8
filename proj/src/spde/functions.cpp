#include "wz/spde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wz::spde {

FunctionSpec FunctionSpec::zero() { return {}; }

FunctionSpec FunctionSpec::constant(double sigma) {
    FunctionSpec f;
    f.kind = Kind::constant;
    f.a = sigma;
    return f;
}

FunctionSpec FunctionSpec::linear(double sigma) {
    FunctionSpec f;
    f.kind = Kind::linear;
    f.a = sigma;
    return f;
}

FunctionSpec FunctionSpec::affine(double a, double b) {
    FunctionSpec f;
    f.kind = Kind::affine;
    f.a = a;
    f.b = b;
    return f;
}

FunctionSpec FunctionSpec::tanh_saturating(double a, double b) {
    FunctionSpec f;
    f.kind = Kind::tanh_saturating;
    f.a = a;
    f.b = b;
    return f;
}

FunctionSpec FunctionSpec::polynomial(std::vector<double> coeffs, double clip) {
    if (!(clip > 0)) throw std::invalid_argument("polynomial: clip must be positive");
    FunctionSpec f;
    f.kind = Kind::polynomial;
    f.coeffs = std::move(coeffs);
    f.clip = clip;
    return f;
}

namespace {

// k-th derivative of the polynomial at v
double poly_derivative(const std::vector<double>& c, double v, int k) {
    double s = 0;
    for (std::size_t n = c.size(); n-- > std::size_t(k);) {
        double f = 1;
        for (int i = 0; i < k; ++i) f *= double(n - i);
        s = s * v + c[n] * f;
    }
    return s;
}

}  // namespace

double FunctionSpec::operator()(double u) const {
    switch (kind) {
    case Kind::zero: return 0;
    case Kind::constant: return a;
    case Kind::linear: return a * u;
    case Kind::affine: return a + b * u;
    case Kind::tanh_saturating: return a + b * std::tanh(u);
    case Kind::polynomial: return poly_derivative(coeffs, std::clamp(u, -clip, clip), 0);
    }
    return 0;
}

double FunctionSpec::d1(double u) const {
    switch (kind) {
    case Kind::zero:
    case Kind::constant: return 0;
    case Kind::linear: return a;
    case Kind::affine: return b;
    case Kind::tanh_saturating: {
        double th = std::tanh(u);
        return b * (1 - th * th);
    }
    case Kind::polynomial:
        return std::fabs(u) < clip ? poly_derivative(coeffs, u, 1) : 0;
    }
    return 0;
}

double FunctionSpec::d2(double u) const {
    switch (kind) {
    case Kind::zero:
    case Kind::constant:
    case Kind::linear:
    case Kind::affine: return 0;
    case Kind::tanh_saturating: {
        double th = std::tanh(u);
        return -2 * b * th * (1 - th * th);
    }
    case Kind::polynomial:
        return std::fabs(u) < clip ? poly_derivative(coeffs, u, 2) : 0;
    }
    return 0;
}

bool FunctionSpec::bounded_derivative() const { return true; }

std::string FunctionSpec::name() const {
    switch (kind) {
    case Kind::zero: return "zero";
    case Kind::constant: return "constant";
    case Kind::linear: return "linear";
    case Kind::affine: return "affine";
    case Kind::tanh_saturating: return "tanh-saturating";
    case Kind::polynomial: return "polynomial";
    }
    return "";
}

FunctionSpec::Kind function_kind(const std::string& name) {
    if (name == "zero") return FunctionSpec::Kind::zero;
    if (name == "constant") return FunctionSpec::Kind::constant;
    if (name == "linear") return FunctionSpec::Kind::linear;
    if (name == "affine") return FunctionSpec::Kind::affine;
    if (name == "tanh-saturating") return FunctionSpec::Kind::tanh_saturating;
    if (name == "polynomial") return FunctionSpec::Kind::polynomial;
    throw std::invalid_argument("unknown function kind: " + name);
}

std::vector<double> InitialCondition::on_grid(std::size_t N) const {
    std::vector<double> u(N);
    for (std::size_t j = 0; j < N; ++j) {
        double x = double(j) / double(N);
        switch (kind) {
        case Kind::constant: u[j] = value; break;
        case Kind::sine: u[j] = offset + amplitude * std::sin(2 * M_PI * mode * x); break;
        case Kind::samples: {
            if (samples.empty()) throw std::invalid_argument("initial condition: no samples");
            double p = x * double(samples.size());
            std::size_t i = std::size_t(p);
            double f = p - double(i);
            u[j] = (1 - f) * samples[i % samples.size()] + f * samples[(i + 1) % samples.size()];
            break;
        }
        }
    }
    return u;
}

Constants constants_from(const wz::constants::ConstantsResult& r) { return {r.c, r.c1, r.c2}; }

}  // namespace wz::spde
