#include "wz/constants.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace wz::constants {

Profile Profile::from_function(std::string name, const quad::Fn& f, const quad::Fn& df,
                               double radius, std::size_t cells) {
    Profile p;
    p.name_ = std::move(name);
    p.radius_ = radius;
    p.h_ = 2 * radius / cells;
    p.v_.resize(cells + 1);
    p.d_.resize(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        double u = -radius + i * p.h_;
        if (i == 0 || i == cells) {
            p.v_[i] = 0;
            p.d_[i] = 0;
        } else {
            p.v_[i] = f(u);
            p.d_[i] = df(u);
        }
    }
    return p;
}

double Profile::operator()(double u) const {
    if (!(u > -radius_ && u < radius_)) return 0;
    double s = (u + radius_) / h_;
    std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(s), v_.size() - 2);
    double x = s - i;
    double x2 = x * x, x3 = x2 * x;
    return (2 * x3 - 3 * x2 + 1) * v_[i] + (x3 - 2 * x2 + x) * h_ * d_[i] +
           (-2 * x3 + 3 * x2) * v_[i + 1] + (x3 - x2) * h_ * d_[i + 1];
}

double Profile::derivative(double u) const {
    if (!(u > -radius_ && u < radius_)) return 0;
    double s = (u + radius_) / h_;
    std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(s), v_.size() - 2);
    double x = s - i;
    double x2 = x * x;
    return ((6 * x2 - 6 * x) * v_[i] + (-6 * x2 + 6 * x) * v_[i + 1]) / h_ +
           (3 * x2 - 4 * x + 1) * d_[i] + (3 * x2 - 2 * x) * d_[i + 1];
}

double Profile::mass() const {
    double s = 0;
    for (std::size_t i = 0; i + 1 < v_.size(); ++i)
        s += h_ * (v_[i] + v_[i + 1]) / 2 + h_ * h_ * (d_[i] - d_[i + 1]) / 12;
    return s;
}

double Profile::max_asymmetry() const {
    double m = 0;
    for (std::size_t i = 0, j = v_.size() - 1; i < j; ++i, --j)
        m = std::max(m, std::fabs(v_[i] - v_[j]));
    return m;
}

Profile Profile::self_convolution() const {
    const Profile& f = *this;
    double R = radius_;
    auto conv = [&f, R](double v, bool deriv) {
        double lo = std::max(-R, v - R), hi = std::min(R, v + R);
        if (!(hi > lo)) return 0.0;
        // four panels keep the rule accurate for profiles with steep flanks
        std::vector<double> br;
        for (int k = 0; k <= 4; ++k) br.push_back(lo + (hi - lo) * k / 4);
        quad::Rule rule = quad::gauss_legendre_panels(48, br);
        double s = 0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            double u = rule.x[i];
            s += rule.w[i] * f(u) * (deriv ? f.derivative(v - u) : f(v - u));
        }
        return s;
    };
    return from_function(
        name_ + "*" + name_, [&](double v) { return conv(v, false); },
        [&](double v) { return conv(v, true); }, 2 * R, v_.size() - 1);
}

namespace {

double bump_raw(double u) { return std::fabs(u) < 1 ? std::exp(-1 / (1 - u * u)) : 0.0; }

double bump_norm() {
    static const double z = quad::adaptive(bump_raw, -1, 1, 1e-15, 1e-14).value;
    return z;
}

}  // namespace

Profile Profile::bump() {
    double z = bump_norm();
    return from_function(
        "bump", [z](double u) { return bump_raw(u) / z; },
        [z](double u) {
            if (std::fabs(u) >= 1) return 0.0;
            double q = 1 - u * u;
            return bump_raw(u) / z * (-2 * u / (q * q));
        },
        1.0);
}

Profile Profile::smoothed_box(double half_width, double smoothing) {
    double z = bump_norm();
    double w = half_width, eta = smoothing;
    // cumulative distribution of the bump of radius eta
    auto cdf = [z, eta](double s) {
        double u = s / eta;
        if (u <= -1) return 0.0;
        if (u >= 1) return 1.0;
        return quad::adaptive(bump_raw, -1, u, 1e-15, 1e-13).value / z;
    };
    auto dens = [z, eta](double s) { return bump_raw(s / eta) / (z * eta); };
    return from_function(
        "smoothed-box", [=](double v) { return (cdf(v + w) - cdf(v - w)) / (2 * w); },
        [=](double v) { return (dens(v + w) - dens(v - w)) / (2 * w); }, w + eta);
}

MollifierSpec MollifierSpec::tensor_bump() {
    static const Profile p = Profile::bump();
    return {"tensor-bump", p, p, 1, 1};
}

MollifierSpec MollifierSpec::smoothed_box() {
    static const Profile p = Profile::smoothed_box();
    return {"smoothed-box", p, p, 1, 1};
}

MollifierSpec MollifierSpec::by_name(const std::string& name) {
    if (name == "tensor-bump") return tensor_bump();
    if (name == "smoothed-box") return smoothed_box();
    throw std::invalid_argument("unknown mollifier: " + name);
}

MollifierSpec MollifierSpec::spatial_squeeze(double delta) const {
    MollifierSpec m = *this;
    m.time_scale *= delta;
    return m;
}

MollifierSpec MollifierSpec::temporal_squeeze(double delta) const {
    MollifierSpec m = *this;
    m.space_scale *= delta;
    return m;
}

MollifierSpec MollifierSpec::parabolic(double eps) const {
    MollifierSpec m = *this;
    m.time_scale *= eps * eps;
    m.space_scale *= eps;
    return m;
}

double MollifierSpec::operator()(double t, double x) const {
    return time(t / time_scale) / time_scale * space(x / space_scale) / space_scale;
}

bool MollifierSpec::even(double tol) const { return space.max_asymmetry() <= tol; }

Rho2 self_convolve(const MollifierSpec& rho) {
    static std::mutex mu;
    static std::vector<std::pair<std::string, Profile>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto conv = [](const Profile& p) {
        for (auto& [k, v] : cache)
            if (k == p.name() && v.radius() == 2 * p.radius()) return v;
        Profile q = p.self_convolution();
        cache.emplace_back(p.name(), q);
        return q;
    };
    return {conv(rho.time), conv(rho.space), rho.time_scale, rho.space_scale};
}

double gauss_expect(double sd, double center, const quad::Fn& g, double lo, double hi) {
    if (!(sd > 0)) return g(center);
    double a = std::max(lo, center - 9 * sd), b = std::min(hi, center + 9 * sd);
    if (!(b > a)) return 0;
    double width = hi - lo;
    if (sd < 0.02 * width) {
        static const quad::Rule& h = quad::gauss_hermite_normal(48);
        double s = 0;
        for (std::size_t i = 0; i < h.x.size(); ++i) s += h.w[i] * g(center + sd * h.x[i]);
        return s;
    }
    static const quad::Rule ref = quad::gauss_legendre(12, -1, 1);
    double step = std::min(3 * sd, width / 8);
    int panels = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
    double half = 0.5 * (b - a) / panels;
    double s = 0, inv = 1 / sd;
    for (int k = 0; k < panels; ++k) {
        double mid = a + (2 * k + 1) * half;
        for (std::size_t i = 0; i < ref.x.size(); ++i) {
            double y = mid + half * ref.x[i];
            double z = (y - center) * inv;
            s += ref.w[i] * std::exp(-0.5 * z * z) * g(y);
        }
    }
    return s * half * inv / std::sqrt(2 * M_PI);
}

double Rho2::heat_smoothed(double tau, double x) const {
    double R = space_radius();
    if (!(tau > 0)) return space_factor(x);
    return gauss_expect(std::sqrt(2 * tau), x, [this](double y) { return space_factor(y); }, -R, R);
}

}  // namespace wz::constants
