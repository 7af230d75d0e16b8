#pragma once

#include "wz/constants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wz::spde {

// Scalar nonlinearity with closed-form first and second derivatives.
struct FunctionSpec {
    enum class Kind { zero, constant, linear, affine, tanh_saturating, polynomial };
    Kind kind = Kind::zero;
    // constant: a; linear: a u; affine: a + b u; tanh-saturating: a + b tanh(u)
    double a = 0;
    double b = 0;
    // polynomial: sum coeffs[k] v^k with v = clamp(u, -clip, clip)
    std::vector<double> coeffs;
    double clip = 0;

    static FunctionSpec zero();
    static FunctionSpec constant(double sigma);
    static FunctionSpec linear(double sigma);
    static FunctionSpec affine(double a, double b);
    static FunctionSpec tanh_saturating(double a, double b);
    static FunctionSpec polynomial(std::vector<double> coeffs, double clip);

    double operator()(double u) const;
    double d1(double u) const;
    double d2(double u) const;
    bool bounded_derivative() const;
    std::string name() const;
};

// "zero", "constant", "linear", "affine", "tanh-saturating", "polynomial"
FunctionSpec::Kind function_kind(const std::string& name);

struct InitialCondition {
    enum class Kind { constant, sine, samples };
    Kind kind = Kind::constant;
    double value = 0;
    // sine: offset + amplitude sin(2 pi mode x)
    double amplitude = 1;
    double offset = 0;
    int mode = 1;
    // samples: equispaced values on [0,1), interpolated linearly and periodically
    std::vector<double> samples;

    std::vector<double> on_grid(std::size_t N) const;
};

struct Constants {
    double c = 0;
    double c1 = 0;
    double c2 = 0;
};

Constants constants_from(const wz::constants::ConstantsResult& r);

struct SimConfig {
    double eps = 0.1;
    std::size_t N = 80;
    double dt = 0;
    double T = 0.25;
    double t0 = 0.05;
    std::uint64_t seed = 0;
    FunctionSpec H;
    FunctionSpec G;
    Constants constants;
    std::string mollifier = "tensor-bump";
    InitialCondition u0;
    double blowup = 1e6;
    std::size_t samples = 50;

    // N = ceil(8/eps), dt the largest value <= dx^2/4 dividing T.
    static SimConfig defaults(double eps, double T = 0.25);
    double dx() const { return 1.0 / double(N); }
    std::size_t steps() const;
    // Number of steps covering eps^2, the time radius of rho_eps.
    std::size_t window() const;
    // Throws std::invalid_argument on a violated grid invariant.
    void validate() const;
};

// Increments of the cylindrical Wiener process on cells [t_n, t_n+dt) x [x_j, x_j+dx),
// for n in [-window, steps + window].
struct NoiseRealization {
    std::size_t N = 0;
    std::size_t steps = 0;
    std::size_t window = 0;
    double dt = 0;
    double dx = 0;
    std::uint64_t seed = 0;
    std::vector<double> dW;

    std::size_t rows() const { return steps + 2 * window + 1; }
    const double* row(long n) const { return dW.data() + (n + long(window)) * N; }
    // Sums blocks of fx cells in space and ft cells in time.
    NoiseRealization coarsen(std::size_t fx, std::size_t ft) const;
};

// Deterministic in (seed, N, dt, steps, window).
NoiseRealization sample_noise(const SimConfig& cfg);

// rho_eps sampled on the grid as separable tap vectors, each normalised to unit mass.
struct DiscreteMollifier {
    std::vector<double> time;   // taps for offsets -M..M in units of dt
    std::vector<double> space;  // taps for offsets -K..K in units of dx
    long M = 0;
    long K = 0;
    double raw_mass = 0;  // sum rho_eps(grid) dt dx before normalisation
};

DiscreteMollifier discrete_mollifier(const wz::constants::MollifierSpec& rho, double eps, double dt,
                                     double dx);

// Grid function on times n = 0..steps and N periodic points.
struct Field {
    std::size_t N = 0;
    std::size_t steps = 0;
    std::vector<double> values;
    const double* row(std::size_t n) const { return values.data() + n * N; }
};

// xi_eps(t_n, x_j) = sum rho_eps(t_n - t_m, x_j - x_k) dW_{m,k}, periodic in space.
Field mollified_field(const NoiseRealization& noise, const DiscreteMollifier& rho);
Field mollified_field(const NoiseRealization& noise, const wz::constants::MollifierSpec& rho,
                      double eps);

// Implicit step (I - dt D2)^-1 for the periodic second difference.
class HeatStep {
public:
    HeatStep(std::size_t N, double dt, double dx);
    void solve(std::vector<double>& u) const;
    // Fourier symbol of the update for mode k.
    double symbol(std::size_t k) const;

private:
    std::size_t N_;
    double r_;
    std::vector<double> c_, d_, z_;
    double v_ = 0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> u;
    bool blowup = false;
    double blowup_time = 0;
};

// du = D2 u + Hbar(u) - C_eps G'G(u) + G(u) xi_eps, explicit in all terms but D2.
class RegularizedScheme {
public:
    RegularizedScheme(const SimConfig& cfg, const Field& xi);
    void step(std::vector<double>& u, std::size_t n) const;
    double hbar(double u) const;
    double c_eps() const { return ceps_; }

private:
    const SimConfig& cfg_;
    const Field& xi_;
    HeatStep heat_;
    double ceps_;
};

// u^{n+1} = (I - dt D2)^-1 (u^n + dt H(u^n) + G(u^n) dW^n / dx)
class ItoScheme {
public:
    ItoScheme(const SimConfig& cfg, const NoiseRealization& noise);
    void step(std::vector<double>& u, std::size_t n) const;

private:
    const SimConfig& cfg_;
    const NoiseRealization& noise_;
    HeatStep heat_;
};

Trajectory solve_regularized(const SimConfig& cfg, const Field& xi);
Trajectory solve_ito(const SimConfig& cfg, const NoiseRealization& noise);

struct RunResult {
    SimConfig config;
    Trajectory regularized;
    Trajectory ito;
    double sup_distance = 0;           // over fine grid times in [t0, T]
    std::vector<double> slice_distance;  // per coarse sample time
    bool blowup = false;
    double runtime = 0;
};

// Both solvers driven by one NoiseRealization.
RunResult run_coupled(const SimConfig& cfg);
RunResult run_coupled(const SimConfig& cfg, const NoiseRealization& noise);

struct StudyRow {
    double eps = 0;
    std::uint64_t seed = 0;
    double sup_err = 0;
    double t0 = 0;
    double T = 0;
    std::size_t N = 0;
    double dt = 0;
    bool blowup = false;
};

struct StudyTable {
    std::vector<StudyRow> rows;
    std::vector<double> eps;
    std::vector<double> median;  // per eps, over non-blowup rows
};

double median(std::vector<double> v);

// Grid of each run derived from eps via SimConfig::defaults; other fields from base.
StudyTable convergence_study(const SimConfig& base, const std::vector<double>& eps_list,
                             const std::vector<std::uint64_t>& seeds, unsigned threads = 1);

struct HopfColeReport {
    double z_vs_kpz = 0;  // sup |log u_eps - Ztilde_eps|
    double z_vs_ito = 0;  // sup |log u_eps - log u_Ito|
    bool positivity_lost = false;
};

// G = linear(1), H = zero: the regularised drift is Hbar(u) = -c1 u. Ztilde steps
// dZ = D2 Z + (D1 Z)^2 - c1 - C_eps + xi_eps on the same field. Sup over [t0, T].
HopfColeReport hopf_cole_study(const SimConfig& cfg);

}  // namespace wz::spde
