#pragma once

#include "wz/spde.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wz::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kToleranceNotMet = 3 };

inline constexpr const char* kToolVersion = "0.1.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// RFC 4180 field quoting; LF line endings.
std::string csv_field(const std::string& s);
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
// Shortest round-trip decimal form.
std::string fmt_double(double v);

// Hex SHA-1 of the file contents.
std::string file_digest(const std::string& path);

struct Manifest {
    std::vector<std::string> command_line;
    std::optional<std::uint64_t> seed;
    std::string kappa;
    std::string started;
    std::string finished;
    std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
    nlohmann::json config;

    void add_input(const std::string& path);
    nlohmann::json to_json() const;
};

std::string utc_now();

// Accepts "p/q" or an integer; floats are rejected.
std::string checked_rational(const std::string& text);

spde::FunctionSpec function_from_json(const nlohmann::json& j);
nlohmann::json function_to_json(const spde::FunctionSpec& f);
spde::InitialCondition initial_from_json(const nlohmann::json& j);
nlohmann::json initial_to_json(const spde::InitialCondition& u);

struct RunConfig {
    spde::SimConfig sim;
    bool constants_given = false;
    double constants_rel_err = 0.02;
};

// Keys: eps, T, t0, N, dt, H, G, mollifier, initial, constants, constants_rel_err, blowup, samples.
RunConfig run_config_from_json(const nlohmann::json& j, std::uint64_t seed);

struct SweepConfig {
    RunConfig base;
    std::vector<double> eps;
    std::vector<std::uint64_t> seeds;
};

// Run keys except eps and N/dt, plus eps_list and n_seeds (seeds seed, seed+1, ...) or seeds.
SweepConfig sweep_config_from_json(const nlohmann::json& j, std::uint64_t seed);

nlohmann::json sim_config_to_json(const spde::SimConfig& c);

// Fills the constants of cfg from the constants module unless given.
void resolve_constants(RunConfig& cfg, std::uint64_t seed, unsigned threads);

int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wz::cli
