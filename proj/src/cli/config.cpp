#include "wz/cli.hpp"

#include <set>

namespace wz::cli {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw UsageError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw UsageError(where + ": unknown key '" + it.key() + "'");
}

template <class T>
T get_or(const json& j, const char* key, T def) {
    return j.contains(key) ? j.at(key).get<T>() : def;
}

}  // namespace

spde::FunctionSpec function_from_json(const json& j) {
    using spde::FunctionSpec;
    check_keys(j, {"kind", "sigma", "a", "b", "coeffs", "clip"}, "function");
    switch (spde::function_kind(j.at("kind").get<std::string>())) {
    case FunctionSpec::Kind::zero: return FunctionSpec::zero();
    case FunctionSpec::Kind::constant: return FunctionSpec::constant(j.at("sigma").get<double>());
    case FunctionSpec::Kind::linear: return FunctionSpec::linear(j.at("sigma").get<double>());
    case FunctionSpec::Kind::affine:
        return FunctionSpec::affine(j.at("a").get<double>(), j.at("b").get<double>());
    case FunctionSpec::Kind::tanh_saturating:
        return FunctionSpec::tanh_saturating(j.at("a").get<double>(), j.at("b").get<double>());
    case FunctionSpec::Kind::polynomial:
        return FunctionSpec::polynomial(j.at("coeffs").get<std::vector<double>>(),
                                        j.at("clip").get<double>());
    }
    return FunctionSpec::zero();
}

json function_to_json(const spde::FunctionSpec& f) {
    using K = spde::FunctionSpec::Kind;
    json j{{"kind", f.name()}};
    switch (f.kind) {
    case K::zero: break;
    case K::constant:
    case K::linear: j["sigma"] = f.a; break;
    case K::affine:
    case K::tanh_saturating:
        j["a"] = f.a;
        j["b"] = f.b;
        break;
    case K::polynomial:
        j["coeffs"] = f.coeffs;
        j["clip"] = f.clip;
        break;
    }
    return j;
}

spde::InitialCondition initial_from_json(const json& j) {
    using K = spde::InitialCondition::Kind;
    check_keys(j, {"kind", "value", "amplitude", "offset", "mode", "values"}, "initial");
    spde::InitialCondition u;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        u.kind = K::constant;
        u.value = j.at("value").get<double>();
    } else if (kind == "sine") {
        u.kind = K::sine;
        u.amplitude = get_or(j, "amplitude", 1.0);
        u.offset = get_or(j, "offset", 0.0);
        u.mode = get_or(j, "mode", 1);
    } else if (kind == "samples") {
        u.kind = K::samples;
        u.samples = j.at("values").get<std::vector<double>>();
        if (u.samples.empty()) throw UsageError("initial: samples must be nonempty");
    } else {
        throw UsageError("initial: unknown kind '" + kind + "'");
    }
    return u;
}

json initial_to_json(const spde::InitialCondition& u) {
    using K = spde::InitialCondition::Kind;
    switch (u.kind) {
    case K::constant: return {{"kind", "constant"}, {"value", u.value}};
    case K::sine:
        return {{"kind", "sine"}, {"amplitude", u.amplitude}, {"offset", u.offset}, {"mode", u.mode}};
    case K::samples: return {{"kind", "samples"}, {"values", u.samples}};
    }
    return {};
}

namespace {

const std::set<std::string> kCommonKeys{"T",        "t0",     "H",       "G",
                                        "mollifier", "initial", "constants", "constants_rel_err",
                                        "blowup",   "samples"};

void read_common(const json& j, RunConfig& rc) {
    spde::SimConfig& c = rc.sim;
    c.t0 = get_or(j, "t0", 0.05);
    if (j.contains("H")) c.H = function_from_json(j.at("H"));
    if (j.contains("G")) c.G = function_from_json(j.at("G"));
    c.mollifier = get_or<std::string>(j, "mollifier", "tensor-bump");
    wz::constants::MollifierSpec::by_name(c.mollifier);
    if (j.contains("initial")) c.u0 = initial_from_json(j.at("initial"));
    if (j.contains("constants")) {
        const json& k = j.at("constants");
        check_keys(k, {"c", "c1", "c2"}, "constants");
        c.constants = {k.at("c").get<double>(), k.at("c1").get<double>(), k.at("c2").get<double>()};
        rc.constants_given = true;
    }
    rc.constants_rel_err = get_or(j, "constants_rel_err", 0.02);
    c.blowup = get_or(j, "blowup", 1e6);
    c.samples = get_or<std::size_t>(j, "samples", 50);
}

}  // namespace

RunConfig run_config_from_json(const json& j, std::uint64_t seed) {
    std::set<std::string> keys = kCommonKeys;
    keys.insert({"eps", "N", "dt"});
    check_keys(j, keys, "config");
    RunConfig rc;
    rc.sim = spde::SimConfig::defaults(j.at("eps").get<double>(), get_or(j, "T", 0.25));
    if (j.contains("N")) rc.sim.N = j.at("N").get<std::size_t>();
    if (j.contains("dt")) rc.sim.dt = j.at("dt").get<double>();
    rc.sim.seed = seed;
    read_common(j, rc);
    rc.sim.validate();
    return rc;
}

SweepConfig sweep_config_from_json(const json& j, std::uint64_t seed) {
    std::set<std::string> keys = kCommonKeys;
    keys.insert({"eps_list", "n_seeds", "seeds"});
    check_keys(j, keys, "config");
    SweepConfig sc;
    sc.eps = j.at("eps_list").get<std::vector<double>>();
    if (sc.eps.empty()) throw UsageError("config: eps_list must be nonempty");
    sc.base.sim = spde::SimConfig::defaults(sc.eps.front(), get_or(j, "T", 0.25));
    read_common(j, sc.base);
    if (j.contains("seeds")) {
        sc.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    } else {
        auto n = get_or<std::size_t>(j, "n_seeds", 8);
        for (std::size_t i = 0; i < n; ++i) sc.seeds.push_back(seed + i);
    }
    if (sc.seeds.empty()) throw UsageError("config: no seeds");
    for (double eps : sc.eps) {
        spde::SimConfig c = spde::SimConfig::defaults(eps, sc.base.sim.T);
        c.t0 = sc.base.sim.t0;
        c.validate();
    }
    return sc;
}

json sim_config_to_json(const spde::SimConfig& c) {
    return {{"eps", c.eps},
            {"N", c.N},
            {"dt", c.dt},
            {"T", c.T},
            {"t0", c.t0},
            {"seed", c.seed},
            {"H", function_to_json(c.H)},
            {"G", function_to_json(c.G)},
            {"constants", {{"c", c.constants.c}, {"c1", c.constants.c1}, {"c2", c.constants.c2}}},
            {"mollifier", c.mollifier},
            {"initial", initial_to_json(c.u0)},
            {"blowup", c.blowup},
            {"samples", c.samples}};
}

void resolve_constants(RunConfig& cfg, std::uint64_t seed, unsigned threads) {
    if (cfg.constants_given) return;
    wz::constants::MCBudget b;
    b.target_rel_err = cfg.constants_rel_err;
    b.threads = threads;
    auto r = wz::constants::compute_constants(wz::constants::MollifierSpec::by_name(cfg.sim.mollifier),
                                              seed, b);
    if (!r.converged())
        throw wz::quad::ToleranceNotMet("constants: Monte Carlo budget exhausted", r.c1, 0);
    cfg.sim.constants = spde::constants_from(r);
    cfg.constants_given = true;
}

}  // namespace wz::cli
