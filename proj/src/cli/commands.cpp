#include "wz/cli.hpp"

#include "wz/notation.hpp"
#include "wz/powercount.hpp"
#include "wz/renorm.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace wz::cli {

using nlohmann::json;

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    unsigned threads = 1;
    std::string manifest_path;
    Manifest manifest;
};

KappaParam kappa_of(const std::string& text) { return KappaParam(parse_rational(checked_rational(text))); }

json read_json(Context& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    ctx.manifest.add_input(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// Primary output goes to --out when given, otherwise to the output stream.
class Sink {
public:
    Sink(Context& ctx, const std::string& path) : ctx_(ctx) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : ctx_.out; }

private:
    Context& ctx_;
    std::ofstream file_;
};

int cmd_symbols(Context& ctx, const std::string& kappa, const std::string& zeta, bool negative_only) {
    ctx.manifest.kappa = kappa;
    StructureSets st = generate_structure(kappa_of(kappa), parse_homogeneity(zeta));
    ctx.out << "# kappa = " << kappa << ", zeta = " << zeta << "\n";
    ctx.out << "# |W| = " << st.W.size() << ", |W0| = " << st.W0.size() << ", |W*| = " << st.W_star.size()
            << "\n";
    for (const Symbol& s : negative_only ? st.non_positive() : st.W)
        ctx.out << s.str() << " | " << s.homogeneity().str() << "\n";
    return kOk;
}

std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    auto trim = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        if (bar == std::string::npos) throw UsageError("malformed line in " + path + ": " + line);
        out.emplace_back(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
    }
    return out;
}

int cmd_coproduct(Context& ctx, const std::vector<std::string>& symbols, const std::string& kappa,
                  bool check, const std::string& dir) {
    ctx.manifest.kappa = kappa;
    Coproduct delta(kappa_of(kappa));
    if (check) {
        std::string path = dir + "/coproducts.txt";
        ctx.manifest.add_input(path);
        int bad = 0, n = 0;
        for (const auto& [sym, expected] : read_pairs(path)) {
            ++n;
            Tensor got = delta(parse_symbol(sym));
            bool ok = got == parse_tensor(expected);
            bad += !ok;
            ctx.out << sym << " | " << (ok ? "PASS" : "FAIL") << " | " << format(got) << "\n";
        }
        ctx.out << "coproduct fixtures: " << (n - bad) << "/" << n << " reproduced\n";
        return bad ? kMismatch : kOk;
    }
    if (symbols.empty()) throw UsageError("coproduct: give symbols or --check-fixtures");
    for (const std::string& s : symbols) ctx.out << s << " | " << format(delta(parse_symbol(s))) << "\n";
    return kOk;
}

int cmd_renorm(Context& ctx, const std::string& kappa, bool as_json, bool mutate) {
    ctx.manifest.kappa = kappa;
    KappaParam k = kappa_of(kappa);
    RenormSpec spec;
    spec.kappa = k;
    if (mutate) spec.L[named::xi3()] = single(named::i_xi(), CoeffPoly(2));
    GroupCheckReport rep = verify_group_membership(spec, generate_structure(k, {4, 0}));
    if (as_json) {
        ctx.out << rep.to_json() << "\n";
    } else {
        for (const CheckEntry& e : rep.entries)
            ctx.out << e.identity << " | " << e.subject << " | " << (e.pass ? "PASS" : "FAIL") << " | "
                    << e.residual << "\n";
        ctx.out << "renorm-check: " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.entries.size()
                << " checks, " << rep.failures().size() << " failures)"
                << (mutate ? ", mutated L: failure expected" : "") << "\n";
    }
    return rep.pass != mutate ? kOk : kMismatch;
}

int cmd_graph(Context& ctx, const std::string& file, const std::string& kappa, bool as_json, bool half) {
    ctx.manifest.kappa = kappa;
    ctx.manifest.add_input(file);
    std::string text = read_file(file);
    LabelledGraph g = half ? double_half_graph(half_graph_from_json(text)) : graph_from_json(text);
    if (half) g.expect = half_graph_from_json(text).expect;
    CheckReport r = check_assumption(g, kappa_of(kappa));
    bool match = g.expect.empty() || verdict_matches(r.verdict(), g.expect);
    if (as_json) {
        ctx.out << report_to_json(g, r) << "\n";
    } else {
        ctx.out << g.name << ": " << r.verdict() << " (alpha = " << r.alpha.str() << ")";
        if (!g.expect.empty()) ctx.out << ", expected " << g.expect << (match ? ": match" : ": MISMATCH");
        ctx.out << "\n";
    }
    return match ? kOk : kMismatch;
}

wz::constants::MollifierSpec squeezed(const std::string& mollifier, const std::string& squeeze) {
    auto m = wz::constants::MollifierSpec::by_name(mollifier);
    if (squeeze.empty() || squeeze == "none") return m;
    auto colon = squeeze.find(':');
    if (colon == std::string::npos) throw UsageError("--squeeze expects kind:value");
    std::string kind = squeeze.substr(0, colon);
    double v;
    try {
        v = std::stod(squeeze.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("--squeeze: bad value in '" + squeeze + "'");
    }
    if (!(v > 0)) throw UsageError("--squeeze: value must be positive");
    if (kind == "spatial") return m.spatial_squeeze(v);
    if (kind == "temporal") return m.temporal_squeeze(v);
    if (kind == "parabolic") return m.parabolic(v);
    throw UsageError("--squeeze: unknown kind '" + kind + "'");
}

int cmd_constants(Context& ctx, const std::string& mollifier, const std::string& squeeze, double rel,
                  std::uint64_t seed, const std::string& out) {
    ctx.manifest.seed = seed;
    ctx.manifest.config = {{"mollifier", mollifier}, {"squeeze", squeeze}, {"target_rel_err", rel}};
    wz::constants::MCBudget b;
    b.target_rel_err = rel;
    b.threads = ctx.threads;
    auto r = wz::constants::compute_constants(squeezed(mollifier, squeeze), seed, b);
    Sink sink(ctx, out);
    write_csv(sink.stream(), wz::constants::constants_csv_header(), {wz::constants::constants_csv_row(r)});
    if (!r.converged()) {
        ctx.err << "constants: Monte Carlo target not reached within the batch budget\n";
        return kToleranceNotMet;
    }
    return kOk;
}

const std::vector<std::string> kRunHeader{"eps", "seed", "sup_err", "t0", "T", "N", "dt", "blowup"};

std::vector<std::string> run_row(const spde::SimConfig& c, double sup, bool blowup) {
    return {fmt_double(c.eps), std::to_string(c.seed), fmt_double(sup), fmt_double(c.t0),
            fmt_double(c.T),   std::to_string(c.N),    fmt_double(c.dt), blowup ? "1" : "0"};
}

void dump_trajectories(const spde::RunResult& r, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    auto put = [&](const void* p, std::size_t n) { f.write(static_cast<const char*>(p), std::streamsize(n)); };
    const char magic[8] = {'W', 'Z', 'T', 'R', 'A', 'J', '1', '\0'};
    put(magic, 8);
    std::uint64_t N = r.config.N, nt = r.ito.times.size();
    put(&N, 8);
    put(&nt, 8);
    put(r.ito.times.data(), nt * 8);
    for (const auto& row : r.regularized.u) put(row.data(), N * 8);
    for (const auto& row : r.ito.u) put(row.data(), N * 8);
}

int cmd_simulate(Context& ctx, const std::string& config, std::uint64_t seed, const std::string& out,
                 const std::string& dump) {
    ctx.manifest.seed = seed;
    RunConfig rc = run_config_from_json(read_json(ctx, config), seed);
    resolve_constants(rc, seed, ctx.threads);
    ctx.manifest.config = sim_config_to_json(rc.sim);
    spde::RunResult r = spde::run_coupled(rc.sim);
    Sink sink(ctx, out);
    write_csv(sink.stream(), kRunHeader, {run_row(rc.sim, r.sup_distance, r.blowup)});
    if (!dump.empty()) dump_trajectories(r, dump);
    return kOk;
}

int cmd_converge(Context& ctx, const std::string& config, std::uint64_t seed, const std::string& out) {
    ctx.manifest.seed = seed;
    SweepConfig sc = sweep_config_from_json(read_json(ctx, config), seed);
    resolve_constants(sc.base, seed, ctx.threads);
    json echo = sim_config_to_json(sc.base.sim);
    echo.erase("eps");
    echo.erase("N");
    echo.erase("dt");
    echo.erase("seed");
    echo["eps_list"] = sc.eps;
    echo["seeds"] = sc.seeds;
    ctx.manifest.config = echo;
    spde::StudyTable tab = spde::convergence_study(sc.base.sim, sc.eps, sc.seeds, ctx.threads);
    std::vector<std::string> header{"agg"};
    header.insert(header.end(), kRunHeader.begin(), kRunHeader.end());
    std::vector<std::vector<std::string>> rows;
    for (const spde::StudyRow& r : tab.rows) {
        spde::SimConfig c = spde::SimConfig::defaults(r.eps, r.T);
        c.seed = r.seed;
        c.t0 = r.t0;
        std::vector<std::string> row{"run"};
        auto rr = run_row(c, r.sup_err, r.blowup);
        row.insert(row.end(), rr.begin(), rr.end());
        rows.push_back(row);
    }
    for (std::size_t i = 0; i < tab.eps.size(); ++i) {
        spde::SimConfig c = spde::SimConfig::defaults(tab.eps[i], sc.base.sim.T);
        std::size_t blow = 0;
        for (const spde::StudyRow& r : tab.rows) blow += r.eps == tab.eps[i] && r.blowup;
        rows.push_back({"median", fmt_double(c.eps), "", fmt_double(tab.median[i]), fmt_double(sc.base.sim.t0),
                        fmt_double(c.T), std::to_string(c.N), fmt_double(c.dt), std::to_string(blow)});
    }
    Sink sink(ctx, out);
    write_csv(sink.stream(), header, rows);
    return kOk;
}

int cmd_hopf_cole(Context& ctx, const std::string& config, std::uint64_t seed, const std::string& out) {
    ctx.manifest.seed = seed;
    json j = read_json(ctx, config);
    SweepConfig sc = sweep_config_from_json(j, seed);
    spde::SimConfig& b = sc.base.sim;
    if ((j.contains("G") && !(b.G.kind == spde::FunctionSpec::Kind::linear && b.G.a == 1)) ||
        (j.contains("H") && b.H.kind != spde::FunctionSpec::Kind::zero))
        throw UsageError("hopf-cole: G must be linear(1) and H zero");
    b.G = spde::FunctionSpec::linear(1);
    b.H = spde::FunctionSpec::zero();
    if (!j.contains("initial")) b.u0.value = 1;
    resolve_constants(sc.base, seed, ctx.threads);
    json echo = sim_config_to_json(b);
    echo.erase("eps");
    echo.erase("N");
    echo.erase("dt");
    echo.erase("seed");
    echo["eps_list"] = sc.eps;
    echo["seeds"] = sc.seeds;
    ctx.manifest.config = echo;

    std::vector<std::string> header{"agg", "eps", "seed", "z_vs_kpz", "z_vs_ito", "z_vs_ito_c1_zero",
                                    "positivity_lost"};
    std::vector<std::vector<std::string>> rows, medians;
    for (double eps : sc.eps) {
        std::vector<double> kpz, ito, abl;
        std::size_t lost = 0;
        for (std::uint64_t s : sc.seeds) {
            spde::SimConfig c = spde::SimConfig::defaults(eps, b.T);
            c.t0 = b.t0;
            c.seed = s;
            c.G = b.G;
            c.H = b.H;
            c.u0 = b.u0;
            c.constants = b.constants;
            c.mollifier = b.mollifier;
            c.blowup = b.blowup;
            spde::HopfColeReport r = spde::hopf_cole_study(c);
            c.constants.c1 = 0;
            spde::HopfColeReport r0 = spde::hopf_cole_study(c);
            bool bad = r.positivity_lost || r0.positivity_lost;
            lost += bad;
            if (!bad) {
                kpz.push_back(r.z_vs_kpz);
                ito.push_back(r.z_vs_ito);
                abl.push_back(r0.z_vs_ito);
            }
            rows.push_back({"run", fmt_double(eps), std::to_string(s), fmt_double(r.z_vs_kpz),
                            fmt_double(r.z_vs_ito), fmt_double(r0.z_vs_ito), bad ? "1" : "0"});
        }
        medians.push_back({"median", fmt_double(eps), "", fmt_double(spde::median(kpz)),
                           fmt_double(spde::median(ito)), fmt_double(spde::median(abl)), std::to_string(lost)});
    }
    rows.insert(rows.end(), medians.begin(), medians.end());
    Sink sink(ctx, out);
    write_csv(sink.stream(), header, rows);
    return kOk;
}

int cmd_self_test(Context& ctx, const std::string& dir) {
    bool all = true;
    auto report = [&](const std::string& suite, bool ok, const std::string& detail) {
        all = all && ok;
        ctx.out << suite << " | " << (ok ? "PASS" : "FAIL") << " | " << detail << "\n";
    };

    {
        std::string path = dir + "/negative_table.txt";
        ctx.manifest.add_input(path);
        StructureSets st = generate_structure(KappaParam(), {4, 0});
        std::set<std::string> got, want;
        for (const Symbol& s : st.non_positive()) got.insert(s.str() + " | " + s.homogeneity().str());
        for (const auto& [sym, hom] : read_pairs(path))
            want.insert(parse_symbol(sym).str() + " | " + parse_homogeneity(hom).str());
        bool ok = got == want && st.W0.size() == 17 && st.W_star.size() == 6;
        report("symbols", ok,
               std::to_string(got.size()) + " non-positive symbols, |W0| = " + std::to_string(st.W0.size()) +
                   ", |W*| = " + std::to_string(st.W_star.size()));
    }
    {
        std::string path = dir + "/coproducts.txt";
        ctx.manifest.add_input(path);
        Coproduct delta;
        int n = 0, good = 0;
        for (const auto& [sym, expected] : read_pairs(path)) {
            ++n;
            good += delta(parse_symbol(sym)) == parse_tensor(expected);
        }
        report("coproduct", n == 14 && good == n, std::to_string(good) + "/" + std::to_string(n) + " displayed");
    }
    {
        StructureSets st = generate_structure(KappaParam(), {4, 0});
        GroupCheckReport full = verify_group_membership(RenormSpec::symbolic(), st);
        GroupCheckReport conly = verify_group_membership(RenormSpec::c_only(), st);
        RenormSpec bad;
        bad.L[named::xi3()] = single(named::i_xi(), CoeffPoly(2));
        GroupCheckReport mutated = verify_group_membership(bad, st);
        report("renorm", full.pass && conly.pass && !mutated.pass,
               std::to_string(full.entries.size()) + " identities; mutated L rejected with " +
                   std::to_string(mutated.failures().size()) + " failures");
    }
    {
        int n = 0, good = 0;
        for (const GraphFixture& f : fixtures(dir)) {
            ++n;
            CheckReport r = check_assumption(f.graph);
            bool ok = verdict_matches(r.verdict(), f.half.expect);
            good += ok;
            if (!ok) ctx.out << "  graph " << f.half.name << ": " << r.verdict() << " vs " << f.half.expect << "\n";
        }
        std::string path = dir + "/xi4_cancel_rhs2.json";
        ctx.manifest.add_input(path);
        LabelledGraph g = graph_from_json(read_file(path));
        bool cancel = verdict_matches(check_assumption(g).verdict(), g.expect);
        report("graphs", good == n && cancel,
               std::to_string(good) + "/" + std::to_string(n) + " fixture verdicts; " + g.name + " " +
                   (cancel ? "matches" : "does not match") + " its expectation");
    }
    return all ? kOk : kMismatch;
}

}  // namespace

int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wong-Zakai regularity-structure toolkit", "wz"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out, err, 1, {}, {}};
    app.add_option("--threads", ctx.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--manifest", ctx.manifest_path, "manifest file; defaults to <out>.manifest.json, else the error stream");

    std::string kappa = "1/20", zeta = "2", fixture_dir = default_fixture_dir();
    std::string file, config, out_path, dump, mollifier = "tensor-bump", squeeze = "none";
    std::vector<std::string> symbols;
    bool negative_only = false, as_json = false, mutate = false, half = false, check = false;
    std::uint64_t seed = 0;
    double rel = 0.02;

    auto* sym = app.add_subcommand("symbols", "list the model space with homogeneities");
    sym->add_option("--kappa", kappa, "kappa as p/q");
    sym->add_option("--zeta", zeta, "homogeneity cutoff");
    sym->add_flag("--negative-only", negative_only, "only symbols of non-positive homogeneity");

    auto* cop = app.add_subcommand("coproduct", "coproduct of symbols in ASCII notation");
    cop->add_option("symbols", symbols, "symbols such as Xi*I[Xi]");
    cop->add_option("--kappa", kappa, "kappa as p/q");
    cop->add_flag("--check-fixtures", check, "compare against the displayed coproducts");
    cop->add_option("--fixtures", fixture_dir, "fixture directory");

    auto* ren = app.add_subcommand("renorm-check", "renormalisation group membership");
    ren->add_option("--kappa", kappa, "kappa as p/q");
    ren->add_flag("--json", as_json, "machine-readable report");
    ren->add_flag("--mutate", mutate, "perturb L; the check is then expected to fail");

    auto* gra = app.add_subcommand("graph-check", "integrability conditions of a labelled graph");
    gra->add_option("file", file, "graph JSON")->required();
    gra->add_option("--kappa", kappa, "kappa as p/q");
    gra->add_flag("--json", as_json, "machine-readable report");
    gra->add_flag("--half", half, "input is a half graph; check its doubling");

    auto* con = app.add_subcommand("constants", "renormalisation constants of a mollifier");
    con->add_option("--mollifier", mollifier, "tensor-bump or smoothed-box");
    con->add_option("--squeeze", squeeze, "none, spatial:d, temporal:d or parabolic:eps");
    con->add_option("--target-rel-err", rel, "Monte Carlo relative error target")->check(CLI::PositiveNumber);
    con->add_option("--seed", seed, "master seed")->required();
    con->add_option("--out", out_path, "CSV output file");

    auto* sim = app.add_subcommand("simulate", "one coupled regularised/Ito run");
    sim->add_option("--config", config, "run JSON")->required();
    sim->add_option("--seed", seed, "noise seed")->required();
    sim->add_option("--out", out_path, "CSV output file");
    sim->add_option("--dump", dump, "binary trajectory dump");

    auto* cvg = app.add_subcommand("converge", "Wong-Zakai convergence sweep");
    cvg->add_option("--config", config, "sweep JSON")->required();
    cvg->add_option("--seed", seed, "first seed")->required();
    cvg->add_option("--out", out_path, "CSV output file");

    auto* hc = app.add_subcommand("hopf-cole", "log transform against the KPZ-type scheme and log u_Ito");
    hc->add_option("--config", config, "sweep JSON")->required();
    hc->add_option("--seed", seed, "first seed")->required();
    hc->add_option("--out", out_path, "CSV output file");

    auto* st = app.add_subcommand("self-test", "algebra, renormalisation and graph fixture suites");
    st->add_option("--fixtures", fixture_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    for (int i = 0; i < argc; ++i) ctx.manifest.command_line.push_back(argv[i]);
    ctx.manifest.started = utc_now();
    int code = kOk;
    try {
        if (*sym) code = cmd_symbols(ctx, kappa, zeta, negative_only);
        else if (*cop) code = cmd_coproduct(ctx, symbols, kappa, check, fixture_dir);
        else if (*ren) code = cmd_renorm(ctx, kappa, as_json, mutate);
        else if (*gra) code = cmd_graph(ctx, file, kappa, as_json, half);
        else if (*con) code = cmd_constants(ctx, mollifier, squeeze, rel, seed, out_path);
        else if (*sim) code = cmd_simulate(ctx, config, seed, out_path, dump);
        else if (*cvg) code = cmd_converge(ctx, config, seed, out_path);
        else if (*hc) code = cmd_hopf_cole(ctx, config, seed, out_path);
        else if (*st) code = cmd_self_test(ctx, fixture_dir);
    } catch (const wz::quad::ToleranceNotMet& e) {
        err << "tolerance not met: " << e.what() << " (best " << e.best << ", error " << e.error << ")\n";
        code = kToleranceNotMet;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    ctx.manifest.finished = utc_now();
    std::string m = ctx.manifest.to_json().dump(2);
    if (ctx.manifest_path.empty() && !out_path.empty()) ctx.manifest_path = out_path + ".manifest.json";
    if (ctx.manifest_path.empty()) {
        err << "manifest: " << ctx.manifest.to_json().dump() << "\n";
    } else {
        std::ofstream f(ctx.manifest_path);
        if (!f) {
            err << "error: cannot write " << ctx.manifest_path << "\n";
            return kUsage;
        }
        f << m << "\n";
    }
    return code;
}

}  // namespace wz::cli
