#include "doctest.h"

#include "wz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wz::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "wz");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = dispatch(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("wz_test_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text)
{
    std::string p = temp_path(name);
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* kGivenConstants = R"("constants": {"c": 0.1991513863490807, "c1": 0.00126, "c2": 0.00869})";

}  // namespace

TEST_CASE("csv quoting and header-only output")
{
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    std::ostringstream s;
    write_csv(s, {"x", "y,z"}, {});
    CHECK(s.str() == "x,\"y,z\"\n");
    std::ostringstream t;
    write_csv(t, {"a", "b"}, {{"1", "q\""}});
    CHECK(t.str() == "a,b\n1,\"q\"\"\"\n");
    CHECK(fmt_double(0.1) == "0.1");
    CHECK(std::stod(fmt_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("rational flags reject floats")
{
    CHECK(checked_rational("1/20") == "1/20");
    CHECK(checked_rational("3") == "3");
    CHECK_THROWS_AS(checked_rational("0.05"), UsageError);
    CHECK(run({"symbols", "--kappa", "0.05"}).code == kUsage);
}

TEST_CASE("file digests are stable content hashes")
{
    std::string a = write_temp("digest_a", "abc");
    std::string b = write_temp("digest_b", "abc");
    CHECK(file_digest(a) == "a9993e364706816aba3e25717850c26c9cd0d89d");
    CHECK(file_digest(a) == file_digest(b));
}

TEST_CASE("usage errors and unknown flags")
{
    CHECK(run({}).code == kUsage);
    CHECK(run({"frobnicate"}).code == kUsage);
    CHECK(run({"symbols", "--bogus"}).code == kUsage);
    CHECK(run({"graph-check", "/nonexistent/graph.json"}).code == kUsage);
    CHECK(run({"--help"}).code == kOk);
    std::string cfg = write_temp("run.json", std::string("{\"eps\": 0.1, ") + kGivenConstants + "}");
    Run no_seed = run({"simulate", "--config", cfg});
    CHECK(no_seed.code == kUsage);
    CHECK(no_seed.err.find("--seed") != std::string::npos);
    std::string bad = write_temp("bad.json", "{\"eps\": 0.1, \"colour\": 3}");
    Run unknown = run({"simulate", "--config", bad, "--seed", "1"});
    CHECK(unknown.code == kUsage);
    CHECK(unknown.err.find("colour") != std::string::npos);
    CHECK(run({"constants", "--seed", "1", "--squeeze", "sideways:0.1"}).code == kUsage);
}

TEST_CASE("symbols table")
{
    Run r = run({"symbols", "--kappa", "1/20", "--zeta", "2", "--negative-only"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("|W0| = 17, |W*| = 6") != std::string::npos);
    CHECK(r.out.find("Xi | -3/2-k\n") != std::string::npos);
    CHECK(r.err.find("\"kappa\":\"1/20\"") != std::string::npos);
}

TEST_CASE("verdict exit codes")
{
    CHECK(run({"renorm-check"}).code == kOk);
    CHECK(run({"renorm-check", "--mutate"}).code == kOk);
    Run g = run({"graph-check", std::string(WZ_FIXTURE_DIR) + "/xi4_cancel_rhs2.json"});
    CHECK(g.code == kOk);
    CHECK(g.out.find("fails-condition-3") != std::string::npos);
    std::string text = slurp(std::string(WZ_FIXTURE_DIR) + "/xi4_cancel_rhs2.json");
    auto j = nlohmann::json::parse(text);
    j["expect"] = "pass";
    std::string wrong = write_temp("wrong_expect.json", j.dump());
    CHECK(run({"graph-check", wrong}).code == kMismatch);
    CHECK(run({"coproduct", "--check-fixtures"}).code == kOk);
}

TEST_CASE("simulate output is reproducible and manifests record inputs")
{
    std::string cfg = write_temp("sim.json", std::string("{\"eps\": 0.2, \"T\": 0.1, \"G\": {\"kind\": "
                                                         "\"linear\", \"sigma\": 1}, ") +
                                                 kGivenConstants + "}");
    std::string o1 = temp_path("sim1.csv"), o2 = temp_path("sim2.csv");
    CHECK(run({"simulate", "--config", cfg, "--seed", "5", "--out", o1}).code == kOk);
    CHECK(run({"--threads", "2", "simulate", "--config", cfg, "--seed", "5", "--out", o2}).code == kOk);
    std::string a = slurp(o1);
    CHECK(a.rfind("eps,seed,sup_err,t0,T,N,dt,blowup\n0.2,5,", 0) == 0);
    CHECK(a == slurp(o2));
    auto m = nlohmann::json::parse(slurp(o1 + ".manifest.json"));
    CHECK(m["seed"] == 5);
    CHECK(m["version"] == kToolVersion);
    CHECK(m["inputs"][0]["sha1"] == file_digest(cfg));
    CHECK(m["config"]["N"] == 40);
}

TEST_CASE("converge emits run and median rows")
{
    std::string cfg = write_temp("sweep.json", std::string("{\"eps_list\": [0.2], \"n_seeds\": 3, \"T\": 0.1, "
                                                           "\"G\": {\"kind\": \"constant\", \"sigma\": 1}, ") +
                                                   kGivenConstants + "}");
    Run r = run({"converge", "--config", cfg, "--seed", "10"});
    CHECK(r.code == kOk);
    std::istringstream lines(r.out);
    std::vector<std::string> rows;
    for (std::string l; std::getline(lines, l);) rows.push_back(l);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "agg,eps,seed,sup_err,t0,T,N,dt,blowup");
    CHECK(rows[1].rfind("run,0.2,10,", 0) == 0);
    CHECK(rows[3].rfind("run,0.2,12,", 0) == 0);
    CHECK(rows[4].rfind("median,0.2,,", 0) == 0);
}

TEST_CASE("hopf-cole rejects other nonlinearities")
{
    std::string cfg = write_temp("hc.json", "{\"eps_list\": [0.2], \"G\": {\"kind\": \"constant\", \"sigma\": 1}}");
    CHECK(run({"hopf-cole", "--config", cfg, "--seed", "1"}).code == kUsage);
}
