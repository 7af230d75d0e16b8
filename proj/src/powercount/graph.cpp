#include "wz/powercount.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wz {

std::string KValue::str() const
{
    if (b == Q(0))
        return to_string(a);
    std::string ks;
    Q mag = b < Q(0) ? -b : b;
    ks = mag == Q(1) ? "k" : to_string(mag) + "k";
    if (a == Q(0))
        return (b < Q(0) ? "-" : "") + ks;
    return to_string(a) + (b < Q(0) ? "-" : "+") + ks;
}

KValue parse_kvalue(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (ch != ' ')
            t += ch;
    if (t.empty())
        throw std::invalid_argument("empty value");
    KValue v;
    std::size_t i = 0;
    while (i < t.size()) {
        std::size_t j = i + 1;
        while (j < t.size() && t[j] != '+' && t[j] != '-')
            ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        bool neg = false;
        if (term[0] == '+' || term[0] == '-') {
            neg = term[0] == '-';
            term = term.substr(1);
        }
        if (term.empty())
            throw std::invalid_argument("malformed value '" + text + "'");
        if (term.back() == 'k') {
            std::string coeff = term.substr(0, term.size() - 1);
            Q c = coeff.empty() ? Q(1) : parse_rational(coeff);
            v.b += neg ? -c : c;
        } else {
            Q c = parse_rational(term);
            v.a += neg ? -c : c;
        }
    }
    return v;
}

std::string to_string(Role r)
{
    switch (r) {
    case Role::Origin:
        return "origin";
    case Role::Star:
        return "star";
    case Role::Internal:
        return "internal";
    case Role::Leaf:
        return "leaf";
    }
    return "internal";
}

std::string to_string(EdgeTag t)
{
    switch (t) {
    case EdgeTag::K:
        return "K";
    case EdgeTag::K1:
        return "K1";
    case EdgeTag::K2:
        return "K2";
    case EdgeTag::Kp:
        return "Kp";
    case EdgeTag::Rho2:
        return "rho2";
    case EdgeTag::RQ:
        return "RQ";
    case EdgeTag::Test:
        return "test";
    case EdgeTag::XWeight:
        return "x";
    }
    return "K";
}

Role parse_role(const std::string& s)
{
    if (s == "origin")
        return Role::Origin;
    if (s == "star")
        return Role::Star;
    if (s == "internal")
        return Role::Internal;
    if (s == "leaf")
        return Role::Leaf;
    throw GraphError("unknown vertex role '" + s + "'");
}

EdgeTag parse_edge_tag(const std::string& s)
{
    static const std::vector<std::pair<std::string, EdgeTag>> table{
        {"K", EdgeTag::K},       {"K1", EdgeTag::K1},     {"K2", EdgeTag::K2},     {"Kp", EdgeTag::Kp},
        {"rho2", EdgeTag::Rho2}, {"RQ", EdgeTag::RQ},     {"test", EdgeTag::Test}, {"x", EdgeTag::XWeight}};
    for (const auto& [name, tag] : table)
        if (name == s)
            return tag;
    throw GraphError("unknown edge tag '" + s + "'");
}

int LabelledGraph::index_of(const std::string& id) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id)
            return static_cast<int>(i);
    throw GraphError("unknown vertex '" + id + "'");
}

int LabelledGraph::origin() const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].role == Role::Origin)
            return static_cast<int>(i);
    throw GraphError("graph has no origin");
}

std::vector<int> LabelledGraph::stars() const
{
    std::vector<int> s;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].role == Role::Star)
            s.push_back(static_cast<int>(i));
    return s;
}

void LabelledGraph::validate() const
{
    int origins = 0;
    for (const auto& v : vertices)
        origins += v.role == Role::Origin;
    if (origins != 1)
        throw GraphError("graph needs exactly one origin");
    const int o = origin();
    std::vector<int> st = stars();
    if (st.size() != 2)
        throw GraphError("graph needs exactly two star vertices");
    int tests = 0;
    for (const auto& e : edges) {
        if (e.from < 0 || e.to < 0 || e.from >= static_cast<int>(vertices.size()) ||
            e.to >= static_cast<int>(vertices.size()))
            throw GraphError("edge endpoint out of range");
        if (e.label.tag != EdgeTag::Test)
            continue;
        ++tests;
        if (e.to != o || vertices[e.from].role != Role::Star)
            throw GraphError("test edges must run from a star vertex to the origin");
    }
    if (tests != 2)
        throw GraphError("graph needs exactly two test edges");
}

KValue alpha(const LabelledGraph& g)
{
    int outside = 0;
    for (const auto& v : g.vertices)
        outside += v.role != Role::Origin && v.role != Role::Star;
    KValue a{Q(3 * outside), Q(0)};
    for (const auto& e : g.edges)
        if (e.label.tag != EdgeTag::Test)
            a = a - e.label.m;
    return a;
}

std::vector<int> CheckReport::failed_conditions() const
{
    std::vector<int> out;
    for (int c = 0; c < 4; ++c)
        if (!pass[c])
            out.push_back(c + 1);
    return out;
}

std::string CheckReport::verdict() const
{
    auto failed = failed_conditions();
    if (failed.empty())
        return "pass";
    std::string s = "fails-condition";
    for (int c : failed)
        s += "-" + std::to_string(c);
    return s;
}

bool verdict_matches(const std::string& verdict, const std::string& expect)
{
    if (expect == "excluded-handled-by-hand" || expect.empty())
        return true;
    return verdict == expect;
}

namespace {

using nlohmann::json;

std::vector<Vertex> read_vertices(const json& j)
{
    std::vector<Vertex> out;
    for (const auto& v : j.at("vertices"))
        out.push_back({v.at("id").get<std::string>(), parse_role(v.at("role").get<std::string>())});
    return out;
}

} // namespace

HalfGraph half_graph_from_json(const std::string& text)
{
    json j = json::parse(text);
    HalfGraph h;
    h.name = j.value("name", "");
    h.symbol = j.value("symbol", "");
    h.expect = j.value("expect", "");
    h.vertices = read_vertices(j);
    for (const auto& e : j.at("edges"))
        h.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(), e.at("tag").get<std::string>()});
    for (const auto& l : j.value("leaves", json::array()))
        h.leaves.push_back(l.get<std::string>());
    for (const auto& c : j.value("contractions", json::array()))
        h.contractions.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    h.alpha_plain = j.value("alpha_plain", "");
    h.alpha_eps = j.value("alpha_eps", "");
    return h;
}

LabelledGraph graph_from_json(const std::string& text)
{
    json j = json::parse(text);
    LabelledGraph g;
    g.name = j.value("name", "");
    g.expect = j.value("expect", "");
    g.vertices = read_vertices(j);
    for (const auto& e : j.at("edges")) {
        Edge edge;
        edge.from = g.index_of(e.at("from").get<std::string>());
        edge.to = g.index_of(e.at("to").get<std::string>());
        edge.label.tag = parse_edge_tag(e.at("tag").get<std::string>());
        const auto& m = e.at("m");
        edge.label.m = m.is_string() ? parse_kvalue(m.get<std::string>()) : KValue{Q(m.get<int>()), Q(0)};
        edge.label.r = e.at("r").get<int>();
        for (const auto& mo : e.value("moments", json::array())) {
            Moment moment;
            moment.k = {mo.at("k").at(0).get<int>(), mo.at("k").at(1).get<int>()};
            moment.value = parse_rational(mo.at("value").get<std::string>());
            edge.label.moments.push_back(moment);
        }
        g.edges.push_back(edge);
    }
    g.validate();
    return g;
}

std::string graph_to_json(const LabelledGraph& g)
{
    json j;
    j["name"] = g.name;
    j["expect"] = g.expect;
    j["vertices"] = json::array();
    for (const auto& v : g.vertices)
        j["vertices"].push_back({{"id", v.id}, {"role", to_string(v.role)}});
    j["edges"] = json::array();
    for (const auto& e : g.edges) {
        json je{{"from", g.vertices[e.from].id},
                {"to", g.vertices[e.to].id},
                {"m", e.label.m.str()},
                {"r", e.label.r},
                {"tag", to_string(e.label.tag)}};
        if (!e.label.moments.empty()) {
            je["moments"] = json::array();
            for (const auto& mo : e.label.moments)
                je["moments"].push_back({{"k", {mo.k[0], mo.k[1]}}, {"value", to_string(mo.value)}});
        }
        j["edges"].push_back(je);
    }
    return j.dump(1) + "\n";
}

std::string report_to_json(const LabelledGraph& g, const CheckReport& r)
{
    json j;
    j["name"] = g.name;
    j["verdict"] = r.verdict();
    j["expect"] = g.expect;
    j["matches_expectation"] = verdict_matches(r.verdict(), g.expect);
    j["alpha"] = r.alpha.str();
    j["conditions"] = json::array();
    for (int c = 0; c < 4; ++c) {
        json jc{{"condition", c + 1}, {"pass", r.pass[c]}, {"marginal", r.marginal[c]}};
        if (!r.pass[c]) {
            json w = json::array();
            for (int v : r.witness[c])
                w.push_back(g.vertices[v].id);
            jc["witness"] = w;
        }
        j["conditions"].push_back(jc);
    }
    return j.dump(2);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string default_fixture_dir()
{
    if (const char* env = std::getenv("WZ_FIXTURES"))
        return env;
    return WZ_DEFAULT_FIXTURE_DIR;
}

std::vector<GraphFixture> fixtures(const std::string& dir)
{
    std::vector<GraphFixture> out;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(dir) / "half"))
        if (entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        HalfGraph h = half_graph_from_json(read_file(f.string()));
        out.push_back({h, double_half_graph(h, true)});
    }
    std::sort(out.begin(), out.end(), [](const GraphFixture& a, const GraphFixture& b) { return a.half.name < b.half.name; });
    return out;
}

} // namespace wz
