#pragma once

#include "wz/homogeneity.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wz {

// Exact value a + b*kappa.
struct KValue {
    Q a{0};
    Q b{0};

    Q at(const Q& kappa) const { return a + b * kappa; }
    KValue operator+(const KValue& o) const { return {a + o.a, b + o.b}; }
    KValue operator-(const KValue& o) const { return {a - o.a, b - o.b}; }
    KValue operator*(const Q& s) const { return {a * s, b * s}; }
    bool operator==(const KValue& o) const { return a == o.a && b == o.b; }

    // Forms like "-2-2k", "4+k", "-4k", "0".
    std::string str() const;
};

KValue parse_kvalue(const std::string& text);

enum class Role { Origin, Star, Internal, Leaf };
enum class EdgeTag { K, K1, K2, Kp, Rho2, RQ, Test, XWeight };

std::string to_string(Role r);
std::string to_string(EdgeTag t);
Role parse_role(const std::string& s);
EdgeTag parse_edge_tag(const std::string& s);

struct Moment {
    std::array<int, 2> k{0, 0};
    Q value{0};
};

struct EdgeLabel {
    KValue m;
    int r = 0;
    EdgeTag tag = EdgeTag::K;
    // Carried for r < 0 edges; not used by the checker.
    std::vector<Moment> moments;
};

struct Vertex {
    std::string id;
    Role role = Role::Internal;
};

struct Edge {
    int from = 0;
    int to = 0;
    EdgeLabel label;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr int kMaxVertices = 20;

struct LabelledGraph {
    std::string name;
    std::string expect; // "pass", "fails-condition-N[-M]", "excluded-handled-by-hand" or empty
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int index_of(const std::string& id) const;
    int origin() const;
    std::vector<int> stars() const;
    // Throws GraphError unless there is one origin and two test edges from the stars into it.
    void validate() const;
};

// alpha = 3 |V \ V_star| - sum of m over all edges.
KValue alpha(const LabelledGraph& g);

struct CheckReport {
    std::array<bool, 4> pass{true, true, true, true};
    // Offending vertex subset per failed condition; for condition 1 the endpoints of the edge.
    std::array<std::vector<int>, 4> witness;
    std::optional<int> witness_edge;
    // Conditions that hold at the configured kappa but fail at kappa = 0.
    std::array<bool, 4> marginal{false, false, false, false};
    KValue alpha;

    bool all_pass() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
    std::vector<int> failed_conditions() const;
    std::string verdict() const;
};

// Exhaustive subset enumeration; throws CapacityError beyond kMaxVertices.
CheckReport check_assumption(const LabelledGraph& g, const KappaParam& kappa = KappaParam());

// Same enumeration at an arbitrary nonnegative kappa value, without marginal flags.
CheckReport check_assumption_at(const LabelledGraph& g, const Q& kappa);

// Whether a verdict string matches an expectation; excluded fixtures always match.
bool verdict_matches(const std::string& verdict, const std::string& expect);

struct HalfEdge {
    std::string from;
    std::string to;
    std::string tag; // K, K1, K2, Kp, RQ, x, xK, xKp, test, testx
};

struct HalfGraph {
    std::string name;
    std::string symbol;
    std::string expect;
    std::vector<Vertex> vertices;
    std::vector<HalfEdge> edges;
    std::vector<std::string> leaves;
    std::vector<std::pair<std::string, std::string>> contractions;
    std::string alpha_plain;
    std::string alpha_eps;
};

// Mirror copy sharing the origin; leaf i paired with mirror leaf i through a rho2 edge
// labelled (3,-1), or (3+kappa,-1) when eps_weighted.
LabelledGraph double_half_graph(const HalfGraph& h, bool eps_weighted = true);

// 3 (|vertices| - 1) + 3 |leaves| - sum of half-edge m - sum of pairing m, one copy.
KValue alpha_half(const HalfGraph& h, bool eps_weighted = true);

HalfGraph half_graph_from_json(const std::string& text);
LabelledGraph graph_from_json(const std::string& text);
std::string graph_to_json(const LabelledGraph& g);
std::string report_to_json(const LabelledGraph& g, const CheckReport& r);

std::string read_file(const std::string& path);

struct GraphFixture {
    HalfGraph half;
    LabelledGraph graph; // eps-weighted doubling
};

std::string default_fixture_dir();
// All half-graph fixtures under <dir>/half, sorted by name.
std::vector<GraphFixture> fixtures(const std::string& dir = default_fixture_dir());

} // namespace wz
