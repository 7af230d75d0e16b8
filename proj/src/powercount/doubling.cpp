#include "wz/powercount.hpp"

namespace wz {

namespace {

struct TagLabel {
    EdgeTag tag;
    KValue m;
    int r;
};

TagLabel kernel_label(const std::string& tag)
{
    if (tag == "K")
        return {EdgeTag::K, {Q(1), Q(0)}, 0};
    if (tag == "K1")
        return {EdgeTag::K1, {Q(1), Q(0)}, 1};
    if (tag == "K2")
        return {EdgeTag::K2, {Q(1), Q(0)}, 2};
    if (tag == "Kp")
        return {EdgeTag::Kp, {Q(2), Q(0)}, 0};
    if (tag == "RQ")
        return {EdgeTag::RQ, {Q(4), Q(1)}, -2};
    if (tag == "x")
        return {EdgeTag::XWeight, {Q(-1), Q(0)}, 0};
    throw GraphError("unknown half-graph tag '" + tag + "'");
}

EdgeLabel rho_label(bool eps_weighted)
{
    EdgeLabel l;
    l.tag = EdgeTag::Rho2;
    l.m = {Q(3), eps_weighted ? Q(1) : Q(0)};
    l.r = -1;
    l.moments = {{{0, 0}, Q(1)}};
    return l;
}

// Expands one half edge into labelled edges; xK, xKp and testx gain a parallel x-weight edge.
std::vector<EdgeLabel> expand(const std::string& tag)
{
    EdgeLabel x{{Q(-1), Q(0)}, 0, EdgeTag::XWeight, {}};
    if (tag == "test" || tag == "testx") {
        EdgeLabel t{{Q(0), Q(0)}, 0, EdgeTag::Test, {}};
        if (tag == "testx")
            return {t, x};
        return {t};
    }
    if (tag == "xK" || tag == "xKp") {
        TagLabel k = kernel_label(tag.substr(1));
        return {EdgeLabel{k.m, k.r, k.tag, {}}, x};
    }
    TagLabel k = kernel_label(tag);
    return {EdgeLabel{k.m, k.r, k.tag, {}}};
}

} // namespace

LabelledGraph double_half_graph(const HalfGraph& h, bool eps_weighted)
{
    LabelledGraph g;
    g.name = h.name;
    g.expect = h.expect;
    std::string origin_id;
    for (const auto& v : h.vertices)
        if (v.role == Role::Origin)
            origin_id = v.id;
    if (origin_id.empty())
        throw GraphError("half graph has no origin");
    g.vertices.push_back({origin_id, Role::Origin});
    auto name = [&](const std::string& id, char copy) {
        return id == origin_id ? origin_id : id + "." + copy;
    };
    for (char copy : {'a', 'b'})
        for (const auto& v : h.vertices)
            if (v.role != Role::Origin)
                g.vertices.push_back({name(v.id, copy), v.role});
    for (char copy : {'a', 'b'}) {
        for (const auto& e : h.edges) {
            int from = g.index_of(name(e.from, copy));
            int to = g.index_of(name(e.to, copy));
            for (auto& label : expand(e.tag))
                g.edges.push_back({from, to, label});
        }
        for (const auto& [x, y] : h.contractions)
            g.edges.push_back({g.index_of(name(x, copy)), g.index_of(name(y, copy)), rho_label(eps_weighted)});
    }
    for (const auto& leaf : h.leaves)
        g.edges.push_back({g.index_of(name(leaf, 'a')), g.index_of(name(leaf, 'b')), rho_label(eps_weighted)});
    return g;
}

KValue alpha_half(const HalfGraph& h, bool eps_weighted)
{
    KValue a{Q(3 * (static_cast<int>(h.vertices.size()) - 1) + 3 * static_cast<int>(h.leaves.size())), Q(0)};
    // The star joins V_star after doubling, matching the -3 carried by each test function.
    for (const auto& v : h.vertices)
        if (v.role == Role::Star)
            a = a - KValue{Q(3), Q(0)};
    for (const auto& e : h.edges)
        for (const auto& label : expand(e.tag))
            a = a - label.m;
    const KValue rho = rho_label(eps_weighted).m;
    for (std::size_t i = 0; i < h.contractions.size() + h.leaves.size(); ++i)
        a = a - rho;
    return a;
}

} // namespace wz
