#include "wz/powercount.hpp"

#include <boost/integer/common_factor.hpp>

#include <bit>
#include <cstdint>

namespace wz {

namespace {

struct ScaledEdge {
    std::uint32_t from;
    std::uint32_t to;
    std::int64_t m;
    std::int64_t r;
    bool positive_r;
};

std::vector<int> members(std::uint32_t mask)
{
    std::vector<int> v;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u)
            v.push_back(i);
    return v;
}

// Keeps the violating subset of smallest size, then lexicographically smallest.
void offer(std::vector<int>& best, bool& failed, std::uint32_t mask)
{
    int size = std::popcount(mask);
    if (failed && size > static_cast<int>(best.size()))
        return;
    std::vector<int> cand = members(mask);
    if (!failed || size < static_cast<int>(best.size()) || cand < best)
        best = std::move(cand);
    failed = true;
}

} // namespace

CheckReport check_assumption_at(const LabelledGraph& g, const Q& kappa)
{
    const int n = static_cast<int>(g.vertices.size());
    if (n > kMaxVertices)
        throw CapacityError("graph has " + std::to_string(n) + " vertices, limit is " + std::to_string(kMaxVertices));
    g.validate();

    // Scale all labels to integers by the common denominator.
    std::int64_t den = 1;
    for (const auto& e : g.edges)
        den = boost::integer::lcm(den, e.label.m.at(kappa).denominator());
    std::vector<ScaledEdge> edges;
    for (const auto& e : g.edges) {
        Q m = e.label.m.at(kappa) * Q(den);
        edges.push_back({1u << e.from, 1u << e.to, m.numerator(), e.label.r * den, e.label.r > 0});
    }
    const std::int64_t three = 3 * den;

    CheckReport rep;
    rep.alpha = alpha(g);
    std::array<bool, 4> failed{false, false, false, false};

    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        Q rminus = e.label.r < 0 ? Q(-e.label.r) : Q(0);
        if (!(e.label.m.at(kappa) - rminus < Q(3))) {
            failed[0] = true;
            rep.witness_edge = static_cast<int>(i);
            rep.witness[0] = {std::min(e.from, e.to), std::max(e.from, e.to)};
            break;
        }
    }

    const std::uint32_t origin_bit = 1u << g.origin();
    std::uint32_t star_bits = origin_bit;
    for (int s : g.stars())
        star_bits |= 1u << s;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1u;

    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const int size = std::popcount(mask);
        const bool has_origin = mask & origin_bit;
        const bool c2 = !has_origin && size >= 3;
        const bool c3 = has_origin && size >= 2;
        const bool c4 = !(mask & star_bits);
        if (!c2 && !c3 && !c4)
            continue;
        std::int64_t inner = 0;    // sum of m over E0
        std::int64_t up3 = 0;      // sum of (m + r - 1) over E_up
        std::int64_t down3 = 0;    // sum of r over E_down
        std::int64_t touched = 0;  // sum of m over E minus E_down
        std::int64_t up4 = 0;      // sum of r over E_up
        std::int64_t down4 = 0;    // sum of (r - 1) over E_down
        for (const auto& e : edges) {
            const bool fin = mask & e.from;
            const bool tin = mask & e.to;
            if (fin && tin) {
                inner += e.m;
                touched += e.m;
            } else if (fin) {
                touched += e.m;
                if (e.positive_r) {
                    up3 += e.m + e.r - den;
                    up4 += e.r;
                }
            } else if (tin) {
                if (e.positive_r) {
                    down3 += e.r;
                    down4 += e.r - den;
                } else {
                    touched += e.m;
                }
            }
        }
        if (c2 && !(inner < three * (size - 1)))
            offer(rep.witness[1], failed[1], mask);
        if (c3 && !(inner + up3 - down3 < three * (size - 1)))
            offer(rep.witness[2], failed[2], mask);
        if (c4 && !(touched + up4 - down4 > three * size))
            offer(rep.witness[3], failed[3], mask);
    }
    for (int c = 0; c < 4; ++c)
        rep.pass[c] = !failed[c];
    return rep;
}

CheckReport check_assumption(const LabelledGraph& g, const KappaParam& kappa)
{
    CheckReport rep = check_assumption_at(g, kappa.value());
    CheckReport at_zero = check_assumption_at(g, Q(0));
    for (int c = 0; c < 4; ++c)
        rep.marginal[c] = rep.pass[c] && !at_zero.pass[c];
    return rep;
}

} // namespace wz
