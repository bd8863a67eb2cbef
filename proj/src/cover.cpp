#include "pcomp/cover.hpp"

#include <string>

#include "pcomp/errors.hpp"

namespace pcomp {

namespace {

// {first, first+2, ..., <= last}; empty when first > last.
std::vector<Vertex> stride2(Vertex first, Vertex last)
{
    std::vector<Vertex> out;
    for (Vertex v = first; v <= last; v += 2) {
        out.push_back(v);
    }
    return out;
}

VertexSet join(std::initializer_list<std::vector<Vertex>> parts)
{
    std::vector<Vertex> all;
    for (const auto& part : parts) {
        all.insert(all.end(), part.begin(), part.end());
    }
    return VertexSet(std::move(all));
}

std::vector<VertexSet> small_complement_cover(std::size_t n)
{
    switch (n) {
    case 5: // the complement of C_5 is again a 5-cycle; one set per edge
        return {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}};
    case 6:
        return {{0, 2, 4}, {1, 3, 5}, {2, 5}, {1, 4}, {0, 3}};
    case 7:
        return {{0, 2, 5}, {1, 3, 6}, {2, 0, 4}, {3, 1, 5}, {4, 2, 6}, {0, 3}, {1, 4}};
    case 8:
        return {{0, 3, 5}, {2, 5, 7}, {4, 1, 7}, {6, 1, 3}, {0, 2, 4, 6}, {1, 3, 5, 7}};
    default:
        return {};
    }
}

// Odd n >= 9: S_1, S_2, S_3, T_1, T_3, T_5, T_7, ..., T_{n-2}.
std::vector<VertexSet> odd_complement_cover(Vertex n)
{
    std::vector<VertexSet> sets;
    sets.push_back(join({stride2(0, n - 3)}));
    sets.push_back(join({{0}, stride2(3, n - 2)}));
    sets.push_back(join({stride2(1, n - 2)}));
    sets.push_back(join({{1}, stride2(4, n - 1)}));
    sets.push_back(join({{3}, stride2(6, n - 1)}));
    sets.push_back(join({{5}, stride2(8, n - 1), {2}}));
    // For i = n-2 the tail run is empty: n-1 is a cycle neighbour of n-2.
    for (Vertex i = 7; i <= n - 2; i += 2) {
        sets.push_back(join({{i}, stride2(2, i - 3), stride2(i + 3, n - 1)}));
    }
    return sets;
}

// Even n >= 10: S, T_0, T_2, T_4, ..., T_{n-2}.
std::vector<VertexSet> even_complement_cover(Vertex n)
{
    std::vector<VertexSet> sets;
    sets.push_back(join({stride2(0, n - 2)}));
    sets.push_back(join({{0}, stride2(3, n - 3)}));
    sets.push_back(join({{2}, stride2(5, n - 1)}));
    for (Vertex i = 4; i <= n - 4; i += 2) {
        sets.push_back(join({{i}, stride2(1, i - 3), stride2(i + 3, n - 1)}));
    }
    sets.push_back(join({{n - 2}, stride2(1, n - 5)}));
    return sets;
}

void require_same_host(const Graph& g, const CliqueCover& f, const char* what)
{
    if (g.order() != f.host_order()) {
        throw invalid_parameter(std::string(what) + ": graph has " + std::to_string(g.order()) +
                                " vertices but cover is over " + std::to_string(f.host_order()));
    }
}

} // namespace

CliqueCover::CliqueCover(std::size_t n, std::vector<VertexSet> sets) : n_(n), sets_(std::move(sets))
{
    if (n == 0) {
        throw invalid_parameter("cover: host vertex count must be at least 1");
    }
    for (std::size_t j = 0; j < sets_.size(); ++j) {
        if (sets_[j].max_member() >= static_cast<Vertex>(n)) {
            throw invalid_parameter("cover: set " + std::to_string(j) + " contains vertex " +
                                    std::to_string(sets_[j].max_member()) + " >= n = " + std::to_string(n));
        }
    }
}

std::string_view to_string(Violation v)
{
    switch (v) {
    case Violation::uncovered_edge:
        return "uncovered-edge";
    case Violation::nonedge_in_p_sets:
        return "nonedge-in-p-sets";
    case Violation::family_smaller_than_p:
        return "family-smaller-than-p";
    }
    return "unknown";
}

std::size_t co_membership(const CliqueCover& f, Vertex u, Vertex v)
{
    std::size_t count = 0;
    for (const auto& s : f.sets()) {
        if (s.contains(u) && s.contains(v)) {
            ++count;
        }
    }
    return count;
}

std::vector<std::size_t> co_membership_table(const CliqueCover& f)
{
    const std::size_t n = f.host_order();
    std::vector<std::size_t> table(n * n, 0);
    for (const auto& s : f.sets()) {
        const auto& m = s.members();
        for (std::size_t a = 0; a < m.size(); ++a) {
            const auto u = static_cast<std::size_t>(m[a]);
            ++table[u * n + u];
            for (std::size_t b = a + 1; b < m.size(); ++b) {
                const auto v = static_cast<std::size_t>(m[b]);
                ++table[u * n + v];
                ++table[v * n + u];
            }
        }
    }
    return table;
}

Verdict verify_ecc(const Graph& g, const CliqueCover& f)
{
    require_same_host(g, f, "verify_ecc");
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto& m = f[j].members();
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = a + 1; b < m.size(); ++b) {
                if (!g.adjacent(m[a], m[b])) {
                    return {Witness{Violation::nonedge_in_p_sets, Edge{m[a], m[b]}, j}};
                }
            }
        }
    }
    const auto table = co_membership_table(f);
    const std::size_t n = g.order();
    for (auto [u, v] : g.edges()) {
        if (table[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] == 0) {
            return {Witness{Violation::uncovered_edge, Edge{u, v}, std::nullopt}};
        }
    }
    return {};
}

Verdict verify_p_ecc(const Graph& g, const CliqueCover& f, int p)
{
    require_same_host(g, f, "verify_p_ecc");
    if (p < 1) {
        throw invalid_parameter("verify_p_ecc: requires p >= 1, got p = " + std::to_string(p));
    }
    if (f.size() < static_cast<std::size_t>(p)) {
        if (g.size() == 0) {
            return {};
        }
        return {Witness{Violation::family_smaller_than_p, g.edges().front(), std::nullopt}};
    }

    const auto need = static_cast<std::size_t>(p);
    const auto table = co_membership_table(f);
    const auto n = static_cast<Vertex>(g.order());
    auto count = [&](Vertex u, Vertex v) {
        return table[static_cast<std::size_t>(u) * g.order() + static_cast<std::size_t>(v)];
    };
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v) && count(u, v) >= need) {
                return {Witness{Violation::nonedge_in_p_sets, Edge{u, v}, std::nullopt}};
            }
        }
    }
    for (auto [u, v] : g.edges()) {
        if (count(u, v) < need) {
            return {Witness{Violation::uncovered_edge, Edge{u, v}, std::nullopt}};
        }
    }
    return {};
}

CliqueCover cycle_cover(std::size_t n, int p)
{
    if (p < 1) {
        throw invalid_parameter("cycle_cover: requires p >= 1, got p = " + std::to_string(p));
    }
    if (n < static_cast<std::size_t>(p) + 3) {
        throw infeasible("cycle_cover: C_n is a p-competition graph only when n >= p+3 (requires n >= p+3; got n = " +
                         std::to_string(n) + ", p = " + std::to_string(p) + ")");
    }
    std::vector<VertexSet> sets;
    sets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vertex> window;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(p); ++k) {
            window.push_back(static_cast<Vertex>((i + k) % n));
        }
        sets.emplace_back(std::move(window));
    }
    return CliqueCover(n, std::move(sets));
}

CliqueCover complement_cycle_cover(std::size_t n)
{
    if (n < 5) {
        throw invalid_parameter("complement_cycle_cover: requires n >= 5, got n = " + std::to_string(n));
    }
    if (n <= 8) {
        return CliqueCover(n, small_complement_cover(n));
    }
    const auto m = static_cast<Vertex>(n);
    return CliqueCover(n, n % 2 == 1 ? odd_complement_cover(m) : even_complement_cover(m));
}

CliqueCover lift_cover(const CliqueCover& f, int p)
{
    if (p < 1) {
        throw invalid_parameter("lift_cover: requires p >= 1, got p = " + std::to_string(p));
    }
    auto sets = f.sets();
    const auto all = VertexSet::full(f.host_order());
    for (int k = 1; k < p; ++k) {
        sets.push_back(all);
    }
    return CliqueCover(f.host_order(), std::move(sets));
}

} // namespace pcomp
