#include "pcomp/realization.hpp"

#include <string>
#include <vector>

#include "pcomp/errors.hpp"

namespace pcomp {

namespace {

void require_fits(const CliqueCover& f, const char* what)
{
    if (f.size() > f.host_order()) {
        throw infeasible(std::string(what) + ": a realizing digraph needs at most n sets (requires |F| <= n; got " +
                         std::to_string(f.size()) + " sets for n = " + std::to_string(f.host_order()) + ")");
    }
}

// position[v] = index of v in order.
std::vector<std::size_t> positions(const CliqueCover& f, std::span<const Vertex> order)
{
    const std::size_t n = f.host_order();
    if (order.size() != n) {
        throw invalid_parameter("ordering: expected " + std::to_string(n) + " vertices, got " +
                                std::to_string(order.size()));
    }
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n || pos[static_cast<std::size_t>(v)] != n) {
            throw invalid_parameter("ordering: not a permutation of 0.." + std::to_string(n - 1));
        }
        pos[static_cast<std::size_t>(v)] = i;
    }
    return pos;
}

} // namespace

Digraph realize(const CliqueCover& f)
{
    require_fits(f, "realize");
    std::vector<Arc> arcs;
    for (std::size_t j = 0; j < f.size(); ++j) {
        for (Vertex x : f[j]) {
            arcs.emplace_back(x, static_cast<Vertex>(j));
        }
    }
    return Digraph(f.host_order(), arcs);
}

bool satisfies_acyclic_ordering(const CliqueCover& f, std::span<const Vertex> order)
{
    const auto pos = positions(f, order);
    require_fits(f, "satisfies_acyclic_ordering");
    for (std::size_t j = 0; j < f.size(); ++j) {
        for (Vertex x : f[j]) {
            if (pos[static_cast<std::size_t>(x)] >= j) {
                return false;
            }
        }
    }
    return true;
}

Digraph realize_acyclic(const CliqueCover& f, std::span<const Vertex> order)
{
    if (!satisfies_acyclic_ordering(f, order)) {
        throw infeasible("realize_acyclic: ordering violates the condition v_i in S_j => i < j");
    }
    std::vector<Arc> arcs;
    for (std::size_t j = 0; j < f.size(); ++j) {
        for (Vertex x : f[j]) {
            arcs.emplace_back(x, order[j]);
        }
    }
    return Digraph(f.host_order(), arcs);
}

bool is_acyclic(const Digraph& d)
{
    // Kahn's algorithm; a loop keeps its vertex's in-degree positive forever.
    const std::size_t n = d.order();
    std::vector<std::size_t> indegree(n, 0);
    for (auto [x, v] : d.arcs()) {
        ++indegree[static_cast<std::size_t>(v)];
    }
    std::vector<Vertex> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            ready.push_back(static_cast<Vertex>(v));
        }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        const Vertex x = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex v : d.out_neighbors(x)) {
            if (--indegree[static_cast<std::size_t>(v)] == 0) {
                ready.push_back(v);
            }
        }
    }
    return removed == n;
}

} // namespace pcomp
