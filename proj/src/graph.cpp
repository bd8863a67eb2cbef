#include "pcomp/graph.hpp"

#include <algorithm>
#include <string>

#include "pcomp/errors.hpp"

namespace pcomp {

namespace {

void check_vertex(std::size_t n, Vertex v, const char* what)
{
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw invalid_parameter(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range for n = " + std::to_string(n));
    }
}

} // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 0) {
        throw invalid_parameter("vertex set: negative vertex " + std::to_string(members_.front()));
    }
}

VertexSet VertexSet::full(std::size_t n)
{
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = static_cast<Vertex>(i);
    }
    return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0)
{
    if (n == 0) {
        throw invalid_parameter("graph: vertex count must be at least 1");
    }
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
{
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(n, u, "graph");
        check_vertex(n, v, "graph");
        if (u == v) {
            throw invalid_parameter("graph: self-pair {" + std::to_string(u) + "," + std::to_string(u) + "}");
        }
        if (u > v) {
            std::swap(u, v);
        }
        auto& cell = adj_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
        if (cell != 0) {
            throw invalid_parameter("graph: duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        cell = 1;
        adj_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (!contains_vertex(u) || !contains_vertex(v)) {
        return false;
    }
    return adj_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] != 0;
}

std::size_t Graph::degree(Vertex v) const
{
    check_vertex(n_, v, "degree");
    auto row = adj_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * n_);
    return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), std::uint8_t{1}));
}

Digraph::Digraph(std::size_t n) : n_(n), out_(n)
{
    if (n == 0) {
        throw invalid_parameter("digraph: vertex count must be at least 1");
    }
}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) : Digraph(n)
{
    arcs_.assign(arcs.begin(), arcs.end());
    for (auto [x, v] : arcs_) {
        check_vertex(n, x, "digraph");
        check_vertex(n, v, "digraph");
    }
    std::sort(arcs_.begin(), arcs_.end());
    auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
    if (dup != arcs_.end()) {
        throw invalid_parameter("digraph: duplicate arc (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
    }
    for (auto [x, v] : arcs_) {
        out_[static_cast<std::size_t>(x)].push_back(v);
    }
}

Digraph::Digraph(std::size_t n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()))
{
}

bool Digraph::has_arc(Vertex x, Vertex v) const
{
    if (!contains_vertex(x) || !contains_vertex(v)) {
        return false;
    }
    const auto& prey = out_[static_cast<std::size_t>(x)];
    return std::binary_search(prey.begin(), prey.end(), v);
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex x) const
{
    check_vertex(n_, x, "out_neighbors");
    return out_[static_cast<std::size_t>(x)];
}

Graph make_cycle(std::size_t n)
{
    if (n < 3) {
        throw invalid_parameter("cycle: requires n >= 3, got n = " + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
    return Graph(n, edges);
}

Graph complement(const Graph& g)
{
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.order(), edges);
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s) {
        check_vertex(g.order(), v, "is_clique");
    }
    const auto& m = s.members();
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            if (!g.adjacent(m[a], m[b])) {
                return false;
            }
        }
    }
    return true;
}

bool graph_equals(const Graph& a, const Graph& b)
{
    return a == b;
}

} // namespace pcomp
