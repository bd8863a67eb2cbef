#ifndef PCOMP_GRAPH_HPP
#define PCOMP_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace pcomp {

using Vertex = int;

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Ordered pair (x, v): x preys on v.
using Arc = std::pair<Vertex, Vertex>;

/**
 * A set of vertices, kept sorted and duplicate-free.
 *
 * The set does not know its host vertex count; operations that take a host
 * (a graph or a cover) check membership bounds themselves. Sets compare
 * lexicographically on their sorted member lists, which is the canonical set
 * order used for certificates and search.
 */
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    /// All of 0..n-1.
    static VertexSet full(std::size_t n);

    [[nodiscard]] bool contains(Vertex v) const;
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }

    /// Largest member, or -1 for the empty set.
    [[nodiscard]] Vertex max_member() const { return members_.empty() ? -1 : members_.back(); }

    [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Immutable after construction. Edges are normalized to (min, max) and kept
 * sorted; an adjacency matrix backs the O(1) adjacency query.
 */
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(std::size_t n);

    /// Throws invalid_parameter on loops, duplicates or out-of-range endpoints.
    /// Endpoints may be given in either order.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    [[nodiscard]] std::size_t order() const { return n_; }
    [[nodiscard]] std::size_t size() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] std::size_t degree(Vertex v) const;
    [[nodiscard]] bool contains_vertex(Vertex v) const
    {
        return v >= 0 && static_cast<std::size_t>(v) < n_;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;
};

/**
 * Directed graph on vertices 0..n-1. Loops are allowed, parallel arcs are not.
 */
class Digraph {
public:
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, std::span<const Arc> arcs);
    Digraph(std::size_t n, std::initializer_list<Arc> arcs);

    [[nodiscard]] std::size_t order() const { return n_; }
    [[nodiscard]] std::size_t size() const { return arcs_.size(); }
    [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }

    [[nodiscard]] bool has_arc(Vertex x, Vertex v) const;
    /// Sorted prey of x.
    [[nodiscard]] const std::vector<Vertex>& out_neighbors(Vertex x) const;
    [[nodiscard]] bool contains_vertex(Vertex v) const
    {
        return v >= 0 && static_cast<std::size_t>(v) < n_;
    }

    friend bool operator==(const Digraph& a, const Digraph& b)
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    std::size_t n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
};

/// C_n: edges {i, i+1 mod n}. Throws invalid_parameter for n < 3.
Graph make_cycle(std::size_t n);

Graph complement(const Graph& g);

/// True iff every two distinct members of s are adjacent in g. Empty sets and
/// singletons are cliques. Throws invalid_parameter if a member is not a vertex of g.
bool is_clique(const Graph& g, const VertexSet& s);

/// Label-sensitive equality (same n, same edge set).
bool graph_equals(const Graph& a, const Graph& b);

} // namespace pcomp

#endif // PCOMP_GRAPH_HPP
