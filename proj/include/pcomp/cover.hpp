#ifndef PCOMP_COVER_HPP
#define PCOMP_COVER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pcomp/graph.hpp"

namespace pcomp {

/**
 * Ordered multifamily of vertex sets over a host of n vertices.
 *
 * Order matters: realization attaches set j to vertex j. Repeated sets are
 * allowed and count separately.
 */
class CliqueCover {
public:
    /// Throws invalid_parameter if n == 0 or some member is >= n.
    CliqueCover(std::size_t n, std::vector<VertexSet> sets);

    [[nodiscard]] std::size_t host_order() const { return n_; }
    [[nodiscard]] std::size_t size() const { return sets_.size(); }
    [[nodiscard]] const std::vector<VertexSet>& sets() const { return sets_; }
    [[nodiscard]] const VertexSet& operator[](std::size_t j) const { return sets_[j]; }

    friend bool operator==(const CliqueCover&, const CliqueCover&) = default;

private:
    std::size_t n_;
    std::vector<VertexSet> sets_;
};

enum class Violation {
    uncovered_edge,       ///< an edge lies together in fewer than p sets
    nonedge_in_p_sets,    ///< a nonadjacent pair lies together in p or more sets
    family_smaller_than_p ///< fewer than p sets but the graph has edges
};

std::string_view to_string(Violation v);

struct Witness {
    Violation reason;
    std::optional<Edge> pair;
    /// Offending set, reported by verify_ecc for non-clique members.
    std::optional<std::size_t> set_index;
};

/// Valid iff no witness.
struct Verdict {
    std::optional<Witness> witness;

    [[nodiscard]] bool valid() const { return !witness.has_value(); }
    explicit operator bool() const { return valid(); }
};

/// Number of sets of f containing both u and v.
std::size_t co_membership(const CliqueCover& f, Vertex u, Vertex v);

/// Row-major n x n table of co_membership over all pairs; the diagonal holds
/// plain membership counts.
std::vector<std::size_t> co_membership_table(const CliqueCover& f);

/// Every set is a clique of g and every edge of g lies inside some set.
Verdict verify_ecc(const Graph& g, const CliqueCover& f);

/**
 * p-edge clique cover check through pair counts: every nonadjacent pair lies
 * together in at most p-1 sets and every edge in at least p sets. This is
 * equivalent to asking that all p-wise intersections be cliques that jointly
 * cover the edges. A family with fewer than p sets has no p-wise intersections
 * and is valid only for an edgeless graph.
 */
Verdict verify_p_ecc(const Graph& g, const CliqueCover& f, int p);

/// Sets {i, i+1, ..., i+p} mod n for i = 0..n-1. Throws infeasible unless n >= p+3.
CliqueCover cycle_cover(std::size_t n, int p);

/**
 * Edge clique cover of the complement of C_n, n >= 5.
 *
 * n = 5..8 use fixed families; odd n >= 9 yields (n+5)/2 sets and even n >= 10
 * yields n/2+1 sets. All sets are independent sets of C_n.
 */
CliqueCover complement_cycle_cover(std::size_t n);

/// Appends p-1 copies of the full vertex set. An edge clique cover of size k
/// becomes a p-edge clique cover of size k+p-1.
CliqueCover lift_cover(const CliqueCover& f, int p);

} // namespace pcomp

#endif // PCOMP_COVER_HPP
