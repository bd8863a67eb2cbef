#ifndef PCOMP_ORACLE_HPP
#define PCOMP_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pcomp/cover.hpp"
#include "pcomp/graph.hpp"

namespace pcomp {

enum class Outcome { exact, exceeds_bound };

std::string_view to_string(Outcome o);

/**
 * Result of an exact search.
 *
 * For Outcome::exact, value is the optimum and certificate holds a cover of
 * that size. For Outcome::exceeds_bound, value is the bound that was exhausted
 * and there is no certificate.
 */
struct SearchResult {
    Outcome outcome = Outcome::exact;
    std::size_t value = 0;
    std::optional<CliqueCover> certificate;
    std::uint64_t nodes_explored = 0;
};

/// Inclusion-maximal cliques in canonical (lexicographic) order. An isolated
/// vertex is its own maximal clique. Throws scale_error if n > guard (max 64).
std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t guard = 32);

struct ThetaOptions {
    /// Report exceeds_bound instead of searching past this many cliques.
    std::optional<std::size_t> upper;
    std::size_t guard = 16;
};

/// Edge clique cover number by branch and bound over maximal cliques. The
/// certificate is the lexicographically least optimal choice of maximal cliques.
SearchResult exact_theta_e(const Graph& g, const ThetaOptions& options = {});

enum class SearchMode {
    exhaustive, ///< every nondecreasing tuple of subsets, checked at the leaves
    pruned      ///< subsets of size >= 2 with pair-count pruning
};

struct ThetaPOptions {
    SearchMode mode = SearchMode::pruned;
    /// Vertex-count guard; defaults to 6 (exhaustive) or 8 (pruned).
    std::optional<std::size_t> guard;
};

/**
 * Smallest r <= budget such that some multifamily of r vertex subsets is a
 * p-edge clique cover of g, or exceeds_bound(budget). Families are enumerated
 * as nondecreasing tuples in canonical set order, so the certificate is the
 * lexicographically least optimal family.
 */
SearchResult exact_theta_e_p(const Graph& g, int p, std::size_t budget, const ThetaPOptions& options = {});

enum class Method { construct, oracle, both };

std::string_view to_string(Method m);

struct Decision {
    bool answer = false;
    Method method = Method::construct;
    /// Size of the witnessing cover when the answer is yes.
    std::optional<std::size_t> cover_size;
    /// Set only when both methods ran.
    std::optional<bool> agree;
    /// Witnessing cover (at most n sets) when the answer is yes.
    std::optional<CliqueCover> certificate;
};

struct DecideOptions {
    /// Run the exact search only for n <= oracle_guard.
    std::size_t oracle_guard = 8;
    SearchMode mode = SearchMode::pruned;
};

/**
 * Decide whether g is a p-competition graph, i.e. whether some p-edge clique
 * cover has at most n sets.
 *
 * Constructive path: g equal to C_n (n >= 4) is decided by n >= p+3, with the
 * cycle cover as certificate; g equal to the complement of C_n (n >= 5) is a
 * yes whenever the lifted complement cover fits in n sets. Oracle path:
 * exact_theta_e_p(g, p, n) when n <= oracle_guard. When both apply, agree
 * records whether they match. Throws unsupported_instance if neither applies.
 */
Decision is_p_competition(const Graph& g, int p, const DecideOptions& options = {});

} // namespace pcomp

#endif // PCOMP_ORACLE_HPP
