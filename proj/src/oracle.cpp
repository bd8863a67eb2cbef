#include "pcomp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <limits>
#include <string>

#include "pcomp/competition.hpp"
#include "pcomp/errors.hpp"
#include "pcomp/realization.hpp"

namespace pcomp {

namespace {

void check_guard(const Graph& g, std::size_t guard, std::size_t hard_limit, const char* what)
{
    const std::size_t limit = std::min(guard, hard_limit);
    if (g.order() > limit) {
        throw scale_error(std::string(what) + ": n = " + std::to_string(g.order()) + " exceeds the search guard of " +
                          std::to_string(limit));
    }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

VertexSet set_from_mask(std::uint64_t mask)
{
    std::vector<Vertex> members;
    while (mask != 0) {
        members.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return VertexSet(std::move(members));
}

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out)
{
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    int best = -1;
    for (std::uint64_t px = p | x; px != 0; px &= px - 1) {
        const int u = std::countr_zero(px);
        const int score = std::popcount(p & adj[static_cast<std::size_t>(u)]);
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (std::uint64_t branch = p & ~adj[static_cast<std::size_t>(pivot)]; branch != 0; branch &= branch - 1) {
        const int v = std::countr_zero(branch);
        const std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(adj, r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)], out);
        p &= ~bit;
        x |= bit;
    }
}

// ---------------------------------------------------------------------------
// Edge clique cover number: set cover of the edges by maximal cliques.

constexpr std::size_t kMaxCoverVertices = 32;
constexpr std::size_t kMaxEdges = kMaxCoverVertices * (kMaxCoverVertices - 1) / 2;
using EdgeMask = std::bitset<kMaxEdges>;

class EdgeCoverSearch {
public:
    EdgeCoverSearch(const Graph& g, std::vector<VertexSet> cliques) : candidates_(std::move(cliques))
    {
        const auto& edges = g.edges();
        edge_count_ = edges.size();
        for (std::size_t e = 0; e < edge_count_; ++e) {
            all_.set(e);
        }
        covers_.resize(candidates_.size());
        last_cover_.assign(edge_count_, 0);
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            for (std::size_t e = 0; e < edge_count_; ++e) {
                if (candidates_[c].contains(edges[e].first) && candidates_[c].contains(edges[e].second)) {
                    covers_[c].set(e);
                    last_cover_[e] = c;
                }
            }
        }
        // Two edges fit in one clique iff their endpoints are pairwise adjacent.
        compatible_.resize(edge_count_);
        for (std::size_t e = 0; e < edge_count_; ++e) {
            const auto [a, b] = edges[e];
            for (std::size_t f = 0; f < edge_count_; ++f) {
                const auto [c, d] = edges[f];
                const bool fits = (a == c || g.adjacent(a, c)) && (a == d || g.adjacent(a, d)) &&
                                  (b == c || g.adjacent(b, c)) && (b == d || g.adjacent(b, d));
                if (fits) {
                    compatible_[e].set(f);
                }
            }
        }
    }

    std::size_t lower_bound() const { return packing_bound(all_); }

    bool run(std::size_t k)
    {
        target_ = k;
        chosen_.clear();
        return dfs(0, EdgeMask{});
    }

    std::vector<VertexSet> solution() const
    {
        std::vector<VertexSet> sets;
        for (std::size_t c : chosen_) {
            sets.push_back(candidates_[c]);
        }
        return sets;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Greedy set of pairwise incompatible edges; each needs its own clique.
    std::size_t packing_bound(EdgeMask open) const
    {
        std::size_t bound = 0;
        for (std::size_t e = open._Find_first(); e < kMaxEdges; e = open._Find_first()) {
            ++bound;
            open &= ~compatible_[e];
        }
        return bound;
    }

    bool dfs(std::size_t start, const EdgeMask& covered)
    {
        ++nodes_;
        const EdgeMask open = all_ & ~covered;
        if (open.none()) {
            return true;
        }
        const std::size_t remaining = target_ - chosen_.size();
        if (remaining == 0 || packing_bound(open) > remaining) {
            return false;
        }
        // Cliques are taken in increasing index order, so every open edge must
        // still have a covering clique at or after the next pick.
        std::size_t limit = std::numeric_limits<std::size_t>::max();
        for (std::size_t e = open._Find_first(); e < kMaxEdges; e = open._Find_next(e)) {
            limit = std::min(limit, last_cover_[e]);
        }
        for (std::size_t c = start; c <= limit && c < candidates_.size(); ++c) {
            if ((covers_[c] & open).none()) {
                continue;
            }
            chosen_.push_back(c);
            if (dfs(c + 1, covered | covers_[c])) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    std::vector<VertexSet> candidates_;
    std::vector<EdgeMask> covers_;
    std::vector<EdgeMask> compatible_;
    std::vector<std::size_t> last_cover_;
    EdgeMask all_;
    std::size_t edge_count_ = 0;
    std::size_t target_ = 0;
    std::vector<std::size_t> chosen_;
    std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// p-edge clique cover number: nondecreasing tuples of vertex subsets.

constexpr std::size_t kMaxFamilyVertices = 16;

class FamilySearch {
public:
    FamilySearch(const Graph& g, int p, SearchMode mode) : n_(g.order()), p_(p), mode_(mode)
    {
        const auto n = static_cast<Vertex>(n_);
        std::vector<int> pair_id(n_ * n_, -1);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                const auto slot = static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
                if (g.adjacent(u, v)) {
                    pair_id[slot] = static_cast<int>(edge_count_++);
                } else {
                    pair_id[slot] = -2 - static_cast<int>(nonedge_count_++);
                }
            }
        }

        const std::uint64_t subsets = std::uint64_t{1} << n_;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            if (mode_ == SearchMode::pruned && std::popcount(mask) < 2) {
                continue;
            }
            candidates_.push_back(set_from_mask(mask));
        }
        std::sort(candidates_.begin(), candidates_.end());

        edges_in_.resize(candidates_.size());
        nonedges_in_.resize(candidates_.size());
        last_index_.assign(edge_count_, 0);
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            const auto& m = candidates_[c].members();
            for (std::size_t a = 0; a < m.size(); ++a) {
                for (std::size_t b = a + 1; b < m.size(); ++b) {
                    const int id = pair_id[static_cast<std::size_t>(m[a]) * n_ + static_cast<std::size_t>(m[b])];
                    if (id >= 0) {
                        edges_in_[c].push_back(static_cast<std::size_t>(id));
                        last_index_[static_cast<std::size_t>(id)] = c;
                    } else {
                        nonedges_in_[c].push_back(static_cast<std::size_t>(-2 - id));
                    }
                }
            }
        }
    }

    bool run(std::size_t r)
    {
        target_ = r;
        chosen_.clear();
        edge_hits_.assign(edge_count_, 0);
        nonedge_hits_.assign(nonedge_count_, 0);
        return mode_ == SearchMode::pruned ? pruned(0) : exhaustive(0);
    }

    std::vector<VertexSet> solution() const
    {
        std::vector<VertexSet> sets;
        for (std::size_t c : chosen_) {
            sets.push_back(candidates_[c]);
        }
        return sets;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void add(std::size_t c)
    {
        chosen_.push_back(c);
        for (std::size_t e : edges_in_[c]) {
            ++edge_hits_[e];
        }
        for (std::size_t e : nonedges_in_[c]) {
            ++nonedge_hits_[e];
        }
    }

    void remove(std::size_t c)
    {
        chosen_.pop_back();
        for (std::size_t e : edges_in_[c]) {
            --edge_hits_[e];
        }
        for (std::size_t e : nonedges_in_[c]) {
            --nonedge_hits_[e];
        }
    }

    bool leaf_valid() const
    {
        const auto need = static_cast<std::size_t>(p_);
        return std::all_of(edge_hits_.begin(), edge_hits_.end(), [need](std::size_t h) { return h >= need; }) &&
               std::all_of(nonedge_hits_.begin(), nonedge_hits_.end(), [need](std::size_t h) { return h < need; });
    }

    bool exhaustive(std::size_t start)
    {
        ++nodes_;
        if (chosen_.size() == target_) {
            return leaf_valid();
        }
        for (std::size_t c = start; c < candidates_.size(); ++c) {
            add(c);
            if (exhaustive(c)) {
                return true;
            }
            remove(c);
        }
        return false;
    }

    bool pruned(std::size_t start)
    {
        ++nodes_;
        const std::size_t remaining = target_ - chosen_.size();
        const auto need = static_cast<std::size_t>(p_);
        std::size_t limit = std::numeric_limits<std::size_t>::max();
        bool deficient = false;
        for (std::size_t e = 0; e < edge_count_; ++e) {
            if (edge_hits_[e] < need) {
                if (need - edge_hits_[e] > remaining) {
                    return false;
                }
                deficient = true;
                limit = std::min(limit, last_index_[e]);
            }
        }
        if (!deficient) {
            // A valid family with fewer sets would have been found at a smaller r.
            return remaining == 0;
        }
        for (std::size_t c = start; c <= limit && c < candidates_.size(); ++c) {
            const auto& bad = nonedges_in_[c];
            if (std::any_of(bad.begin(), bad.end(), [&](std::size_t e) { return nonedge_hits_[e] + 1 >= need; })) {
                continue;
            }
            add(c);
            if (pruned(c)) {
                return true;
            }
            remove(c);
        }
        return false;
    }

    std::size_t n_;
    int p_;
    SearchMode mode_;
    std::size_t edge_count_ = 0;
    std::size_t nonedge_count_ = 0;
    std::vector<VertexSet> candidates_;
    std::vector<std::vector<std::size_t>> edges_in_;
    std::vector<std::vector<std::size_t>> nonedges_in_;
    std::vector<std::size_t> last_index_;
    std::vector<std::size_t> edge_hits_;
    std::vector<std::size_t> nonedge_hits_;
    std::vector<std::size_t> chosen_;
    std::size_t target_ = 0;
    std::uint64_t nodes_ = 0;
};

struct ConstructiveAnswer {
    bool answer;
    std::optional<CliqueCover> cover;
};

std::optional<ConstructiveAnswer> constructive_decision(const Graph& g, int p)
{
    const std::size_t n = g.order();
    // C_3 is K_3, outside the range where n >= p+3 characterizes cycles.
    if (n >= 4 && g == make_cycle(n)) {
        if (n < static_cast<std::size_t>(p) + 3) {
            return ConstructiveAnswer{false, std::nullopt};
        }
        return ConstructiveAnswer{true, cycle_cover(n, p)};
    }
    if (n >= 5 && g == complement(make_cycle(n))) {
        const auto base = complement_cycle_cover(n);
        if (base.size() + static_cast<std::size_t>(p) - 1 <= n) {
            return ConstructiveAnswer{true, lift_cover(base, p)};
        }
    }
    return std::nullopt;
}

void check_roundtrip(const Graph& g, const CliqueCover& cover, int p)
{
    if (!verify_p_ecc(g, cover, p).valid() || !(p_competition_graph(realize(cover), p) == g)) {
        throw std::logic_error("is_p_competition: certificate failed its own roundtrip");
    }
}

} // namespace

std::string_view to_string(Outcome o)
{
    return o == Outcome::exact ? "exact" : "exceeds-bound";
}

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::construct:
        return "construct";
    case Method::oracle:
        return "oracle";
    case Method::both:
        return "both";
    }
    return "unknown";
}

std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t guard)
{
    check_guard(g, guard, 64, "maximal_cliques");
    const auto adj = adjacency_masks(g);
    const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    std::vector<std::uint64_t> masks;
    bron_kerbosch(adj, 0, all, 0, masks);
    std::vector<VertexSet> cliques;
    cliques.reserve(masks.size());
    for (auto m : masks) {
        cliques.push_back(set_from_mask(m));
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

SearchResult exact_theta_e(const Graph& g, const ThetaOptions& options)
{
    check_guard(g, options.guard, kMaxCoverVertices, "exact_theta_e");
    if (g.size() == 0) {
        return {Outcome::exact, 0, CliqueCover(g.order(), {}), 1};
    }

    auto cliques = maximal_cliques(g, kMaxCoverVertices);
    std::erase_if(cliques, [](const VertexSet& s) { return s.size() < 2; });
    EdgeCoverSearch search(g, std::move(cliques));

    // One maximal clique per edge always works.
    const std::size_t cap = std::min(options.upper.value_or(g.size()), g.size());
    for (std::size_t k = search.lower_bound(); k <= cap; ++k) {
        if (search.run(k)) {
            return {Outcome::exact, k, CliqueCover(g.order(), search.solution()), search.nodes()};
        }
    }
    return {Outcome::exceeds_bound, cap, std::nullopt, search.nodes()};
}

SearchResult exact_theta_e_p(const Graph& g, int p, std::size_t budget, const ThetaPOptions& options)
{
    if (p < 1) {
        throw invalid_parameter("exact_theta_e_p: requires p >= 1, got p = " + std::to_string(p));
    }
    const std::size_t default_guard = options.mode == SearchMode::exhaustive ? 6 : 8;
    check_guard(g, options.guard.value_or(default_guard), kMaxFamilyVertices, "exact_theta_e_p");

    FamilySearch search(g, p, options.mode);
    for (std::size_t r = 0; r <= budget; ++r) {
        if (search.run(r)) {
            return {Outcome::exact, r, CliqueCover(g.order(), search.solution()), search.nodes()};
        }
    }
    return {Outcome::exceeds_bound, budget, std::nullopt, search.nodes()};
}

Decision is_p_competition(const Graph& g, int p, const DecideOptions& options)
{
    if (p < 1) {
        throw invalid_parameter("is_p_competition: requires p >= 1, got p = " + std::to_string(p));
    }
    const auto constructive = constructive_decision(g, p);
    if (constructive && constructive->cover) {
        check_roundtrip(g, *constructive->cover, p);
    }

    std::optional<SearchResult> searched;
    if (g.order() <= options.oracle_guard) {
        ThetaPOptions search_options{options.mode, options.oracle_guard};
        searched = exact_theta_e_p(g, p, g.order(), search_options);
    }

    if (!constructive && !searched) {
        throw unsupported_instance("is_p_competition: graph is neither C_n nor a complement of C_n within the "
                                   "constructive range, and n = " +
                                   std::to_string(g.order()) + " exceeds the oracle guard of " +
                                   std::to_string(options.oracle_guard));
    }

    Decision decision;
    if (searched) {
        const bool oracle_answer = searched->outcome == Outcome::exact;
        decision.answer = oracle_answer;
        decision.method = Method::oracle;
        if (oracle_answer) {
            check_roundtrip(g, *searched->certificate, p);
            decision.certificate = searched->certificate;
        }
        if (constructive) {
            decision.method = Method::both;
            decision.agree = constructive->answer == oracle_answer;
        }
    }
    if (constructive) {
        // The construction is the primary witness whenever it applies.
        decision.answer = constructive->answer;
        if (constructive->cover) {
            decision.certificate = constructive->cover;
        } else if (decision.agree == false) {
            decision.certificate.reset();
        }
        if (!searched) {
            decision.method = Method::construct;
        }
    }
    if (decision.answer && decision.certificate) {
        decision.cover_size = decision.certificate->size();
    }
    return decision;
}

} // namespace pcomp
