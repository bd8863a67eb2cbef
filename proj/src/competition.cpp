#include "pcomp/competition.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>

#include "pcomp/errors.hpp"

namespace pcomp {

namespace {

std::size_t sorted_intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

} // namespace

std::size_t common_prey_count(const Digraph& d, Vertex x, Vertex y)
{
    if (!d.contains_vertex(x) || !d.contains_vertex(y)) {
        throw invalid_parameter("common_prey_count: vertex out of range");
    }
    if (x == y) {
        throw invalid_parameter("common_prey_count: requires distinct vertices, got " + std::to_string(x) + " twice");
    }
    return sorted_intersection_size(d.out_neighbors(x), d.out_neighbors(y));
}

Graph p_competition_graph(const Digraph& d, int p)
{
    if (p < 1) {
        throw invalid_parameter("p_competition_graph: requires p >= 1, got p = " + std::to_string(p));
    }
    const auto n = static_cast<Vertex>(d.order());
    std::vector<Edge> edges;
    for (Vertex x = 0; x < n; ++x) {
        // A vertex with fewer than p prey cannot share p of them.
        if (d.out_neighbors(x).size() < static_cast<std::size_t>(p)) {
            continue;
        }
        for (Vertex y = x + 1; y < n; ++y) {
            if (sorted_intersection_size(d.out_neighbors(x), d.out_neighbors(y)) >= static_cast<std::size_t>(p)) {
                edges.emplace_back(x, y);
            }
        }
    }
    return Graph(d.order(), edges);
}

} // namespace pcomp
