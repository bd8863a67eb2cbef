#ifndef PCOMP_COMPETITION_HPP
#define PCOMP_COMPETITION_HPP

#include <cstddef>

#include "pcomp/graph.hpp"

namespace pcomp {

/// Number of vertices v with arcs (x, v) and (y, v). v may be x or y itself,
/// so loops count. Throws invalid_parameter if x == y or either is out of range.
std::size_t common_prey_count(const Digraph& d, Vertex x, Vertex y);

/// C_p(D): same vertex set, {x, y} an edge iff x and y share at least p prey.
/// p = 1 gives the ordinary competition graph.
Graph p_competition_graph(const Digraph& d, int p);

} // namespace pcomp

#endif // PCOMP_COMPETITION_HPP
