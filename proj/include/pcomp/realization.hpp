#ifndef PCOMP_REALIZATION_HPP
#define PCOMP_REALIZATION_HPP

#include <span>

#include "pcomp/cover.hpp"
#include "pcomp/graph.hpp"

namespace pcomp {

/// Digraph with arc (x, j) iff x is in set j. Two vertices then share exactly as
/// many prey as sets containing both. Missing sets (size < n) act as empty.
/// Throws infeasible if the cover has more sets than vertices.
Digraph realize(const CliqueCover& f);

/// order[i] is the i-th vertex of the ordering; set j is attached to order[j].
/// True iff every member x of set j sits at a position strictly before j.
/// Throws invalid_parameter if order is not a permutation of 0..n-1.
bool satisfies_acyclic_ordering(const CliqueCover& f, std::span<const Vertex> order);

/// Arc (x, order[j]) for every x in set j. Throws infeasible when the ordering
/// condition fails; the result is acyclic otherwise.
Digraph realize_acyclic(const CliqueCover& f, std::span<const Vertex> order);

/// No directed cycle; a loop is a cycle of length one.
bool is_acyclic(const Digraph& d);

} // namespace pcomp

#endif // PCOMP_REALIZATION_HPP
