#ifndef PCOMP_IO_HPP
#define PCOMP_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pcomp/cover.hpp"
#include "pcomp/graph.hpp"
#include "pcomp/oracle.hpp"

namespace pcomp {

/// Malformed or schema-violating input document.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph:   {"n": N, "edges": [[i, j], ...]}   written with i < j, sorted
// Digraph: {"n": N, "arcs": [[x, v], ...]}
// Cover:   {"n": N, "sets": [[...], ...]}     set order preserved

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const CliqueCover& f);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const Decision& d);

Graph graph_from_json(const nlohmann::json& j);
Digraph digraph_from_json(const nlohmann::json& j);
CliqueCover cover_from_json(const nlohmann::json& j);

/// Reads a whole file ("-" for standard input) and parses it as JSON.
nlohmann::json read_json_file(const std::string& path);

std::string to_dot(const Graph& g);
std::string to_dot(const Digraph& d);

} // namespace pcomp

#endif // PCOMP_IO_HPP
