#include "pcomp/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <vector>

#include "pcomp/errors.hpp"

namespace pcomp {

using nlohmann::json;

namespace {

std::size_t read_order(const json& j, const char* what)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw parse_error(std::string(what) + ": expected an object with integer field \"n\"");
    }
    const auto n = j["n"].get<long long>();
    if (n < 1) {
        throw parse_error(std::string(what) + ": \"n\" must be at least 1");
    }
    return static_cast<std::size_t>(n);
}

const json& read_array(const json& j, const char* key, const char* what)
{
    if (!j.contains(key) || !j[key].is_array()) {
        throw parse_error(std::string(what) + ": expected array field \"" + key + "\"");
    }
    return j[key];
}

Vertex read_vertex(const json& v, const char* what)
{
    if (!v.is_number_integer()) {
        throw parse_error(std::string(what) + ": vertices must be integers");
    }
    const auto x = v.get<long long>();
    if (x < 0 || x > std::numeric_limits<Vertex>::max()) {
        throw parse_error(std::string(what) + ": vertex " + std::to_string(x) + " out of range");
    }
    return static_cast<Vertex>(x);
}

std::vector<std::pair<Vertex, Vertex>> read_pairs(const json& list, const char* what)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& item : list) {
        if (!item.is_array() || item.size() != 2) {
            throw parse_error(std::string(what) + ": each entry must be a two-element array");
        }
        pairs.emplace_back(read_vertex(item[0], what), read_vertex(item[1], what));
    }
    return pairs;
}

json pairs_to_json(const std::vector<std::pair<Vertex, Vertex>>& pairs)
{
    json out = json::array();
    for (auto [a, b] : pairs) {
        out.push_back({a, b});
    }
    return out;
}

template <typename Fn>
auto rethrow_as_parse_error(Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const invalid_parameter& e) {
        throw parse_error(e.what());
    }
}

} // namespace

json to_json(const Graph& g)
{
    return {{"n", g.order()}, {"edges", pairs_to_json(g.edges())}};
}

json to_json(const Digraph& d)
{
    return {{"n", d.order()}, {"arcs", pairs_to_json(d.arcs())}};
}

json to_json(const CliqueCover& f)
{
    json sets = json::array();
    for (const auto& s : f.sets()) {
        sets.push_back(s.members());
    }
    return {{"n", f.host_order()}, {"sets", sets}};
}

json to_json(const Verdict& v)
{
    json out = {{"valid", v.valid()}, {"witness", nullptr}};
    if (v.witness) {
        json w = {{"reason", std::string(to_string(v.witness->reason))}, {"pair", nullptr}};
        if (v.witness->pair) {
            w["pair"] = {v.witness->pair->first, v.witness->pair->second};
        }
        if (v.witness->set_index) {
            w["set"] = *v.witness->set_index;
        }
        out["witness"] = w;
    }
    return out;
}

json to_json(const SearchResult& r)
{
    json out = {{"outcome", std::string(to_string(r.outcome))},
                {"value", nullptr},
                {"certificate", nullptr},
                {"nodes", r.nodes_explored}};
    if (r.outcome == Outcome::exact) {
        out["value"] = r.value;
    } else {
        out["bound"] = r.value;
    }
    if (r.certificate) {
        out["certificate"] = to_json(*r.certificate);
    }
    return out;
}

json to_json(const Decision& d)
{
    json out = {{"answer", d.answer},
                {"method", std::string(to_string(d.method))},
                {"cover_size", nullptr},
                {"agree", nullptr},
                {"certificate", nullptr}};
    if (d.cover_size) {
        out["cover_size"] = *d.cover_size;
    }
    if (d.agree) {
        out["agree"] = *d.agree;
    }
    if (d.certificate) {
        out["certificate"] = to_json(*d.certificate);
    }
    return out;
}

Graph graph_from_json(const json& j)
{
    const auto n = read_order(j, "graph");
    const auto edges = read_pairs(read_array(j, "edges", "graph"), "graph");
    return rethrow_as_parse_error([&] { return Graph(n, edges); });
}

Digraph digraph_from_json(const json& j)
{
    const auto n = read_order(j, "digraph");
    const auto arcs = read_pairs(read_array(j, "arcs", "digraph"), "digraph");
    return rethrow_as_parse_error([&] { return Digraph(n, arcs); });
}

CliqueCover cover_from_json(const json& j)
{
    const auto n = read_order(j, "cover");
    std::vector<VertexSet> sets;
    for (const auto& s : read_array(j, "sets", "cover")) {
        if (!s.is_array()) {
            throw parse_error("cover: each set must be an array");
        }
        std::vector<Vertex> members;
        for (const auto& v : s) {
            members.push_back(read_vertex(v, "cover"));
        }
        sets.emplace_back(std::move(members));
    }
    return rethrow_as_parse_error([&] { return CliqueCover(n, std::move(sets)); });
}

json read_json_file(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) {
            throw parse_error("cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

std::string to_dot(const Graph& g)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        out << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Digraph& d)
{
    std::ostringstream out;
    out << "digraph D {\n";
    for (std::size_t v = 0; v < d.order(); ++v) {
        out << "  " << v << ";\n";
    }
    for (auto [x, v] : d.arcs()) {
        out << "  " << x << " -> " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pcomp
