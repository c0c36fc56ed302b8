#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "topoidx/errors.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

// Edge-list text format:
//   - lines starting with '#' are comments, blank lines are ignored
//   - first data line: "n m"
//   - then exactly m lines "u v" with 0-based decimal vertex ids
// Emission writes each edge once with u < v, sorted lexicographically.

namespace detail {

inline bool is_data_line(const std::string& line) {
    if (line.empty()) return false;
    if (line[0] == '#') return false;
    return line.find_first_not_of(" \t\r") != std::string::npos;
}

inline void parse_two_ints(const std::string& line, std::size_t line_no, std::int64_t& a,
                           std::int64_t& b, const char* what) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) throw ParseError(line_no, std::string("expected ") + what);
    if (ss >> extra) throw ParseError(line_no, "trailing data after " + std::string(what));
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::int64_t n = -1, m = -1;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::is_data_line(line)) continue;
        if (n < 0) {
            detail::parse_two_ints(line, line_no, n, m, "header \"n m\"");
            if (n < 0 || m < 0) throw ParseError(line_no, "n and m must be nonnegative");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (static_cast<std::int64_t>(edges.size()) == m)
            throw ParseError(line_no, "more than m edge lines");
        std::int64_t u, v;
        detail::parse_two_ints(line, line_no, u, v, "edge \"u v\"");
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) throw ParseError(line_no, "missing header \"n m\"");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " +
                                      std::to_string(edges.size()));
    return Graph(static_cast<Vertex>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameterError("cannot open input file: " + path);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace topoidx
