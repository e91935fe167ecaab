#ifndef MATCHPOLY_IO_HPP
#define MATCHPOLY_IO_HPP

#include <iosfwd>
#include <string>

#include "matchpoly/graph.hpp"

namespace matchpoly {

// Edge-list text format: '#' starts a comment line; an optional first
// directive line "vertices N"; every other nonblank line is "u v" with
// 0 <= u,v < N and u != v. Without the directive, N is one past the largest
// endpoint. Duplicate edges and loops are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

} // namespace matchpoly

#endif
