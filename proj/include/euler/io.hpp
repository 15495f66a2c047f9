#ifndef EULER_IO_HPP
#define EULER_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "euler/core.hpp"

namespace euler {

// Digraph text format v1 (UTF-8, line based):
//   v <id>
//   e <id> <tail-id> <head-id>
//   root <edge-id> ...        (optional, order = pi)
//   # comment
struct ParsedDigraph {
    Digraph graph;
    std::vector<Edge> roots;  // empty when no root line
};

ParsedDigraph read_digraph(std::istream& in);
ParsedDigraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& g, const std::vector<Edge>& roots = {});
void write_digraph_file(const std::string& path, const Digraph& g,
                        const std::vector<Edge>& roots = {});

}  // namespace euler

#endif
