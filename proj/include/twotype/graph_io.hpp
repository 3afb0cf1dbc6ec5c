#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twotype/core.hpp"

namespace twotype {

// Text edge-list format:
//   # n=<n> model=<name> seed=<seed>
//   (optional further #-comment lines, preserved verbatim)
//   v <id> <type>     one line per vertex, type 1 or 2
//   e <id1> <id2>     one line per edge
// Writing the parse result back reproduces the input byte for byte.
struct EdgeListFile {
    TypedGraph graph;
    std::string model;
    std::uint64_t seed = 0;
    std::vector<std::string> extra_header; // comment lines after the first, without "# "
};

std::string edge_list_to_string(const EdgeListFile& f);
void write_edge_list(const EdgeListFile& f, const std::string& path);

// Throws ParseError (with line number) on malformed input, std::runtime_error
// on I/O failure. Sets graph.multigraph when the header model is "cm".
EdgeListFile read_edge_list(const std::string& path);

} // namespace twotype
