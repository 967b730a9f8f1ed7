#pragma once

#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// Standard-form graph6 (short form, 1 <= n <= 62), bit-exact per the format
// specification shipped with nauty. One graph per newline-terminated line.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

std::vector<Graph> read_graph6_file(const std::string& path);
std::vector<std::string> read_graph6_lines(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace zf
