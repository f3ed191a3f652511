#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pathham/graph.hpp"

namespace pathham {

struct Graph6Error : std::runtime_error {
  explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

// One graph6 record (no newline). Accepts the 1-byte size prefix for n <= 62
// and the '~'-marked long form up to n = 64; a leading ">>graph6<<" header is
// tolerated. Throws Graph6Error on any malformed input.
Graph parse_graph6(std::string_view line);

// Shortest-form graph6 line for g (no newline).
std::string emit_graph6(const Graph& g);

// One record per line; blank lines and a leading ">>graph6<<" header are
// skipped, CRLF accepted. A malformed record aborts the whole read; the error
// message carries "<source>:<line>:".
std::vector<Graph> read_graph6_stream(std::istream& in, std::string_view source = "<stream>");
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs);
void write_graph6_file(const std::filesystem::path& path, std::span<const Graph> graphs);

}  // namespace pathham
