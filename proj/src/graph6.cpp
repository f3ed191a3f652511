#include "pathham/graph6.hpp"

#include <fstream>

namespace pathham {

namespace {
constexpr int kBias = 63;  // printable offset: sextet value 0 encodes as '?'
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view line, std::size_t i) { return static_cast<unsigned char>(line[i]) - kBias; }
}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  if (line.empty()) throw Graph6Error("empty graph6 record");
  for (unsigned char ch : line)
    if (ch < 63 || ch > 126) throw Graph6Error("byte out of graph6 range");

  long n = 0;
  std::size_t pos = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw Graph6Error("graph order exceeds 64");  // 8-byte size prefix starts at 2^18
    if (line.size() < 4) throw Graph6Error("truncated graph6 size prefix");
    n = (long{sextet(line, 1)} << 12) | (long{sextet(line, 2)} << 6) | sextet(line, 3);
    pos = 4;
  } else {
    n = sextet(line, 0);
    pos = 1;
  }
  if (n < 1) throw Graph6Error("graph order must be at least 1");
  if (n > Graph::kMaxVertices) throw Graph6Error("graph order exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - pos < need) throw Graph6Error("truncated graph6 bit stream");
  if (line.size() - pos > need) throw Graph6Error("trailing bytes after graph6 bit stream");

  Graph g(static_cast<int>(n));
  std::size_t idx = 0;
  // upper triangle in column order: (1,0),(2,0),(2,1),(3,0),...
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++idx)
      if ((sextet(line, pos + idx / 6) >> (5 - idx % 6)) & 1) g.add_edge(row, col);
  for (std::size_t t = bits; t < need * 6; ++t)
    if ((sextet(line, pos + t / 6) >> (5 - t % 6)) & 1)
      throw Graph6Error("nonzero padding bits");
  g.check_invariants();
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string s;
  if (n <= 62) {
    s.push_back(static_cast<char>(kBias + n));
  } else {
    s.push_back(126);
    s.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
    s.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
    s.push_back(static_cast<char>(kBias + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) s.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
  return s;
}

std::vector<Graph> read_graph6_stream(std::istream& in, std::string_view source) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.starts_with(kHeader)) line.erase(0, kHeader.size());
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error(std::string(source) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Graph6Error("cannot open " + path.string());
  return read_graph6_stream(in, path.string());
}

void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << emit_graph6(g) << '\n';
}

void write_graph6_file(const std::filesystem::path& path, std::span<const Graph> graphs) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw Graph6Error("cannot open " + path.string() + " for writing");
  write_graph6_stream(out, graphs);
}

}  // namespace pathham
