#include "dsi/graph_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

#include "dsi/errors.hpp"

namespace dsi {

namespace {

constexpr int kBias = 63;

int data_byte(std::string_view text, std::size_t at) {
  if (at >= text.size()) throw ParseError("truncated graph6 string", at);
  const unsigned char c = static_cast<unsigned char>(text[at]);
  if (c < 63 || c > 126)
    throw ParseError("byte outside graph6 range 63..126", at);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  long long n;
  if (text[0] == '~') {
    // Three-byte order form; handles n = 63 within this library's capacity.
    if (text.size() > 1 && text[1] == '~')
      throw ParseError("eight-byte graph6 order form not supported", 1);
    n = 0;
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | data_byte(text, pos);
  } else {
    n = data_byte(text, 0);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices)
    throw ParseError("graph6 order " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxVertices),
                     0);

  const long long bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  int buffer = 0;
  int buffered = 0;
  long long bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (buffered == 0) {
        buffer = data_byte(text, pos);
        ++pos;
        buffered = 6;
      }
      if ((buffer >> (buffered - 1)) & 1) edges.emplace_back(row, col);
      --buffered;
    }
  }
  (void)bits;
  if (pos != text.size()) throw ParseError("trailing data after graph6 body", pos);
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int buffer = 0;
  int buffered = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      buffer = (buffer << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++buffered == 6) {
        out.push_back(static_cast<char>(buffer + kBias));
        buffer = 0;
        buffered = 0;
      }
    }
  }
  if (buffered > 0)
    out.push_back(static_cast<char>((buffer << (6 - buffered)) + kBias));
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    if (required) throw ParseError("unexpected end of edge list", line_no);
    return false;
  };

  if (!next_line(false)) throw ParseError("empty edge-list input", 0);
  std::istringstream header(line);
  long long n = 0, m = 0;
  if (!(header >> n >> m) || n < 1 || m < 0)
    throw ParseError("expected header line \"n m\"", line_no);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    next_line(true);
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v))
      throw ParseError("expected edge line \"u v\"", line_no);
    edges.emplace_back(u, v);
  }
  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw ParseError(std::string("bad edge list: ") + e.what(), line_no);
  }
}

}  // namespace dsi
