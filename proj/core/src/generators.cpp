#include "dsi/generators.hpp"

#include <array>
#include <charconv>
#include <string>
#include <vector>

#include "dsi/errors.hpp"

namespace dsi {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void add_clique(EdgeList& edges, int first, int count) {
  for (int u = first; u < first + count; ++u)
    for (int v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
}

void add_cross(EdgeList& edges, int a_first, int a_count, int b_first, int b_count) {
  for (int u = a_first; u < a_first + a_count; ++u)
    for (int v = b_first; v < b_first + b_count; ++v) edges.emplace_back(u, v);
}

void check(bool ok, const char* family, const char* what) {
  if (!ok)
    throw std::logic_error(std::string(family) + ": construction violates " + what);
}

void check_order_size(const Graph& g, int n, int m, const char* family) {
  check(g.order() == n, family, "stated order");
  check(g.size() == m, family, "stated size");
}

void check_regular(const Graph& g, int d, const char* family) {
  check(g.min_degree() == d && g.max_degree() == d, family, "stated regularity");
}

int require_param(long long value, long long lo, const char* family, const char* name) {
  if (value < lo)
    throw InputError(std::string(family) + ": parameter " + name +
                     " must be >= " + std::to_string(lo) + ", got " +
                     std::to_string(value));
  return static_cast<int>(value);
}

void require_capacity(long long n, const char* family) {
  if (n > kMaxVertices)
    throw InputError(std::string(family) + ": order " + std::to_string(n) +
                     " exceeds capacity " + std::to_string(kMaxVertices));
}

}  // namespace

Graph complete_graph(int r) {
  require_param(r, 1, "complete", "r");
  require_capacity(r, "complete");
  EdgeList edges;
  add_clique(edges, 0, r);
  Graph g = Graph::from_edge_list(r, edges);
  check_order_size(g, r, r * (r - 1) / 2, "complete");
  return g;
}

Graph empty_graph(int r) {
  require_param(r, 1, "empty", "r");
  require_capacity(r, "empty");
  Graph g = Graph::from_edge_list(r, EdgeList{});
  check_order_size(g, r, 0, "empty");
  return g;
}

Graph path_graph(int r) {
  require_param(r, 1, "path", "r");
  require_capacity(r, "path");
  EdgeList edges;
  for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
  Graph g = Graph::from_edge_list(r, edges);
  check_order_size(g, r, r - 1, "path");
  return g;
}

Graph cycle_graph(int r) {
  require_param(r, 3, "cycle", "r");
  require_capacity(r, "cycle");
  EdgeList edges;
  for (int i = 0; i < r; ++i) edges.emplace_back(i, (i + 1) % r);
  Graph g = Graph::from_edge_list(r, edges);
  check_order_size(g, r, r, "cycle");
  check_regular(g, 2, "cycle");
  return g;
}

Graph complete_split(int p, int q) {
  require_param(p, 1, "complete_split", "p");
  require_param(q, 1, "complete_split", "q");
  require_capacity(static_cast<long long>(p) + q, "complete_split");
  EdgeList edges;
  add_clique(edges, p, q);
  add_cross(edges, 0, p, p, q);
  Graph g = Graph::from_edge_list(p + q, edges);
  check_order_size(g, p + q, q * (q - 1) / 2 + p * q, "complete_split");
  return g;
}

Graph matched_cliques(int p) {
  require_param(p, 1, "matched_cliques", "p");
  require_capacity(2LL * p, "matched_cliques");
  EdgeList edges;
  add_clique(edges, 0, p);
  add_clique(edges, p, p);
  for (int i = 0; i < p; ++i) edges.emplace_back(i, p + i);
  Graph g = Graph::from_edge_list(2 * p, edges);
  check_order_size(g, 2 * p, p * p, "matched_cliques");
  check_regular(g, p, "matched_cliques");
  return g;
}

Graph prop1(int j) {
  require_param(j, 1, "prop1", "j");
  require_capacity(2LL * j * j, "prop1");
  const int half = j * j;
  EdgeList edges;
  for (int side = 0; side < 2; ++side)
    for (int block = 0; block < j; ++block)
      add_clique(edges, side * half + block * j, j);
  add_cross(edges, 0, half, half, half);
  Graph g = Graph::from_edge_list(2 * half, edges);
  check_order_size(g, 2 * half, half * (j * j + j - 1), "prop1");
  check_regular(g, j * j + j - 1, "prop1");
  return g;
}

Graph prop2(int p, int j) {
  require_param(p, 1, "prop2", "p");
  require_param(j, 1, "prop2", "j");
  const long long left = static_cast<long long>(p) * p * p;
  const long long right = static_cast<long long>(j) * (p + 1);
  require_capacity(left + right, "prop2");
  const int left_n = static_cast<int>(left);
  const int right_n = static_cast<int>(right);
  EdgeList edges;
  for (int block = 0; block < p; ++block) add_clique(edges, block * p * p, p * p);
  for (int block = 0; block < p + 1; ++block) add_clique(edges, left_n + block * j, j);
  add_cross(edges, 0, left_n, left_n, right_n);
  Graph g = Graph::from_edge_list(left_n + right_n, edges);

  // Degree multiset: p^2+pj+j-1 with multiplicity p^3, p^3+j-1 with
  // multiplicity j(p+1).
  const int left_deg = p * p + p * j + j - 1;
  const int right_deg = left_n + j - 1;
  for (int v = 0; v < left_n; ++v)
    check(g.degree(v) == left_deg, "prop2", "left-block degree");
  for (int v = left_n; v < left_n + right_n; ++v)
    check(g.degree(v) == right_deg, "prop2", "right-block degree");
  check_order_size(g, left_n + right_n,
                   static_cast<int>((left * left_deg + right * right_deg) / 2),
                   "prop2");
  return g;
}

Graph prop4(int p, int q, int r, int j) {
  require_param(p, 1, "prop4", "p");
  require_param(q, 1, "prop4", "q");
  require_param(r, 1, "prop4", "r");
  require_param(j, 1, "prop4", "j");
  const long long copy_n = static_cast<long long>(p) * r + static_cast<long long>(j) * (p + 1);
  const long long n = q + static_cast<long long>(q) * copy_n;
  require_capacity(n, "prop4");

  EdgeList edges;
  add_clique(edges, 0, q);
  int base = q;
  for (int t = 0; t < q; ++t) {
    const int left_first = base;
    for (int block = 0; block < p; ++block) add_clique(edges, left_first + block * r, r);
    const int right_first = left_first + p * r;
    for (int block = 0; block < p + 1; ++block) add_clique(edges, right_first + block * j, j);
    add_cross(edges, left_first, p * r, right_first, j * (p + 1));
    for (int v = left_first; v < left_first + static_cast<int>(copy_n); ++v)
      edges.emplace_back(t, v);
    base += static_cast<int>(copy_n);
  }
  Graph g = Graph::from_edge_list(static_cast<int>(n), edges);
  const long long copy_m = static_cast<long long>(p) * (r * (r - 1) / 2) +
                           static_cast<long long>(p + 1) * (j * (j - 1) / 2) +
                           static_cast<long long>(p) * r * j * (p + 1);
  check_order_size(g, static_cast<int>(n),
                   static_cast<int>(q * (q - 1) / 2 + q * copy_m + q * copy_n),
                   "prop4");
  return g;
}

Graph double_hub_wheel(int p) {
  require_param(p, 2, "double_hub_wheel", "p");
  const int ring = 3 * p;
  require_capacity(ring + 2LL, "double_hub_wheel");
  EdgeList edges;
  for (int i = 0; i < ring; ++i) edges.emplace_back(i, (i + 1) % ring);
  for (int i = 0; i < ring; ++i) {
    edges.emplace_back(i, ring);
    edges.emplace_back(i, ring + 1);
  }
  Graph g = Graph::from_edge_list(ring + 2, edges);
  check_order_size(g, ring + 2, 9 * p, "double_hub_wheel");
  check(g.size() == 3 * g.order() - 6, "double_hub_wheel", "maximum planar size");
  check(g.min_degree() == 4, "double_hub_wheel", "minimum degree 4");
  return g;
}

Graph delta5_triangulation(int r) {
  require_param(r, 5, "delta5_triangulation", "r");
  const long long n = 3LL * r + 1;
  require_capacity(n, "delta5_triangulation");
  const auto a = [&](int i) { return i; };          // 0..r-1
  const auto b = [&](int i) { return r + i; };      // r..2r-1
  const auto c = [&](int i) { return 2 * r + i; };  // 2r..3r-2
  const int u = 3 * r - 1;
  const int v = 3 * r;

  EdgeList edges;
  for (int i = 0; i + 1 < r; ++i) {
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(b(i), b(i + 1));
  }
  for (int i = 0; i + 2 < r; ++i) edges.emplace_back(c(i), c(i + 1));
  edges.emplace_back(a(0), b(0));
  edges.emplace_back(a(r - 1), b(r - 1));
  for (int i = 0; i + 1 < r; ++i) {
    edges.emplace_back(c(i), a(i));
    edges.emplace_back(c(i), a(i + 1));
    edges.emplace_back(c(i), b(i));
    edges.emplace_back(c(i), b(i + 1));
  }
  for (int i = 0; i < r; ++i) {
    edges.emplace_back(u, a(i));
    edges.emplace_back(v, b(i));
  }
  edges.emplace_back(a(0), a(r - 1));
  edges.emplace_back(b(0), b(r - 1));
  edges.emplace_back(a(0), b(r - 1));

  Graph g = Graph::from_edge_list(static_cast<int>(n), edges);
  check_order_size(g, static_cast<int>(n), 9 * r - 3, "delta5_triangulation");
  check(g.size() == 3 * g.order() - 6, "delta5_triangulation", "maximum planar size");
  check(g.min_degree() == 5, "delta5_triangulation", "minimum degree 5");
  return g;
}

Graph dodecahedron() {
  // Outer pentagon 0..4, spoke layer 5..9, a ten-cycle through 5..14, inner
  // spokes to the pentagon 15..19.
  static constexpr std::array<std::pair<int, int>, 30> kEdges{{
      {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 0},    // outer pentagon
      {0, 5},   {1, 6},   {2, 7},   {3, 8},   {4, 9},    // outer spokes
      {5, 10},  {10, 6},  {6, 11},  {11, 7},  {7, 12},   // middle ten-cycle
      {12, 8},  {8, 13},  {13, 9},  {9, 14},  {14, 5},
      {10, 15}, {11, 16}, {12, 17}, {13, 18}, {14, 19},  // inner spokes
      {15, 16}, {16, 17}, {17, 18}, {18, 19}, {19, 15},  // inner pentagon
  }};
  Graph g = Graph::from_edge_list(20, std::span<const std::pair<int, int>>(kEdges));
  check_order_size(g, 20, 30, "dodecahedron");
  check_regular(g, 3, "dodecahedron");
  return g;
}

namespace {

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {"complete", "r", false},
    {"empty", "r", true},
    {"path", "r", true},
    {"cycle", "r", true},
    {"complete_split", "p:q", false},
    {"matched_cliques", "p", false},
    {"prop1", "j", false},
    {"prop2", "p:j", false},
    {"prop4", "p:q:r:j", false},
    {"double_hub_wheel", "p", true},
    {"delta5_triangulation", "r", true},
    {"dodecahedron", "", true},
}};

int param_count(std::string_view params) {
  if (params.empty()) return 0;
  int count = 1;
  for (char c : params)
    if (c == ':') ++count;
  return count;
}

}  // namespace

std::span<const FamilyInfo> graph_families() { return kFamilies; }

bool is_planar_certified(std::string_view family_name) {
  for (const auto& f : kFamilies)
    if (f.name == family_name) return f.planar_certified;
  return false;
}

Graph generate_named(std::string_view family_spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = family_spec.find(':', start);
    parts.push_back(family_spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const std::string_view name = parts.front();
  std::vector<int> args;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    int value = 0;
    const auto [end, ec] =
        std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), value);
    if (ec != std::errc{} || end != parts[i].data() + parts[i].size())
      throw InputError("bad generator parameter \"" + std::string(parts[i]) +
                       "\" in \"" + std::string(family_spec) + "\"");
    args.push_back(value);
  }

  const FamilyInfo* info = nullptr;
  for (const auto& f : kFamilies)
    if (f.name == name) info = &f;
  if (info == nullptr) {
    std::string known;
    for (const auto& f : kFamilies) {
      if (!known.empty()) known += ", ";
      known += f.name;
    }
    throw InputError("unknown graph family \"" + std::string(name) +
                     "\"; known families: " + known);
  }
  if (static_cast<int>(args.size()) != param_count(info->params))
    throw InputError("family " + std::string(name) + " expects parameters " +
                     (info->params.empty() ? std::string("(none)")
                                           : std::string(info->params)));

  if (name == "complete") return complete_graph(args[0]);
  if (name == "empty") return empty_graph(args[0]);
  if (name == "path") return path_graph(args[0]);
  if (name == "cycle") return cycle_graph(args[0]);
  if (name == "complete_split") return complete_split(args[0], args[1]);
  if (name == "matched_cliques") return matched_cliques(args[0]);
  if (name == "prop1") return prop1(args[0]);
  if (name == "prop2") return prop2(args[0], args[1]);
  if (name == "prop4") return prop4(args[0], args[1], args[2], args[3]);
  if (name == "double_hub_wheel") return double_hub_wheel(args[0]);
  if (name == "delta5_triangulation") return delta5_triangulation(args[0]);
  return dodecahedron();
}

}  // namespace dsi
