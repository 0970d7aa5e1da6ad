#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dsi {

// Vertices are 0..n-1 with n <= 63, so every vertex subset fits in one
// machine word and all set operations are branch-free bit arithmetic.
inline constexpr int kMaxVertices = 63;

// Bit i set means vertex i is in the set.
using VertexSet = std::uint64_t;

int set_size(VertexSet s);
std::vector<int> set_vertices(VertexSet s);

// Immutable simple graph. Adjacency is one bit row per vertex; row v has
// bit u set iff uv is an edge. Rows are symmetric and irreflexive for the
// lifetime of the object, and m equals half the total popcount.
class Graph {
 public:
  // Duplicate pairs collapse to one edge. Self-loops and out-of-range
  // endpoints raise InputError; n outside 1..63 raises CapacityError.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;
  VertexSet full_set() const { return ~std::uint64_t{0} >> (64 - n_); }

  bool operator==(const Graph& other) const = default;

 private:
  Graph() = default;
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Number of edges with both endpoints in s.
int induced_edge_count(const Graph& g, VertexSet s);

// Number of edges with exactly one endpoint in s. For every s:
//   induced(s) + induced(complement of s) + cut(s) == m.
int cut_edge_count(const Graph& g, VertexSet s);

long long degree_sum(const Graph& g, VertexSet s);

// Disjoint union; vertices of h are shifted up by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);

// Vertex degrees in non-decreasing order with prefix sums, so the sum of
// the k smallest and the sum of the k largest degrees are both O(1).
class DegreeSequence {
 public:
  explicit DegreeSequence(const Graph& g);
  explicit DegreeSequence(std::vector<int> degrees);

  int size() const { return static_cast<int>(degrees_.size()); }
  int degree(int i) const { return degrees_[i]; }  // i-th smallest, 0-based
  long long prefix_sum(int k) const { return prefix_[k]; }
  long long top_sum(int k) const { return prefix_.back() - prefix_[size() - k]; }
  long long total() const { return prefix_.back(); }
  int min_degree() const { return degrees_.front(); }
  int max_degree() const { return degrees_.back(); }

 private:
  std::vector<int> degrees_;
  std::vector<long long> prefix_;
};

DegreeSequence degree_sequence(const Graph& g);

}  // namespace dsi
