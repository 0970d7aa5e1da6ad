#include "dsi/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dsi/errors.hpp"

namespace dsi {

int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("graph order must be in 1.." +
                        std::to_string(kMaxVertices) + ", got " +
                        std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                       ", " + std::to_string(v) + ") with n=" +
                       std::to_string(n));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    if (!g.adjacent(u, v)) {
      g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
      ++g.m_;
    }
  }
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

int Graph::min_degree() const {
  int best = kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int induced_edge_count(const Graph& g, VertexSet s) {
  int twice = 0;
  for (VertexSet t = s; t; t &= t - 1) {
    const int v = std::countr_zero(t);
    twice += std::popcount(g.neighbors(v) & s);
  }
  return twice / 2;
}

int cut_edge_count(const Graph& g, VertexSet s) {
  const VertexSet outside = g.full_set() & ~s;
  int count = 0;
  for (VertexSet t = s; t; t &= t - 1) {
    const int v = std::countr_zero(t);
    count += std::popcount(g.neighbors(v) & outside);
  }
  return count;
}

long long degree_sum(const Graph& g, VertexSet s) {
  long long sum = 0;
  for (VertexSet t = s; t; t &= t - 1) sum += g.degree(std::countr_zero(t));
  return sum;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) {
    throw CapacityError("combined order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxVertices));
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.size() + h.size()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
  const int shift = g.order();
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.adjacent(u, v)) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) {
    throw CapacityError("combined order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxVertices));
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
  const int shift = g.order();
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.adjacent(u, v)) edges.emplace_back(u + shift, v + shift);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + shift);
  return Graph::from_edge_list(n, edges);
}

DegreeSequence::DegreeSequence(const Graph& g) {
  degrees_.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) degrees_.push_back(g.degree(v));
  std::sort(degrees_.begin(), degrees_.end());
  prefix_.assign(degrees_.size() + 1, 0);
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    prefix_[i + 1] = prefix_[i] + degrees_[i];
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) {
  if (degrees.empty()) throw InputError("degree sequence must be nonempty");
  degrees_ = std::move(degrees);
  std::sort(degrees_.begin(), degrees_.end());
  if (degrees_.front() < 0) throw InputError("negative degree");
  prefix_.assign(degrees_.size() + 1, 0);
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    prefix_[i + 1] = prefix_[i] + degrees_[i];
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence(g); }

}  // namespace dsi
