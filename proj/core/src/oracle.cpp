#include "dsi/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsi/errors.hpp"

namespace dsi {

namespace {

void require_positive_j(int j) {
  if (j < 1) throw InputError("j must be >= 1, got " + std::to_string(j));
}

void require_guard(const Graph& g, int guard, const char* op) {
  if (g.order() > guard)
    throw CapacityError(std::string(op) + ": n=" + std::to_string(g.order()) +
                        " exceeds size guard " + std::to_string(guard));
}

void require_stats(const FStats& stats, int j, const char* op) {
  if (stats.kind != SetKind::independence)
    throw InputError(std::string(op) + ": stats must be independence statistics");
  if (stats.j != j)
    throw InputError(std::string(op) + ": stats computed for j=" +
                     std::to_string(stats.j) + ", requested j=" + std::to_string(j));
}

}  // namespace

bool is_j_independent(const Graph& g, VertexSet s, int j) {
  require_positive_j(j);
  for (VertexSet t = s; t; t &= t - 1) {
    const int v = std::countr_zero(t);
    if (std::popcount(g.neighbors(v) & s) >= j) return false;
  }
  return true;
}

bool is_j_dominating(const Graph& g, VertexSet s, int j) {
  require_positive_j(j);
  for (VertexSet t = g.full_set() & ~s; t; t &= t - 1) {
    const int v = std::countr_zero(t);
    if (std::popcount(g.neighbors(v) & s) < j) return false;
  }
  return true;
}

OracleResult alpha_j(const Graph& g, int j, int guard) {
  require_positive_j(j);
  require_guard(g, guard, "alpha_j");
  OracleResult best{0, 0};  // the empty set is j-independent
  const VertexSet full = g.full_set();
  for (VertexSet s = 0;; ++s) {
    if (std::popcount(s) > best.value && is_j_independent(g, s, j))
      best = {std::popcount(s), s};
    if (s == full) break;
  }
  return best;
}

OracleResult gamma_j(const Graph& g, int j, int guard) {
  require_positive_j(j);
  require_guard(g, guard, "gamma_j");
  const VertexSet full = g.full_set();
  OracleResult best{g.order(), full};
  for (VertexSet s = 0;; ++s) {
    if (std::popcount(s) < best.value && is_j_dominating(g, s, j))
      best = {std::popcount(s), s};
    if (s == full) break;
  }
  return best;
}

FStats f_stats(const Graph& g, int j, SetKind kind, int guard) {
  require_positive_j(j);
  require_guard(g, guard, "f_stats");

  const bool indep = kind == SetKind::independence;
  const int optimum =
      indep ? alpha_j(g, j, guard).value : gamma_j(g, j, guard).value;

  FStats stats{kind, j, optimum, -g.size() - 1, g.size() + 1, 0};
  const VertexSet full = g.full_set();
  const int m = g.size();
  for (VertexSet s = 0;; ++s) {
    if (std::popcount(s) == optimum &&
        (indep ? is_j_independent(g, s, j) : is_j_dominating(g, s, j))) {
      const int inside = induced_edge_count(g, s);
      const int outside = induced_edge_count(g, full & ~s);
      const int diff = outside - inside;
      stats.max_diff = std::max(stats.max_diff, diff);
      stats.min_diff = std::min(stats.min_diff, diff);
      ++stats.family_size;
      if (indep) {
        // Every optimal set obeys 2*m[S] <= optimum*(j-1), and maximality
        // forces n - optimum <= sum of degrees over S.
        if (2LL * inside > static_cast<long long>(optimum) * (j - 1))
          throw std::logic_error("f_stats: optimal set exceeds induced-degree budget");
        if (static_cast<long long>(g.order()) - optimum > degree_sum(g, s))
          throw std::logic_error("f_stats: optimal set fails maximality degree bound");
      }
    }
    if (s == full) break;
  }
  if (stats.family_size == 0)
    throw std::logic_error("f_stats: empty family");
  if (stats.max_diff > m || stats.min_diff < -m)
    throw std::logic_error("f_stats: diff outside [-m, m]");
  return stats;
}

namespace {

bool colorable_with(const Graph& g, int j, int parts_available) {
  const int n = g.order();
  std::vector<VertexSet> parts(static_cast<std::size_t>(parts_available), 0);

  // Vertex v may only open part index `used` (first empty part); lower
  // indices are interchangeable with higher ones otherwise.
  const std::function<bool(int, int)> place = [&](int v, int used) -> bool {
    if (v == n) return true;
    const VertexSet bit = VertexSet{1} << v;
    const int limit = std::min(used + 1, parts_available);
    for (int c = 0; c < limit; ++c) {
      const VertexSet part = parts[static_cast<std::size_t>(c)];
      if (std::popcount(g.neighbors(v) & part) >= j) continue;
      bool ok = true;
      for (VertexSet t = g.neighbors(v) & part; t; t &= t - 1) {
        const int u = std::countr_zero(t);
        if (std::popcount(g.neighbors(u) & part) >= j - 1) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      parts[static_cast<std::size_t>(c)] = part | bit;
      if (place(v + 1, std::max(used, c + 1))) return true;
      parts[static_cast<std::size_t>(c)] = part;
    }
    return false;
  };
  return place(0, 0);
}

}  // namespace

int chi_j(const Graph& g, int j, int guard) {
  require_positive_j(j);
  require_guard(g, guard, "chi_j");
  const int alpha = alpha_j(g, j, guard).value;
  const int n = g.order();
  int t = (n + alpha - 1) / alpha;  // ceil(n / alpha) parts at minimum
  for (; t < n; ++t)
    if (colorable_with(g, j, t)) return t;
  return n;  // singletons always work
}

namespace {

bool has_independent_subset(const Graph& g, VertexSet candidates, int need) {
  if (need == 0) return true;
  if (std::popcount(candidates) < need) return false;
  const int v = std::countr_zero(candidates);
  const VertexSet rest = candidates & (candidates - 1);
  return has_independent_subset(g, rest & ~g.neighbors(v), need - 1) ||
         has_independent_subset(g, rest, need);
}

}  // namespace

bool is_k1p_free(const Graph& g, int p) {
  if (p < 2) throw InputError("is_k1p_free: p must be >= 2, got " + std::to_string(p));
  for (int v = 0; v < g.order(); ++v)
    if (has_independent_subset(g, g.neighbors(v), p)) return false;
  return true;
}

bool is_upper_j_annihilating(const Graph& g, VertexSet a, int j, const FStats& stats) {
  require_stats(stats, j, "is_upper_j_annihilating");
  return degree_sum(g, a) + stats.max_diff <= g.size();
}

bool is_lower_j_annihilating(const Graph& g, VertexSet a, int j, const FStats& stats) {
  require_stats(stats, j, "is_lower_j_annihilating");
  return degree_sum(g, a) + stats.min_diff >= g.size();
}

int max_upper_annihilating_size(const Graph& g, int j, const FStats& stats, int guard) {
  require_stats(stats, j, "max_upper_annihilating_size");
  require_guard(g, guard, "max_upper_annihilating_size");
  int best = -1;
  const VertexSet full = g.full_set();
  for (VertexSet s = 0;; ++s) {
    if (std::popcount(s) > best && is_upper_j_annihilating(g, s, j, stats))
      best = std::popcount(s);
    if (s == full) break;
  }
  if (best < 0)
    throw std::logic_error("max_upper_annihilating_size: no set qualifies");
  return best;
}

int min_lower_annihilating_size(const Graph& g, int j, const FStats& stats, int guard) {
  require_stats(stats, j, "min_lower_annihilating_size");
  require_guard(g, guard, "min_lower_annihilating_size");
  int best = g.order() + 1;
  const VertexSet full = g.full_set();
  for (VertexSet s = 0;; ++s) {
    if (std::popcount(s) < best && is_lower_j_annihilating(g, s, j, stats))
      best = std::popcount(s);
    if (s == full) break;
  }
  if (best > g.order())
    throw std::logic_error("min_lower_annihilating_size: no set qualifies");
  return best;
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > kEnumerationGuard)
    throw CapacityError("labeled graph enumeration limited to n in 1.." +
                        std::to_string(kEnumerationGuard) + ", got " +
                        std::to_string(n));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph_at(int n, std::uint64_t edge_mask) {
  const std::uint64_t count = labeled_graph_count(n);
  if (edge_mask >= count)
    throw InputError("edge mask " + std::to_string(edge_mask) +
                     " out of range for n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++bit)
      if ((edge_mask >> bit) & 1) edges.emplace_back(row, col);
  return Graph::from_edge_list(n, edges);
}

void for_each_labeled_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& fn) {
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    fn(mask, labeled_graph_at(n, mask));
}

}  // namespace dsi
