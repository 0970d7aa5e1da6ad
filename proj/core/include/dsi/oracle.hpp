#pragma once

#include <cstdint>
#include <functional>

#include "dsi/graph.hpp"

namespace dsi {

// Exhaustive oracles for the NP-hard invariants. Every operation scans
// vertex subsets as machine words, so instance sizes are capped by explicit
// guards; exceeding a guard raises CapacityError rather than running long.

inline constexpr int kSingleValueGuard = 20;  // one optimum over 2^n subsets
inline constexpr int kFamilyGuard = 16;       // full enumeration of optima
inline constexpr int kChromaticGuard = 16;
inline constexpr int kEnumerationGuard = 7;

// True iff every vertex of s has fewer than j neighbors inside s.
bool is_j_independent(const Graph& g, VertexSet s, int j);

// True iff every vertex outside s has at least j neighbors in s.
bool is_j_dominating(const Graph& g, VertexSet s, int j);

struct OracleResult {
  int value;
  VertexSet witness;  // one optimal set; re-checkable with the predicates
};

// Largest j-independent set size (alpha_j) with a witness.
OracleResult alpha_j(const Graph& g, int j, int guard = kSingleValueGuard);

// Smallest j-dominating set size (gamma_j) with a witness. The whole vertex
// set always j-dominates, so the optimum exists for every j.
OracleResult gamma_j(const Graph& g, int j, int guard = kSingleValueGuard);

enum class SetKind { independence, domination };

// Statistics over the family F of all optimal sets: maximum j-independent
// sets or minimum j-dominating sets. The diff of a set S is
// m[V-S] - m[S]; max_diff and min_diff are its extremes over F.
struct FStats {
  SetKind kind;
  int j;
  int optimum;
  int max_diff;
  int min_diff;
  std::uint64_t family_size;
};

FStats f_stats(const Graph& g, int j, SetKind kind, int guard = kFamilyGuard);

// Fewest parts in a partition of V into j-independent sets. Exact, by
// iterative deepening on the part count with backtracking; part indices are
// symmetry-pruned. chi_j at j=1 is the chromatic number.
int chi_j(const Graph& g, int j, int guard = kChromaticGuard);

// True iff no vertex has an independent set of size p inside its
// neighborhood (no induced star with p leaves).
bool is_k1p_free(const Graph& g, int p);

// Membership tests for annihilating sets: a is upper j-annihilating when
// its degree sum plus max_diff stays within m, lower j-annihilating when
// its degree sum plus min_diff reaches m. stats must be independence
// statistics for the same j.
bool is_upper_j_annihilating(const Graph& g, VertexSet a, int j, const FStats& stats);
bool is_lower_j_annihilating(const Graph& g, VertexSet a, int j, const FStats& stats);

// Brute-force extremal sizes over all vertex subsets. These must agree
// with upper_j_annihilation / lower_j_annihilation computed from the degree
// sequence; that cross-check is a core test of both modules.
int max_upper_annihilating_size(const Graph& g, int j, const FStats& stats,
                                int guard = kFamilyGuard);
int min_lower_annihilating_size(const Graph& g, int j, const FStats& stats,
                                int guard = kFamilyGuard);

// Labeled-graph corpus: all 2^(n(n-1)/2) simple graphs on n vertices, each
// exactly once. Mask bit b is the b-th upper-triangle pair in column-major
// order (the graph6 bit order), and graphs stream in mask-ascending order.
std::uint64_t labeled_graph_count(int n);
Graph labeled_graph_at(int n, std::uint64_t edge_mask);
void for_each_labeled_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& fn);

}  // namespace dsi
