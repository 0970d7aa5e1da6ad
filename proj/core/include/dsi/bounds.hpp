#pragma once

#include <functional>

#include "dsi/graph.hpp"
#include "dsi/oracle.hpp"

namespace dsi {

// Degree-sequence index machinery. An index is the extremal k in {0..n}
// such that the sum of the k smallest (or k largest) degrees plus a
// k-dependent offset stays on the right side of m. All arithmetic is done
// on doubled integers: every defining inequality is multiplied by 2 so that
// half-integral offsets stay exact. No floating point anywhere.

// Doubled offset at index k; total on {0..n}, deterministic.
using OffsetFn = std::function<long long(int)>;

// max { k in 0..n : 2*(sum of k smallest degrees) + offset2(k) <= 2m }.
// Linear scan over every k; offsets need not be monotone. Throws
// NoIndexError when no k qualifies.
int dsi_upper_index(const DegreeSequence& d, const OffsetFn& offset2, long long m);

// min { k in 0..n : 2*(sum of k largest degrees) + offset2(k) >= 2m }.
int dsi_lower_index(const DegreeSequence& d, const OffsetFn& offset2, long long m);

// Annihilation number: largest k whose k smallest degrees sum to at most m.
// Always at least floor(n/2).
int annihilation(const Graph& g);

// Upper/lower j-annihilation numbers a_j and c_j. The offset is the
// extremal value of m[V-S] - m[S] over all maximum j-independent sets,
// taken from precomputed independence statistics. Sandwich:
// c_j <= alpha_j <= a_j.
int upper_j_annihilation(const Graph& g, int j, const FStats& stats);
int lower_j_annihilation(const Graph& g, int j, const FStats& stats);

// Weak upper j-annihilation number a'_j: offset -k(j-1)/2 replaces the
// family maximum. Polynomial; a'_1 equals the annihilation number, and
// a_j <= a'_j always.
int weak_upper(const Graph& g, int j);

// Weak lower annihilation number c': lower index whose offset at k is half
// the sum of (d-1) over the n-k largest degrees, with negative terms
// clamped to zero so degree-0 vertices contribute nothing. Independent of
// j; c' <= c_j for every j.
int weak_lower(const Graph& g);

// Chromatic refinement of the weak upper bound: offset
// C(chi_j - 1, 2) - k(j-1)/2. Satisfies a_j <= bound <= a'_j.
int chromatic_dsi_bound(const Graph& g, int j, int chi);

// Star-free upper index w: offset at k is half the sum of the n-k largest
// degrees minus (n-k)(p-1)/2. For K_{1,p}-free graphs, a_1 <= w; the value
// itself is defined for any graph. p >= 3.
int claw_w(const Graph& g, int p);

// Exact rational value of a closed-form bound, plus its floor. The
// denominator is positive; num/den is kept as computed (not reduced).
struct RationalBound {
  long long num;
  long long den;
  long long floor_value;

  bool operator==(const RationalBound& o) const {
    return num * o.den == o.num * den;
  }
};

RationalBound make_rational(long long num, long long den);

// (2n-4)/(delta-j+1) for maximum planar graphs (m = 3n-6) with minimum
// degree at most 5 and 1 <= j <= delta. Planarity itself is certified by
// the caller; only the Euler edge count is checked here. On certified
// inputs, alpha_j is at most the floor.
RationalBound planar_bound(const Graph& g, int j);
bool planar_bound_applicable(const Graph& g, int j);

// j(p-1)n / (j(p-1) + delta - (j-1)) for K_{1,p}-free graphs with
// delta >= j-1; bounds alpha_j on such inputs. At j=1 this is exactly the
// (p-1)n/(delta+p-1) bound.
RationalBound k1p_free_bound(const Graph& g, int j, int p);
RationalBound faudree_bound(const Graph& g, int p);

// Domination analogues z_j (upper) and w_j (lower), driven by statistics
// over all minimum j-dominating sets: w_j <= gamma_j <= z_j.
int dom_upper_z(const Graph& g, int j, const FStats& stats);
int dom_lower_w(const Graph& g, int j, const FStats& stats);

// Weak domination lower index w'_j: offset at k is half the sum of
// (d - j) over the n-k smallest degrees. w'_j <= gamma_j.
int dom_weak_lower(const Graph& g, int j);

}  // namespace dsi
