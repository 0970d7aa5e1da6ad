#pragma once

#include <span>
#include <string_view>

#include "dsi/graph.hpp"

namespace dsi {

// Graph family generators. Each generator uses a fixed canonical labeling
// (documented next to its definition) so emitted graph6 strings are
// byte-stable, and each asserts its advertised order, size and degree
// structure at construction time.

Graph complete_graph(int r);
Graph empty_graph(int r);
Graph path_graph(int r);
Graph cycle_graph(int r);

// E_p joined to K_q. Vertices 0..p-1 form the independent side.
Graph complete_split(int p, int q);

// Two copies of K_p plus a perfect matching between them; p-regular with
// p^2 edges. Vertices 0..p-1 and p..2p-1, vertex i matched to p+i.
Graph matched_cliques(int p);

// Join of two disjoint unions of j copies of K_j; 2j^2 vertices, regular
// of degree j^2 + j - 1.
Graph prop1(int j);

// Join of p copies of K_{p^2} with p+1 copies of K_j. Left block first.
// Degrees: p^2+pj+j-1 with multiplicity p^3, p^3+j-1 with multiplicity
// j(p+1).
Graph prop2(int p, int j);

// K_q on vertices 0..q-1; for each hub vertex t one copy of
// (p x K_r) + ((p+1) x K_j), every vertex of the copy joined to t.
Graph prop4(int p, int q, int r, int j);

// Cycle on 3p vertices (0..3p-1) plus two hubs 3p and 3p+1, each adjacent
// to the whole cycle but not to each other. Maximum planar: m = 9p = 3n-6,
// minimum degree 4.
Graph double_hub_wheel(int p);

// Maximum planar graph with minimum degree 5 on 3r+1 vertices, built from
// two r-paths with an (r-1)-path between them, two apex vertices and a
// closing triangle. Labeling: a_i = 0..r-1, b_i = r..2r-1, c_i = 2r..3r-2,
// u = 3r-1, v = 3r.
Graph delta5_triangulation(int r);

// The 3-regular planar graph of the regular dodecahedron: n = 20, m = 30.
Graph dodecahedron();

struct FamilyInfo {
  std::string_view name;
  std::string_view params;  // colon syntax, e.g. "p:q"
  bool planar_certified;    // construction is planar by design
};

std::span<const FamilyInfo> graph_families();

// Builds a family instance from "name" or "name:arg:...:arg".
Graph generate_named(std::string_view family_spec);

bool is_planar_certified(std::string_view family_name);

}  // namespace dsi
