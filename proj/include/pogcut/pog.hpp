#pragma once
#include <cstddef>
#include <map>
#include <vector>

#include "pogcut/gf2.hpp"
#include "pogcut/qgraph.hpp"

namespace pogcut {

// The three maps cut out of one rozig table: g3 is K_z on a surface, g1 the
// projective orbital graph in the projective plane, g2 its dual there. All
// three share the edge ground set (ids as in edge_id), and the zigzags of g1
// are labelled by K_z vertices so that edge e lies on zigzags i and j exactly
// when e = {i,j}.
struct Triad {
  int z = 0;
  int m = 0;            // shared edge count z(z-1)/2
  QGraph q;             // the K_z role (g3 = extract_map(q))
  CombMap g1, g2, g3;
  std::vector<int> g3_vertex_label;  // per g3.vertices index, K_z label 1..z
  std::vector<int> g1_zigzag_label;  // per g1.zigzags index, K_z label 1..z
  bool half_h() const { return z % 4 == 2; }   // h = z/4 a half-integer
  int h_floor() const { return z / 4; }
};

Triad build_triad(int z);

// Walk-length histograms (value -> count).
struct Census {
  std::map<int, int> vertex_degrees, face_sizes, zigzag_lengths;
};
Census census(const CombMap& map);

// Mod-2 edge vector of a walk: edges of odd multiplicity.
EdgeVector walk_vector(const ClosedWalk& w, int edge_count);

// Coboundary, face and zigzag spaces over the common edge set.
struct MapSpaces {
  Gf2Subspace v1, v2, v3;  // spans of vertex coboundaries of g1, g2, g3
  Gf2Subspace f1, z1;      // spans of face boundaries / zigzags of g1
  std::size_t gamma = 0;   // dim of any pairwise intersection of v1,v2,v3
  std::size_t cdef = 0;    // dim(vi-perp / (vj + vk)), same for each i
};
MapSpaces map_spaces(const Triad& t);

// F is a strong O-join when every vertex and every face of g1 meets F with
// multiplicity congruent to its degree/size mod 2.
bool is_strong_ojoin(const Triad& t, const EdgeVector& edges);

// All strong O-joins, by DFS over the GF(2) parity constraints (guard m <= 28).
std::vector<EdgeVector> enumerate_strong_ojoins(const Triad& t);

// True iff complements of strong O-joins are exactly the cuts of K_z.
bool strong_ojoin_cut_equivalence(const Triad& t);

}  // namespace pogcut
