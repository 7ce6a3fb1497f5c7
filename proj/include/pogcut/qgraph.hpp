#pragma once
#include <array>
#include <vector>

#include "pogcut/rozig.hpp"

namespace pogcut {

// Four disjoint perfect matchings on the 4m corners of m hyperedges; corner
// 4e+k belongs to hyperedge e. Matching roles by position: 0 short, 1 angular,
// 2 long, 3 crossing. Each hyperedge's corners form a K4 under {0,2,3}.
struct QGraph {
  int edge_count = 0;
  std::array<std::vector<int>, 4> match;  // match[c][corner] = partner corner
  int corners() const { return 4 * edge_count; }
  static int hyperedge_of(int corner) { return corner / 4; }
  bool operator==(const QGraph&) const = default;
};

enum class Duality { dual, skew, phial };  // swap (0,2), (2,3), (0,3)

// Closed walk of edge ids, stored in canonical form: the lexicographically
// least among all rotations of the sequence and of its reversal.
struct ClosedWalk {
  std::vector<int> edges;
  static ClosedWalk canonical(std::vector<int> edges);
  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const ClosedWalk&) const = default;
  auto operator<=>(const ClosedWalk&) const = default;
};

// Vertices, faces and zigzags of the map a Q-graph encodes, as closed edge walks.
struct CombMap {
  int edge_count = 0;
  std::vector<ClosedWalk> vertices, faces, zigzags;
  int euler_char = 0;
  bool orientable = false;
};

QGraph build_qgraph(const RotationSystem& rs);
QGraph apply_duality(const QGraph& q, Duality kind);
// Corner cycles alternating matchings color_i and color_j; deterministic order
// (each cycle starts at its smallest corner, first step via color_i).
std::vector<std::vector<int>> bigons(const QGraph& q, int color_i, int color_j);
bool is_orientable(const QGraph& q);  // gem (matchings 0,1,2) bipartite?
CombMap extract_map(const QGraph& q);

}  // namespace pogcut
