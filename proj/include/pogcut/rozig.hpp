#pragma once
#include <vector>

namespace pogcut {

// Ordered vertex pair as printed in a table cell; labels are 1-based.
struct OrientedPair {
  int first = 0, second = 0;
  bool operator==(const OrientedPair&) const = default;
  int partner_of(int label) const;  // the other endpoint; throws if label not present
  bool contains(int label) const { return first == label || second == label; }
};

// z rows by z-1 columns of oriented pairs plus the column shading.
// Physical row order follows the suc2 orbit of vertex 1 (1,3,5,...,2,4,...),
// and every row's entries all contain one uniform vertex label.
struct RozigTable {
  int z = 0;
  std::vector<std::vector<OrientedPair>> rows;
  std::vector<bool> shaded;                 // per column, size z-1
  std::vector<int> row_labels;              // uniform label of each physical row
};

// Vertex rotations plus per-edge twist flags; edges are ids 0..m-1, each
// appearing in exactly two rotation slots (multigraphs and loops allowed).
struct RotationSystem {
  int vertex_count = 0;
  std::vector<std::vector<int>> rotation;   // [v-1] -> edge ids in cyclic order
  std::vector<bool> twist;                  // [edge id]
  int edge_count() const { return static_cast<int>(twist.size()); }
};

// Skip-one successor on 1..z: odd chain then even chain, one z-cycle.
int suc2(int label, int z);

std::vector<OrientedPair> first_row(int z);   // z even, z >= 6
std::vector<bool> shading(int z);             // shaded column flags
RozigTable build_table(int z);
RotationSystem rotation_and_twist(const RozigTable& table);

}  // namespace pogcut
