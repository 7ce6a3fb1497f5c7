#include "pogcut/qgraph.hpp"

#include <algorithm>
#include <string>

#include "pogcut/common.hpp"

namespace pogcut {

ClosedWalk ClosedWalk::canonical(std::vector<int> edges) {
  ClosedWalk w;
  if (edges.empty()) return w;
  std::size_t n = edges.size();
  std::vector<int> best = edges;
  auto consider = [&](const std::vector<int>& seq) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = seq[(s + i) % n];
      if (rot < best) best = std::move(rot);
    }
  };
  consider(edges);
  std::reverse(edges.begin(), edges.end());
  consider(edges);
  w.edges = std::move(best);
  return w;
}

// Corners of edge e: 4e+0 = side0 left, 4e+1 = side0 right, 4e+2 = side1 left,
// 4e+3 = side1 right, where side 0/1 is the order the edge's two rotation slots
// are met scanning vertices. The angular matching joins each slot's right corner
// to the next slot's left corner around the vertex. An untwisted edge's long
// matching is the straight pairing {L0-R1, R0-L1} (so twist-free systems come out
// orientable); a twisted edge uses the same-side pairing {L0-L1, R0-R1}. The
// crossing matching is the remaining pairing in either case.
QGraph build_qgraph(const RotationSystem& rs) {
  int m = rs.edge_count();
  if (m == 0) throw structure_error("build_qgraph: empty rotation system");
  if (static_cast<int>(rs.rotation.size()) != rs.vertex_count)
    throw structure_error("build_qgraph: rotation size does not match vertex count");

  std::vector<std::array<int, 2>> slot_corner(m, {-1, -1});  // left corner per side
  std::vector<int> seen(m, 0);
  QGraph q;
  q.edge_count = m;
  for (auto& mt : q.match) mt.assign(4 * m, -1);

  for (int v = 0; v < rs.vertex_count; ++v) {
    const auto& rot = rs.rotation[v];
    if (rot.empty()) throw structure_error("build_qgraph: isolated vertex " + std::to_string(v + 1));
    std::vector<std::array<int, 2>> slots;  // (left corner, right corner) per slot
    for (int e : rot) {
      if (e < 0 || e >= m) throw structure_error("build_qgraph: edge id out of range");
      if (seen[e] >= 2)
        throw structure_error("build_qgraph: edge " + std::to_string(e) + " occurs more than twice");
      int side = seen[e]++;
      int left = 4 * e + 2 * side;
      slot_corner[e][side] = left;
      slots.push_back({left, left + 1});
    }
    int d = static_cast<int>(slots.size());
    for (int i = 0; i < d; ++i) {
      int r = slots[i][1], l = slots[(i + 1) % d][0];
      q.match[1][r] = l;
      q.match[1][l] = r;
    }
  }
  for (int e = 0; e < m; ++e)
    if (seen[e] != 2)
      throw structure_error("build_qgraph: edge " + std::to_string(e) + " occurs " +
                            std::to_string(seen[e]) + " times, want 2");

  for (int e = 0; e < m; ++e) {
    int l0 = 4 * e + 0, r0 = 4 * e + 1, l1 = 4 * e + 2, r1 = 4 * e + 3;
    q.match[0][l0] = r0;
    q.match[0][r0] = l0;
    q.match[0][l1] = r1;
    q.match[0][r1] = l1;
    bool tw = rs.twist[e];
    int long_a = tw ? l1 : r1;   // partner of l0
    int long_b = tw ? r1 : l1;   // partner of r0
    q.match[2][l0] = long_a;
    q.match[2][long_a] = l0;
    q.match[2][r0] = long_b;
    q.match[2][long_b] = r0;
    int cross_a = tw ? r1 : l1;  // partner of l0 in the remaining pairing
    int cross_b = tw ? l1 : r1;
    q.match[3][l0] = cross_a;
    q.match[3][cross_a] = l0;
    q.match[3][r0] = cross_b;
    q.match[3][cross_b] = r0;
  }

  for (int c = 0; c < 4 * m; ++c)
    for (int k = 0; k < 4; ++k)
      if (q.match[k][c] < 0 || q.match[k][q.match[k][c]] != c)
        throw structure_error("build_qgraph: matching " + std::to_string(k) +
                              " is not an involution");
  return q;
}

QGraph apply_duality(const QGraph& q, Duality kind) {
  QGraph out = q;
  switch (kind) {
    case Duality::dual: std::swap(out.match[0], out.match[2]); break;
    case Duality::skew: std::swap(out.match[2], out.match[3]); break;
    case Duality::phial: std::swap(out.match[0], out.match[3]); break;
  }
  return out;
}

std::vector<std::vector<int>> bigons(const QGraph& q, int color_i, int color_j) {
  if (color_i == color_j || color_i < 0 || color_j < 0 || color_i > 3 || color_j > 3)
    throw input_error("bigons: colors must be distinct in 0..3");
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(q.corners(), false);
  for (int start = 0; start < q.corners(); ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int c = start, color = color_i;
    do {
      visited[c] = true;
      cycle.push_back(c);
      c = q.match[color][c];
      color = color == color_i ? color_j : color_i;
    } while (c != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

bool is_orientable(const QGraph& q) {
  // 2-color the gem graph on corners with edges from matchings 0,1,2
  std::vector<int> color(q.corners(), -1);
  std::vector<int> stack;
  for (int s = 0; s < q.corners(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        int d = q.match[k][c];
        if (color[d] == -1) {
          color[d] = 1 - color[c];
          stack.push_back(d);
        } else if (color[d] == color[c]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Walks read off a bigon: take the hyperedge at every step of the intra-hyperedge
// color (0 for vertices, 2 for faces, 3 for zigzags; color 1 joins hyperedges).
static std::vector<ClosedWalk> walks(const QGraph& q, int intra_color) {
  std::vector<ClosedWalk> out;
  for (const auto& cycle : bigons(q, intra_color, 1)) {
    std::vector<int> walk;
    for (std::size_t i = 0; i < cycle.size(); i += 2) {
      int a = cycle[i], b = q.match[intra_color][a];
      if (QGraph::hyperedge_of(a) != QGraph::hyperedge_of(b))
        throw structure_error("extract_map: matching " + std::to_string(intra_color) +
                              " leaves a hyperedge");
      walk.push_back(QGraph::hyperedge_of(a));
    }
    out.push_back(ClosedWalk::canonical(std::move(walk)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CombMap extract_map(const QGraph& q) {
  CombMap map;
  map.edge_count = q.edge_count;
  map.vertices = walks(q, 0);
  map.faces = walks(q, 2);
  map.zigzags = walks(q, 3);
  map.euler_char = static_cast<int>(map.vertices.size()) + static_cast<int>(map.faces.size()) -
                   q.edge_count;
  map.orientable = is_orientable(q);
  return map;
}

}  // namespace pogcut
