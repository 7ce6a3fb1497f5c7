#include "pogcut/pog.hpp"

#include <algorithm>
#include <string>

#include "pogcut/common.hpp"
#include "pogcut/verify.hpp"

namespace pogcut {

EdgeVector walk_vector(const ClosedWalk& w, int edge_count) {
  EdgeVector v(edge_count);
  for (int e : w.edges) v.flip(e);
  return v;
}

static std::vector<int> label_walks_by_rotation(const std::vector<ClosedWalk>& walks,
                                                const RotationSystem& rs,
                                                const char* what) {
  int z = rs.vertex_count;
  if (static_cast<int>(walks.size()) != z)
    throw structure_error(std::string("triad: expected ") + std::to_string(z) + " " + what +
                          ", got " + std::to_string(walks.size()));
  std::vector<int> labels(walks.size(), 0);
  std::vector<bool> used(z, false);
  for (std::size_t i = 0; i < walks.size(); ++i) {
    int found = 0;
    for (int v = 1; v <= z; ++v) {
      if (used[v - 1]) continue;
      if (walks[i] == ClosedWalk::canonical(rs.rotation[v - 1])) {
        labels[i] = v;
        used[v - 1] = true;
        found = 1;
        break;
      }
    }
    if (!found)
      throw structure_error(std::string("triad: ") + what + " walk " + std::to_string(i) +
                            " matches no vertex rotation");
  }
  return labels;
}

Triad build_triad(int z) {
  RozigTable table = build_table(z);
  RotationSystem rs = rotation_and_twist(table);

  Triad t;
  t.z = z;
  t.m = edge_count_kz(z);
  t.q = build_qgraph(rs);
  t.g3 = extract_map(t.q);
  QGraph q1 = apply_duality(t.q, Duality::phial);
  t.g1 = extract_map(q1);
  t.g2 = extract_map(apply_duality(q1, Duality::dual));

  // g3 is K_z with the table's rotations: z vertices of degree z-1, walks equal
  // to the rotations, and each edge {i,j} on exactly the vertex walks i and j.
  t.g3_vertex_label = label_walks_by_rotation(t.g3.vertices, rs, "g3 vertices");
  for (const auto& w : t.g3.vertices)
    if (w.length() != z - 1)
      throw structure_error("triad: g3 vertex degree " + std::to_string(w.length()) +
                            ", want z-1");

  // g1 and g2 are projective-plane maps, dual to each other.
  auto check_projective = [](const CombMap& g, const char* name) {
    if (g.euler_char != 1)
      throw structure_error(std::string("triad: ") + name + " euler characteristic " +
                            std::to_string(g.euler_char) + ", want 1");
    if (g.orientable)
      throw structure_error(std::string("triad: ") + name + " is orientable");
  };
  check_projective(t.g1, "g1");
  check_projective(t.g2, "g2");
  if (t.g2.vertices != t.g1.faces || t.g2.faces != t.g1.vertices)
    throw structure_error("triad: g2 is not the dual of g1 (walk multisets differ)");
  if (t.g2.zigzags != t.g1.zigzags)
    throw structure_error("triad: dual changed the zigzag multiset");

  // zigzags of g1 are labelled by K_z vertices: zigzag i and zigzag j share
  // exactly the edge {i,j}.
  t.g1_zigzag_label = label_walks_by_rotation(t.g1.zigzags, rs, "g1 zigzags");
  std::vector<std::vector<int>> on(t.m);
  for (std::size_t i = 0; i < t.g1.zigzags.size(); ++i)
    for (int e : t.g1.zigzags[i].edges) on[e].push_back(t.g1_zigzag_label[i]);
  for (int e = 0; e < t.m; ++e) {
    auto [a, b] = edge_pair(e, z);
    std::vector<int> want{a, b};
    std::vector<int> got = on[e];
    std::sort(got.begin(), got.end());
    if (got != want)
      throw structure_error("triad: edge " + std::to_string(e) +
                            " does not lie on zigzags " + std::to_string(a) + "," +
                            std::to_string(b));
  }
  return t;
}

Census census(const CombMap& map) {
  Census c;
  for (const auto& w : map.vertices) ++c.vertex_degrees[w.length()];
  for (const auto& w : map.faces) ++c.face_sizes[w.length()];
  for (const auto& w : map.zigzags) ++c.zigzag_lengths[w.length()];
  return c;
}

static Gf2Subspace span_of_walks(const std::vector<ClosedWalk>& walks, int m) {
  Gf2Subspace s(m);
  for (const auto& w : walks) s.insert(walk_vector(w, m));
  return s;
}

MapSpaces map_spaces(const Triad& t) {
  MapSpaces s;
  s.v1 = span_of_walks(t.g1.vertices, t.m);
  s.v2 = span_of_walks(t.g2.vertices, t.m);
  s.v3 = span_of_walks(t.g3.vertices, t.m);
  s.f1 = span_of_walks(t.g1.faces, t.m);
  s.z1 = span_of_walks(t.g1.zigzags, t.m);
  if (!(s.f1 == s.v2)) throw structure_error("map_spaces: face space of g1 != coboundary space of g2");
  if (!(s.z1 == s.v3)) throw structure_error("map_spaces: zigzag space of g1 != coboundary space of g3");

  auto i12 = s.v1.intersect(s.v2);
  auto i13 = s.v1.intersect(s.v3);
  auto i23 = s.v2.intersect(s.v3);
  if (i12.dim() != i13.dim() || i12.dim() != i23.dim())
    throw structure_error("map_spaces: pairwise intersections of v1,v2,v3 have unequal dims");
  s.gamma = i12.dim();

  const Gf2Subspace* vs[3] = {&s.v1, &s.v2, &s.v3};
  std::size_t cdef[3];
  for (int i = 0; i < 3; ++i) {
    auto sum = vs[(i + 1) % 3]->sum(*vs[(i + 2) % 3]);
    cdef[i] = vs[i]->orth_complement().quotient_dim(sum);
  }
  if (cdef[0] != cdef[1] || cdef[0] != cdef[2])
    throw structure_error("map_spaces: cut deficiencies differ between the three maps");
  s.cdef = cdef[0];
  return s;
}

// Parity constraints: for each vertex and face walk w of g1 (mod-2 reduced to its
// odd-multiplicity edge set), |F ^ odd(w)| must be congruent to length(w) mod 2.
struct ParityConstraint {
  EdgeVector support;
  int parity;  // required |F ^ support| mod 2
};

static std::vector<ParityConstraint> ojoin_constraints(const Triad& t) {
  std::vector<ParityConstraint> cs;
  for (const auto* walks : {&t.g1.vertices, &t.g1.faces})
    for (const auto& w : *walks)
      cs.push_back({walk_vector(w, t.m), w.length() % 2});
  return cs;
}

bool is_strong_ojoin(const Triad& t, const EdgeVector& edges) {
  if (static_cast<int>(edges.size()) != t.m)
    throw std::invalid_argument("is_strong_ojoin: edge vector has wrong length");
  for (const auto* walks : {&t.g1.vertices, &t.g1.faces})
    for (const auto& w : *walks) {
      int count = 0;
      for (int e : w.edges) count += edges.test(e) ? 1 : 0;
      if (count % 2 != w.length() % 2) return false;
    }
  return true;
}

// DFS over edges with GF(2) unit propagation on the parity constraints.
std::vector<EdgeVector> enumerate_strong_ojoins(const Triad& t) {
  if (t.m > 28)
    throw capability_error("enumerate_strong_ojoins: m = " + std::to_string(t.m) +
                           " exceeds guard 28");
  auto cs = ojoin_constraints(t);
  int m = t.m;
  std::vector<std::vector<int>> touching(m);
  for (std::size_t ci = 0; ci < cs.size(); ++ci)
    for (int e : cs[ci].support.set_bits()) touching[e].push_back(static_cast<int>(ci));

  std::vector<int> remaining(cs.size());  // unassigned support size per constraint
  std::vector<int> parity_left(cs.size());
  for (std::size_t ci = 0; ci < cs.size(); ++ci) {
    remaining[ci] = static_cast<int>(cs[ci].support.popcount());
    parity_left[ci] = cs[ci].parity;
  }

  std::vector<int> value(m, -1);
  std::vector<EdgeVector> out;
  EdgeVector cur(m);

  // assign edge e := v, updating constraints; returns false on contradiction.
  // trail records assignments for undo.
  std::vector<int> trail;
  auto assign = [&](int e, int v) -> bool {
    value[e] = v;
    if (v) cur.set(e, true);
    trail.push_back(e);
    bool ok = true;
    for (int ci : touching[e]) {
      --remaining[ci];
      if (v) parity_left[ci] ^= 1;
      if (remaining[ci] == 0 && parity_left[ci] != 0) ok = false;
    }
    return ok;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      int e = trail.back();
      trail.pop_back();
      for (int ci : touching[e]) {
        ++remaining[ci];
        if (value[e]) parity_left[ci] ^= 1;
      }
      if (value[e]) cur.set(e, false);
      value[e] = -1;
    }
  };
  // propagate constraints with one unassigned edge left: its value is forced.
  auto propagate = [&]() -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ci = 0; ci < cs.size(); ++ci) {
        if (remaining[ci] != 1) continue;
        int forced_edge = -1;
        for (int e : cs[ci].support.set_bits())
          if (value[e] == -1) { forced_edge = e; break; }
        if (forced_edge == -1) throw structure_error("enumerate_strong_ojoins: bookkeeping");
        if (!assign(forced_edge, parity_left[ci])) return false;
        changed = true;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, int next) -> void {
    while (next < m && value[next] != -1) ++next;
    if (next == m) {
      out.push_back(cur);
      return;
    }
    for (int v : {0, 1}) {
      std::size_t mark = trail.size();
      if (assign(next, v) && propagate()) self(self, next + 1);
      undo_to(mark);
    }
  };
  bool feasible = true;
  for (std::size_t ci = 0; ci < cs.size(); ++ci)
    if (remaining[ci] == 0 && parity_left[ci] != 0) feasible = false;
  if (feasible && propagate()) dfs(dfs, 0);

  for (const auto& f : out)
    if (!is_strong_ojoin(t, f))
      throw structure_error("enumerate_strong_ojoins: enumerated set fails the predicate");
  std::sort(out.begin(), out.end());
  return out;
}

bool strong_ojoin_cut_equivalence(const Triad& t) {
  auto joins = enumerate_strong_ojoins(t);
  EdgeVector all(t.m);
  for (int e = 0; e < t.m; ++e) all.set(e);
  std::vector<EdgeVector> complements;
  complements.reserve(joins.size());
  for (const auto& f : joins) complements.push_back(sym_diff(f, all));
  std::sort(complements.begin(), complements.end());

  std::vector<EdgeVector> cuts;
  for (const auto& c : enumerate_cuts(t.z)) cuts.push_back(c.bits);
  std::sort(cuts.begin(), cuts.end());
  return complements == cuts;
}

}  // namespace pogcut
