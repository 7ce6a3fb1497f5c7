#include "pogcut/rozig.hpp"

#include <algorithm>
#include <string>

#include "pogcut/common.hpp"

namespace pogcut {

int OrientedPair::partner_of(int label) const {
  if (first == label) return second;
  if (second == label) return first;
  throw structure_error("OrientedPair: label " + std::to_string(label) + " not in pair");
}

static void check_z(int z) {
  if (z < 6 || z % 2 != 0)
    throw input_error("z must be even and at least 6, got " + std::to_string(z));
}

int suc2(int label, int z) {
  check_z(z);
  if (label < 1 || label > z) throw input_error("suc2: label out of range");
  if (label == z) return 1;
  if (label == z - 1) return 2;
  return label + 2;
}

// Column 0 is the projective entry (2,1). The left block (columns 1..z/2-1) pairs 1
// with even partners 4,6,...,z, alternating (1,p),(p,1),... The right block
// (columns z/2..z-2) pairs 1 with odd partners 3,5,...,z-1; its alternation starts
// with (p,1) when z = 0 mod 4 and with (1,p) when z = 2 mod 4.
std::vector<OrientedPair> first_row(int z) {
  check_z(z);
  std::vector<OrientedPair> row;
  row.reserve(z - 1);
  row.push_back({2, 1});
  for (int k = 0; k < z / 2 - 1; ++k) {
    int p = 4 + 2 * k;
    row.push_back(k % 2 == 0 ? OrientedPair{1, p} : OrientedPair{p, 1});
  }
  bool partner_first = (z % 4 == 0);
  for (int k = 0; k < z / 2 - 1; ++k) {
    int p = 3 + 2 * k;
    bool pf = (k % 2 == 0) == partner_first;
    row.push_back(pf ? OrientedPair{p, 1} : OrientedPair{1, p});
  }
  return row;
}

// Column 0 shaded; left block alternates non-shaded/shaded; right block mirrors:
// shaded(c) = shaded(z-1-c).
std::vector<bool> shading(int z) {
  check_z(z);
  std::vector<bool> sh(z - 1, false);
  sh[0] = true;
  for (int c = 1; c <= z / 2 - 1; ++c) sh[c] = (c % 2 == 0);
  for (int c = z / 2; c <= z - 2; ++c) sh[c] = sh[z - 1 - c];
  return sh;
}

RozigTable build_table(int z) {
  check_z(z);
  RozigTable t;
  t.z = z;
  t.shaded = shading(z);
  t.rows.resize(z);
  t.rows[0] = first_row(z);
  for (int r = 1; r < z; ++r) {
    t.rows[r].reserve(z - 1);
    for (const auto& p : t.rows[r - 1])
      t.rows[r].push_back({suc2(p.first, z), suc2(p.second, z)});
  }

  // validation: uniform row labels following the suc2 orbit of 1
  t.row_labels.reserve(z);
  int expect = 1;
  for (int r = 0; r < z; ++r) {
    int label = expect;
    for (const auto& p : t.rows[r])
      if (!p.contains(label))
        throw structure_error("rozig table: row " + std::to_string(r + 1) +
                              " is not uniformly labelled " + std::to_string(label));
    t.row_labels.push_back(label);
    expect = suc2(expect, z);
  }

  // validation: every unordered pair occurs exactly twice overall
  std::vector<int> seen(edge_count_kz(z), 0);
  for (const auto& row : t.rows)
    for (const auto& p : row) {
      if (p.first == p.second) throw structure_error("rozig table: degenerate pair");
      ++seen[edge_id(p.first, p.second, z)];
    }
  for (int e = 0; e < edge_count_kz(z); ++e)
    if (seen[e] != 2)
      throw structure_error("rozig table: pair coverage failed at edge id " + std::to_string(e));
  return t;
}

RotationSystem rotation_and_twist(const RozigTable& table) {
  int z = table.z;
  check_z(z);
  RotationSystem rs;
  rs.vertex_count = z;
  rs.rotation.resize(z);
  int m = edge_count_kz(z);
  rs.twist.assign(m, false);
  std::vector<int> twist_state(m, -1);  // -1 unseen, else 0/1

  for (int r = 0; r < z; ++r) {
    int v = table.row_labels[r];
    auto& rot = rs.rotation[v - 1];
    rot.reserve(z - 1);
    for (int c = 0; c < z - 1; ++c) {
      const auto& p = table.rows[r][c];
      int w = p.partner_of(v);
      int e = edge_id(v, w, z);
      rot.push_back(e);
      int shade = table.shaded[c] ? 1 : 0;
      if (twist_state[e] == -1)
        twist_state[e] = shade;
      else if (twist_state[e] != shade)
        throw structure_error("rozig table: edge " + std::to_string(e) +
                              " occurs in one shaded and one non-shaded column");
    }
  }
  for (int e = 0; e < m; ++e) rs.twist[e] = twist_state[e] == 1;
  return rs;
}

}  // namespace pogcut
