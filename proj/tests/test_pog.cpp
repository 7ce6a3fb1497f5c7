#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "pogcut/common.hpp"
#include "pogcut/pog.hpp"
#include "pogcut/verify.hpp"

using namespace pogcut;

namespace {

using Hist = std::map<int, int>;

EdgeVector all_edges(int m) {
  EdgeVector v(m);
  for (int e = 0; e < m; ++e) v.set(e);
  return v;
}

EdgeVector complement(EdgeVector v) {
  for (std::size_t e = 0; e < v.size(); ++e) v.flip(e);
  return v;
}

}  // namespace

TEST_CASE("triad construction guards") {
  CHECK_THROWS_AS(build_triad(7), input_error);
  CHECK_THROWS_AS(build_triad(4), input_error);
}

TEST_CASE("triad z=6: half-integer case") {
  auto t = build_triad(6);
  CHECK(t.m == 15);
  CHECK(t.half_h());
  CHECK(t.h_floor() == 1);
  CHECK(t.g1.euler_char == 1);
  CHECK_FALSE(t.g1.orientable);
  auto c1 = census(t.g1);
  CHECK(c1.vertex_degrees == Hist{{4, 6}, {6, 1}});
  CHECK(c1.face_sizes == Hist{{3, 6}, {4, 3}});
  CHECK(c1.zigzag_lengths == Hist{{5, 6}});
  auto c3 = census(t.g3);
  CHECK(c3.vertex_degrees == Hist{{5, 6}});
}

TEST_CASE("triad z=8: integer case") {
  auto t = build_triad(8);
  CHECK(t.m == 28);
  CHECK_FALSE(t.half_h());
  auto c1 = census(t.g1);
  CHECK(c1.vertex_degrees == Hist{{3, 8}, {4, 8}});
  CHECK(c1.face_sizes == Hist{{4, 12}, {8, 1}});
  CHECK(c1.zigzag_lengths == Hist{{7, 8}});
  CHECK(t.g1.vertices.size() == 16);
  CHECK(t.g1.faces.size() == 13);
  CHECK(t.g1.euler_char == 1);
  CHECK_FALSE(t.g1.orientable);
}

TEST_CASE("triad z=12") {
  auto t = build_triad(12);
  auto c1 = census(t.g1);
  CHECK(c1.vertex_degrees == Hist{{3, 12}, {4, 24}});
  CHECK(c1.face_sizes == Hist{{4, 30}, {12, 1}});
  CHECK(c1.zigzag_lengths == Hist{{11, 12}});
  CHECK(t.g1.euler_char == 1);
}

TEST_CASE("g2 is the dual and g3 shares the faces of g1") {
  for (int z : {6, 8}) {
    auto t = build_triad(z);
    auto sorted = [](std::vector<ClosedWalk> w) {
      std::sort(w.begin(), w.end());
      return w;
    };
    CHECK(sorted(t.g2.vertices) == sorted(t.g1.faces));
    CHECK(sorted(t.g2.faces) == sorted(t.g1.vertices));
    CHECK(sorted(t.g3.faces) == sorted(t.g1.faces));
    CHECK(t.g2.euler_char == 1);
    CHECK_FALSE(t.g2.orientable);
  }
}

TEST_CASE("zigzag labelling matches the K_z edge pairs") {
  for (int z : {6, 8, 10}) {
    auto t = build_triad(z);
    REQUIRE(int(t.g1.zigzags.size()) == z);
    for (int e = 0; e < t.m; ++e) {
      std::multiset<int> labels;
      for (std::size_t i = 0; i < t.g1.zigzags.size(); ++i)
        for (int we : t.g1.zigzags[i].edges)
          if (we == e) labels.insert(t.g1_zigzag_label[i]);
      auto [a, b] = edge_pair(e, z);
      CHECK(labels == std::multiset<int>{a, b});
    }
  }
}

TEST_CASE("walk_vector keeps odd-multiplicity edges") {
  ClosedWalk w;
  w.edges = {0, 3, 0, 2, 3, 3};
  CHECK(walk_vector(w, 5) == EdgeVector(5, {2, 3}));
  CHECK(walk_vector(ClosedWalk{}, 4).is_zero());
}

TEST_CASE("map spaces: dimensions, gamma, richness") {
  struct Row {
    int z;
    std::size_t d1, d2, d3, joint;
  };
  for (auto [z, d1, d2, d3, joint] : {Row{6, 6, 8, 5, 10}, Row{8, 15, 12, 7, 21}}) {
    auto t = build_triad(z);
    auto s = map_spaces(t);
    CHECK(s.v1.dim() == d1);
    CHECK(s.v2.dim() == d2);
    CHECK(s.v3.dim() == d3);
    CHECK(s.f1 == s.v2);
    CHECK(s.z1 == s.v3);
    CHECK(s.gamma == std::size_t(z - 2));
    CHECK(s.cdef == 0);
    auto joined = s.v1.sum(s.v2);
    CHECK(joined.dim() == joint);
    CHECK(joined == s.v3.orth_complement());
  }
}

TEST_CASE("absorption: pairwise intersections land in the third space") {
  auto t = build_triad(8);
  auto s = map_spaces(t);
  const Gf2Subspace* v[3] = {&s.v1, &s.v2, &s.v3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = 3 - i - j;
      auto cap = v[i]->intersect(*v[j]);
      CHECK(cap.dim() == s.gamma);
      CHECK(v[k]->contains_subspace(cap));
    }
}

TEST_CASE("zigzags complete the face span to the full cycle space") {
  auto t = build_triad(8);
  auto s = map_spaces(t);
  auto cycles = s.v1.orth_complement();
  CHECK(cycles.quotient_dim(s.f1) == 1);
  for (const auto& zz : t.g1.zigzags) {
    auto vec = walk_vector(zz, t.m);
    CHECK_FALSE(s.f1.contains(vec));
    auto widened = s.f1;
    widened.insert(vec);
    CHECK(widened == cycles);
  }
}

TEST_CASE("strong O-join predicate") {
  auto t = build_triad(6);
  CHECK(is_strong_ojoin(t, all_edges(t.m)));
  CHECK_FALSE(is_strong_ojoin(t, EdgeVector(t.m)));  // six 3-faces have odd size
  for (const auto& cut : enumerate_cuts(6)) CHECK(is_strong_ojoin(t, complement(cut.bits)));
  // complement of a non-cut is not a strong O-join
  CHECK_FALSE(is_strong_ojoin(t, complement(EdgeVector(t.m, {0}))));
}

TEST_CASE("strong O-joins at z=6: full enumeration vs direct scan") {
  auto t = build_triad(6);
  auto joins = enumerate_strong_ojoins(t);
  CHECK(joins.size() == 32);

  std::set<EdgeVector> direct;
  int min_size = t.m;
  for (int mask = 0; mask < (1 << t.m); ++mask) {
    EdgeVector f(t.m);
    for (int e = 0; e < t.m; ++e)
      if (mask >> e & 1) f.set(e);
    if (is_strong_ojoin(t, f)) {
      direct.insert(f);
      min_size = std::min(min_size, int(f.popcount()));
    }
  }
  CHECK(direct == std::set<EdgeVector>(joins.begin(), joins.end()));
  CHECK(min_size == 6);  // |E| - maxcut = 15 - 9
  CHECK(strong_ojoin_cut_equivalence(t));
}

TEST_CASE("strong O-joins at z=8") {
  auto t = build_triad(8);
  auto joins = enumerate_strong_ojoins(t);
  CHECK(joins.size() == 128);
  CHECK(strong_ojoin_cut_equivalence(t));
  int min_size = t.m;
  for (const auto& f : joins) min_size = std::min(min_size, int(f.popcount()));
  CHECK(min_size == 28 - 16);  // |E| - maxcut(K8)
}

TEST_CASE("enumeration guard") {
  auto t = build_triad(10);  // m = 45 > 28
  CHECK_THROWS_AS(enumerate_strong_ojoins(t), capability_error);
  CHECK_THROWS_AS(strong_ojoin_cut_equivalence(t), capability_error);
}
