#pragma once
#include <optional>
#include <string>
#include <vector>

#include "pogcut/pog.hpp"

namespace pogcut {

// A length-3 or length-4 walk of g1 (vertex coboundary or face boundary) whose
// edges close a cycle in K_z; edges are kept in cyclic order.
struct Polygon {
  enum class Origin { vertex, face };
  std::vector<int> edges;
  Origin origin = Origin::vertex;
  int origin_index = 0;  // index into g1.vertices / g1.faces
  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const Polygon&) const = default;
};

// All short polygons, vertices of g1 first then faces, in extraction order.
std::vector<Polygon> v12(const Triad& t);

// A polygon with signs, an odd number of them positive.
struct SignedPolygon {
  Polygon polygon;
  std::vector<int> signs;   // +1/-1, aligned with polygon.edges
  unsigned neg_mask = 0;    // bit k set iff signs[k] == -1
  int p_plus = 0, p_minus = 0;
  bool operator==(const SignedPolygon&) const = default;
};

// The 4 (triangle) or 8 (quadrangle) odd-positive signings, ascending neg_mask.
std::vector<SignedPolygon> signings(const Polygon& p);

enum class ModelKind { p12, p2prime, p0prime };
enum class Rel { le, eq };

struct Term {
  int var = 0;
  int coeff = 0;
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

struct LinRow {
  std::string name;
  std::vector<Term> terms;  // sorted by var
  Rel rel = Rel::le;
  int rhs = 0;
  bool operator==(const LinRow&) const = default;
};

struct InequalitySystem {
  ModelKind kind = ModelKind::p12;
  int z = 0;
  int edge_vars = 0;  // leading vars are edge variables x_e, e = 0..edge_vars-1
  int num_vars = 0;   // edge vars plus any slack vars (p0prime)
  std::vector<std::string> var_names;
  std::vector<LinRow> rows;
  std::vector<std::optional<int>> upper;  // per-var upper bound; lower is always 0
  bool operator==(const InequalitySystem&) const = default;
};

// Cut polytope model: one row per signed polygon (sum of signed edge vars
// <= p_plus - 1) plus one nonnegativity row per edge.
InequalitySystem build_p12(const Triad& t);

// Complemented-variable model: one row per (polygon, q) with q a subset of the
// polygon's edges and |p| - |q| odd; box bounds 0 <= x' <= 1.
InequalitySystem build_p2prime(const Triad& t);

// Equality model: per polygon p, 2 s_p + sum of its x' equals |p|, with
// s_p >= 0 and 0 <= x' <= 1.
InequalitySystem build_p0prime(const Triad& t);

// Derived bounds on (s_p, x'): one row per q subset with |p| + |q| odd:
// s_p + sum over q of x' <= (|p| + |q| - 1) / 2.
std::vector<LinRow> pq_inequalities(const Polygon& p, int s_var, int polygon_index);

// Substitute x = 1 - x' into every row of a p2prime system; the result is the
// polygon-row part of build_p12 plus the edge nonnegativity rows.
InequalitySystem complement_transform(const InequalitySystem& p2);

struct CountReport {
  int z = 0;
  bool half_h = false;
  long long m = 0;
  long long triangles = 0, quadrangles = 0;       // polygons by length
  long long s12_count = 0, s12_predicted = 0;     // signed polygons, actual vs formula
  long long total_rows = 0, bound_11m = 0;        // p12 rows incl. nonnegativity
  bool within_bound = false;
  long long crude_estimate = 0;                   // 4 z^2
  bool crude_within_10m = false;
};
CountReport count_report(int z);

}  // namespace pogcut
