#include "pogcut/model.hpp"

#include <algorithm>
#include <bit>

#include "pogcut/common.hpp"

namespace pogcut {

static bool closes_cycle(const std::vector<int>& edges, int z) {
  int n = static_cast<int>(edges.size());
  for (int i = 0; i < n; ++i) {
    auto [a1, b1] = edge_pair(edges[i], z);
    auto [a2, b2] = edge_pair(edges[(i + 1) % n], z);
    int shared = (a1 == a2) + (a1 == b2) + (b1 == a2) + (b1 == b2);
    if (shared != 1) return false;
  }
  return true;
}

std::vector<Polygon> v12(const Triad& t) {
  std::vector<Polygon> out;
  auto harvest = [&](const std::vector<ClosedWalk>& walks, Polygon::Origin origin) {
    for (std::size_t i = 0; i < walks.size(); ++i) {
      if (walks[i].length() != 3 && walks[i].length() != 4) continue;
      Polygon p{walks[i].edges, origin, static_cast<int>(i)};
      if (!closes_cycle(p.edges, t.z))
        throw structure_error("v12: short walk is not a closed K_z cycle");
      out.push_back(std::move(p));
    }
  };
  harvest(t.g1.vertices, Polygon::Origin::vertex);
  harvest(t.g1.faces, Polygon::Origin::face);
  return out;
}

std::vector<SignedPolygon> signings(const Polygon& p) {
  int n = p.length();
  if (n != 3 && n != 4) throw input_error("signings: polygon length must be 3 or 4");
  std::vector<SignedPolygon> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int minus = std::popcount(mask);
    int plus = n - minus;
    if (plus % 2 == 0) continue;
    SignedPolygon s;
    s.polygon = p;
    s.neg_mask = mask;
    s.p_plus = plus;
    s.p_minus = minus;
    s.signs.resize(n);
    for (int k = 0; k < n; ++k) s.signs[k] = (mask >> k) & 1u ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

static std::string edge_var_name(int e, int z) {
  auto [i, j] = edge_pair(e, z);
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

static std::vector<std::string> edge_var_names(int z) {
  std::vector<std::string> names;
  int m = edge_count_kz(z);
  names.reserve(m);
  for (int e = 0; e < m; ++e) names.push_back(edge_var_name(e, z));
  return names;
}

static std::vector<Term> sorted_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  return terms;
}

InequalitySystem build_p12(const Triad& t) {
  InequalitySystem sys;
  sys.kind = ModelKind::p12;
  sys.z = t.z;
  sys.edge_vars = sys.num_vars = t.m;
  sys.var_names = edge_var_names(t.z);
  sys.upper.assign(t.m, std::nullopt);

  auto polys = v12(t);
  for (std::size_t pi = 0; pi < polys.size(); ++pi) {
    for (const auto& s : signings(polys[pi])) {
      LinRow row;
      row.name = "p" + std::to_string(pi) + "_s" + std::to_string(s.neg_mask);
      std::vector<Term> terms;
      for (int k = 0; k < s.polygon.length(); ++k)
        terms.push_back({s.polygon.edges[k], s.signs[k]});
      row.terms = sorted_terms(std::move(terms));
      row.rel = Rel::le;
      row.rhs = s.p_plus - 1;
      if (row.rhs < 0 || row.rhs > 2)
        throw structure_error("build_p12: row rhs out of {0,1,2}");
      sys.rows.push_back(std::move(row));
    }
  }
  for (int e = 0; e < t.m; ++e) {
    auto [i, j] = edge_pair(e, t.z);
    LinRow row;
    row.name = "nn_" + std::to_string(i) + "_" + std::to_string(j);
    row.terms = {{e, -1}};
    row.rel = Rel::le;
    row.rhs = 0;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

InequalitySystem build_p2prime(const Triad& t) {
  InequalitySystem sys;
  sys.kind = ModelKind::p2prime;
  sys.z = t.z;
  sys.edge_vars = sys.num_vars = t.m;
  sys.var_names = edge_var_names(t.z);
  sys.upper.assign(t.m, 1);

  auto polys = v12(t);
  for (std::size_t pi = 0; pi < polys.size(); ++pi) {
    const auto& p = polys[pi];
    int n = p.length();
    for (unsigned qmask = 0; qmask < (1u << n); ++qmask) {
      int qsize = std::popcount(qmask);
      if ((n - qsize) % 2 == 0) continue;  // |p| - |q| must be odd
      LinRow row;
      row.name = "p" + std::to_string(pi) + "_q" + std::to_string(qmask);
      std::vector<Term> terms;
      for (int k = 0; k < n; ++k)
        terms.push_back({p.edges[k], (qmask >> k) & 1u ? 1 : -1});
      row.terms = sorted_terms(std::move(terms));
      row.rel = Rel::le;
      row.rhs = qsize - 1;
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

InequalitySystem build_p0prime(const Triad& t) {
  InequalitySystem sys;
  sys.kind = ModelKind::p0prime;
  sys.z = t.z;
  sys.edge_vars = t.m;
  sys.var_names = edge_var_names(t.z);
  sys.upper.assign(t.m, 1);

  auto polys = v12(t);
  sys.num_vars = t.m + static_cast<int>(polys.size());
  for (std::size_t pi = 0; pi < polys.size(); ++pi) {
    sys.var_names.push_back("s_p" + std::to_string(pi));
    sys.upper.push_back(std::nullopt);
    int s_var = t.m + static_cast<int>(pi);
    LinRow row;
    row.name = "p" + std::to_string(pi);
    std::vector<Term> terms{{s_var, 2}};
    for (int e : polys[pi].edges) terms.push_back({e, 1});
    row.terms = sorted_terms(std::move(terms));
    row.rel = Rel::eq;
    row.rhs = polys[pi].length();
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::vector<LinRow> pq_inequalities(const Polygon& p, int s_var, int polygon_index) {
  int n = p.length();
  std::vector<LinRow> out;
  for (unsigned qmask = 0; qmask < (1u << n); ++qmask) {
    int qsize = std::popcount(qmask);
    if ((n + qsize) % 2 == 0) continue;  // |p| + |q| must be odd
    LinRow row;
    row.name = "pq" + std::to_string(polygon_index) + "_q" + std::to_string(qmask);
    std::vector<Term> terms{{s_var, 1}};
    for (int k = 0; k < n; ++k)
      if ((qmask >> k) & 1u) terms.push_back({p.edges[k], 1});
    row.terms = sorted_terms(std::move(terms));
    row.rel = Rel::le;
    row.rhs = (n + qsize - 1) / 2;
    out.push_back(std::move(row));
  }
  return out;
}

InequalitySystem complement_transform(const InequalitySystem& p2) {
  if (p2.kind != ModelKind::p2prime)
    throw input_error("complement_transform: expected a p2prime system");
  InequalitySystem sys;
  sys.kind = ModelKind::p12;
  sys.z = p2.z;
  sys.edge_vars = sys.num_vars = p2.edge_vars;
  sys.var_names = p2.var_names;
  sys.upper.assign(sys.num_vars, std::nullopt);

  for (const auto& src : p2.rows) {
    // substitute x' = 1 - x in sum a x' <= b: coefficients negate, rhs loses sum(a)
    LinRow row;
    row.name = src.name;
    row.rel = src.rel;
    int coeff_sum = 0;
    for (const auto& term : src.terms) {
      row.terms.push_back({term.var, -term.coeff});
      coeff_sum += term.coeff;
    }
    row.rhs = src.rhs - coeff_sum;
    for (const auto& term : row.terms)
      if (term.coeff != 1 && term.coeff != -1)
        throw structure_error("complement_transform: non-unit coefficient");
    if (row.rhs < 0 || row.rhs > 2)
      throw structure_error("complement_transform: transformed rhs out of {0,1,2}");
    sys.rows.push_back(std::move(row));
  }
  for (int e = 0; e < sys.num_vars; ++e) {
    auto [i, j] = edge_pair(e, sys.z);
    LinRow row;
    row.name = "nn_" + std::to_string(i) + "_" + std::to_string(j);
    row.terms = {{e, -1}};
    row.rel = Rel::le;
    row.rhs = 0;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

CountReport count_report(int z) {
  Triad t = build_triad(z);
  CountReport r;
  r.z = z;
  r.half_h = t.half_h();
  r.m = t.m;
  auto polys = v12(t);
  for (const auto& p : polys) (p.length() == 3 ? r.triangles : r.quadrangles)++;
  r.s12_count = 4 * r.triangles + 8 * r.quadrangles;
  // h = z/4: integer h gives 16 z h - 8 z = 4 z^2 - 8 z; half-integer h gives
  // 16 floor(h) z signed polygons.
  r.s12_predicted = r.half_h ? 16LL * t.h_floor() * z : 4LL * z * z - 8LL * z;
  r.total_rows = r.s12_count + r.m;
  r.bound_11m = 11LL * r.m;
  r.within_bound = r.total_rows <= r.bound_11m;
  r.crude_estimate = 4LL * z * z;
  r.crude_within_10m = r.crude_estimate <= 10LL * r.m;
  return r;
}

}  // namespace pogcut
