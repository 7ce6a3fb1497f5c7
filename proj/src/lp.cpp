#include "pogcut/lp.hpp"

#include <algorithm>

#include "pogcut/common.hpp"

namespace pogcut {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

// A single-term row "-x <= 0" duplicates the built-in lower bound.
bool is_nonneg_row(const LinRow& row) {
  return row.rel == Rel::le && row.terms.size() == 1 && row.terms[0].coeff == -1 && row.rhs == 0;
}

struct Tableau {
  int ncols = 0;                           // excluding rhs
  std::vector<std::vector<Rational>> a;    // each row: ncols coefficients + rhs
  std::vector<Rational> cost;              // reduced-cost row, ncols entries
  std::vector<int> basis;                  // basic column per row
  std::vector<bool> banned;                // columns excluded from entering
  long long pivots = 0;

  Rational& rhs(int r) { return a[r][ncols]; }

  void pivot(int r, int s) {
    Rational pv = a[r][s];
    for (auto& x : a[r]) x /= pv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rational f = a[i][s];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) a[i][j] -= f * a[r][j];
    }
    Rational f = cost[s];
    if (f != 0) {
      for (int j = 0; j < ncols; ++j) cost[j] -= f * a[r][j];
      cost_shift -= f * a[r][ncols];
    }
    basis[r] = s;
    ++pivots;
  }

  Rational cost_shift = 0;  // accumulated objective of the basic solution

  // Bland: entering = least column with positive reduced cost; leaving = min
  // ratio, ties broken by least basic variable. Returns false when optimal.
  // Throws on unbounded if allow_unbounded, else reports it.
  enum class Step { optimal, pivoted, unbounded };
  Step step() {
    int s = -1;
    for (int j = 0; j < ncols; ++j)
      if (!banned[j] && cost[j] > 0) {
        s = j;
        break;
      }
    if (s == -1) return Step::optimal;
    int leave = -1;
    Rational best_ratio;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i][s] <= 0) continue;
      Rational ratio = a[i][ncols] / a[i][s];
      if (leave == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave]))
        leave = static_cast<int>(i), best_ratio = ratio;
    }
    if (leave == -1) return Step::unbounded;
    pivot(leave, s);
    return Step::pivoted;
  }
};

}  // namespace

LpResult solve_lp(const InequalitySystem& sys, const std::vector<Rational>& objective,
                  LpSense sense) {
  if (static_cast<int>(objective.size()) != sys.num_vars)
    throw input_error("solve_lp: objective length must match variable count");
  int n = sys.num_vars;

  // collect working rows: system rows minus redundant nonnegativity rows, plus
  // one row per declared upper bound
  struct WorkRow {
    std::vector<Term> terms;
    Rel rel;
    Rational rhs;
  };
  std::vector<WorkRow> work;
  for (const auto& row : sys.rows) {
    if (is_nonneg_row(row)) continue;
    work.push_back({row.terms, row.rel, Rational(row.rhs)});
  }
  for (int j = 0; j < n; ++j)
    if (j < static_cast<int>(sys.upper.size()) && sys.upper[j])
      work.push_back({{{j, 1}}, Rel::le, Rational(*sys.upper[j])});

  // normalize to equality form with nonnegative rhs
  // column layout: structural 0..n-1, then one slack/surplus per inequality row,
  // then artificials
  int nslack = 0;
  for (const auto& w : work)
    if (w.rel == Rel::le) ++nslack;
  std::vector<int> art_cols;
  Tableau t;
  int base_cols = n + nslack;
  // count artificials: rows that are equalities or flipped to >=
  std::vector<int> needs_art(work.size(), 0);
  std::vector<int> flip(work.size(), 0);
  for (std::size_t i = 0; i < work.size(); ++i) {
    bool neg = work[i].rhs < 0;
    flip[i] = neg;
    if (work[i].rel == Rel::eq)
      needs_art[i] = 1;
    else if (neg)
      needs_art[i] = 1;  // <= with negative rhs becomes >= with positive rhs
  }
  int nart = 0;
  for (std::size_t i = 0; i < work.size(); ++i) nart += needs_art[i];
  t.ncols = base_cols + nart;
  t.banned.assign(t.ncols, false);
  t.cost.assign(t.ncols, 0);
  t.basis.assign(work.size(), -1);
  t.a.assign(work.size(), std::vector<Rational>(t.ncols + 1, Rational(0)));

  int slack_at = n, art_at = base_cols;
  for (std::size_t i = 0; i < work.size(); ++i) {
    int sign = flip[i] ? -1 : 1;
    for (const auto& term : work[i].terms) t.a[i][term.var] = sign * term.coeff;
    t.a[i][t.ncols] = sign * work[i].rhs;
    if (work[i].rel == Rel::le) {
      t.a[i][slack_at] = sign;  // flipped rows get surplus (-1 after sign)
      if (!needs_art[i]) t.basis[i] = slack_at;
      ++slack_at;
    }
    if (needs_art[i]) {
      t.a[i][art_at] = 1;
      t.basis[i] = art_at;
      art_cols.push_back(art_at);
      ++art_at;
    }
  }

  const long long pivot_cap = 2000000;
  LpResult res;

  if (nart > 0) {
    // phase 1: maximize minus the sum of artificials
    for (int c : art_cols) t.cost[c] = -1;
    for (std::size_t i = 0; i < work.size(); ++i) {
      int b = t.basis[i];
      Rational f = t.cost[b];
      if (f != 0) {
        for (int j = 0; j < t.ncols; ++j) t.cost[j] -= f * t.a[i][j];
        t.cost_shift -= f * t.a[i][t.ncols];
      }
    }
    while (true) {
      auto st = t.step();
      if (st == Tableau::Step::optimal) break;
      if (st == Tableau::Step::unbounded)
        throw structure_error("solve_lp: phase 1 unbounded (cannot happen)");
      if (t.pivots > pivot_cap) throw structure_error("solve_lp: pivot cap exceeded");
    }
    Rational art_sum = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      bool is_art = t.basis[i] >= base_cols;
      if (is_art) art_sum += t.a[i][t.ncols];
    }
    if (art_sum != 0) {
      res.status = LpStatus::infeasible;
      res.pivots = t.pivots;
      return res;
    }
    // drive remaining artificials out of the basis; drop redundant rows
    for (std::size_t i = 0; i < t.a.size();) {
      if (t.basis[i] < base_cols) {
        ++i;
        continue;
      }
      int s = -1;
      for (int j = 0; j < base_cols; ++j)
        if (t.a[i][j] != 0) {
          s = j;
          break;
        }
      if (s >= 0) {
        t.pivot(static_cast<int>(i), s);
        ++i;
      } else {
        t.a.erase(t.a.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    for (int c : art_cols) t.banned[c] = true;
  }

  // phase 2: the real objective (negated when minimizing)
  std::fill(t.cost.begin(), t.cost.end(), Rational(0));
  t.cost_shift = 0;
  for (int j = 0; j < n; ++j)
    t.cost[j] = sense == LpSense::maximize ? objective[j] : -objective[j];
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    int b = t.basis[i];
    Rational f = t.cost[b];
    if (f != 0) {
      for (int j = 0; j < t.ncols; ++j) t.cost[j] -= f * t.a[i][j];
      t.cost_shift -= f * t.a[i][t.ncols];
    }
  }
  while (true) {
    auto st = t.step();
    if (st == Tableau::Step::optimal) break;
    if (st == Tableau::Step::unbounded) {
      res.status = LpStatus::unbounded;
      res.pivots = t.pivots;
      return res;
    }
    if (t.pivots > pivot_cap) throw structure_error("solve_lp: pivot cap exceeded");
  }

  res.status = LpStatus::optimal;
  res.pivots = t.pivots;
  res.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.a.size(); ++i)
    if (t.basis[i] < n) res.solution[t.basis[i]] = t.a[i][t.ncols];
  Rational value = 0;
  for (int j = 0; j < n; ++j) value += objective[j] * res.solution[j];
  res.value = value;

  // exact re-check of the claimed solution against the original system
  for (int j = 0; j < n; ++j) {
    if (res.solution[j] < 0) throw structure_error("solve_lp: negative variable in solution");
    if (j < static_cast<int>(sys.upper.size()) && sys.upper[j] &&
        res.solution[j] > *sys.upper[j])
      throw structure_error("solve_lp: upper bound violated in solution");
  }
  for (const auto& row : sys.rows) {
    Rational lhs = 0;
    for (const auto& term : row.terms) lhs += term.coeff * res.solution[term.var];
    bool ok = row.rel == Rel::le ? lhs <= row.rhs : lhs == row.rhs;
    if (!ok) throw structure_error("solve_lp: row " + row.name + " violated in solution");
  }
  return res;
}

}  // namespace pogcut
