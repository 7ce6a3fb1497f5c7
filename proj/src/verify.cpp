#include "pogcut/verify.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "pogcut/common.hpp"

namespace pogcut {

std::vector<CutVector> enumerate_cuts(int z) {
  if (z < 2) throw input_error("enumerate_cuts: z must be at least 2");
  if (z > 30) throw capability_error("enumerate_cuts: z = " + std::to_string(z) + " exceeds guard 30");
  int m = edge_count_kz(z);
  std::vector<CutVector> out;
  out.reserve(std::size_t{1} << (z - 1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (z - 1)); ++mask) {
    CutVector c;
    c.bits = EdgeVector(m);
    std::vector<bool> in_s(z + 1, false);
    for (int k = 0; k < z - 1; ++k)
      if ((mask >> k) & 1u) {
        in_s[k + 2] = true;
        c.side.push_back(k + 2);
      }
    for (int i = 1; i <= z; ++i)
      for (int j = i + 1; j <= z; ++j)
        if (in_s[i] != in_s[j]) c.bits.set(edge_id(i, j, z));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const CutVector& a, const CutVector& b) { return a.bits < b.bits; });
  return out;
}

OracleResult maxcut_oracle(int z, const std::vector<int>& objective) {
  if (static_cast<int>(objective.size()) != edge_count_kz(z))
    throw input_error("maxcut_oracle: objective length must be z(z-1)/2");
  for (int w : objective)
    if (w != 0 && w != 1) throw input_error("maxcut_oracle: objective weights must be 0/1");
  OracleResult best;
  bool first = true;
  for (const auto& cut : enumerate_cuts(z)) {
    long long val = 0;
    for (int e : cut.bits.set_bits()) val += objective[e];
    if (first || val > best.value ||
        (val == best.value && cut.side < best.argmax.side)) {
      best.value = val;
      best.argmax = cut;
      first = false;
    }
  }
  return best;
}

namespace {

// DFS over 0-1 edge variables with per-row slack pruning and unit forcing.
// Rows must have +-1 coefficients (p12 shape).
class Enum01 {
 public:
  Enum01(const InequalitySystem& sys) : n_(sys.edge_vars) {
    for (const auto& row : sys.rows) {
      if (row.rel != Rel::le) throw input_error("enumerate_01_points: expected <= rows");
      RowState st{0, 0, 0, row.rhs};
      std::vector<std::pair<int, int>> vars;
      for (const auto& term : row.terms) {
        if (term.coeff != 1 && term.coeff != -1)
          throw input_error("enumerate_01_points: expected +-1 coefficients");
        if (term.var < 0 || term.var >= n_)
          throw input_error("enumerate_01_points: variable out of range");
        (term.coeff > 0 ? st.pos_un : st.neg_un)++;
        vars.push_back({term.var, term.coeff});
      }
      row_vars_.push_back(std::move(vars));
      state_.push_back(st);
    }
    occ_.resize(n_);
    for (std::size_t r = 0; r < row_vars_.size(); ++r)
      for (auto [v, s] : row_vars_[r]) occ_[v].push_back({static_cast<int>(r), s});

    // most-constrained variables first: descending row count, then id
    order_.resize(n_);
    for (int v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
      return occ_[a].size() != occ_[b].size() ? occ_[a].size() > occ_[b].size() : a < b;
    });
    value_.assign(n_, -1);
  }

  // enumerate completions of the currently assigned state
  void run(std::vector<EdgeVector>& out) { dfs(0, out); }

  // try to pin variable v := val (with propagation); false on conflict.
  bool pin(int v, int val) {
    if (value_[v] != -1) return value_[v] == val;
    return assign(v, val) && propagate();
  }

  const std::vector<int>& search_order() const { return order_; }

 private:
  struct RowState {
    int lhs, pos_un, neg_un, rhs;
  };
  int n_;
  std::vector<RowState> state_;
  std::vector<std::vector<std::pair<int, int>>> row_vars_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
  std::vector<int> value_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<int> dirty_;

  bool assign(int v, int val) {
    value_[v] = val;
    trail_.push_back(v);
    bool ok = true;
    for (auto [r, s] : occ_[v]) {
      auto& st = state_[r];
      (s > 0 ? st.pos_un : st.neg_un)--;
      if (val) st.lhs += s;
      if (st.lhs - st.neg_un > st.rhs) ok = false;
      dirty_.push_back(r);
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      for (auto [r, s] : occ_[v]) {
        auto& st = state_[r];
        (s > 0 ? st.pos_un : st.neg_un)++;
        if (value_[v]) st.lhs -= s;
      }
      value_[v] = -1;
    }
  }

  bool propagate() {
    while (!dirty_.empty()) {
      int r = dirty_.back();
      dirty_.pop_back();
      auto& st = state_[r];
      int slack = st.rhs - (st.lhs - st.neg_un);
      if (slack < 0) return false;
      bool force_pos_zero = st.pos_un > 0 && slack == 0;
      bool force_neg_one = st.neg_un > 0 && st.lhs - (st.neg_un - 1) > st.rhs;
      if (!force_pos_zero && !force_neg_one) continue;
      for (auto [v, s] : row_vars_[r]) {
        if (value_[v] != -1) continue;
        if (s > 0 && force_pos_zero) {
          if (!assign(v, 0)) return false;
        } else if (s < 0 && force_neg_one) {
          if (!assign(v, 1)) return false;
        }
      }
    }
    return true;
  }

  void dfs(int depth, std::vector<EdgeVector>& out) {
    while (depth < n_ && value_[order_[depth]] != -1) ++depth;
    if (depth == n_) {
      EdgeVector point(n_);
      for (int v = 0; v < n_; ++v)
        if (value_[v]) point.set(v);
      out.push_back(std::move(point));
      return;
    }
    int v = order_[depth];
    for (int val : {0, 1}) {
      std::size_t mark = trail_.size();
      dirty_.clear();
      if (assign(v, val) && propagate()) dfs(depth + 1, out);
      dirty_.clear();
      undo_to(mark);
    }
  }
};

}  // namespace

std::vector<EdgeVector> enumerate_01_points(const InequalitySystem& sys, int threads) {
  if (sys.kind != ModelKind::p12)
    throw input_error("enumerate_01_points: expected a p12 system");
  if (sys.edge_vars > 28)
    throw capability_error("enumerate_01_points: " + std::to_string(sys.edge_vars) +
                           " variables exceeds guard 28");
  if (threads < 1) throw input_error("enumerate_01_points: threads must be positive");

  Enum01 base(sys);
  std::vector<EdgeVector> out;
  if (threads == 1) {
    base.run(out);
  } else {
    // split the search space on a prefix of the DFS variable order
    int k = 0;
    while ((1 << k) < 4 * threads && k < sys.edge_vars) ++k;
    std::vector<int> prefix_vars(base.search_order().begin(), base.search_order().begin() + k);
    std::vector<std::vector<EdgeVector>> parts(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        for (unsigned mask = w; mask < (1u << k); mask += threads) {
          Enum01 en(sys);
          bool ok = true;
          for (int i = 0; i < k && ok; ++i) ok = en.pin(prefix_vars[i], (mask >> i) & 1u);
          if (!ok) continue;
          std::vector<EdgeVector> sub;
          en.run(sub);
          for (auto& p : sub) parts[w].push_back(std::move(p));
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts)
      for (auto& p : part) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeVector> enumerate_01_points_unpruned(const InequalitySystem& sys) {
  if (sys.kind != ModelKind::p12)
    throw input_error("enumerate_01_points_unpruned: expected a p12 system");
  if (sys.edge_vars > 20)
    throw capability_error("enumerate_01_points_unpruned: variables exceed guard 20");
  int n = sys.edge_vars;
  std::vector<EdgeVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& row : sys.rows) {
      long long lhs = 0;
      for (const auto& term : row.terms) lhs += term.coeff * ((mask >> term.var) & 1u);
      if (lhs > row.rhs) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    EdgeVector point(n);
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) point.set(v);
    out.push_back(std::move(point));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> integer_box_scan(const InequalitySystem& sys, int ub) {
  if (sys.num_vars > 15)
    throw capability_error("integer_box_scan: " + std::to_string(sys.num_vars) +
                           " variables exceeds guard 15");
  if (ub < 0 || ub > 2) throw capability_error("integer_box_scan: ub must be in 0..2");
  int n = sys.num_vars;
  std::vector<int> value(n, 0);
  std::vector<std::vector<int>> out;

  // min/max achievable lhs over completions of the first `depth` variables
  auto feasible_prefix = [&](int depth) {
    for (const auto& row : sys.rows) {
      long long lo = 0, hi = 0;
      for (const auto& term : row.terms) {
        if (term.var < depth) {
          lo += static_cast<long long>(term.coeff) * value[term.var];
          hi += static_cast<long long>(term.coeff) * value[term.var];
        } else if (term.coeff > 0) {
          hi += static_cast<long long>(term.coeff) * ub;
        } else {
          lo += static_cast<long long>(term.coeff) * ub;
        }
      }
      if (lo > row.rhs) return false;
      if (row.rel == Rel::eq && hi < row.rhs) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, int depth) -> void {
    // per-variable upper bound: the box cap and any declared bound
    if (depth == n) {
      out.push_back(value);
      return;
    }
    int cap = ub;
    if (depth < static_cast<int>(sys.upper.size()) && sys.upper[depth])
      cap = std::min(cap, *sys.upper[depth]);
    for (int v = 0; v <= cap; ++v) {
      value[depth] = v;
      if (feasible_prefix(depth + 1)) self(self, depth + 1);
    }
    value[depth] = 0;
  };
  dfs(dfs, 0);
  return out;
}

ModelSolveResult model_solve(const InequalitySystem& sys, const std::vector<int>& objective,
                             int threads) {
  if (static_cast<int>(objective.size()) != sys.edge_vars)
    throw input_error("model_solve: objective length must match edge variable count");
  auto points = enumerate_01_points(sys, threads);
  if (points.empty()) throw structure_error("model_solve: system has no 0-1 points");
  ModelSolveResult best;
  bool first = true;
  for (const auto& p : points) {  // points sorted, so first max is the lex-least
    long long val = 0;
    for (int e : p.set_bits()) val += objective[e];
    if (first || val > best.value) {
      best.value = val;
      best.argmax = p;
      first = false;
    }
  }
  return best;
}

}  // namespace pogcut
