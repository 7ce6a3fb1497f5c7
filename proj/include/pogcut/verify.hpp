#pragma once
#include <vector>

#include "pogcut/gf2.hpp"
#include "pogcut/model.hpp"

namespace pogcut {

// Cut of K_z: edges with exactly one endpoint in S, canonical side 1 not in S.
struct CutVector {
  EdgeVector bits;
  std::vector<int> side;  // S, ascending, subset of {2..z}
};

std::vector<CutVector> enumerate_cuts(int z);  // all 2^(z-1) cuts, guard z <= 30

struct OracleResult {
  long long value = 0;
  CutVector argmax;  // lexicographically least canonical side among the maxima
};
// Direct maximum of a 0/1 edge objective over all cuts.
OracleResult maxcut_oracle(int z, const std::vector<int>& objective);

// All 0-1 assignments of the edge variables satisfying every row of a p12
// system, by DFS with per-row slack pruning and forcing (guard edge_vars <= 28).
// The result is sorted; independent of thread count.
std::vector<EdgeVector> enumerate_01_points(const InequalitySystem& sys, int threads = 1);

// Same feasibility scan without any pruning, as a cross-check (guard <= 20 vars).
std::vector<EdgeVector> enumerate_01_points_unpruned(const InequalitySystem& sys);

// All integer points of [0..ub]^n satisfying the system (guards vars <= 15, ub <= 2).
std::vector<std::vector<int>> integer_box_scan(const InequalitySystem& sys, int ub);

struct ModelSolveResult {
  long long value = 0;
  EdgeVector argmax;  // lexicographically least maximizer
};
// Maximum of a 0/1 edge objective over the system's 0-1 points.
ModelSolveResult model_solve(const InequalitySystem& sys, const std::vector<int>& objective,
                             int threads = 1);

}  // namespace pogcut
