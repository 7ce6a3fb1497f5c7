#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "pogcut/model.hpp"

namespace pogcut {

// Exact rational scalar: arbitrary-precision, always canonical (gcd 1, den > 0).
using Rational = mpq_class;

std::string to_string(const Rational& r);  // "p/q", or "p" when q = 1

enum class LpStatus { optimal, infeasible, unbounded };
enum class LpSense { maximize, minimize };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value = 0;                // meaningful only when optimal
  std::vector<Rational> solution;    // per structural variable, when optimal
  long long pivots = 0;
};

// Two-phase dense-tableau simplex with Bland's rule; bounds 0 <= x (<= upper
// when declared) are handled as bounds/rows, single-variable nonnegativity rows
// are dropped in favour of the variable bound. Optimal solutions are re-checked
// against every row and bound at zero tolerance before being returned.
LpResult solve_lp(const InequalitySystem& sys, const std::vector<Rational>& objective,
                  LpSense sense);

}  // namespace pogcut
