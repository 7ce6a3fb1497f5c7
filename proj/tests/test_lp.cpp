#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "pogcut/lp.hpp"
#include "pogcut/verify.hpp"

using namespace pogcut;

namespace {

// one variable, the given rows, optional upper bound
InequalitySystem tiny(std::vector<LinRow> rows, std::optional<int> upper = std::nullopt) {
  InequalitySystem sys;
  sys.edge_vars = sys.num_vars = 1;
  sys.var_names = {"x"};
  sys.rows = std::move(rows);
  sys.upper = {upper};
  return sys;
}

Rational eval_row(const LinRow& row, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (const auto& term : row.terms) lhs += term.coeff * x[term.var];
  return lhs;
}

}  // namespace

TEST_CASE("to_string") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-7, 2)) == "-7/2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("one-variable programs") {
  auto bounded = solve_lp(tiny({{"r", {{0, 1}}, Rel::le, 1}}), {1}, LpSense::maximize);
  REQUIRE(bounded.status == LpStatus::optimal);
  CHECK(bounded.value == 1);
  CHECK(bounded.solution == std::vector<Rational>{1});

  auto infeasible = solve_lp(tiny({{"r", {{0, 1}}, Rel::le, -1}}), {1}, LpSense::maximize);
  CHECK(infeasible.status == LpStatus::infeasible);

  auto unbounded = solve_lp(tiny({}), {1}, LpSense::maximize);
  CHECK(unbounded.status == LpStatus::unbounded);

  auto fractional = solve_lp(tiny({{"r", {{0, 2}}, Rel::eq, 3}}), {1}, LpSense::maximize);
  REQUIRE(fractional.status == LpStatus::optimal);
  CHECK(fractional.value == Rational(3, 2));

  auto boxed = solve_lp(tiny({}, 2), {1}, LpSense::maximize);
  REQUIRE(boxed.status == LpStatus::optimal);
  CHECK(boxed.value == 2);

  auto minimum = solve_lp(tiny({{"r", {{0, 1}}, Rel::le, 5}}), {1}, LpSense::minimize);
  REQUIRE(minimum.status == LpStatus::optimal);
  CHECK(minimum.value == 0);  // variables are nonnegative
}

TEST_CASE("two variables, optimum at a row-intersection vertex") {
  InequalitySystem sys;
  sys.edge_vars = sys.num_vars = 2;
  sys.var_names = {"x", "y"};
  sys.upper = {std::nullopt, std::nullopt};
  sys.rows = {{"a", {{0, 2}, {1, 1}}, Rel::le, 3}, {"b", {{0, 1}, {1, 2}}, Rel::le, 3}};
  auto r = solve_lp(sys, {1, 1}, LpSense::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 2);
  CHECK(r.solution == std::vector<Rational>{1, 1});
}

TEST_CASE("cut model relaxation at z=6: frozen optima") {
  auto sys = build_p12(build_triad(6));
  auto all_ones = solve_lp(sys, std::vector<Rational>(15, 1), LpSense::maximize);
  REQUIRE(all_ones.status == LpStatus::optimal);
  CHECK(all_ones.value == Rational(57, 5));  // strictly above the integer optimum 9

  // edges on a triangle polygon are capped at 1 fractionally; the three
  // projective-column edges lie only on quadrangles and reach 3/2
  std::set<int> on_triangle;
  for (const auto& p : v12(build_triad(6)))
    if (p.length() == 3) on_triangle.insert(p.edges.begin(), p.edges.end());
  CHECK(on_triangle.size() == 12);
  for (int e = 0; e < 15; ++e) {
    std::vector<Rational> obj(15, 0);
    obj[e] = 1;
    auto r = solve_lp(sys, obj, LpSense::maximize);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == (on_triangle.count(e) ? Rational(1) : Rational(3, 2)));
  }
}

TEST_CASE("relaxation dominates the integer optimum") {
  auto t = build_triad(6);
  auto sys = build_p12(t);
  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> obj01(15);
    for (int& w : obj01) w = int(rng() & 1);
    std::vector<Rational> obj(obj01.begin(), obj01.end());
    auto lp = solve_lp(sys, obj, LpSense::maximize);
    REQUIRE(lp.status == LpStatus::optimal);
    Rational integer_value = long(model_solve(sys, obj01).value);
    CHECK(lp.value >= integer_value);
    // independent certificate check, zero tolerance
    for (const auto& row : sys.rows) {
      Rational lhs = eval_row(row, lp.solution);
      if (row.rel == Rel::le) CHECK(lhs <= row.rhs);
      else CHECK(lhs == row.rhs);
    }
    for (const auto& x : lp.solution) CHECK(x >= 0);
  }
}

TEST_CASE("z=8 relaxation value") {
  auto sys = build_p12(build_triad(8));
  auto r = solve_lp(sys, std::vector<Rational>(28, 1), LpSense::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(68, 3));
  CHECK(r.value > 16);  // integer maxcut of K8
}

TEST_CASE("identical inputs give identical runs") {
  auto sys = build_p12(build_triad(6));
  std::vector<Rational> obj(15, 1);
  auto a = solve_lp(sys, obj, LpSense::maximize);
  auto b = solve_lp(sys, obj, LpSense::maximize);
  CHECK(a.value == b.value);
  CHECK(a.solution == b.solution);
  CHECK(a.pivots == b.pivots);
}
