// End-to-end acceptance checks. Usage: acceptance <path-to-cli>
// Prints one [PASS]/[FAIL] line per criterion; exit code = number of failures.
#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pogcut/common.hpp"
#include "pogcut/io.hpp"
#include "pogcut/lp.hpp"
#include "pogcut/model.hpp"
#include "pogcut/pog.hpp"
#include "pogcut/rozig.hpp"
#include "pogcut/verify.hpp"

using namespace pogcut;
using Clock = std::chrono::steady_clock;

namespace {

const char* const kTable16[16] = {
    "21 14 61 18 A1 1C E1 1G 31 15 71 19 B1 1D F1",
    "43 36 83 3A C3 3E G3 31 53 37 93 3B D3 3F 23",
    "65 58 A5 5C E5 5G 15 53 75 59 B5 5D F5 52 45",
    "87 7A C7 7E G7 71 37 75 97 7B D7 7F 27 74 67",
    "A9 9C E9 9G 19 93 59 97 B9 9D F9 92 49 96 89",
    "CB BE GB B1 3B B5 7B B9 DB BF 2B B4 6B B8 AB",
    "ED DG 1D D3 5D D7 9D DB FD D2 4D D6 8D DA CD",
    "GF F1 3F F5 7F F9 BF FD 2F F4 6F F8 AF FC EF",
    "12 23 52 27 92 2B D2 2F 42 26 82 2A C2 2E G2",
    "34 45 74 49 B4 4D F4 42 64 48 A4 4C E4 4G 14",
    "56 67 96 6B D6 6F 26 64 86 6A C6 6E G6 61 36",
    "78 89 B8 8D F8 82 48 86 A8 8C E8 8G 18 83 58",
    "9A AB DA AF 2A A4 6A A8 CA AE GA A1 3A A5 7A",
    "BC CD FC C2 4C C6 8C CA EC CG 1C C3 5C C7 9C",
    "DE EF 2E E4 6E E8 AE EC GE E1 3E E5 7E E9 BE",
    "FG G2 4G G6 8G GA CG GE 1G G3 5G G7 9G GB DG",
};
const std::set<int> kShaded16 = {0, 2, 4, 6, 9, 11, 13};

int digit17(char c) { return c <= '9' ? c - '0' : c - 'A' + 10; }

std::vector<OrientedPair> decode_row(const std::string& line) {
  std::vector<OrientedPair> out;
  std::istringstream in(line);
  for (std::string cell; in >> cell;) out.push_back({digit17(cell[0]), digit17(cell[1])});
  return out;
}

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& cmd) {
  CliRun r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

template <class Fn>
void criterion(int number, const std::string& label, long budget_ms, Fn fn) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  bool timely = ms <= budget_ms;
  bool pass = o.pass && timely;
  if (!pass) ++failures;
  std::printf("[%s] %2d %s (%ld ms, budget %ld ms)%s%s\n", pass ? "PASS" : "FAIL", number,
              label.c_str(), ms, budget_ms, o.detail.empty() ? "" : " -- ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::map<int, int> hist(const std::vector<ClosedWalk>& walks) {
  std::map<int, int> h;
  for (const auto& w : walks) h[w.length()]++;
  return h;
}

// closed-form census of g1 per z
void expected_census(int z, std::map<int, int>& degrees, std::map<int, int>& faces) {
  if (z % 4 == 0) {
    int h = z / 4;
    degrees = {{3, z}};
    if (h > 1) degrees[4] = z * (h - 1);
    faces = {{4, z * (h - 1) + z / 2}, {z, 1}};
  } else {
    int hf = z / 4;
    degrees = {{4, hf * z}, {z, 1}};
    faces = {{3, z}};
    if ((hf - 1) * z + z / 2 > 0) faces[4] = (hf - 1) * z + z / 2;
  }
}

long long cut_weight(const std::vector<int>& obj, const EdgeVector& bits) {
  long long total = 0;
  for (std::size_t e = 0; e < bits.size(); ++e)
    if (bits.test(e)) total += obj[e];
  return total;
}

std::vector<int> random_objective(int m, std::mt19937_64& rng) {
  std::vector<int> obj(m);
  for (int& w : obj) w = int(rng() & 1);
  return obj;
}

using RowKey = std::tuple<std::vector<Term>, int, int>;
std::multiset<RowKey> row_multiset(const std::vector<LinRow>& rows) {
  std::multiset<RowKey> keys;
  for (const auto& r : rows) keys.insert({r.terms, int(r.rel), r.rhs});
  return keys;
}

std::set<EdgeVector> cut_bits(int z) {
  std::set<EdgeVector> bits;
  for (const auto& c : enumerate_cuts(z)) bits.insert(c.bits);
  return bits;
}

Outcome check_table(const std::string& cli) {
  auto t = build_table(16);
  for (int r = 0; r < 16; ++r)
    if (t.rows[r] != decode_row(kTable16[r]))
      return {false, "generated row " + std::to_string(r + 1) + " deviates"};
  std::set<int> shaded;
  for (int c = 0; c < 15; ++c)
    if (t.shaded[c]) shaded.insert(c);
  if (shaded != kShaded16) return {false, "shaded column set deviates"};

  auto run = run_cli(cli + " table --z 16 --base17");
  if (run.exit_code != 0) return {false, "cli table exited " + std::to_string(run.exit_code)};
  std::istringstream in(run.out);
  std::string line;
  std::set<int> cli_shaded;
  int row_at = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "cols") {
      for (std::string tok; ls >> tok;)
        if (tok.back() == '*') cli_shaded.insert(std::stoi(tok.substr(0, tok.size() - 1)));
    } else if (!head.empty() && head[0] == 'v') {
      if (row_at >= 16) return {false, "cli printed too many rows"};
      std::string cells;
      std::getline(ls, cells);
      if (decode_row(cells) != decode_row(kTable16[row_at]))
        return {false, "cli row " + std::to_string(row_at + 1) + " deviates"};
      ++row_at;
    }
  }
  if (row_at != 16) return {false, "cli printed " + std::to_string(row_at) + " rows"};
  if (cli_shaded != kShaded16) return {false, "cli shading marks deviate"};
  return {true, "library and cli match all 240 cells"};
}

Outcome check_triads() {
  for (int z : {6, 8, 12, 16}) {
    auto t = build_triad(z);
    if (t.g1.euler_char != 1) return {false, "z=" + std::to_string(z) + ": euler char"};
    if (t.g1.orientable) return {false, "z=" + std::to_string(z) + ": orientable"};
    if (int(t.g1.zigzags.size()) != z) return {false, "z=" + std::to_string(z) + ": zigzag count"};
    std::map<int, int> degrees, faces;
    expected_census(z, degrees, faces);
    if (hist(t.g1.vertices) != degrees)
      return {false, "z=" + std::to_string(z) + ": vertex census"};
    if (hist(t.g1.faces) != faces) return {false, "z=" + std::to_string(z) + ": face census"};
    if (hist(t.g1.zigzags) != std::map<int, int>{{z - 1, z}})
      return {false, "z=" + std::to_string(z) + ": zigzag census"};
  }
  return {true, "z in {6,8,12,16}"};
}

Outcome check_spaces() {
  for (int z : {6, 8, 12}) {
    auto t = build_triad(z);
    auto s = map_spaces(t);
    std::string at = "z=" + std::to_string(z) + ": ";
    if (s.cdef != 0) return {false, at + "cycle deficiency nonzero"};
    if (s.f1 != s.v2) return {false, at + "face space != coboundary space of the dual"};
    if (s.z1 != s.v3) return {false, at + "zigzag space != coboundary space of K_z"};
    const Gf2Subspace* v[3] = {&s.v1, &s.v2, &s.v3};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        auto cap = v[i]->intersect(*v[j]);
        if (cap.dim() != s.gamma) return {false, at + "pairwise intersection dim"};
        if (!v[3 - i - j]->contains_subspace(cap)) return {false, at + "absorption"};
      }
    auto joined = s.v1.sum(s.v2);
    if (joined != s.v3.orth_complement()) return {false, at + "joint span != cycle space"};
    std::size_t want = std::size_t(t.m - z + 1);
    if (joined.dim() != want) return {false, at + "joint span dimension"};
    if (z == 8 && joined.dim() != 21) return {false, at + "joint span dim != 21"};
  }
  return {true, "z in {6,8,12}"};
}

Outcome check_points(long z6_budget_ms, long z8_budget_ms) {
  for (auto [z, count, budget] : {std::tuple{6, 32, z6_budget_ms}, {8, 128, z8_budget_ms}}) {
    auto start = Clock::now();
    auto sys = build_p12(build_triad(z));
    auto points = enumerate_01_points(sys);
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (int(points.size()) != count)
      return {false, "z=" + std::to_string(z) + ": " + std::to_string(points.size()) + " points"};
    if (std::set<EdgeVector>(points.begin(), points.end()) != cut_bits(z))
      return {false, "z=" + std::to_string(z) + ": point set differs from the cut set"};
    if (ms > budget)
      return {false, "z=" + std::to_string(z) + " took " + std::to_string(ms) + " ms"};
  }
  return {true, "32 points at z=6, 128 at z=8, both exactly the cuts"};
}

Outcome check_box_scan() {
  auto sys = build_p12(build_triad(6));
  auto box = integer_box_scan(sys, 2);
  std::set<EdgeVector> found;
  for (const auto& v : box) {
    EdgeVector bits(v.size());
    for (std::size_t e = 0; e < v.size(); ++e) {
      if (v[e] > 1) return {false, "a coordinate-2 point is feasible"};
      if (v[e]) bits.set(e);
    }
    found.insert(bits);
  }
  if (found != cut_bits(6)) return {false, "box points differ from the cut set"};
  return {true, std::to_string(box.size()) + " integer points, all 0-1"};
}

Outcome check_counts() {
  for (int z = 6; z <= 40; z += 2) {
    auto r = count_report(z);
    std::string at = "z=" + std::to_string(z) + ": ";
    if (r.s12_count != r.s12_predicted)
      return {false, at + std::to_string(r.s12_count) + " signed rows, predicted " +
                         std::to_string(r.s12_predicted)};
    if (!r.within_bound) return {false, at + "row total exceeds 11|E|"};
    if (z == 8 && (r.total_rows != 220 || r.bound_11m != 308))
      return {false, at + "expected 220 <= 308"};
  }
  return {true, "signed-row formula and 11|E| bound hold for even z in [6,40]"};
}

Outcome check_optimization() {
  std::mt19937_64 rng(20260822);
  for (int z : {6, 8}) {
    auto sys = build_p12(build_triad(z));
    int m = edge_count_kz(z);
    std::string at = "z=" + std::to_string(z) + ": ";
    for (int e = 0; e < m; ++e) {
      std::vector<int> obj(m, 0);
      obj[e] = 1;
      if (model_solve(sys, obj).value != maxcut_oracle(z, obj).value)
        return {false, at + "single-edge objective " + std::to_string(e)};
    }
    for (int trial = 0; trial < 50; ++trial) {
      auto obj = random_objective(m, rng);
      auto got = model_solve(sys, obj);
      auto want = maxcut_oracle(z, obj);
      if (got.value != want.value)
        return {false, at + "random objective trial " + std::to_string(trial)};
      if (cut_weight(obj, got.argmax) != got.value)
        return {false, at + "argmax does not attain the reported value"};
    }
  }
  std::vector<int> ones(15, 1);
  if (model_solve(build_p12(build_triad(6)), ones).value != 9)
    return {false, "all-ones optimum at z=6 is not 9"};
  return {true, "model equals oracle on 43 single-edge and 100 random objectives"};
}

Outcome check_ojoins() {
  for (int z : {6, 8}) {
    auto t = build_triad(z);
    std::string at = "z=" + std::to_string(z) + ": ";
    auto joins = enumerate_strong_ojoins(t);
    std::set<EdgeVector> complements;
    std::size_t min_join = t.m;
    for (auto f : joins) {
      min_join = std::min(min_join, f.popcount());
      for (int e = 0; e < t.m; ++e) f.flip(e);
      complements.insert(f);
    }
    if (complements != cut_bits(z)) return {false, at + "complements differ from the cut set"};
    auto maxcut = maxcut_oracle(z, std::vector<int>(t.m, 1)).value;
    if (min_join != std::size_t(t.m - maxcut))
      return {false, at + "min strong O-join " + std::to_string(min_join)};
    if (z == 6 && (min_join != 6 || t.m - maxcut != 6)) return {false, at + "expected 6 = 15 - 9"};
    if (!strong_ojoin_cut_equivalence(t)) return {false, at + "equivalence predicate"};
  }
  return {true, "complement sets equal cut sets; minima match |E| - maxcut"};
}

Outcome check_derivation() {
  for (int z : {6, 8, 12}) {
    auto t = build_triad(z);
    std::string at = "z=" + std::to_string(z) + ": ";
    auto p12 = build_p12(t);
    auto p2 = build_p2prime(t);
    auto transformed = complement_transform(p2);
    if (row_multiset(transformed.rows) != row_multiset(p12.rows))
      return {false, at + "complement transform deviates from the cut model"};

    // exhaustive local elimination: for every polygon p and every 0-1 x' on p,
    // the p2' rows hold iff the equality slack is integral iff the (s,q) rows
    // hold (checked in doubled arithmetic so halves stay exact)
    auto polys = v12(t);
    for (std::size_t pi = 0; pi < polys.size(); ++pi) {
      const auto& p = polys[pi];
      int n = p.length();
      auto pq_rows = pq_inequalities(p, t.m, int(pi));
      std::vector<const LinRow*> p2_rows;
      std::string prefix = "p" + std::to_string(pi) + "_q";
      for (const auto& row : p2.rows)
        if (row.name.compare(0, prefix.size(), prefix) == 0) p2_rows.push_back(&row);
      if (int(p2_rows.size()) != (1 << (n - 1)))
        return {false, at + "wrong q-row count for polygon " + std::to_string(pi)};
      std::map<int, int> value;  // edge var -> 0/1 under the current mask
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int total = 0;
        for (int k = 0; k < n; ++k) {
          value[p.edges[k]] = (mask >> k) & 1u;
          total += (mask >> k) & 1u;
        }
        bool p2_ok = true;
        for (const auto* row : p2_rows) {
          int lhs = 0;
          for (const auto& term : row->terms) lhs += term.coeff * value.at(term.var);
          if (lhs > row->rhs) p2_ok = false;
        }
        int twice_s = n - total;
        bool integral = twice_s % 2 == 0;
        bool pq_ok = true;
        for (const auto& row : pq_rows) {
          int lhs2 = 0;
          for (const auto& term : row.terms)
            lhs2 += term.var == t.m ? term.coeff * twice_s : 2 * term.coeff * value.at(term.var);
          if (lhs2 > 2 * row.rhs) pq_ok = false;
        }
        if (p2_ok != integral || pq_ok != integral)
          return {false, at + "elimination chain breaks on polygon " + std::to_string(pi) +
                             " mask " + std::to_string(mask)};
      }
    }
  }
  return {true, "transform multisets equal; elimination exhausted over every local assignment"};
}

Outcome check_lp() {
  auto t = build_triad(6);
  auto sys = build_p12(t);
  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 20; ++trial) {
    auto obj01 = random_objective(15, rng);
    std::vector<Rational> obj(obj01.begin(), obj01.end());
    auto lp = solve_lp(sys, obj, LpSense::maximize);
    if (lp.status != LpStatus::optimal)
      return {false, "trial " + std::to_string(trial) + ": not optimal"};
    Rational integer_value = long(model_solve(sys, obj01).value);
    if (lp.value < integer_value)
      return {false, "trial " + std::to_string(trial) + ": relaxation below integer optimum"};
    for (const auto& row : sys.rows) {
      Rational lhs = 0;
      for (const auto& term : row.terms) lhs += term.coeff * lp.solution[term.var];
      bool ok = row.rel == Rel::le ? lhs <= row.rhs : lhs == row.rhs;
      if (!ok) return {false, "trial " + std::to_string(trial) + ": row " + row.name};
    }
    for (const auto& x : lp.solution)
      if (x < 0) return {false, "trial " + std::to_string(trial) + ": negative coordinate"};
  }
  return {true, "20 seeded objectives: exact optima dominate, certificates re-checked"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 64;
  }
  std::string cli = "\"" + std::string(argv[1]) + "\"";

  criterion(1, "rozig table z=16 matches the frozen figure", 1000,
            [&] { return check_table(cli); });
  criterion(2, "triad structure and census", 5000, [] { return check_triads(); });
  criterion(3, "coboundary/face/zigzag space relations", 10000, [] { return check_spaces(); });
  criterion(4, "0-1 points of the cut model are the cuts", 301000,
            [] { return check_points(1000, 300000); });
  criterion(5, "integer box scan stays 0-1", 120000, [] { return check_box_scan(); });
  criterion(6, "row-count formulas and 11|E| bound", 5000, [] { return check_counts(); });
  criterion(7, "model optima equal brute-force maxcut", 300000,
            [] { return check_optimization(); });
  criterion(8, "strong O-join complements are the cuts", 300000, [] { return check_ojoins(); });
  criterion(9, "complement transform and slack elimination", 10000,
            [] { return check_derivation(); });
  criterion(10, "exact LP relaxation dominates integer optima", 60000, [] { return check_lp(); });

  std::printf("%s: %d of 10 criteria passed\n", failures ? "FAIL" : "OK", 10 - failures);
  return failures;
}
