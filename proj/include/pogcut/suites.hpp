#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace pogcut {

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

struct SuiteReport {
  std::vector<Check> checks;
  bool all_pass() const;
  void add(const std::string& name, bool pass, const std::string& details = "");
};

// Named check bundles behind the CLI: table (rozig invariants), census (triad
// structure vs the closed-form counts), spaces (GF(2) space relations), points
// (0-1 points vs cuts, box scan, strong O-joins; guarded by size), counts
// (row-count formulas and bound), pq (derived bounds and the complement map).
SuiteReport run_suite(const std::string& suite, int z, std::uint64_t seed, int threads);
std::vector<std::string> suite_names();  // excluding "all"

}  // namespace pogcut
