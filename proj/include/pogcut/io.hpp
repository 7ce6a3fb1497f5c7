#pragma once
#include <string>
#include <utility>
#include <vector>

#include "pogcut/lp.hpp"
#include "pogcut/model.hpp"
#include "pogcut/rozig.hpp"

namespace pogcut {

struct InputGraph {
  int n = 0;                                // vertices 1..n
  std::vector<std::pair<int, int>> edges;   // i < j, deduplicated, sorted
  std::vector<std::string> warnings;        // e.g. duplicate edges dropped
};

// Edge-list text: optional "p edge N M" header, "#"/"c" comment lines, data
// lines "i j" or "e i j". Errors carry 1-based line numbers.
InputGraph parse_graph(const std::string& text);

struct EmbeddedObjective {
  int z = 0;                     // host clique size: n rounded up to even, min 6
  std::vector<int> objective;    // 0/1 per K_z edge id
  bool pendant_added = false;    // n odd: edge {1, n+1} added, maxcut rises by 1
};
EmbeddedObjective embed_objective(const InputGraph& g);

// Rozig table rendering; base17 uses digits 1..9,A..G per label (z <= 16 only)
// and marks shaded columns with '*' in the header.
std::string render_table(const RozigTable& table, bool base17);

// Model exports. Each embeds the model's natural objective: maximize the sum of
// edge variables for p12, minimize it for p2prime/p0prime. Output is
// byte-deterministic for a given system.
std::string export_lp(const InequalitySystem& sys);
std::string export_mps(const InequalitySystem& sys);
std::string export_json(const InequalitySystem& sys);
InequalitySystem import_json(const std::string& text);

}  // namespace pogcut
