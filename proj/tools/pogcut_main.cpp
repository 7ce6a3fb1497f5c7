#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pogcut/common.hpp"
#include "pogcut/io.hpp"
#include "pogcut/lp.hpp"
#include "pogcut/model.hpp"
#include "pogcut/pog.hpp"
#include "pogcut/rozig.hpp"
#include "pogcut/suites.hpp"
#include "pogcut/verify.hpp"

using namespace pogcut;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POGCUT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw input_error("POGCUT_SEED is not a number");
    }
  }
  return 20260822;
}

InequalitySystem build_model(int z, const std::string& model) {
  Triad t = build_triad(z);
  if (model == "p12") return build_p12(t);
  if (model == "p2") return build_p2prime(t);
  if (model == "p0") return build_p0prime(t);
  throw input_error("unknown model: " + model);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run(int argc, char** argv) {
  CLI::App app{"projective orbital graph triads and K_z maxcut models"};
  app.require_subcommand(1);

  int z = 8;
  bool base17 = false;
  std::string model = "p12", format = "lp", out_path, suite = "all", graph_path,
              method = "enum";
  std::uint64_t seed = default_seed();
  int threads = 1;

  auto add_z = [&](CLI::App* cmd) {
    cmd->add_option("--z", z, "number of K_z vertices (even, >= 6)")->required();
  };

  CLI::App* c_table = app.add_subcommand("table", "print the rozig table");
  add_z(c_table);
  c_table->add_flag("--base17", base17, "two-digit cells with digits 1..9,A..G (z <= 16)");

  CLI::App* c_build = app.add_subcommand("build", "construct a model and export it");
  add_z(c_build);
  c_build->add_option("--model", model, "p12 | p2 | p0")
      ->check(CLI::IsMember({"p12", "p2", "p0"}));
  c_build->add_option("--format", format, "lp | mps | json")
      ->check(CLI::IsMember({"lp", "mps", "json"}));
  c_build->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_verify = app.add_subcommand("verify", "run verification suites");
  add_z(c_verify);
  c_verify->add_option("--suite", suite, "all | table | census | spaces | points | counts | pq")
      ->check(CLI::IsMember({"all", "table", "census", "spaces", "points", "counts", "pq"}));
  c_verify->add_option("--seed", seed, "seed for randomized spot checks");
  c_verify->add_option("--threads", threads, "worker threads for enumeration");

  CLI::App* c_solve = app.add_subcommand("solve", "maxcut of an edge-list graph");
  c_solve->add_option("--graph", graph_path, "edge-list file")->required();
  c_solve->add_option("--method", method, "enum | oracle | lp")
      ->check(CLI::IsMember({"enum", "oracle", "lp"}));
  c_solve->add_option("--threads", threads, "worker threads for enumeration");

  CLI::App* c_stats = app.add_subcommand("stats", "model size report");
  add_z(c_stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; bad usage exits 2
  }

  if (c_table->parsed()) {
    std::cout << render_table(build_table(z), base17);
    return 0;
  }

  if (c_build->parsed()) {
    InequalitySystem sys = build_model(z, model);
    std::string text = format == "lp"    ? export_lp(sys)
                       : format == "mps" ? export_mps(sys)
                                         : export_json(sys);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw input_error("cannot write " + out_path);
      out << text;
    }
    return 0;
  }

  if (c_verify->parsed()) {
    SuiteReport rep = run_suite(suite, z, seed, threads);
    for (const auto& c : rep.checks)
      std::cout << (c.pass ? "ok   " : "FAIL ") << c.name
                << (c.details.empty() ? "" : "  [" + c.details + "]") << "\n";
    std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << " ("
              << rep.checks.size() << ")\n";
    return rep.all_pass() ? 0 : 1;
  }

  if (c_solve->parsed()) {
    InputGraph g = parse_graph(read_file(graph_path));
    for (const auto& w : g.warnings) std::cerr << "warning: " << w << "\n";
    EmbeddedObjective emb = embed_objective(g);
    int adjust = emb.pendant_added ? 1 : 0;
    if (method == "oracle") {
      if (emb.z > 30) throw capability_error("solve: z exceeds oracle guard 30");
      OracleResult r = maxcut_oracle(emb.z, emb.objective);
      std::cout << "maxcut = " << r.value - adjust << "\n";
      std::cout << "side =";
      for (int v : r.argmax.side)
        if (v <= g.n) std::cout << " " << v;
      std::cout << "\n";
      return 0;
    }
    Triad t = build_triad(emb.z);
    if (method == "enum") {
      ModelSolveResult r = model_solve(build_p12(t), emb.objective, threads);
      std::cout << "maxcut = " << r.value - adjust << "\n";
      return 0;
    }
    // lp: exact relaxation value of the p12 model (an upper bound on maxcut)
    std::vector<Rational> obj;
    for (int w : emb.objective) obj.push_back(w);
    LpResult r = solve_lp(build_p12(t), obj, LpSense::maximize);
    if (r.status != LpStatus::optimal) throw structure_error("solve: relaxation not optimal");
    Rational adjusted = r.value - adjust;
    std::cout << "lp bound = " << to_string(adjusted) << "\n";
    return 0;
  }

  if (c_stats->parsed()) {
    CountReport r = count_report(z);
    std::cout << "z " << r.z << (r.half_h ? " (half-integer h)" : "") << "\n"
              << "edges " << r.m << "\n"
              << "triangles " << r.triangles << "\n"
              << "quadrangles " << r.quadrangles << "\n"
              << "signed_polygons " << r.s12_count << " (predicted " << r.s12_predicted << ")\n"
              << "rows " << r.total_rows << " (bound " << r.bound_11m << ")"
              << (r.within_bound ? "" : " EXCEEDED") << "\n"
              << "crude_4z2 " << r.crude_estimate
              << (r.crude_within_10m ? " within 10m" : " above 10m") << "\n";
    return r.within_bound && r.s12_count == r.s12_predicted ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
