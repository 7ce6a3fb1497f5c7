#include "pogcut/io.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

#include "pogcut/common.hpp"

namespace pogcut {

InputGraph parse_graph(const std::string& text) {
  InputGraph g;
  int declared_n = -1, declared_m = -1;
  std::set<std::pair<int, int>> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw input_error("graph line " + std::to_string(lineno) + ": " + msg);
  };
  auto parse_int = [&](const std::string& tok, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) fail(std::string("bad ") + what + " '" + tok + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks[0] == "c" || toks[0][0] == '#') continue;
    if (toks[0] == "p") {
      if (toks.size() != 4 || toks[1] != "edge") fail("malformed header, want 'p edge N M'");
      declared_n = parse_int(toks[2], "vertex count");
      declared_m = parse_int(toks[3], "edge count");
      if (declared_n < 1) fail("header vertex count must be positive");
      continue;
    }
    std::size_t at = toks[0] == "e" ? 1 : 0;
    if (toks.size() != at + 2)
      fail("malformed edge line, want '" + std::string(at ? "e i j" : "i j") + "'");
    int i = parse_int(toks[at], "endpoint");
    int j = parse_int(toks[at + 1], "endpoint");
    if (i == j) fail("self-loop " + std::to_string(i));
    if (i < 1 || j < 1) fail("vertex labels must be positive");
    if (declared_n > 0 && (i > declared_n || j > declared_n))
      fail("endpoint exceeds declared vertex count");
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) {
      g.warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                           std::to_string(i) + " " + std::to_string(j) + " ignored");
      continue;
    }
    g.edges.push_back({i, j});
  }
  for (auto [i, j] : g.edges) g.n = std::max({g.n, i, j});
  if (declared_n > 0) g.n = std::max(g.n, declared_n);
  if (g.n < 2) throw input_error("graph: need at least 2 vertices");
  if (declared_m >= 0 && declared_m != static_cast<int>(g.edges.size()))
    g.warnings.push_back("header declares " + std::to_string(declared_m) + " edges, read " +
                         std::to_string(g.edges.size()));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

EmbeddedObjective embed_objective(const InputGraph& g) {
  EmbeddedObjective out;
  int n = g.n;
  out.pendant_added = n % 2 == 1;
  int z = n + (out.pendant_added ? 1 : 0);
  if (z < 6) z = 6;  // host must support a triad; extra vertices stay isolated
  out.z = z;
  out.objective.assign(edge_count_kz(z), 0);
  for (auto [i, j] : g.edges) out.objective[edge_id(i, j, z)] = 1;
  if (out.pendant_added) out.objective[edge_id(1, n + 1, z)] = 1;
  return out;
}

static std::string base17_digit(int label) {
  if (label >= 1 && label <= 9) return std::string(1, static_cast<char>('0' + label));
  if (label >= 10 && label <= 16) return std::string(1, static_cast<char>('A' + label - 10));
  throw input_error("base17 rendering requires labels 1..16");
}

std::string render_table(const RozigTable& table, bool base17) {
  if (base17 && table.z > 16)
    throw input_error("base17 rendering only supports z <= 16, got z=" + std::to_string(table.z));
  std::ostringstream os;
  int cell = base17 ? 2 : 2 * static_cast<int>(std::to_string(table.z).size()) + 1;
  // column width: the widest of cell text and column header ("13*"), plus a gap
  int width = std::max(cell, static_cast<int>(std::to_string(table.z - 2).size()) + 1) + 1;
  os << "cols ";
  for (int c = 0; c < table.z - 1; ++c) {
    std::string head = std::to_string(c) + (table.shaded[c] ? "*" : "");
    os << head;
    for (int pad = static_cast<int>(head.size()); pad < width; ++pad) os << ' ';
  }
  os << "\n";
  for (int r = 0; r < table.z; ++r) {
    os << "v" << table.row_labels[r];
    for (int pad = static_cast<int>(std::to_string(table.row_labels[r]).size()) + 1; pad < 5;
         ++pad)
      os << ' ';
    for (int c = 0; c < table.z - 1; ++c) {
      const auto& p = table.rows[r][c];
      std::string entry = base17 ? base17_digit(p.first) + base17_digit(p.second)
                                 : std::to_string(p.first) + "," + std::to_string(p.second);
      os << entry;
      for (int pad = static_cast<int>(entry.size()); pad < width; ++pad) os << ' ';
    }
    os << "\n";
  }
  return os.str();
}

static const char* kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::p12: return "p12";
    case ModelKind::p2prime: return "p2prime";
    case ModelKind::p0prime: return "p0prime";
  }
  return "?";
}

// objective direction and coefficients shared by the exports: edge variables
// get weight 1, slack variables 0; p12 maximizes, the primed models minimize.
static bool maximize_objective(const InequalitySystem& sys) {
  return sys.kind == ModelKind::p12;
}

std::string export_lp(const InequalitySystem& sys) {
  std::ostringstream os;
  os << "\\ " << kind_name(sys.kind) << " model, z=" << sys.z << "\n";
  os << (maximize_objective(sys) ? "Maximize" : "Minimize") << "\n obj:";
  for (int v = 0; v < sys.edge_vars; ++v)
    os << (v == 0 ? " " : " + ") << sys.var_names[v];
  os << "\nSubject To\n";
  for (const auto& row : sys.rows) {
    os << " " << row.name << ":";
    for (std::size_t k = 0; k < row.terms.size(); ++k) {
      const auto& term = row.terms[k];
      int mag = std::abs(term.coeff);
      os << (term.coeff < 0 ? " - " : (k == 0 ? " " : " + "));
      if (mag != 1) os << mag << " ";
      os << sys.var_names[term.var];
    }
    os << (row.rel == Rel::le ? " <= " : " = ") << row.rhs << "\n";
  }
  os << "Bounds\n";
  for (int v = 0; v < sys.num_vars; ++v) {
    if (v < static_cast<int>(sys.upper.size()) && sys.upper[v])
      os << " 0 <= " << sys.var_names[v] << " <= " << *sys.upper[v] << "\n";
    else
      os << " " << sys.var_names[v] << " >= 0\n";
  }
  os << "End\n";
  return os.str();
}

std::string export_mps(const InequalitySystem& sys) {
  std::ostringstream os;
  auto field = [](const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) out.push_back(' ');
    return out;
  };
  os << "NAME          " << kind_name(sys.kind) << "_z" << sys.z << "\n";
  os << "ROWS\n";
  os << " N  obj\n";
  for (const auto& row : sys.rows)
    os << " " << (row.rel == Rel::le ? "L" : "E") << "  " << row.name << "\n";
  os << "COLUMNS\n";
  // column-major: every variable lists its objective then row coefficients
  for (int v = 0; v < sys.num_vars; ++v) {
    std::vector<std::pair<std::string, int>> entries;
    if (v < sys.edge_vars) entries.push_back({"obj", 1});
    for (const auto& row : sys.rows)
      for (const auto& term : row.terms)
        if (term.var == v) entries.push_back({row.name, term.coeff});
    for (std::size_t k = 0; k < entries.size(); k += 2) {
      os << "    " << field(sys.var_names[v], 10);
      os << field(entries[k].first, 10) << entries[k].second;
      if (k + 1 < entries.size())
        os << "   " << field(entries[k + 1].first, 10) << entries[k + 1].second;
      os << "\n";
    }
  }
  os << "RHS\n";
  for (const auto& row : sys.rows)
    if (row.rhs != 0) os << "    " << field("rhs", 10) << field(row.name, 10) << row.rhs << "\n";
  os << "BOUNDS\n";
  for (int v = 0; v < sys.num_vars; ++v)
    if (v < static_cast<int>(sys.upper.size()) && sys.upper[v])
      os << " UP " << field("bnd", 10) << field(sys.var_names[v], 10) << *sys.upper[v] << "\n";
  os << "ENDATA\n";
  return os.str();
}

std::string export_json(const InequalitySystem& sys) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(sys.kind);
  j["z"] = sys.z;
  j["edge_vars"] = sys.edge_vars;
  j["num_vars"] = sys.num_vars;
  j["objective"] = maximize_objective(sys) ? "maximize" : "minimize";
  j["vars"] = sys.var_names;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : sys.rows) {
    nlohmann::ordered_json r;
    r["name"] = row.name;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& term : row.terms) terms.push_back({term.var, term.coeff});
    r["terms"] = std::move(terms);
    r["rel"] = row.rel == Rel::le ? "<=" : "=";
    r["rhs"] = row.rhs;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  nlohmann::ordered_json upper = nlohmann::ordered_json::array();
  for (const auto& u : sys.upper)
    upper.push_back(u ? nlohmann::ordered_json(*u) : nlohmann::ordered_json(nullptr));
  j["upper"] = std::move(upper);
  return j.dump(2) + "\n";
}

InequalitySystem import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("system json: ") + e.what());
  }
  InequalitySystem sys;
  try {
    std::string kind = j.at("kind");
    if (kind == "p12")
      sys.kind = ModelKind::p12;
    else if (kind == "p2prime")
      sys.kind = ModelKind::p2prime;
    else if (kind == "p0prime")
      sys.kind = ModelKind::p0prime;
    else
      throw input_error("system json: unknown kind " + kind);
    sys.z = j.at("z");
    sys.edge_vars = j.at("edge_vars");
    sys.num_vars = j.at("num_vars");
    sys.var_names = j.at("vars").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
      LinRow row;
      row.name = r.at("name");
      for (const auto& term : r.at("terms")) row.terms.push_back({term.at(0), term.at(1)});
      std::string rel = r.at("rel");
      if (rel == "<=")
        row.rel = Rel::le;
      else if (rel == "=")
        row.rel = Rel::eq;
      else
        throw input_error("system json: unknown relation " + rel);
      row.rhs = r.at("rhs");
      sys.rows.push_back(std::move(row));
    }
    for (const auto& u : j.at("upper")) {
      if (u.is_null())
        sys.upper.push_back(std::nullopt);
      else
        sys.upper.push_back(u.get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("system json: ") + e.what());
  }
  if (static_cast<int>(sys.var_names.size()) != sys.num_vars ||
      static_cast<int>(sys.upper.size()) != sys.num_vars)
    throw input_error("system json: variable metadata sizes disagree with num_vars");
  return sys;
}

}  // namespace pogcut
