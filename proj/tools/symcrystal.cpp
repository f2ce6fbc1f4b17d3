// symcrystal: crystal graphs, PBW/global bases and verification suites.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "symcrystal/io.hpp"
#include "symcrystal/verify.hpp"

using namespace symcrystal;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  std::string mode = "typeA";
  std::string window = "-3,-1,1,3";
  int max_degree = 4;
  std::string format = "text";
  std::string suite = "all";
  int parallel = 1;
  std::string input;
  std::string block;
  std::string indices;
  int index = 1;
  std::string side = "E";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Kind kind_of(const Options& o) { return o.mode == "theta" ? Kind::Theta : Kind::TypeA; }

Window window_of(const Options& o) {
  const Window w = parse_window(o.window);
  if (kind_of(o) == Kind::Theta && !w.symmetric())
    throw UsageError("theta mode needs a window symmetric under i -> -i, got " + w.to_string());
  return w;
}

std::string read_input(const std::string& arg) {
  if (!arg.empty() && arg != "-") return arg;
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '[';
}

std::string label(const Multisegment& m) { return m.empty() ? "0" : m.to_string(); }

ojson key_json(const BlockKey& key) {
  ojson o = ojson::object();
  for (const auto& [i, n] : key) o[std::to_string(i)] = n;
  return o;
}

ojson ms_json(const Multisegment& m) { return ojson::parse(multiseg_to_json(m)); }

// width in code points, so that the middle dot aligns
std::size_t cp_len(const std::string& s) {
  std::size_t len = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++len;
  return len;
}

std::string pad(const std::string& s, std::size_t w) {
  const std::size_t len = cp_len(s);
  return s + std::string(w > len ? w - len : 0, ' ');
}

std::string table(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                  const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> w(cols.size() + 1, 0);
  for (const auto& r : rows) w[0] = std::max(w[0], cp_len(r));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    w[c + 1] = cp_len(cols[c]);
    for (const auto& row : cells) w[c + 1] = std::max(w[c + 1], cp_len(row[c]));
  }
  std::string out;
  auto line = [&](const std::string& head, const std::vector<std::string>& row) {
    std::string l = "  " + pad(head, w[0]);
    for (std::size_t c = 0; c < row.size(); ++c) l += " | " + pad(row[c], w[c + 1]);
    l.erase(l.find_last_not_of(' ') + 1);
    out += l + "\n";
  };
  line("", cols);
  for (std::size_t r = 0; r < rows.size(); ++r) line(rows[r], cells[r]);
  return out;
}

std::vector<BlockKey> selected_blocks(const BlockModel& model, const Options& o) {
  if (!o.block.empty() || o.max_degree < 0) {
    if (o.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
    BlockKey key = parse_block(o.block, model.kind());
    for (const auto& [i, n] : key)
      if (!model.window().contains(i)) throw UsageError("block index " + std::to_string(i) + " outside window");
    return {key};
  }
  std::vector<BlockKey> keys;
  for (const auto& [k, b] : model.blocks(o.max_degree)) keys.push_back(k);
  return keys;
}

// --- subcommands -----------------------------------------------------------

int cmd_crystal_graph(const Options& o) {
  std::vector<int> idx;
  if (!o.indices.empty()) {
    const BlockKey k = parse_block(o.indices, Kind::TypeA);
    for (const auto& [i, n] : k) idx.push_back(i);
  }
  const CrystalGraph g = crystal_graph(kind_of(o), window_of(o), o.max_degree, idx);
  if (o.format == "dot") {
    std::cout << to_dot(g);
  } else if (o.format == "json") {
    ojson doc;
    doc["mode"] = to_string(g.kind);
    doc["window"] = g.window.indices();
    doc["nodes"] = ojson::array();
    for (const auto& m : g.nodes) doc["nodes"].push_back(ms_json(m));
    doc["edges"] = ojson::array();
    for (const auto& e : g.edges)
      doc["edges"].push_back({{"source", ms_json(e.source)}, {"target", ms_json(e.target)}, {"index", e.index}});
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    for (const auto& e : g.edges)
      std::cout << node_label(g, e.source) << " --" << e.index << "--> " << node_label(g, e.target) << "\n";
  }
  return 0;
}

WordVector vector_of_input(const std::string& text, Kind kind, const Window& w) {
  if (looks_like_json(text)) {
    const Multisegment m = multiseg_from_json(text);
    for (const auto& [s, n] : m.entries())
      if (!w.contains(s)) throw UsageError("segment " + s.to_string() + " outside window " + w.to_string());
    return kind == Kind::Theta ? ptheta_vector(w, m) : pbw_element(w, m);
  }
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  return word_vector_from_text(t, w);
}

int cmd_expand(const Options& o) {
  const std::string text = read_input(o.input);
  if (!looks_like_json(text)) throw UsageError("expand takes a JSON multisegment");
  const Window w = window_of(o);
  const Multisegment m = multiseg_from_json(text);
  const WordVector v = vector_of_input(text, kind_of(o), w);
  if (o.format == "json") {
    ojson doc{{"multisegment", ms_json(m)}, {"expansion", v.to_string()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
  return 0;
}

int cmd_coords(const Options& o, Kind kind) {
  const Window w = window_of(o);
  if (kind == Kind::Theta && !w.symmetric()) throw UsageError("theta coordinates need a symmetric window");
  const WordVector v = vector_of_input(read_input(o.input), kind, w);
  if (!v.is_zero() && !v.homogeneous()) throw UsageError("input is not homogeneous");
  const auto c = kind == Kind::Theta ? theta_coords(v) : pbw_coords(v);
  // decreasing crystal order
  std::vector<std::pair<Multisegment, RatFunc>> items(c.begin(), c.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return cmp_cry_lex(a.first, b.first) > 0; });
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (const auto& [m, x] : items) arr.push_back({{"multisegment", ms_json(m)}, {"coeff", x.to_string()}});
    std::cout << arr.dump(2) << "\n";
  } else {
    if (items.empty()) std::cout << "0\n";
    for (const auto& [m, x] : items) std::cout << label(m) << ": " << x.to_string() << "\n";
  }
  return 0;
}

int cmd_matrix(const Options& o, bool bar) {
  const auto model = make_model(kind_of(o), window_of(o));
  ojson blocks = ojson::array();
  for (const BlockKey& key : selected_blocks(*model, o)) {
    const TransitionMatrix t = bar ? bar_matrix(*model, key) : global_lower(*model, key);
    std::vector<std::string> names;
    for (const auto& m : t.index) names.push_back(label(m));
    std::vector<std::vector<std::string>> cells(names.size(), std::vector<std::string>(names.size()));
    for (std::size_t r = 0; r < names.size(); ++r)
      for (std::size_t c = 0; c < names.size(); ++c) cells[r][c] = t.entries(r, c).to_string();
    if (o.format == "json") {
      ojson idx = ojson::array();
      for (const auto& m : t.index) idx.push_back(ms_json(m));
      blocks.push_back({{"block", key_json(key)}, {"index", idx}, {"matrix", cells}});
    } else {
      std::cout << to_string(model->kind()) << " block " << key_to_string(key) << "  ("
                << (bar ? "bar(b_n) = sum_m B[m][n] b_m" : "G(m) = sum_n C[n][m] b_n") << ")\n"
                << table(names, names, cells);
    }
  }
  if (o.format == "json") {
    ojson doc{{"mode", to_string(model->kind())}, {"kind", bar ? "bar-matrix" : "global-lower"}, {"blocks", blocks}};
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_multiplicity(const Options& o) {
  const auto model = make_model(kind_of(o), window_of(o));
  if (!model->window().contains(o.index)) throw UsageError("--index " + std::to_string(o.index) + " outside window");
  const Side side = o.side == "F" ? Side::F : Side::E;
  ojson tables = ojson::array();
  bool consistent = true;
  for (const BlockKey& key : selected_blocks(*model, o)) {
    const auto t = multiplicity_polys(*model, o.index, key, side);
    if (!t) continue;
    consistent = consistent && t->direct == t->adjoint;
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    for (const auto& m : t->rows) rows.push_back(label(m));
    for (const auto& m : t->cols) cols.push_back(label(m));
    std::vector<std::vector<std::string>> poly(rows.size(), std::vector<std::string>(cols.size()));
    std::vector<std::vector<std::string>> at1 = poly;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        poly[r][c] = t->direct(r, c).to_string();
        const auto v = t->direct(r, c).eval_at_one();
        at1[r][c] = v ? v->get_str() : "pole";
      }
    if (o.format == "json") {
      ojson rj = ojson::array();
      ojson cj = ojson::array();
      for (const auto& m : t->rows) rj.push_back(ms_json(m));
      for (const auto& m : t->cols) cj.push_back(ms_json(m));
      tables.push_back({{"source", key_to_string(key)},
                        {"target", key_to_string(t->target)},
                        {"rows", rj},
                        {"cols", cj},
                        {"polynomials", poly},
                        {"at_q_1", at1},
                        {"routes_agree", t->direct == t->adjoint}});
    } else {
      std::cout << to_string(model->kind()) << " " << o.side << "_" << o.index << ": " << key_to_string(key) << " -> "
                << key_to_string(t->target) << (t->direct == t->adjoint ? "" : "  ROUTES DISAGREE") << "\n"
                << table(rows, cols, poly) << "  at q=1:\n"
                << table(rows, cols, at1);
    }
  }
  if (o.format == "json") {
    ojson doc{{"mode", to_string(model->kind())}, {"index", o.index}, {"side", o.side}, {"tables", tables}};
    std::cout << doc.dump(2) << "\n";
  }
  return consistent ? 0 : 1;
}

int cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.mode = kind_of(o);
  cfg.window = window_of(o);
  cfg.max_degree = o.max_degree;
  cfg.parallel = o.parallel;
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
    if (!cfg.window.symmetric()) std::erase(suites, "theta-dims");
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
      throw UsageError("unknown suite '" + o.suite + "'");
    suites = {o.suite};
  }
  bool ok = true;
  ojson reports = ojson::array();
  for (const auto& s : suites) {
    const SuiteReport r = run_suite(s, cfg);
    ok = ok && r.pass;
    if (o.format == "json") {
      ojson counts = ojson::object();
      for (const auto& [k, v] : r.counts) counts[k] = v;
      ojson rep{{"suite", r.suite}, {"pass", r.pass}, {"counts", counts}, {"warnings", r.warnings}};
      if (!r.pass) rep["counterexample"] = r.counterexample;
      reports.push_back(rep);
    } else {
      std::cout << r.to_text();
    }
  }
  if (o.format == "json") {
    ojson doc{{"mode", to_string(cfg.mode)}, {"window", cfg.window.indices()}, {"max_degree", cfg.max_degree},
              {"pass", ok}, {"suites", reports}};
    std::cout << doc.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multisegment crystals, symmetric crystals and global bases"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool input) {
    sub->add_option("--mode", o.mode, "typeA or theta")->check(CLI::IsMember({"typeA", "theta"}));
    sub->add_option("--window", o.window, "odd indices, e.g. \"-3,-1,1,3\"");
    sub->add_option("--max-degree", o.max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber);
    if (input) sub->add_option("input", o.input, "JSON multisegment or word expression; stdin when omitted");
  };
  auto* graph = app.add_subcommand("crystal-graph", "crystal graph from the empty multisegment");
  common(graph, false);
  graph->add_option("--indices", o.indices, "restrict to these indices, e.g. \"3,-3\"");
  auto* expand = app.add_subcommand("expand", "PBW (or P_theta) element of a multisegment as a word vector");
  common(expand, true);
  auto* coords = app.add_subcommand("coords", "coordinates in the PBW or P_theta basis");
  common(coords, true);
  auto* tcoords = app.add_subcommand("theta-coords", "coordinates in the P_theta basis");
  common(tcoords, true);
  auto* global = app.add_subcommand("global-basis", "lower global basis transition matrices");
  common(global, false);
  global->add_option("--block", o.block, "letters of one block, e.g. \"1,3\"");
  auto* barm = app.add_subcommand("bar-matrix", "matrices of the bar involution");
  common(barm, false);
  barm->add_option("--block", o.block, "letters of one block, e.g. \"1,3\"");
  auto* mult = app.add_subcommand("multiplicity", "multiplicity polynomials of E_i / F_i on G^up");
  common(mult, false);
  mult->add_option("--block", o.block, "letters of the source block");
  mult->add_option("--index", o.index, "odd index i");
  mult->add_option("--side", o.side, "E or F")->check(CLI::IsMember({"E", "F"}));
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  common(verify, false);
  verify->add_option("--suite", o.suite, "suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (o.format == "dot" && !graph->parsed()) throw UsageError("--format dot is only for crystal-graph");
    if (graph->parsed()) return cmd_crystal_graph(o);
    if (expand->parsed()) return cmd_expand(o);
    if (coords->parsed()) return cmd_coords(o, kind_of(o));
    if (tcoords->parsed()) {
      o.mode = "theta";
      return cmd_coords(o, Kind::Theta);
    }
    if (global->parsed()) return cmd_matrix(o, false);
    if (barm->parsed()) return cmd_matrix(o, true);
    if (mult->parsed()) return cmd_multiplicity(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
