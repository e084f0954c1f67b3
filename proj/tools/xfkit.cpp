// xfkit: build, verify, size and inspect extended formulations of T-join
// and T-cut dominants.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "xfkit/double_description.hpp"
#include "xfkit/errors.hpp"
#include "xfkit/extension.hpp"
#include "xfkit/parallel.hpp"
#include "xfkit/polyhedral_model.hpp"
#include "xfkit/serialize.hpp"
#include "xfkit/suites.hpp"

using namespace xfkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kBuildKinds{"tjoin-flow-piece", "tjoin-dominant", "tcut-dominant",
                                           "ve-radial-cone",   "nonvertex-radial-cone", "main-theorem-face",
                                           "balas",            "martin",          "radial-cone-lift"};

struct Options {
  int n = 4;
  std::string t = "all";
  std::string kind;
  std::string join;
  std::string s;
  std::string u1;
  std::string point;
  std::string gamma = "1";
  std::vector<std::string> inputs;
  std::string out;
  std::string suite;
  std::string extension;
  std::string target;
  std::string target_v;
  std::string edge;
  std::string report;
  std::string csv;
  int n_min = 4;
  int n_max = 8;
  std::string sweep = "both";
  std::string file;
  std::string what = "tjoin-dominant";
  bool with_v = false;
};

EdgeSpace space_of(const Options& o) { return EdgeSpace(o.n, parse_nodes(o.t, o.n)); }

Vector parse_point(const std::string& text, std::size_t dim) {
  Vector v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      v.push_back(Rational::parse(part));
    } catch (const std::invalid_argument&) {
      throw MalformedInput("bad rational '" + part + "' in --point");
    }
  }
  if (v.size() != dim)
    throw MalformedInput("--point has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
  return v;
}

std::vector<Node> parse_shore(const std::string& text, int n) {
  if (text.empty()) throw MalformedInput("missing --s");
  return parse_nodes(text, n);
}

/// --input files, or the flow formulation of the T-join dominant.
ExtendedFormulation base_formulation(const Options& o) {
  if (o.inputs.size() > 1) throw MalformedInput("this kind takes at most one --input");
  if (!o.inputs.empty()) return formulation_from_json(read_json_file(o.inputs.front()));
  return tjoin_dominant_extension(space_of(o));
}

Vector radial_apex(const Options& o, const ExtendedFormulation& ext) {
  if (!o.point.empty()) return parse_point(o.point, ext.target_dimension());
  const EdgeSpace s = space_of(o);
  if (ext.target_dimension() != s.edge_count()) throw MalformedInput("--join needs an edge-space formulation");
  if (o.join.empty()) throw MalformedInput("radial-cone-lift needs --join or --point");
  return characteristic_vector(s, s.parse_edges(o.join));
}

void emit(const Json& j, const std::string& out, const std::string& size_line) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    std::cerr << size_line << "\n";
  } else {
    write_json_file(out, j);
    std::cout << "wrote " << out << "\n" << size_line << "\n";
  }
}

std::string size_line(std::size_t rows) {
  return "size: " + std::to_string(rows) + " inequality rows (upper bound on facet count)";
}

int cmd_build(const Options& o) {
  const auto& k = o.kind;
  if (k == "main-theorem-face") {
    const EdgeSpace s = space_of(o);
    if (o.u1.empty()) throw MalformedInput("main-theorem-face needs --u1");
    const MainTheoremFace face = main_theorem_face(s, parse_nodes(o.u1, o.n));
    emit(to_json(face, s), o.out, "size: " + std::to_string(face.q_tilde.inequalities().size()) +
                                      " inequality rows in the product form (upper bound on facet count)");
    return kExitOk;
  }
  ExtendedFormulation ext;
  if (k == "tjoin-flow-piece") {
    ext = tjoin_flow_piece(space_of(o), {parse_shore(o.s, o.n)});
  } else if (k == "tjoin-dominant") {
    ext = tjoin_dominant_extension(space_of(o));
  } else if (k == "tcut-dominant") {
    ext = tcut_dominant_extension(space_of(o));
  } else if (k == "ve-radial-cone") {
    const EdgeSpace s = space_of(o);
    if (o.join.empty()) throw MalformedInput("ve-radial-cone needs --join");
    ext = ve_radial_cone_extension(s, s.parse_edges(o.join));
  } else if (k == "nonvertex-radial-cone") {
    const EdgeSpace s = space_of(o);
    if (o.point.empty()) throw MalformedInput("nonvertex-radial-cone needs --point");
    ext = nonvertex_radial_cone_extension(s, parse_point(o.point, s.edge_count()));
  } else if (k == "balas") {
    std::vector<ExtendedFormulation> pieces;
    if (o.inputs.empty()) {
      const EdgeSpace s = space_of(o);
      for (const auto& sel : piece_selectors(s)) pieces.push_back(tjoin_flow_piece(s, sel));
    } else {
      for (const auto& f : o.inputs) pieces.push_back(formulation_from_json(read_json_file(f)));
    }
    ext = balas_union(pieces);
  } else if (k == "martin") {
    Rational gamma;
    try {
      gamma = Rational::parse(o.gamma);
    } catch (const std::invalid_argument&) {
      throw MalformedInput("bad --gamma '" + o.gamma + "'");
    }
    ext = martin_dual_extension(base_formulation(o), gamma);
  } else if (k == "radial-cone-lift") {
    const ExtendedFormulation base = base_formulation(o);
    ext = radial_cone_extension(base, radial_apex(o, base));
  } else {
    throw MalformedInput("unknown kind '" + k + "'");
  }
  emit(to_json(ext), o.out, size_line(ext.size()));
  return kExitOk;
}

HPolyhedron named_target(const std::string& name, const EdgeSpace& s) {
  if (name == "tjoin-dominant") return tjoin_dominant_h(s);
  if (name == "tcut-dominant") return tcut_dominant_h(s);
  return hpolyhedron_from_json(read_json_file(name));
}

Json config_json(const Options& o, const std::vector<std::string>& argv) {
  return {{"argv", argv},
          {"n", o.n},
          {"t", o.t},
          {"suite", o.suite},
          {"extension", o.extension},
          {"target", o.target},
          {"join", o.join},
          {"u1", o.u1},
          {"m", o.edge},
          {"workers", default_workers()},
          {"dim_cap", dimension_cap()}};
}

int cmd_verify(const Options& o, const std::vector<std::string>& argv) {
  std::vector<VerificationReport> reports;
  if (!o.suite.empty()) {
    if (!o.extension.empty()) throw MalformedInput("give either --suite or --extension, not both");
    SuiteConfig c;
    c.n = o.n;
    c.terminals = parse_nodes(o.t, o.n);
    if (!o.u1.empty()) c.u1 = parse_nodes(o.u1, o.n);
    if (!o.join.empty()) c.join = o.join;
    if (!o.edge.empty()) c.edge = o.edge;
    reports = run_suite(o.suite, c);
  } else if (!o.extension.empty()) {
    if (o.target.empty()) throw MalformedInput("--extension needs --target");
    const ExtendedFormulation ext = formulation_from_json(read_json_file(o.extension));
    const HPolyhedron target = named_target(o.target, space_of(o));
    const VPolyhedron target_v =
        o.target_v.empty() ? h_to_v(target) : vpolyhedron_from_json(read_json_file(o.target_v));
    reports.push_back(verify_extension_projects_to(ext, target, target_v,
                                                   o.extension + " projects onto " + o.target));
  } else {
    throw MalformedInput("verify needs --suite or --extension");
  }

  std::size_t refuted = 0, skipped = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    std::cout << summary_line(r) << "\n";
    refuted += r.status == ReportStatus::refuted;
    skipped += r.status == ReportStatus::skipped;
    list.push_back(to_json(r));
  }
  std::cout << reports.size() << " claims: " << reports.size() - refuted - skipped << " verified, " << refuted
            << " refuted, " << skipped << " skipped\n";
  if (!o.report.empty()) {
    write_json_file(o.report, {{"config", config_json(o, argv)},
                               {"verified", reports.size() - refuted - skipped},
                               {"refuted", refuted},
                               {"skipped", skipped},
                               {"reports", std::move(list)}});
    std::cout << "report: " << o.report << "\n";
  }
  return refuted ? kExitRefuted : kExitOk;
}

struct SizeRow {
  int n;
  std::size_t t, edges, pieces, piece_rows, dominant_rows, cut_rows, ve_rows;
  std::string ve_join;
};

/// A perfect matching on T plus nothing else: always a minimal T-join.
std::vector<std::size_t> terminal_matching(const EdgeSpace& s) {
  std::vector<std::size_t> out;
  const auto& t = s.terminals();
  for (std::size_t i = 0; i + 1 < t.size(); i += 2) out.push_back(s.index(t[i], t[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

SizeRow size_row(const EdgeSpace& s) {
  SizeRow r{s.n(), s.terminals().size(), s.edge_count(), 0, 0, 0, 0, 0, ""};
  const auto sels = piece_selectors(s);
  r.pieces = sels.size();
  r.piece_rows = tjoin_flow_piece(s, sels.front()).size();
  r.dominant_rows = tjoin_dominant_extension(s).size();
  r.cut_rows = tcut_dominant_extension(s).size();
  const auto j = terminal_matching(s);
  r.ve_rows = ve_radial_cone_extension(s, j).size();
  r.ve_join = format_edges(s, j);
  return r;
}

int cmd_report_sizes(const Options& o) {
  std::vector<SizeRow> rows;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    if ((o.sweep == "all" || o.sweep == "both") && n % 2 == 0) rows.push_back(size_row(EdgeSpace::all_terminals(n)));
    const bool same_as_all = n == 2 && !rows.empty() && rows.back().n == 2;
    if ((o.sweep == "pair" || o.sweep == "both") && n >= 2 && !same_as_all)
      rows.push_back(size_row(EdgeSpace(n, {1, 2})));
  }
  const std::vector<std::string> header{"n",
                                        "|T|",
                                        "|E|",
                                        "pieces",
                                        "piece_rows",
                                        "tjoin_dominant_rows",
                                        "tcut_dominant_rows",
                                        "ve_radial_cone_rows",
                                        "ve_join",
                                        "bound_n2_2^T",
                                        "bound_J_n2"};
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    const std::size_t nn = static_cast<std::size_t>(r.n) * r.n;
    const std::size_t join_size = r.t / 2;
    const std::vector<std::string> cells{std::to_string(r.n),
                                         std::to_string(r.t),
                                         std::to_string(r.edges),
                                         std::to_string(r.pieces),
                                         std::to_string(r.piece_rows),
                                         std::to_string(r.dominant_rows),
                                         std::to_string(r.cut_rows),
                                         std::to_string(r.ve_rows),
                                         r.ve_join,
                                         std::to_string(nn << r.t),
                                         std::to_string(join_size * nn)};
    table.push_back(cells);
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
    for (const auto& cells : table) width[i] = std::max(width[i], cells[i].size());
  }
  std::cout << "All counts are inequality rows of the constructed formulations: upper bounds on facet counts.\n"
            << "Bound columns evaluate n^2*2^|T| and |J|*n^2 without constants. No lower bounds are computed.\n";
  std::ostringstream csv;
  csv << "# counts are upper bounds on facet counts\n";
  auto print = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << std::setw(static_cast<int>(width[i] + 2)) << cells[i];
      csv << (i ? "," : "") << (cells[i].find(',') != std::string::npos ? "\"" + cells[i] + "\"" : cells[i]);
    }
    std::cout << "\n";
    csv << "\n";
  };
  print(header);
  for (const auto& cells : table) print(cells);
  if (rows.empty()) std::cout << "(empty sweep)\n";
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw MalformedInput("cannot write " + o.csv);
    out << csv.str();
    std::cout << "csv: " << o.csv << "\n";
  }
  return kExitOk;
}

int cmd_export(const Options& o) {
  const EdgeSpace s = space_of(o);
  HPolyhedron h;
  if (o.what == "tjoin-dominant") {
    h = tjoin_dominant_h(s);
  } else if (o.what == "tcut-dominant") {
    h = tcut_dominant_h(s);
  } else if (o.what == "radial-cone") {
    if (o.join.empty()) throw MalformedInput("--what radial-cone needs --join");
    h = radial_cone_h(tjoin_dominant_h(s), characteristic_vector(s, s.parse_edges(o.join)));
  } else {
    throw MalformedInput("unknown --what '" + o.what + "'");
  }
  Json j = to_json(h, s.edge_labels());
  if (o.with_v) j["generators"] = to_json(h_to_v(h));
  emit(j, o.out, "rows: " + std::to_string(h.inequalities().size()) + " inequalities, " +
                     std::to_string(h.equalities().size()) + " equalities");
  return kExitOk;
}

int cmd_inspect(const Options& o) {
  const Json j = read_json_file(o.file);
  if (j.contains("reports")) {
    std::cout << "verification report: " << j.at("reports").size() << " claims\n";
    if (j.contains("config")) std::cout << "argv: " << j.at("config").at("argv").dump() << "\n";
    for (const auto& r : j.at("reports"))
      std::cout << "  " << r.at("status").get<std::string>() << "  " << r.at("claim").get<std::string>() << "\n";
    return kExitOk;
  }
  if (j.contains("kind") && j.at("kind") == "main-theorem-face") {
    std::cout << "main-theorem-face U1 = " << j.at("u1").get<std::string>() << ", forbidden "
              << j.at("forbidden").get<std::string>() << ", " << j.at("blocks").size() << " blocks\n";
    return kExitOk;
  }
  if (j.contains("projection")) {
    const ExtendedFormulation ext = formulation_from_json(j);
    std::cout << "formulation " << ext.kind << "\n"
              << "  lifted dimension " << ext.lifted_dimension() << ", target dimension " << ext.target_dimension()
              << "\n  " << ext.lifted.equalities().size() << " equalities\n"
              << "  " << size_line(ext.size()) << "\n";
    for (const auto& b : ext.blocks)
      std::cout << "  block " << b.label << ": [" << b.start << ", " << b.start + b.count << ")\n";
    for (const auto& n : ext.notes) std::cout << "  note: " << n << "\n";
    return kExitOk;
  }
  const HPolyhedron h = hpolyhedron_from_json(j);
  std::cout << "polyhedron in dimension " << h.dimension() << ": " << h.inequalities().size() << " inequalities, "
            << h.equalities().size() << " equalities\n";
  return kExitOk;
}

void add_instance(CLI::App* c, Options& o) {
  c->add_option("--n", o.n, "number of nodes of K_n")->check(CLI::Range(1, 62));
  c->add_option("--t", o.t, "terminal set, e.g. 1,2,3,4 or all");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact extended formulations for T-join and T-cut dominants"};
  app.require_subcommand(1);
  Options o;
  std::size_t workers = 0;
  std::size_t dim_cap = 0;
  app.add_option("--workers", workers, "LP worker threads (default: hardware concurrency)");
  app.add_option("--dim-cap", dim_cap, "double description dimension cap (sets XFKIT_DIM_CAP)");

  auto* build = app.add_subcommand("build", "construct a formulation and write it as JSON");
  add_instance(build, o);
  build->add_option("--kind", o.kind, "formulation kind")->required();
  build->add_option("--join", o.join, "minimal T-join, e.g. 12,34");
  build->add_option("--s", o.s, "flow piece shore S (|S| = |T|/2)");
  build->add_option("--u1", o.u1, "shore U1 of the T-cut vertex");
  build->add_option("--point", o.point, "comma-separated rationals");
  build->add_option("--gamma", o.gamma, "right-hand side for martin");
  build->add_option("--input", o.inputs, "formulation JSON (balas: repeatable)");
  build->add_option("-o,--out", o.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite or check a formulation file");
  add_instance(verify, o);
  verify->add_option("--suite", o.suite, "suite name (see `xfkit suites`)");
  verify->add_option("--extension", o.extension, "formulation JSON to check");
  verify->add_option("--target", o.target, "tjoin-dominant, tcut-dominant or a polyhedron JSON file");
  verify->add_option("--target-v", o.target_v, "generators of the target (default: computed)");
  verify->add_option("--join", o.join, "restrict to one minimal T-join");
  verify->add_option("--m", o.edge, "restrict fm-equals-gm to one edge");
  verify->add_option("--u1", o.u1, "restrict q-equals-qtilde to one shore");
  verify->add_option("--report", o.report, "write a JSON report");

  auto* sizes = app.add_subcommand("report-sizes", "tabulate formulation sizes over a sweep of n");
  sizes->add_option("--n-min", o.n_min, "first n");
  sizes->add_option("--n-max", o.n_max, "last n");
  sizes->add_option("--sweep", o.sweep, "all (T = V_n, even n), pair (T = {1,2}) or both")
      ->check(CLI::IsMember({"all", "pair", "both"}));
  sizes->add_option("--csv", o.csv, "also write CSV");

  auto* exp = app.add_subcommand("export", "write a target polyhedron as JSON");
  add_instance(exp, o);
  exp->add_option("--what", o.what, "tjoin-dominant, tcut-dominant or radial-cone");
  exp->add_option("--join", o.join, "apex of the radial cone");
  exp->add_flag("--with-generators", o.with_v, "include vertices and rays");
  exp->add_option("-o,--out", o.out, "output file (default stdout)");

  auto* inspect = app.add_subcommand("inspect", "summarize a JSON artifact");
  inspect->add_option("file", o.file, "formulation, polyhedron or report JSON")->required();

  auto* kinds = app.add_subcommand("kinds", "list build kinds");
  auto* suites = app.add_subcommand("suites", "list verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (dim_cap > 0) setenv("XFKIT_DIM_CAP", std::to_string(dim_cap).c_str(), 1);
  if (workers > 0) set_default_workers(workers);
  const std::vector<std::string> args(argv, argv + argc);

  try {
    if (*build) return cmd_build(o);
    if (*verify) return cmd_verify(o, args);
    if (*sizes) return cmd_report_sizes(o);
    if (*exp) return cmd_export(o);
    if (*inspect) return cmd_inspect(o);
    if (*kinds) {
      for (const auto& k : kBuildKinds) std::cout << k << "\n";
      return kExitOk;
    }
    if (*suites) {
      for (const auto& s : suite_names()) std::cout << s << "\n";
      return kExitOk;
    }
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --dim-cap or XFKIT_DIM_CAP)\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
