#include "dgbrauer/cli.hpp"

#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "dgbrauer/agr.hpp"
#include "dgbrauer/brauer.hpp"
#include "dgbrauer/classification.hpp"
#include "dgbrauer/io.hpp"
#include "json.hpp"

namespace dgb {

namespace {

using nlohmann::json;

// Invalid input detected after parsing (bad window, bad parameters).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  json j = json::object();
  std::vector<std::string> lines;
  int code = 0;
  void line(std::string s) { lines.push_back(std::move(s)); }
};

json verdict_json(const Verdict& v) {
  json j{{"value", to_string(v.value)}, {"method", v.method}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

std::string verdict_text(const Verdict& v) {
  std::string s = to_string(v.value);
  if (!v.method.empty()) s += " (" + v.method + ")";
  if (!v.witness.empty()) s += ", witness " + v.witness;
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

DegreeWindow parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    if (hi < lo) throw UsageError("window '" + text + "' is empty");
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("window must look like a:b, got '" + text + "'");
  }
}

struct Loaded {
  PresentationDocument doc;
  DgAlgebra algebra;
  std::string path;
};

Loaded load(const std::string& path) {
  PresentationDocument doc = parse_presentation(read_text_file(path));
  DgAlgebra a = to_dg_algebra(doc);
  return {std::move(doc), std::move(a), path};
}

bool same_presentation(const Loaded& a, const Loaded& b) {
  return a.algebra.algebra() == b.algebra.algebra() && a.algebra.images() == b.algebra.images();
}

// A over the base: explicit --base, else the document's "base", else its field.
AlgebraOverBase over_base(const Loaded& a, const std::string& base_path) {
  std::string path = base_path;
  if (path.empty() && a.doc.base) path = (std::filesystem::path(a.path).parent_path() / *a.doc.base).string();
  if (path.empty()) return over_field(a.algebra);
  Loaded k = load(path);
  if (same_presentation(a, k)) return over_itself(k.algebra);
  return base_change(a.algebra, k.algebra);
}

std::string base_text(const AlgebraOverBase& a) {
  return "rank " + std::to_string(a.rank()) + " over a base of core dimension " +
         std::to_string(a.base_algebra().dim()) + ", carrier dimension " + std::to_string(a.carrier().dim());
}

// ------------------------------------------------------------------ commands

Report cmd_validate(const std::string& file) {
  Report r;
  Loaded l = load(file);
  const GradedAlgebra& a = l.algebra.algebra();
  r.line("valid");
  r.line("field " + a.field().to_string());
  r.line("core dimension " + std::to_string(a.dim()));
  if (a.unit_degree()) r.line("unit degree " + std::to_string(*a.unit_degree()));
  r.line(std::string("differential ") + (l.algebra.is_zero_differential() ? "zero" : "nonzero"));
  for (const auto& m : a.lint()) r.line("lint: " + m);
  r.j = {{"valid", true},
         {"field", a.field().to_string()},
         {"dim", a.dim()},
         {"zero_differential", l.algebra.is_zero_differential()},
         {"lint", a.lint()}};
  if (a.unit_degree()) r.j["unit_degree"] = *a.unit_degree();
  r.j["canonical"] = emit_canonical(l.doc);
  return r;
}

Report cmd_classify(const std::string& file) {
  Report r;
  Loaded l = load(file);
  try {
    ClassificationReport c = classify_dg_field(l.algebra);
    r.line(c.summary());
    std::string lb;
    for (const auto& b : c.L_basis) lb += (lb.empty() ? "" : ", ") + b;
    r.line("L basis: " + lb);
    json gens = json::array();
    for (const auto& g : c.generators) {
      r.line("generator " + g.role + " = " + g.element + " in degree " + std::to_string(g.degree));
      gens.push_back({{"role", g.role}, {"element", g.element}, {"degree", g.degree}});
    }
    if (c.y_squared) r.line("y^2 = " + *c.y_squared);
    for (const auto& n : c.notes) r.line("note: " + n);
    r.j = {{"case", to_string(c.label)}, {"summary", c.summary()}, {"L_basis", c.L_basis},
           {"generators", gens}, {"notes", c.notes}};
    if (c.y) r.j["y"] = *c.y;
    if (c.y_squared) r.j["y_squared"] = *c.y_squared;
  } catch (const PreconditionError& e) {
    r.code = 1;
    r.line(std::string("not classifiable: ") + e.what());
    r.j = {{"case", nullptr}, {"failure", e.what()}};
  }
  return r;
}

Report cmd_homology(const std::string& file, const std::string& window) {
  Report r;
  Loaded l = load(file);
  const DegreeWindow w = parse_window(window);
  HomologyReport h;
  try {
    h = homology(l.algebra, w);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  r.line("window " + std::to_string(w.lo) + ":" + std::to_string(w.hi));
  json degrees = json::array();
  for (const auto& d : h.degrees) {
    std::string reps;
    for (const auto& b : d.basis) reps += (reps.empty() ? "" : ", ") + to_string(l.algebra.algebra(), b);
    r.line("H_" + std::to_string(d.degree) + " = " + std::to_string(d.homology) + " (cycles " +
           std::to_string(d.cycles) + ", boundaries " + std::to_string(d.boundaries) + ")" +
           (reps.empty() ? "" : ": " + reps));
    degrees.push_back({{"degree", d.degree}, {"homology", d.homology}, {"cycles", d.cycles}, {"boundaries", d.boundaries}});
  }
  r.line("acyclic in window: " + yes_no(h.acyclic));
  r.line("window certifies global statements: " + yes_no(h.global));
  r.j = {{"window", {w.lo, w.hi}}, {"degrees", degrees}, {"acyclic", h.acyclic}, {"global", h.global}};
  return r;
}

Report cmd_structure(const std::string& file) {
  Report r;
  Loaded l = load(file);
  StructureReport s = structure_report(l.algebra.algebra());
  DgStructureReport d = dg_structure_report(l.algebra);
  r.line("commutative: " + yes_no(s.commutative));
  r.line("graded-commutative: " + yes_no(s.graded_commutative));
  r.line("graded division: " + verdict_text(s.graded_division));
  r.line("graded field: " + verdict_text(s.graded_field));
  r.line("graded simple: " + verdict_text(s.graded_simple));
  r.line("dg-division: " + verdict_text(d.dg_division));
  r.line("dg-simple: " + verdict_text(d.dg_simple));
  r.line("dichotomy: " + to_string(d.dichotomy));
  r.line("cycles core dimension: " + std::to_string(d.cycles_dim));
  if (d.oracle) r.line("ideal oracle: " + verdict_text(*d.oracle) + (d.oracle_agrees ? ", agrees" : ", DISAGREES"));
  r.j = {{"commutative", s.commutative},
         {"graded_commutative", s.graded_commutative},
         {"graded_division", verdict_json(s.graded_division)},
         {"graded_field", verdict_json(s.graded_field)},
         {"graded_simple", verdict_json(s.graded_simple)},
         {"dg_division", verdict_json(d.dg_division)},
         {"dg_simple", verdict_json(d.dg_simple)},
         {"dichotomy", to_string(d.dichotomy)},
         {"cycles_dim", d.cycles_dim}};
  if (d.oracle) r.j["oracle"] = verdict_json(*d.oracle);
  r.j["oracle_agrees"] = d.oracle_agrees;
  if (!d.oracle_agrees) r.code = 1;
  return r;
}

Report cmd_tensor(const std::string& fa, const std::string& fb, const std::string& base, const std::string& output,
                  std::ostream& out) {
  Report r;
  Loaded a = load(fa), b = load(fb);
  TensorProduct t = tensor_dg(over_base(a, base), over_base(b, base));
  const std::string doc = emit_canonical(to_document(t.product.carrier_dg()));
  r.line("tensor product: " + base_text(t.product));
  if (output.empty()) {
    out << doc;
  } else {
    write_text_file(output, doc);
    r.line("written to " + output);
  }
  r.j = {{"rank", t.product.rank()}, {"carrier_dim", t.product.carrier().dim()}};
  if (!output.empty()) r.j["output"] = output;
  return r;
}

Report cmd_agr(const std::string& file) {
  Report r;
  Loaded l = load(file);
  const GradedAlgebra& a = l.algebra.algebra();
  try {
    AgrDecomposition d = agr_decompose(l.algebra);
    r.line("y = " + to_string(a, d.y) + ", d(y) = 1");
    r.line("y^2 = " + to_string(a, d.y_squared));
    r.line(std::string("twist D ") + (d.D_is_zero ? "= 0" : "nonzero"));
    r.line("cycles core dimension " + std::to_string(d.cycles.algebra.dim()));
    r.line("quotient core dimension " + std::to_string(d.quotient.algebra().dim()));
    r.line("phi: " + (d.phi_check.ok() ? std::string("isomorphism of dg-algebras") : d.phi_check.failure));
    r.line("table reproduced: " + (d.table_reproduced ? std::string("yes") : "no, " + d.table_failure));
    r.j = {{"y", to_string(a, d.y)},
           {"y_squared", to_string(a, d.y_squared)},
           {"D_is_zero", d.D_is_zero},
           {"phi_ok", d.phi_check.ok()},
           {"table_reproduced", d.table_reproduced}};
    if (!d.phi_check.ok() || !d.table_reproduced) r.code = 1;
  } catch (const PreconditionError& e) {
    r.code = 1;
    r.line(std::string("no decomposition: ") + e.what());
    r.j = {{"failure", e.what()}};
  }
  return r;
}

Report cmd_azumaya(const std::string& file, const std::string& base) {
  Report r;
  Loaded l = load(file);
  AlgebraOverBase a = over_base(l, base);
  AzumayaReport z = azumaya_report(a);
  r.line("algebra: " + base_text(a));
  r.line("window " + std::to_string(z.window.lo) + ":" + std::to_string(z.window.hi));
  r.line("faithfully projective: " + verdict_text(z.faithfully_projective));
  r.line(z.mu_iso ? "mu is an isomorphism onto End" : z.mu_failure);
  r.line("mu dg-map: " + yes_no(z.mu_dg_map));
  r.line("graded central: " + yes_no(z.graded_central) + " (" + z.central_detail + ")");
  r.line("graded separable: " + verdict_text(z.graded_separable));
  r.line("kind I: " + verdict_text(z.kind_I));
  r.line("kind II: " + verdict_text(z.kind_II));
  r.line("cross-check mu/separability: " + std::string(z.cross_check ? "consistent" : "INCONSISTENT"));
  r.j = {{"window", {z.window.lo, z.window.hi}},
         {"faithfully_projective", verdict_json(z.faithfully_projective)},
         {"mu_iso", z.mu_iso},
         {"mu_dg_map", z.mu_dg_map},
         {"graded_central", z.graded_central},
         {"graded_separable", verdict_json(z.graded_separable)},
         {"kind_I", verdict_json(z.kind_I)},
         {"kind_II", verdict_json(z.kind_II)},
         {"cross_check", z.cross_check}};
  if (!z.mu_iso) r.j["mu_failure"] = z.mu_failure;
  if (z.idempotent) {
    TensorProduct sq = tensor_dg(a, a);
    r.j["idempotent"] = to_string(sq.product.carrier(), *z.idempotent);
  }
  r.code = (z.kind_II.is_yes() && z.kind_I.is_yes() && z.cross_check) ? 0 : 1;
  return r;
}

Report cmd_mu(const std::string& file, const std::string& base) {
  Report r;
  Loaded l = load(file);
  AlgebraOverBase a = over_base(l, base);
  MuReport m = mu_map(a);
  r.line("algebra: " + base_text(a));
  r.line("enveloping algebra rank " + std::to_string(m.enveloping.product.rank()) + ", End rank " +
         std::to_string(m.end.rank()));
  json ranks = json::array();
  for (int n : deciding_degrees(m.map)) {
    const Matrix b = m.map.block(n);
    ranks.push_back({{"degree", n}, {"rank", rank(b)}, {"source", b.cols()}, {"target", b.rows()}});
    r.line("degree " + std::to_string(n) + ": rank " + std::to_string(rank(b)) + " of " + std::to_string(b.cols()) +
           " -> " + std::to_string(b.rows()));
  }
  r.line(m.is_iso ? "mu is an isomorphism" : m.failure);
  r.line("dg-map: " + yes_no(m.is_dg_map));
  r.line("algebra map: " + yes_no(m.is_algebra_map));
  r.j = {{"iso", m.is_iso}, {"dg_map", m.is_dg_map}, {"algebra_map", m.is_algebra_map}, {"ranks", ranks}};
  if (!m.failure.empty()) r.j["failure"] = m.failure;
  r.code = (m.is_iso && m.is_dg_map && m.is_algebra_map) ? 0 : 1;
  return r;
}

Report cmd_end(const std::string& file, int max_rank, int shift_bound, const std::string& candidate) {
  Report r;
  Loaded l = load(file);
  AlgebraOverBase a = over_field(l.algebra);
  std::optional<Element> cand;
  if (!candidate.empty()) {
    const int i = a.carrier().index(candidate);
    if (i < 0) throw UsageError("unknown candidate basis element '" + candidate + "'");
    cand = a.carrier().basis_element(i);
  }
  WitnessSearch s;
  try {
    s = end_witness_search(a, max_rank, shift_bound, cand);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  r.line(s.outcome);
  r.line("idempotents tried: " + std::to_string(s.candidates));
  r.j = {{"outcome", s.outcome}, {"candidates", s.candidates}, {"max_rank", max_rank}, {"shift_bound", shift_bound}};
  if (s.witness) {
    r.line("idempotent e = " + to_string(a.carrier(), s.witness->idempotent));
    std::string basis;
    for (const auto& v : s.witness->module) basis += (basis.empty() ? "" : ", ") + to_string(a.carrier(), v);
    r.line("module basis of Ae: " + basis);
    r.j["witness"] = {{"rank", s.witness->rank},
                      {"shifts", s.witness->shifts},
                      {"idempotent", to_string(a.carrier(), s.witness->idempotent)}};
  } else {
    r.code = 1;
    if (auto cert = quaternion_norm_certificate(a.carrier())) {
      r.line("division certificate: " + to_string(*cert));
      r.line("class is nontrivial: anisotropic norm form");
      r.j["certificate"] = to_string(*cert);
    }
  }
  return r;
}

Report cmd_template(const std::string& label, const std::string& field, std::optional<int> tdeg,
                    const std::string& output, std::ostream& out) {
  Report r;
  CaseLabel c;
  Field f = Field::rationals();
  try {
    c = parse_case(label);
    f = Field::parse(field);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  DgAlgebra t = make_template({c, f, tdeg});
  const std::string doc = emit_canonical(to_document(t));
  r.line("template case " + to_string(c) + " over " + f.to_string() + (tdeg ? ", |T| = " + std::to_string(*tdeg) : ""));
  if (output.empty()) {
    out << doc;
  } else {
    write_text_file(output, doc);
    r.line("written to " + output);
  }
  r.j = {{"case", to_string(c)}, {"field", f.to_string()}, {"dim", t.algebra().dim()}};
  if (tdeg) r.j["tdeg"] = *tdeg;
  return r;
}

Report cmd_derivations(const std::string& file, const std::string& base, const std::string& window) {
  Report r;
  Loaded l = load(file);
  AlgebraOverBase a = over_base(l, base);
  const DegreeWindow w = window.empty() ? derivation_window(a) : parse_window(window);
  DerivationReport d = derivation_dims(a, w);
  r.line("window " + std::to_string(w.lo) + ":" + std::to_string(w.hi));
  json degrees = json::array();
  for (const auto& x : d.degrees) {
    r.line("degree " + std::to_string(x.degree) + ": derivations " + std::to_string(x.all) + ", inner " +
           std::to_string(x.inner));
    degrees.push_back({{"degree", x.degree}, {"all", x.all}, {"inner", x.inner}});
  }
  r.line("all derivations inner: " + yes_no(d.all_inner));
  r.j = {{"window", {w.lo, w.hi}}, {"degrees", degrees}, {"all_inner", d.all_inner}};
  r.code = d.all_inner ? 0 : 1;
  return r;
}

// Negative option values ("--window -4:4") would otherwise read as flags.
std::vector<std::string> join_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool takes_value = a == "--window" || a == "--tdeg" || a == "--shift-bound" || a == "--max-rank";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        std::isdigit(static_cast<unsigned char>(args[i + 1][1]))) {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with graded and differential graded algebras", "dgbr"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the report as canonical JSON");

  std::string file, file2, base, output, window, label, field = "Q", candidate;
  std::optional<int> tdeg;
  int max_rank = 3, shift_bound = 2;

  auto* validate = app.add_subcommand("validate", "Validate a presentation");
  validate->add_option("file", file)->required();
  auto* classify = app.add_subcommand("classify", "Classify a dg-field");
  classify->add_option("file", file)->required();
  auto* hom = app.add_subcommand("homology", "Homology per degree");
  hom->add_option("file", file)->required();
  hom->add_option("--window", window, "Degree window a:b (default -8:8)");
  auto* structure = app.add_subcommand("structure", "Graded and dg structure report");
  structure->add_option("file", file)->required();
  auto* tensor = app.add_subcommand("tensor", "Tensor product over a base");
  tensor->add_option("a", file)->required();
  tensor->add_option("b", file2)->required();
  tensor->add_option("--base", base, "Base presentation");
  tensor->add_option("-o,--output", output, "Output file");
  auto* agr = app.add_subcommand("agr", "Decomposition of an acyclic dg-field");
  agr->add_option("file", file)->required();
  auto* azumaya = app.add_subcommand("azumaya", "Azumaya report over a base");
  azumaya->add_option("file", file)->required();
  azumaya->add_option("--base", base, "Base presentation");
  auto* mu = app.add_subcommand("mu", "The map A (x) A^op -> End(A)");
  mu->add_option("file", file)->required();
  mu->add_option("--base", base, "Base presentation");
  auto* end = app.add_subcommand("end", "Search for an End-algebra witness");
  end->add_option("file", file)->required();
  end->add_option("--max-rank", max_rank, "Largest module rank (<= 3)");
  end->add_option("--shift-bound", shift_bound, "Largest absolute degree shift");
  end->add_option("--candidate", candidate, "Basis element to try as idempotent");
  auto* tmpl = app.add_subcommand("template", "Write a dg-field template");
  tmpl->add_option("case", label)->required();
  tmpl->add_option("--field", field, "Q or Fp:p");
  tmpl->add_option("--tdeg", tdeg, "Degree of T");
  tmpl->add_option("-o,--output", output, "Output file");
  auto* der = app.add_subcommand("derivations", "Derivations and inner derivations per degree");
  der->add_option("file", file)->required();
  der->add_option("--base", base, "Base presentation");
  der->add_option("--window", window, "Degree window a:b");

  std::vector<std::string> args = join_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Report r;
  try {
    if (*validate) r = cmd_validate(file);
    else if (*classify) r = cmd_classify(file);
    else if (*hom) r = cmd_homology(file, window.empty() ? "-8:8" : window);
    else if (*structure) r = cmd_structure(file);
    else if (*tensor) r = cmd_tensor(file, file2, base, output, out);
    else if (*agr) r = cmd_agr(file);
    else if (*azumaya) r = cmd_azumaya(file, base);
    else if (*mu) r = cmd_mu(file, base);
    else if (*end) r = cmd_end(file, max_rank, shift_bound, candidate);
    else if (*tmpl) r = cmd_template(label, field, tdeg, output, out);
    else if (*der) r = cmd_derivations(file, base, window);
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const FieldMismatch& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  }
  if (as_json) {
    r.j["exit_code"] = r.code;
    out << r.j.dump() << "\n";
  } else {
    for (const auto& l : r.lines) out << l << "\n";
  }
  return r.code;
}

}  // namespace dgb
