#include "dgbrauer/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dgb {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ParseError(at(path, k), "unknown key");
  }
}

const json& need(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, std::string("missing key '") + key + "'");
  return *it;
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ParseError(path, "integer out of range");
  return static_cast<int>(v);
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

Scalar get_scalar(Field f, const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    return Scalar::parse(f, get_string(j, path));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
}

struct Context {
  GradedPresentation& p;
  int name_index(const json& j, const std::string& path) const {
    const std::string n = get_string(j, path);
    const int i = p.index_of(n);
    if (i < 0) throw ParseError(path, "unknown basis element '" + n + "'");
    return i;
  }
  // A list of terms; every term must have degree `degree` when given.
  Element terms(const json& j, const std::string& path, std::optional<int> degree, const std::string& what) const {
    if (!j.is_array()) throw ParseError(path, "expected a list of terms");
    Element e(p.field);
    for (std::size_t t = 0; t < j.size(); ++t) {
      const std::string tp = at(path, t);
      only_keys(j[t], tp, {"b", "c", "u"});
      const int b = name_index(need(j[t], tp, "b"), at(tp, "b"));
      const int u = j[t].contains("u") ? get_int(j[t]["u"], at(tp, "u")) : 0;
      if (u != 0 && !p.unit_degree) throw ParseError(at(tp, "u"), "u-power given but the presentation has no unit_degree");
      const Scalar c = j[t].contains("c") ? get_scalar(p.field, j[t]["c"], at(tp, "c")) : Scalar::one(p.field);
      if (degree) {
        const int got = p.basis[b].degree + u * p.unit_degree.value_or(0);
        if (got != *degree)
          throw ParseError(tp, what + ": term " + p.basis[b].name + (u ? " u^" + std::to_string(u) : "") +
                                   " has degree " + std::to_string(got) + ", expected " + std::to_string(*degree));
      }
      e.add_term({b, u}, c);
    }
    return e;
  }
};

json term_list(const GradedPresentation& p, const Element& e) {
  json out = json::array();
  for (const auto& [k, c] : e.terms()) out.push_back({{"b", p.basis[k.basis].name}, {"c", c.to_string()}, {"u", k.upow}});
  return out;
}

}  // namespace

PresentationDocument parse_presentation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    const std::size_t upto = std::min(e.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    throw ParseError("line " + std::to_string(line), "JSON syntax error");
  }
  const std::string root;
  only_keys(j, root, {"field", "basis", "unit_degree", "one", "mul", "diff", "base"});
  PresentationDocument doc;
  GradedPresentation& p = doc.presentation;
  try {
    p.field = Field::parse(get_string(need(j, root, "field"), "/field"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("/field", e.what());
  }
  if (j.contains("unit_degree")) {
    const int ud = get_int(j["unit_degree"], "/unit_degree");
    if (ud == 0 || ud % 2 != 0) throw ParseError("/unit_degree", "unit degree must be nonzero and even");
    p.unit_degree = ud;
  }
  const json& basis = need(j, root, "basis");
  if (!basis.is_array() || basis.empty()) throw ParseError("/basis", "expected a nonempty list");
  std::set<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string bp = at("/basis", i);
    only_keys(basis[i], bp, {"name", "degree"});
    const std::string name = get_string(need(basis[i], bp, "name"), at(bp, "name"));
    if (name.empty()) throw ParseError(at(bp, "name"), "empty name");
    if (!names.insert(name).second) throw ParseError(at(bp, "name"), "duplicate basis name '" + name + "'");
    p.basis.push_back({name, get_int(need(basis[i], bp, "degree"), at(bp, "degree"))});
  }
  Context ctx{p};

  const json& one = need(j, root, "one");
  if (one.is_string()) {
    const int b = ctx.name_index(one, "/one");
    if (p.basis[b].degree != 0) throw ParseError("/one", "unit must have degree 0");
    p.one = Element::monomial(p.field, b, 0, Scalar::one(p.field));
  } else {
    p.one = ctx.terms(one, "/one", 0, "unit");
  }

  if (j.contains("mul")) {
    const json& mul = j["mul"];
    if (!mul.is_array()) throw ParseError("/mul", "expected a list");
    for (std::size_t i = 0; i < mul.size(); ++i) {
      const std::string mp = at("/mul", i);
      only_keys(mul[i], mp, {"l", "r", "out"});
      const int l = ctx.name_index(need(mul[i], mp, "l"), at(mp, "l"));
      const int r = ctx.name_index(need(mul[i], mp, "r"), at(mp, "r"));
      const std::string what = "product " + p.basis[l].name + "*" + p.basis[r].name;
      if (p.table.count({l, r})) throw ParseError(mp, what + " given twice");
      p.table.emplace(std::make_pair(l, r),
                      ctx.terms(need(mul[i], mp, "out"), at(mp, "out"), p.basis[l].degree + p.basis[r].degree, what));
    }
  }
  if (j.contains("diff")) {
    const json& diff = j["diff"];
    if (!diff.is_array()) throw ParseError("/diff", "expected a list");
    std::vector<Element> images(p.basis.size(), Element(p.field));
    std::set<int> seen;
    for (std::size_t i = 0; i < diff.size(); ++i) {
      const std::string dp = at("/diff", i);
      only_keys(diff[i], dp, {"b", "out"});
      const int b = ctx.name_index(need(diff[i], dp, "b"), at(dp, "b"));
      if (!seen.insert(b).second) throw ParseError(dp, "d(" + p.basis[b].name + ") given twice");
      images[b] = ctx.terms(need(diff[i], dp, "out"), at(dp, "out"), p.basis[b].degree + 1, "d(" + p.basis[b].name + ")");
    }
    doc.diff = std::move(images);
  }
  if (j.contains("base")) doc.base = get_string(j["base"], "/base");
  return doc;
}

std::string emit_canonical(const PresentationDocument& doc) {
  const GradedPresentation& p = doc.presentation;
  json j;
  j["field"] = p.field.to_string();
  json basis = json::array();
  for (const auto& b : p.basis) basis.push_back({{"name", b.name}, {"degree", b.degree}});
  j["basis"] = basis;
  if (p.unit_degree) j["unit_degree"] = *p.unit_degree;
  if (p.one.size() == 1 && p.one.terms().begin()->first.upow == 0 && p.one.terms().begin()->second.is_one())
    j["one"] = p.basis[p.one.terms().begin()->first.basis].name;
  else
    j["one"] = term_list(p, p.one);
  json mul = json::array();
  for (const auto& [lr, e] : p.table) {
    if (e.is_zero()) continue;
    mul.push_back({{"l", p.basis[lr.first].name}, {"r", p.basis[lr.second].name}, {"out", term_list(p, e)}});
  }
  j["mul"] = mul;
  if (doc.diff) {
    json diff = json::array();
    for (std::size_t b = 0; b < doc.diff->size(); ++b)
      if (!(*doc.diff)[b].is_zero()) diff.push_back({{"b", p.basis[b].name}, {"out", term_list(p, (*doc.diff)[b])}});
    j["diff"] = diff;
  }
  if (doc.base) j["base"] = *doc.base;
  return j.dump() + "\n";
}

PresentationDocument to_document(const GradedAlgebra& a) {
  PresentationDocument doc;
  doc.presentation = a.presentation();
  return doc;
}

PresentationDocument to_document(const DgAlgebra& ad) {
  PresentationDocument doc = to_document(ad.algebra());
  doc.diff = ad.images();
  return doc;
}

DgAlgebra to_dg_algebra(const PresentationDocument& doc) {
  GradedAlgebra a = validate_presentation(doc.presentation);
  if (!doc.diff) return zero_differential(a);
  return validate_differential(a, *doc.diff);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("", "cannot write '" + path + "'");
  out << text;
}

}  // namespace dgb
