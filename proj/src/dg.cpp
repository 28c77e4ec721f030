#include "dgbrauer/dg.hpp"

#include <algorithm>
#include <set>

namespace dgb {

Element DgAlgebra::d(const Element& x) const {
  Element out(field());
  for (const auto& [k, c] : x.terms()) {
    if (k.basis < 0 || k.basis >= algebra_.dim()) throw std::out_of_range("foreign basis index");
    out += images_[k.basis].shifted(k.upow).scaled(c);
  }
  return out;
}

bool DgAlgebra::is_zero_differential() const {
  return std::all_of(images_.begin(), images_.end(), [](const Element& e) { return e.is_zero(); });
}

DgAlgebra validate_differential(const GradedAlgebra& a, std::vector<Element> images) {
  if (static_cast<int>(images.size()) != a.dim())
    throw ValidationError("differential must give one image per basis element");
  const int p = a.unit_degree_or_zero();
  for (int b = 0; b < a.dim(); ++b) {
    if (!(images[b].field() == a.field()))
      throw ValidationError("d(" + a.name(b) + ") has coefficients over a different field");
    for (const auto& [k, c] : images[b].terms()) {
      if (k.basis < 0 || k.basis >= a.dim()) throw ValidationError("d(" + a.name(b) + ") uses an unknown basis index");
      if (p == 0 && k.upow != 0)
        throw ValidationError("d(" + a.name(b) + ") uses a u-power without a periodic unit");
      if (a.degree(k) != a.degree(b) + 1)
        throw ValidationError("degree violation in d(" + a.name(b) + "): term " + to_string(a, Element::monomial(a.field(), k.basis, k.upow, Scalar::one(a.field()))) +
                              " has degree " + std::to_string(a.degree(k)) + ", expected " +
                              std::to_string(a.degree(b) + 1));
    }
  }
  DgAlgebra ad(a, std::move(images));
  if (!ad.d(a.one()).is_zero()) throw ValidationError("d(one) = " + to_string(a, ad.d(a.one())) + " is not zero");
  for (int b = 0; b < a.dim(); ++b) {
    Element dd = ad.d(ad.images_[b]);
    if (!dd.is_zero())
      throw ValidationError("d^2 != 0 on " + a.name(b) + ": d(d(" + a.name(b) + ")) = " + to_string(a, dd));
  }
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Element x = a.basis_element(i), y = a.basis_element(j);
      Element lhs = ad.d(a.product(i, j));
      Element rhs = a.multiply(ad.images_[i], y);
      Element second = a.multiply(x, ad.images_[j]);
      rhs += (a.degree(i) & 1) ? -second : second;
      if (!(lhs == rhs))
        throw ValidationError("Leibniz rule fails on (" + a.name(i) + "," + a.name(j) + "): d(" +
                              a.name(i) + "*" + a.name(j) + ") = " + to_string(a, lhs) +
                              " but d(a)b + (-1)^|a| a d(b) = " + to_string(a, rhs));
    }
  return ad;
}

DgAlgebra validate_differential(const GradedAlgebra& a, const std::map<std::string, Element>& named) {
  std::vector<Element> images(a.dim(), Element(a.field()));
  for (const auto& [name, e] : named) images[a.index(name)] = e;
  return validate_differential(a, std::move(images));
}

DgAlgebra zero_differential(const GradedAlgebra& a) {
  return validate_differential(a, std::vector<Element>(a.dim(), Element(a.field())));
}

// ---------------------------------------------------------------- cycles

Element Cycles::include(const Element& z) const {
  Element out(inclusion.empty() ? z.field() : inclusion.front().field());
  for (const auto& [k, c] : z.terms()) out += inclusion.at(k.basis).shifted(k.upow).scaled(c);
  return out;
}

std::optional<Element> Cycles::restrict(const Element& x) const {
  const auto deg = ambient.degree_of(x);
  if (!deg) return Element(algebra.field());
  const auto keys = algebra.component(*deg);
  std::vector<Vector> cols;
  for (const Key& k : keys)
    cols.push_back(ambient.coords(include(Element::monomial(algebra.field(), k.basis, k.upow,
                                                             Scalar::one(algebra.field()))),
                                  *deg));
  auto sol = solve(Matrix::from_columns(algebra.field(), ambient.component_dim(*deg), cols),
                   ambient.coords(x, *deg));
  if (!sol) return std::nullopt;
  return algebra.from_coords(*deg, *sol);
}

namespace {

Matrix d_block(const DgAlgebra& ad, int n) {
  const GradedAlgebra& a = ad.algebra();
  const auto src = a.component(n);
  const auto dst = a.component(n + 1);
  Matrix m(a.field(), dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Element x = Element::monomial(a.field(), src[j].basis, src[j].upow, Scalar::one(a.field()));
    const Vector v = a.coords(ad.d(x), n + 1);
    for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, j) = v[r];
  }
  return m;
}

DegreeWindow support(const GradedAlgebra& a) {
  int lo = a.degree(0), hi = a.degree(0);
  for (int b = 1; b < a.dim(); ++b) {
    lo = std::min(lo, a.degree(b));
    hi = std::max(hi, a.degree(b));
  }
  return {lo, hi};
}

}  // namespace

Cycles cycles(const DgAlgebra& ad, DegreeWindow w) {
  const GradedAlgebra& a = ad.algebra();
  const Field f = a.field();
  DegreeWindow span = w;
  if (a.periodic()) {
    require_full_period(a, w, "cycles");
    span = {w.lo, w.lo + a.period() - 1};
  } else {
    const DegreeWindow s = support(a);
    if (!w.contains(s.lo) || !w.contains(s.hi))
      throw PreconditionError("cycles: window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) +
                              "] does not contain the support [" + std::to_string(s.lo) + "," +
                              std::to_string(s.hi) + "]");
  }
  PresentationBuilder builder(f);
  if (a.periodic()) builder.unit_degree(*a.unit_degree());
  std::vector<Element> inclusion;
  std::map<int, std::vector<int>> by_degree;  // degree -> cycle core indices
  std::map<int, std::vector<Vector>> vectors;
  std::set<std::string> used;
  for (int n = span.lo; n <= span.hi; ++n) {
    if (a.component_dim(n) == 0) continue;
    RowSpace ker(f, a.component_dim(n));
    for (auto& v : nullspace(d_block(ad, n))) ker.insert(v);
    int i = 0;
    for (const Vector& v : ker.basis()) {
      Element z = a.from_coords(n, v);
      std::string name;
      if (z.size() == 1 && z.terms().begin()->second.is_one()) {
        name = to_string(a, z);
      } else {
        name = "z" + std::to_string(n) + "_" + std::to_string(i);
      }
      while (!used.insert(name).second) name += "'";
      by_degree[n].push_back(builder.add(name, n));
      vectors[n].push_back(v);
      inclusion.push_back(std::move(z));
      ++i;
    }
  }
  // Express a homogeneous cycle of A in the cycle basis.
  auto express = [&](const Element& x, int deg) -> Element {
    Element out(f);
    if (x.is_zero()) return out;
    auto [y, n] = a.reduce_into(x, deg, span);
    const int shift = a.periodic() ? (n - deg) / a.unit_degree_or_zero() : 0;
    auto it = vectors.find(n);
    if (it == vectors.end()) throw ValidationError("cycles: product leaves the kernel (internal error)");
    Matrix m = Matrix::from_columns(f, a.component_dim(n), it->second);
    auto sol = solve(m, a.coords(y, n));
    if (!sol) throw ValidationError("cycles: product " + to_string(a, x) + " is not a cycle");
    for (std::size_t l = 0; l < sol->size(); ++l)
      out.add_term({by_degree[n][l], -shift}, (*sol)[l]);
    return out;
  };
  const int dim = static_cast<int>(inclusion.size());
  std::vector<int> degree(dim);
  for (const auto& [n, idx] : by_degree)
    for (int i : idx) degree[i] = n;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      builder.set_product(i, j, express(a.multiply(inclusion[i], inclusion[j]), degree[i] + degree[j]));
  builder.one(express(a.one(), 0));
  return Cycles{builder.build(), a, std::move(inclusion)};
}

Cycles cycles(const DgAlgebra& ad) { return cycles(ad, ad.algebra().natural_window()); }

// ---------------------------------------------------------------- homology

DegreeWindow covering_window(const GradedAlgebra& a) {
  const DegreeWindow w = a.natural_window();
  return {w.lo - 1, w.hi + 1};
}

HomologyReport homology(const DgAlgebra& ad, DegreeWindow w) {
  const GradedAlgebra& a = ad.algebra();
  if (a.periodic() && w.size() < a.period() + 2)
    throw PreconditionError("homology: window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) +
                            "] must span the period " + std::to_string(a.period()) +
                            " plus one degree on each side");
  HomologyReport r;
  r.window = w;
  r.periodic = a.periodic();
  r.acyclic = true;
  const DegreeWindow cover = covering_window(a);
  r.global = a.periodic() || (w.lo <= cover.lo && w.hi >= cover.hi);
  for (int n = w.lo; n <= w.hi; ++n) {
    HomologyDegree h;
    h.degree = n;
    const int dim = a.component_dim(n);
    if (dim > 0) {
      const Field f = a.field();
      Matrix out = d_block(ad, n);
      const auto ker = nullspace(out);
      h.cycles = static_cast<int>(ker.size());
      RowSpace space(f, dim);
      Matrix in = d_block(ad, n - 1);
      for (std::size_t c = 0; c < in.cols(); ++c) space.insert(in.column(c));
      h.boundaries = static_cast<int>(space.dim());
      for (const auto& v : ker)
        if (space.insert(v)) h.basis.push_back(a.from_coords(n, v));
      h.homology = h.cycles - h.boundaries;
      if (h.homology != static_cast<int>(h.basis.size()))
        throw ValidationError("homology: boundaries are not cycles (internal error)");
    }
    if (h.homology != 0) r.acyclic = false;
    r.degrees.push_back(std::move(h));
  }
  return r;
}

GradedSubspace dg_ideal(const DgAlgebra& ad, const std::vector<Element>& gens, Side side, DegreeWindow w) {
  return graded_ideal(ad.algebra(), gens, side, w, [&](const Element& x) { return ad.d(x); });
}

GradedSubspace dg_ideal(const DgAlgebra& ad, const std::vector<Element>& gens, Side side) {
  return dg_ideal(ad, gens, side, ad.algebra().natural_window());
}

std::string to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::zero_differential: return "zero_differential";
    case Dichotomy::acyclic: return "acyclic";
    default: return "neither";
  }
}

// ---------------------------------------------------------------- verdicts

Verdict dg_division_oracle(const DgAlgebra& ad) {
  const GradedAlgebra& a = ad.algebra();
  if (!a.field().is_finite()) return Verdict::unknown("oracle runs over finite fields only");
  if (a.dim() > 6) return Verdict::unknown("oracle limited to core dimension 6");
  const DegreeWindow w = a.natural_window();
  std::string bad;
  const bool done = for_each_homogeneous(a, w, kEnumerationLimit, [&](const Element& x) {
    for (Side s : {Side::left, Side::right})
      if (!dg_ideal(ad, {x}, s, w).is_whole()) {
        bad = to_string(a, x) + (s == Side::left ? " (left)" : " (right)");
        return false;
      }
    return true;
  });
  if (!done) return Verdict::unknown("oracle enumeration limit exceeded");
  const std::string method = "brute-force principal one-sided dg-ideals";
  return bad.empty() ? Verdict::yes(method) : Verdict::no(method, bad);
}

DgStructureReport dg_structure_report(const DgAlgebra& ad) {
  const GradedAlgebra& a = ad.algebra();
  DgStructureReport r;
  Cycles z = cycles(ad);
  r.cycles_dim = z.algebra.dim();
  r.cycles_report = structure_report(z.algebra);
  const Verdict& zd = r.cycles_report.graded_division;
  r.dg_division = Verdict{zd.value, "cycles are graded-division: " + zd.method, zd.witness};
  if (a.field().is_finite() && a.dim() <= 6) {
    r.oracle = dg_division_oracle(ad);
    if (!r.oracle->is_unknown() && !r.dg_division.is_unknown())
      r.oracle_agrees = r.oracle->value == r.dg_division.value;
  }
  if (ad.is_zero_differential())
    r.dichotomy = Dichotomy::zero_differential;
  else if (homology(ad, covering_window(a)).acyclic)
    r.dichotomy = Dichotomy::acyclic;

  const DegreeWindow w = a.natural_window();
  if (r.dg_division.is_yes()) {
    r.dg_simple = Verdict::yes("dg-division");
    return r;
  }
  for (int b = 0; b < a.dim(); ++b)
    if (!dg_ideal(ad, {a.basis_element(b)}, Side::twosided, w).is_whole()) {
      r.dg_simple = Verdict::no("proper two-sided dg-ideal", a.name(b));
      return r;
    }
  if (const Verdict gs = graded_simple(a, graded_division(a)); gs.is_yes()) {
    r.dg_simple = Verdict::yes("graded-simple (" + gs.method + ")");
    return r;
  }
  std::string bad;
  if (for_each_homogeneous(a, w, kEnumerationLimit, [&](const Element& x) {
        if (dg_ideal(ad, {x}, Side::twosided, w).is_whole()) return true;
        bad = to_string(a, x);
        return false;
      })) {
    const std::string method = "enumeration of principal two-sided dg-ideals";
    r.dg_simple = bad.empty() ? Verdict::yes(method) : Verdict::no(method, bad);
  } else {
    r.dg_simple = Verdict::unknown("no exact dg-simplicity test for this presentation");
  }
  return r;
}

}  // namespace dgb
