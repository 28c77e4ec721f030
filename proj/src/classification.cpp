#include "dgbrauer/classification.hpp"

#include <functional>
#include <stdexcept>

#include "dgbrauer/agr.hpp"

namespace dgb {

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::c1: return "1";
    case CaseLabel::c2: return "2";
    case CaseLabel::c3: return "3";
    case CaseLabel::c4a: return "4a";
    case CaseLabel::c4b: return "4b";
    case CaseLabel::c5a: return "5a";
    default: return "5b";
  }
}

CaseLabel parse_case(const std::string& text) {
  for (CaseLabel c : all_cases())
    if (to_string(c) == text) return c;
  throw std::invalid_argument("unknown case label '" + text + "' (expected 1, 2, 3, 4a, 4b, 5a or 5b)");
}

const std::vector<CaseLabel>& all_cases() {
  static const std::vector<CaseLabel> v{CaseLabel::c1,  CaseLabel::c2,  CaseLabel::c3, CaseLabel::c4a,
                                        CaseLabel::c4b, CaseLabel::c5a, CaseLabel::c5b};
  return v;
}

// ---------------------------------------------------------------- templates

namespace {

using Table = std::function<Element(int, int)>;

GradedAlgebra fill(PresentationBuilder& b, int n, const Table& prod) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set_product(i, j, prod(i, j));
  b.one(0);
  return b.build();
}

Element mono(Field f, int basis, int upow = 0, long c = 1) {
  return Element::monomial(f, basis, upow, Scalar::from_int(f, c));
}

// Core {1, T, U, TU} with T^2 = u, UT = -TU, U^2 = u_sq * u.
GradedAlgebra five_core(Field f, int t_deg, int p, bool u_square_nonzero) {
  PresentationBuilder b(f);
  b.unit_degree(p);
  b.add("1", 0);
  b.add("T", t_deg);
  b.add("U", -1);
  b.add("TU", t_deg - 1);
  enum { ONE, T, U, TU };
  const long s = u_square_nonzero ? 1 : 0;
  return fill(b, 4, [&](int i, int j) -> Element {
    if (i == ONE) return mono(f, j);
    if (j == ONE) return mono(f, i);
    switch (i * 4 + j) {
      case T * 4 + T: return mono(f, ONE, 1);
      case T * 4 + U: return mono(f, TU);
      case T * 4 + TU: return mono(f, U, 1);
      case U * 4 + T: return mono(f, TU, 0, -1);
      case U * 4 + U: return mono(f, ONE, 1, s);
      case U * 4 + TU: return mono(f, T, 1, -s);
      case TU * 4 + T: return mono(f, U, 1, -1);
      case TU * 4 + U: return mono(f, T, 1, s);
      case TU * 4 + TU: return mono(f, ONE, 2, -s);
    }
    return Element(f);
  });
}

// Core {1, Y} with Y^2 = 0, |Y| = -1.
GradedAlgebra dual_core(Field f, std::optional<int> p) {
  PresentationBuilder b(f);
  if (p) b.unit_degree(*p);
  b.add("1", 0);
  b.add("Y", -1);
  return fill(b, 2, [&](int i, int j) -> Element {
    if (i == 0) return mono(f, j);
    if (j == 0) return mono(f, i);
    return Element(f);
  });
}

void require_t(const TemplateParams& p, const char* what) {
  if (!p.t_degree) throw PreconditionError(std::string("case ") + to_string(p.label) + " needs a T degree (" + what + ")");
}

}  // namespace

DgAlgebra make_template(const TemplateParams& p) {
  const Field f = p.field;
  auto fixed_minus_one = [&] {
    if (p.t_degree && *p.t_degree != -1)
      throw PreconditionError("case " + to_string(p.label) + " has |T| = -1, got " + std::to_string(*p.t_degree));
  };
  auto no_t = [&] {
    if (p.t_degree) throw PreconditionError("case " + to_string(p.label) + " has no T degree parameter");
  };
  switch (p.label) {
    case CaseLabel::c1: {
      no_t();
      PresentationBuilder b(f);
      b.add("1", 0);
      return zero_differential(fill(b, 1, [&](int, int) { return mono(f, 0); }));
    }
    case CaseLabel::c2: {
      require_t(p, "any nonzero integer");
      const int t = *p.t_degree;
      if (t == 0) throw PreconditionError("case 2 needs a nonzero T degree");
      PresentationBuilder b(f);
      if (t % 2 == 0) {
        b.unit_degree(t);
        b.add("1", 0);
        return zero_differential(fill(b, 1, [&](int, int) { return mono(f, 0); }));
      }
      b.unit_degree(2 * t);
      b.add("1", 0);
      b.add("T", t);
      return zero_differential(fill(b, 2, [&](int i, int j) {
        if (i == 0) return mono(f, j);
        if (j == 0) return mono(f, i);
        return mono(f, 0, 1);
      }));
    }
    case CaseLabel::c3: {
      fixed_minus_one();
      PresentationBuilder b(f);
      b.unit_degree(-2);
      b.add("1", 0);
      b.add("T", -1);
      GradedAlgebra a = fill(b, 2, [&](int i, int j) {
        if (i == 0) return mono(f, j);
        if (j == 0) return mono(f, i);
        return mono(f, 0, 1);
      });
      return validate_differential(a, std::vector<Element>{Element(f), mono(f, 0)});
    }
    case CaseLabel::c4a: {
      no_t();
      GradedAlgebra a = dual_core(f, std::nullopt);
      return validate_differential(a, std::vector<Element>{Element(f), mono(f, 0)});
    }
    case CaseLabel::c4b: {
      require_t(p, "nonzero even");
      const int t = *p.t_degree;
      if (t == 0 || t % 2 != 0) throw PreconditionError("case 4b needs a nonzero even T degree, got " + std::to_string(t));
      GradedAlgebra a = dual_core(f, t);
      return validate_differential(a, std::vector<Element>{Element(f), mono(f, 0)});
    }
    case CaseLabel::c5a: {
      fixed_minus_one();
      GradedAlgebra a = five_core(f, -1, -2, true);
      return validate_differential(a, std::vector<Element>{Element(f), Element(f), mono(f, 0), mono(f, 1, 0, -1)});
    }
    case CaseLabel::c5b: {
      require_t(p, "odd");
      const int t = *p.t_degree;
      if (t % 2 == 0) throw PreconditionError("case 5b needs an odd T degree, got " + std::to_string(t));
      GradedAlgebra a = five_core(f, t, 2 * t, false);
      return validate_differential(a, std::vector<Element>{Element(f), Element(f), mono(f, 0), mono(f, 1, 0, -1)});
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------- classifier

namespace {

std::vector<std::string> degree_zero_basis(const GradedAlgebra& z, const Cycles& c) {
  std::vector<std::string> out;
  for (const Key& k : z.component(0))
    out.push_back(to_string(c.ambient, c.include(Element::monomial(z.field(), k.basis, k.upow, Scalar::one(z.field())))));
  return out;
}

// Generator of the smallest positive degree carrying a nonzero component of z,
// preferring a representative that is a plain core monomial of the ambient
// algebra.
std::optional<std::pair<Element, int>> generator(const Cycles& c) {
  const GradedAlgebra& z = c.algebra;
  int top = z.period();
  if (!z.periodic())
    for (int b = 0; b < z.dim(); ++b) top = std::max(top, z.degree(b));
  for (int g = 1; g <= top; ++g) {
    if (z.component_dim(g) == 0) continue;
    std::optional<std::pair<Element, int>> fallback;
    for (int n : {g, -g})
      for (const Key& k : z.component(n)) {
        Element e = c.include(Element::monomial(z.field(), k.basis, k.upow, Scalar::one(z.field())));
        if (!fallback) fallback = {e, n};
        if (e.size() == 1 && e.terms().begin()->first.upow == 0 && e.terms().begin()->second.is_one())
          return std::make_pair(e, n);
      }
    return fallback;
  }
  return std::nullopt;
}

bool has_odd_part(const GradedAlgebra& z) {
  for (int b = 0; b < z.dim(); ++b)
    if (z.degree(b) & 1) return true;
  return false;
}

// Looks for c with (y + c t)^2 zero (want_zero) or nonzero (otherwise).
std::optional<Scalar> alternative_y(const GradedAlgebra& a, const Element& y, const Element& t, bool want_zero) {
  const Field f = a.field();
  auto q = [&](const Scalar& c) {
    Element x = y + t.scaled(c);
    return a.multiply(x, x);
  };
  if (f.is_finite()) {
    for (std::uint32_t v = 1; v < f.characteristic(); ++v) {
      const Scalar c = Scalar::residue(f, v);
      if (q(c).is_zero() == want_zero) return c;
    }
    return std::nullopt;
  }
  if (!want_zero) {
    for (long v : {1L, -1L, 2L})
      if (!q(Scalar::from_int(f, v)).is_zero()) return Scalar::from_int(f, v);
    return std::nullopt;
  }
  // Over Q: roots of alpha + beta c + gamma c^2 = 0 coordinate-wise.
  const Vector alpha = a.coords(a.multiply(y, y), -2);
  const Vector beta = a.coords(a.multiply(y, t) + a.multiply(t, y), -2);
  const Vector gamma = a.coords(a.multiply(t, t), -2);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (beta[i].is_zero() && gamma[i].is_zero()) continue;
    std::vector<Scalar> candidates;
    if (gamma[i].is_zero()) {
      candidates.push_back(-alpha[i] / beta[i]);
    } else {
      const mpq_class disc = beta[i].rational() * beta[i].rational() - 4 * alpha[i].rational() * gamma[i].rational();
      if (disc < 0) return std::nullopt;
      mpz_class num = disc.get_num(), den = disc.get_den();
      if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
      mpz_class sn, sd;
      mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
      const Scalar root = Scalar::from_rational(f, mpq_class(sn, sd));
      const Scalar two = Scalar::from_int(f, 2);
      candidates.push_back((-beta[i] + root) / (two * gamma[i]));
      candidates.push_back((-beta[i] - root) / (two * gamma[i]));
    }
    for (const Scalar& c : candidates)
      if (q(c).is_zero()) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("classification witness failed re-verification: " + what);
}

}  // namespace

std::string ClassificationReport::summary() const {
  std::string s = "case " + to_string(label);
  for (const auto& g : generators)
    if (g.role == "T") s += ", T = " + g.element;
  if (y) s += ", y = " + *y;
  return s;
}

ClassificationReport classify_dg_field(const DgAlgebra& ad) {
  const GradedAlgebra& a = ad.algebra();
  const DgStructureReport rep = dg_structure_report(ad);
  if (!rep.oracle_agrees)
    throw ValidationError("dg-division criterion and brute-force oracle disagree (internal error)");
  if (!rep.dg_division.is_yes())
    throw PreconditionError("not a certified dg-division algebra: dg_division = " +
                            to_string(rep.dg_division.value) + " (" + rep.dg_division.method +
                            (rep.dg_division.witness.empty() ? "" : ", witness " + rep.dg_division.witness) + ")");
  const bool gc = is_graded_commutative(a);
  const bool comm = is_commutative(a);
  ClassificationReport r;
  const Cycles z = cycles(ad);
  r.L_basis = degree_zero_basis(z.algebra, z);

  if (ad.is_zero_differential()) {
    if (!gc && !comm)
      throw PreconditionError("not a dg-field: neither commutative nor graded-commutative");
    if (a.is_concentrated_in_degree_zero()) {
      r.label = CaseLabel::c1;
      return r;
    }
    auto gen = generator(z);
    verify(gen.has_value(), "no generator in nonzero degree");
    const auto& [t, deg] = *gen;
    verify(inverse(a, t).has_value(), "T is not invertible");
    const DegreeWindow w = a.natural_window();
    for (int n = w.lo; n <= w.hi; ++n)
      if (a.component_dim(n) != 0) verify(n % deg == 0, "component in degree " + std::to_string(n) + " not a power of T");
    r.label = CaseLabel::c2;
    r.generators.push_back({"T", to_string(a, t), deg});
    if ((deg & 1) && !gc) r.notes.push_back("commutative, not graded-commutative: |T| is odd");
    return r;
  }

  if (rep.dichotomy != Dichotomy::acyclic)
    throw ValidationError("dg-division algebra with nonzero differential that is not acyclic");
  auto y = find_y(ad);
  verify(y.has_value(), "no y with d(y) = 1");
  verify(a.degree_of(*y) == -1 && ad.d(*y) == a.one(), "d(y) = 1 in degree -1");
  const Element y2 = a.multiply(*y, *y);
  verify(ad.d(y2).is_zero(), "y^2 is a cycle");
  bool D_zero = true;
  for (const Element& c : z.inclusion) {
    const auto deg = a.degree_of(c);
    Element v = (*deg & 1) ? a.multiply(*y, c) + a.multiply(c, *y) : a.multiply(*y, c) - a.multiply(c, *y);
    if (!v.is_zero()) D_zero = false;
  }
  if (!gc && !comm) {
    if (!rep.cycles_report.graded_field.is_yes() || !D_zero)
      throw PreconditionError("not a dg-field: neither commutative nor graded-commutative");
    r.notes.push_back(
        "neither commutative nor graded-commutative: Leibniz forces UT = -TU; accepted because ker(d) is a "
        "graded field and y graded-commutes with it");
  }
  r.y = to_string(a, *y);
  r.y_squared = to_string(a, y2);
  r.generators.push_back({"y", *r.y, -1});
  const bool y2_zero = y2.is_zero();
  if (!y2_zero) verify(inverse(a, y2).has_value(), "y^2 is invertible");

  if (!has_odd_part(z.algebra)) {
    if (y2_zero) {
      if (z.algebra.is_concentrated_in_degree_zero()) {
        r.label = CaseLabel::c4a;
      } else {
        auto gen = generator(z);
        verify(gen.has_value(), "no generator of ker(d)");
        verify(gen->second % 2 == 0, "T has even degree");
        verify(inverse(a, gen->first).has_value(), "T is invertible");
        r.label = CaseLabel::c4b;
        r.generators.insert(r.generators.begin(), {"T", to_string(a, gen->first), gen->second});
      }
    } else {
      verify(a.degree_of(y2) == -2, "y^2 has degree -2");
      r.label = CaseLabel::c3;
    }
  } else {
    auto gen = generator(z);
    verify(gen.has_value(), "no generator of ker(d)");
    verify(gen->second & 1, "T has odd degree");
    verify(inverse(a, gen->first).has_value(), "T is invertible");
    r.generators.insert(r.generators.begin(), {"T", to_string(a, gen->first), gen->second});
    r.label = y2_zero ? CaseLabel::c5b : CaseLabel::c5a;
    if (y2_zero)
      r.notes.push_back(
          "the presentation A = L[T,T^-1,U]/(T^2-U^2) with U^2 = 0 would force T^2 = 0; realized as "
          "L[T,T^-1][U]/(U^2) with d(U) = 1");
    const auto minus_one = z.algebra.component(-1);
    if (minus_one.size() == 1) {
      const Element t = z.include(Element::monomial(a.field(), minus_one[0].basis, minus_one[0].upow, Scalar::one(a.field())));
      if (auto c = alternative_y(a, *y, t, !y2_zero)) {
        const std::string alt = to_string(a, *y + t.scaled(*c));
        r.notes.push_back(y2_zero ? "y' = " + alt + " also has d(y') = 1 and y'^2 != 0, so this algebra also matches case 5a; the canonical y decides the label"
                                  : "y' = " + alt + " also has d(y') = 1 and y'^2 = 0, so this algebra also matches case 5b with |T| = -1; the canonical y decides the label");
      }
    }
  }
  if (gc && !comm)
    throw ValidationError("graded-commutative dg-field with nonzero differential that is not commutative");
  return r;
}

}  // namespace dgb
