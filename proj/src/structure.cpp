#include "dgbrauer/structure.hpp"

#include <algorithm>
#include <limits>

namespace dgb {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    default: return "unknown";
  }
}

Verdict Verdict::yes(std::string method, std::string witness) {
  return {Truth::yes, std::move(method), std::move(witness)};
}
Verdict Verdict::no(std::string method, std::string witness) {
  return {Truth::no, std::move(method), std::move(witness)};
}
Verdict Verdict::unknown(std::string method) { return {Truth::unknown, std::move(method), {}}; }

std::size_t projective_count(Field f, std::size_t k) {
  if (!f.is_finite()) return 0;
  const std::size_t p = f.characteristic();
  std::size_t total = 0, power = 1;  // sum_{i<k} p^i
  for (std::size_t i = 0; i < k; ++i) {
    total += power;
    if (power > std::numeric_limits<std::size_t>::max() / p) return std::numeric_limits<std::size_t>::max();
    power *= p;
  }
  return total;
}

bool for_each_homogeneous(const GradedAlgebra& a, DegreeWindow w, std::size_t limit,
                          const std::function<bool(const Element&)>& fn) {
  const Field f = a.field();
  if (!f.is_finite()) return false;
  std::size_t total = 0;
  for (int n = w.lo; n <= w.hi; ++n) {
    const std::size_t c = projective_count(f, a.component(n).size());
    if (c > limit || total + c > limit) return false;
    total += c;
  }
  const std::uint32_t p = f.characteristic();
  for (int n = w.lo; n <= w.hi; ++n) {
    const std::size_t k = a.component(n).size();
    for (std::size_t lead = 0; lead < k; ++lead) {
      // Odometer over the coordinates after the leading 1.
      std::vector<std::uint32_t> digits(k - lead - 1, 0);
      while (true) {
        Vector v(k, Scalar::zero(f));
        v[lead] = Scalar::one(f);
        for (std::size_t i = 0; i < digits.size(); ++i) v[lead + 1 + i] = Scalar::residue(f, digits[i]);
        if (!fn(a.from_coords(n, v))) return true;
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
      }
    }
  }
  return true;
}

std::optional<Element> inverse(const GradedAlgebra& a, const Element& x) {
  const auto deg = a.degree_of(x);
  if (!deg) return std::nullopt;
  const auto comp = a.component(-*deg);
  const auto zero = a.component(0);
  if (comp.empty() || zero.empty()) return std::nullopt;
  const Field f = a.field();
  Matrix m(f, 2 * zero.size(), comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j) {
    const Element y = Element::monomial(f, comp[j].basis, comp[j].upow, Scalar::one(f));
    const Vector xy = a.coords(a.multiply(x, y), 0);
    const Vector yx = a.coords(a.multiply(y, x), 0);
    for (std::size_t r = 0; r < zero.size(); ++r) {
      m.at(r, j) = xy[r];
      m.at(zero.size() + r, j) = yx[r];
    }
  }
  Vector rhs = a.coords(a.one(), 0);
  rhs.insert(rhs.end(), rhs.begin(), rhs.end());
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return a.from_coords(-*deg, *sol);
}

// ---------------------------------------------------------------- quaternions

std::optional<NormCertificate> quaternion_norm_certificate(const GradedAlgebra& a) {
  const Field f = a.field();
  if (!f.is_rationals()) return std::nullopt;
  const auto comp = a.component(0);
  if (comp.size() != 4) return std::nullopt;
  const Element& one = a.one();
  std::vector<Element> others;
  for (const Key& k : comp) {
    Element e = Element::monomial(f, k.basis, k.upow, Scalar::one(f));
    if (e == one) continue;
    others.push_back(std::move(e));
  }
  if (others.size() != 3) return std::nullopt;
  auto scalar_multiple_of = [&](const Element& x, const Element& base) -> std::optional<Scalar> {
    if (x.is_zero() || base.size() != 1 || x.size() != 1) return std::nullopt;
    if (x.terms().begin()->first != base.terms().begin()->first) return std::nullopt;
    return x.terms().begin()->second / base.terms().begin()->second;
  };
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      if (p == q) continue;
      const int r = 3 - p - q;
      const Element& i = others[p];
      const Element& j = others[q];
      auto sa = scalar_multiple_of(a.multiply(i, i), one);
      auto sb = scalar_multiple_of(a.multiply(j, j), one);
      if (!sa || !sb) continue;
      const Element ij = a.multiply(i, j);
      if (!(a.multiply(j, i) == -ij) || !scalar_multiple_of(ij, others[r])) continue;
      // Norm on 1, i, j, ij: x0^2 - a x1^2 - b x2^2 + ab x3^2.
      const mpq_class qa = sa->rational(), qb = sb->rational();
      if (!(qa < 0 && qb < 0)) return std::nullopt;
      NormCertificate c{to_string(a, i), to_string(a, j), *sa, *sb, {}};
      c.norm_form = "x0^2 + " + (-*sa).to_string() + "*x1^2 + " + (-*sb).to_string() + "*x2^2 + " +
                    (*sa * *sb).to_string() + "*x3^2";
      return c;
    }
  return std::nullopt;
}

std::string to_string(const NormCertificate& c) {
  return "(" + c.a.to_string() + "," + c.b.to_string() + ") with i = " + c.i + ", j = " + c.j +
         "; norm form " + c.norm_form + " is positive definite, hence anisotropic";
}

// ---------------------------------------------------------------- verdicts

namespace {

std::vector<Element> core_monomials(const GradedAlgebra& a) {
  std::vector<Element> out;
  for (int b = 0; b < a.dim(); ++b) out.push_back(a.basis_element(b));
  return out;
}

int max_component_dim(const GradedAlgebra& a) {
  const DegreeWindow w = a.natural_window();
  int m = 0;
  for (int n = w.lo; n <= w.hi; ++n) m = std::max(m, a.component_dim(n));
  return m;
}

bool is_rational_square(const mpq_class& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t());
}

mpq_class rational_sqrt(const mpq_class& q) {
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  return mpq_class(n, d);
}

// A_0 = Q[x] with x^2 = alpha + beta x is a field iff beta^2 + 4 alpha is not a square.
Verdict quadratic_division(const GradedAlgebra& a) {
  const Field f = a.field();
  const Element one = a.one();
  std::optional<Element> x;
  for (const Key& k : a.component(0)) {
    Element e = Element::monomial(f, k.basis, k.upow, Scalar::one(f));
    if (rank(Matrix::from_columns(f, 2, {a.coords(one, 0), a.coords(e, 0)})) == 2) {
      x = e;
      break;
    }
  }
  if (!x) return Verdict::unknown("degenerate degree-zero basis");
  const Vector c = a.coords(a.multiply(*x, *x), 0);
  auto sol = solve(Matrix::from_columns(f, 2, {a.coords(one, 0), a.coords(*x, 0)}), c);
  if (!sol) return Verdict::unknown("x^2 outside span{1, x}");
  const mpq_class alpha = (*sol)[0].rational(), beta = (*sol)[1].rational();
  const mpq_class disc = beta * beta + 4 * alpha;
  const std::string poly = "minimal polynomial of " + to_string(a, *x) + " has discriminant " + disc.get_str();
  if (!is_rational_square(disc)) return Verdict::yes("A_0 is a quadratic field: " + poly);
  const mpq_class root = (beta + rational_sqrt(disc)) / 2;
  const Element witness = *x - one.scaled(Scalar::from_rational(f, root));
  return Verdict::no("A_0 is split: " + poly, to_string(a, witness));
}

Verdict degree_zero_division(const GradedAlgebra& a) {
  const int d0 = a.component_dim(0);
  if (d0 == 1) return Verdict::yes("A_0 is one-dimensional");
  if (a.field().is_finite()) {
    std::string bad;
    const bool done = for_each_homogeneous(a, {0, 0}, kEnumerationLimit, [&](const Element& x) {
      if (inverse(a, x)) return true;
      bad = to_string(a, x);
      return false;
    });
    if (!done) return Verdict::unknown("A_0 too large to enumerate");
    if (!bad.empty()) return Verdict::no("enumeration of A_0", bad);
    return Verdict::yes("enumeration of A_0");
  }
  if (auto cert = quaternion_norm_certificate(a))
    return Verdict::yes("quaternion norm certificate: " + to_string(*cert));
  if (d0 == 2) return quadratic_division(a);
  return Verdict::unknown("no exact division test for A_0 of dimension " + std::to_string(d0) +
                          " over Q");
}

}  // namespace

Verdict graded_division(const GradedAlgebra& a) {
  const DegreeWindow w = a.natural_window();
  if (a.field().is_finite()) {
    std::string bad;
    const bool done = for_each_homogeneous(a, w, kEnumerationLimit, [&](const Element& x) {
      if (inverse(a, x)) return true;
      bad = to_string(a, x);
      return false;
    });
    if (done) {
      const std::string method = "enumeration of homogeneous elements over " + a.field().to_string();
      return bad.empty() ? Verdict::yes(method) : Verdict::no(method, bad);
    }
  }
  for (const Element& b : core_monomials(a))
    if (!inverse(a, b)) return Verdict::no("non-invertible basis element", to_string(a, b));
  Verdict zero = degree_zero_division(a);
  if (zero.is_no()) return zero;
  if (zero.is_unknown()) return Verdict::unknown(zero.method);
  return Verdict::yes(zero.method + "; every basis element is invertible");
}

namespace {

// Non-periodic algebras of small dimension: when the maps x -> b_i x b_j span
// all of End(A), every nonzero x generates A as a two-sided ideal.
bool two_sided_multiplications_span_end(const GradedAlgebra& a) {
  const int n = a.dim();
  if (a.periodic() || n > 16) return false;
  const Field f = a.field();
  std::vector<Vector> ops;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector v(static_cast<std::size_t>(n * n), Scalar::zero(f));
      for (int k = 0; k < n; ++k) {
        const Element y = a.multiply(a.multiply(a.basis_element(i), a.basis_element(k)), a.basis_element(j));
        for (const auto& [key, c] : y.terms()) v[static_cast<std::size_t>(k * n + key.basis)] = c;
      }
      ops.push_back(std::move(v));
    }
  return rank(Matrix::from_columns(f, static_cast<std::size_t>(n * n), ops)) == static_cast<std::size_t>(n * n);
}

}  // namespace

Verdict graded_simple(const GradedAlgebra& a, const Verdict& division) {
  if (division.is_yes()) return Verdict::yes("graded-division");
  const DegreeWindow w = a.natural_window();
  for (const Element& b : core_monomials(a)) {
    if (!graded_ideal(a, {b}, Side::twosided, w).is_whole())
      return Verdict::no("proper two-sided graded ideal", to_string(a, b));
  }
  if (a.field().is_finite()) {
    std::string bad;
    const bool done = for_each_homogeneous(a, w, kEnumerationLimit, [&](const Element& x) {
      if (graded_ideal(a, {x}, Side::twosided, w).is_whole()) return true;
      bad = to_string(a, x);
      return false;
    });
    if (done) {
      const std::string method = "enumeration of principal graded ideals";
      return bad.empty() ? Verdict::yes(method) : Verdict::no(method, bad);
    }
  }
  if (max_component_dim(a) <= 1)
    return Verdict::yes("one-dimensional components; every basis element generates A");
  if (two_sided_multiplications_span_end(a))
    return Verdict::yes("the operators x -> bxc span End(A)");
  return Verdict::unknown("no exact simplicity test for this presentation");
}

StructureReport structure_report(const GradedAlgebra& a) {
  StructureReport r;
  r.graded_commutative = is_graded_commutative(a);
  r.commutative = is_commutative(a);
  r.graded_division = graded_division(a);
  const bool comm = r.graded_commutative || r.commutative;
  if (!comm)
    r.graded_field = Verdict::no("neither commutative nor graded-commutative");
  else
    r.graded_field = Verdict{r.graded_division.value, r.graded_division.method, r.graded_division.witness};
  r.graded_simple = graded_simple(a, r.graded_division);
  return r;
}

}  // namespace dgb
