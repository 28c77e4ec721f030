#include "dgbrauer/brauer.hpp"

#include <algorithm>

#include "dgbrauer/subspace.hpp"

namespace dgb {

namespace {

Element basis_monomial(Field f, const Key& k) { return Element::monomial(f, k.basis, k.upow, Scalar::one(f)); }

// rank over K of a graded K-submodule with the given dimensions over the carrier window.
std::optional<int> rank_over_base(const AlgebraOverBase& a, int total_dim) {
  const GradedAlgebra& k = a.base_algebra();
  const DegreeWindow wk = k.natural_window();
  int kd = 0;
  for (int n = wk.lo; n <= wk.hi; ++n) kd += k.component_dim(n);
  if (kd == 0 || total_dim % kd != 0) return std::nullopt;
  return total_dim / kd;
}

int total_span_dim(const AlgebraOverBase& a, const std::function<Element(const Element&)>& op) {
  const GradedAlgebra& c = a.carrier();
  const DegreeWindow w = carrier_window(a);
  int total = 0;
  for (int n = w.lo; n <= w.hi; ++n) {
    RowSpace span(a.field(), c.component(n).size());
    for (const Key& key : c.component(n)) span.insert(c.coords(op(basis_monomial(a.field(), key)), n));
    total += static_cast<int>(span.dim());
  }
  return total;
}

}  // namespace

bool graded_central_over_base(const AlgebraOverBase& a, std::string* detail) {
  auto fail = [&](std::string why) {
    if (detail) *detail = std::move(why);
    return false;
  };
  if (!a.base_is_graded_central()) return fail("the base does not act graded-centrally");
  const DegreeWindow w = carrier_window(a);
  GradedSubspace z = graded_center(a.carrier(), w);
  for (int n = w.lo; n <= w.hi; ++n) {
    const int want = a.base_algebra().component_dim(n);
    if (z.dim(n) != want)
      return fail("graded centre has dimension " + std::to_string(z.dim(n)) + " in degree " + std::to_string(n) +
                  ", the base has " + std::to_string(want));
  }
  if (detail) *detail = "graded centre equals the base in degrees " + std::to_string(w.lo) + ".." + std::to_string(w.hi);
  return true;
}

AzumayaReport azumaya_report(const AlgebraOverBase& a) {
  AzumayaReport rep;
  rep.window = carrier_window(a);
  rep.faithfully_projective =
      Verdict::yes("free of rank " + std::to_string(a.rank()) + " on a homogeneous basis");
  MuReport mu = mu_map(a);
  rep.mu_iso = mu.is_iso;
  rep.mu_dg_map = mu.is_dg_map;
  rep.mu_failure = mu.failure;
  rep.graded_central = graded_central_over_base(a, &rep.central_detail);
  SeparabilityResult sep = separability_idempotent(a);
  rep.idempotent = sep.idempotent;
  rep.graded_separable = sep.idempotent ? Verdict::yes(sep.method) : Verdict::no(sep.method);
  rep.cross_check = (rep.mu_iso && rep.graded_central) == (sep.idempotent.has_value() && rep.graded_central);

  if (!rep.graded_central) rep.kind_II = Verdict::no("not graded central: " + rep.central_detail);
  else if (!sep.idempotent) rep.kind_II = Verdict::no("not graded separable: " + sep.method);
  else rep.kind_II = Verdict::yes("graded central and graded separable over the base");

  // First kind: redo everything for the cycles over the base cycles.
  try {
    RelativeCycles rc = relative_cycles(a);
    std::string detail;
    const bool central = graded_central_over_base(rc.algebra, &detail);
    SeparabilityResult cs = separability_idempotent(rc.algebra);
    if (!central) rep.kind_I = Verdict::no("cycles not graded central over the base cycles: " + detail);
    else if (!cs.idempotent) rep.kind_I = Verdict::no("cycles not graded separable: " + cs.method);
    else
      rep.kind_I = Verdict::yes("cycles are graded central and separable over the base cycles (rank " +
                                std::to_string(rc.algebra.rank()) + ")");
  } catch (const PreconditionError& e) {
    rep.kind_I = Verdict::unknown(e.what());
  }
  return rep;
}

AlgebraOverBase dgbr2_product(const AlgebraOverBase& a, const AlgebraOverBase& b) { return tensor_dg(a, b).product; }

AlgebraOverBase psi_forget(const AlgebraOverBase& a) {
  AlgebraOverBase::Data d = a.data();
  d.base = zero_differential(a.base_algebra());
  d.diff.clear();
  return AlgebraOverBase::build(std::move(d));
}

AlgebraOverBase phi_inflate(const AlgebraOverBase& a) {
  if (!a.base().is_zero_differential()) throw PreconditionError("inflation needs a base with zero differential");
  AlgebraOverBase::Data d = a.data();
  d.diff.clear();
  return AlgebraOverBase::build(std::move(d));
}

bool psi_phi_identity(const AlgebraOverBase& a) {
  AlgebraOverBase back = psi_forget(phi_inflate(a));
  return back.carrier() == a.carrier() && back.data().constants == a.data().constants && back.one() == a.one();
}

std::optional<BrauerWitness> witness_from_idempotent(const AlgebraOverBase& a, const Element& e, int shift_bound) {
  const GradedAlgebra& c = a.carrier();
  const GradedAlgebra& k = a.base_algebra();
  const Field f = a.field();
  if (e.is_zero() || !(c.multiply(e, e) == e)) return std::nullopt;
  int n = 1;
  while (n * n < a.rank()) ++n;
  if (n * n != a.rank()) return std::nullopt;

  const int eae = total_span_dim(a, [&](const Element& x) { return c.multiply(c.multiply(e, x), e); });
  if (rank_over_base(a, eae) != 1) return std::nullopt;

  auto embed = [&](const Element& x) { return a.embed_base(x); };
  std::vector<Element> basis;
  for (int i = 0; i < a.rank() && static_cast<int>(basis.size()) < n; ++i) {
    const Element v = c.multiply(a.module_element(i), e);
    if (v.is_zero()) continue;
    const auto deg = c.degree_of(v);
    if (!deg) continue;
    if (!basis.empty() && express_over(a, k, embed, basis, v, *deg)) continue;
    basis.push_back(v);
  }
  if (static_cast<int>(basis.size()) != n) return std::nullopt;

  BrauerWitness w{n, {}, basis, e, over_itself(zero_differential(k)),
                  GradedLinearMap{c, c, 0, {}}};
  std::vector<BasisElement> module;
  for (int i = 0; i < n; ++i) module.push_back({"v" + std::to_string(i + 1), *c.degree_of(basis[i])});
  w.end = end_dg({zero_differential(k), module, {}});
  for (const auto& m : module) w.shifts.push_back(m.degree);
  std::sort(w.shifts.rbegin(), w.shifts.rend());
  const int top = w.shifts.front();
  for (int& s : w.shifts) s -= top;
  for (int s : w.shifts)
    if (std::abs(s) > shift_bound) return std::nullopt;

  GradedLinearMap phi{c, w.end.carrier(), 0, {}};
  for (int x = 0; x < c.dim(); ++x) {
    std::vector<Element> coeffs(static_cast<std::size_t>(n * n), Element(f));
    for (int j = 0; j < n; ++j) {
      const Element y = c.multiply(c.basis_element(x), basis[j]);
      if (y.is_zero()) continue;
      auto g = express_over(a, k, embed, basis, y, c.degree(x) + module[j].degree);
      if (!g) return std::nullopt;
      for (int i = 0; i < n; ++i) coeffs[i * n + j] = (*g)[i];
    }
    phi.images.push_back(w.end.to_carrier(coeffs));
  }
  if (!check_algebra_map(phi).ok() || bijectivity_failure(phi)) return std::nullopt;
  w.identification = std::move(phi);
  return w;
}

WitnessSearch end_witness_search(const AlgebraOverBase& a, int max_rank, int shift_bound,
                                 std::optional<Element> candidate) {
  if (max_rank < 1 || max_rank > 3) throw PreconditionError("max_rank must lie in 1..3");
  if (shift_bound < 0) throw PreconditionError("shift_bound must be nonnegative");
  if (!a.base().is_zero_differential() || !graded_division(a.base_algebra()).is_yes())
    throw PreconditionError("witness search needs a graded-field base with zero differential");
  const std::string bounds = "(max_rank " + std::to_string(max_rank) + ", shift_bound " + std::to_string(shift_bound) + ")";
  WitnessSearch out;
  int n = 1;
  while (n * n < a.rank()) ++n;
  if (n * n != a.rank() || n > max_rank) {
    out.outcome = "no witness found within bounds " + bounds + ": rank " + std::to_string(a.rank()) +
                  " is not the square of a rank in range";
    return out;
  }
  auto found = [&](BrauerWitness w) {
    std::string s;
    for (int x : w.shifts) s += (s.empty() ? "" : ",") + std::to_string(x);
    out.outcome = "witness found: End of a free module of rank " + std::to_string(w.rank) + " with shifts {" + s + "}";
    out.witness = std::move(w);
  };
  if (candidate) {
    ++out.candidates;
    if (auto w = witness_from_idempotent(a, *candidate, shift_bound)) found(std::move(*w));
    else out.outcome = "no witness found within bounds " + bounds + ": the candidate is not a rank-one idempotent";
    return out;
  }
  const Field f = a.field();
  if (f.characteristic() == 0) {
    out.outcome = "no witness found within bounds " + bounds + ": over Q only a supplied candidate is checked";
    return out;
  }
  const GradedAlgebra& c = a.carrier();
  const auto keys = c.component(0);
  if (keys.size() > 9) throw PreconditionError("degree-0 component has dimension " + std::to_string(keys.size()) + " > 9");
  const long p = static_cast<long>(f.characteristic());
  std::vector<long> digits(keys.size(), 0);
  // Canonical order: base-p counter, first coordinate fastest.
  while (true) {
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
    Vector v;
    for (long d : digits) v.push_back(Scalar::from_int(f, d));
    const Element e = c.from_coords(0, v);
    if (!(c.multiply(e, e) == e)) continue;
    ++out.candidates;
    if (auto w = witness_from_idempotent(a, e, shift_bound)) {
      found(std::move(*w));
      return out;
    }
  }
  out.outcome = "no witness found within bounds " + bounds + " after " + std::to_string(out.candidates) +
                " idempotents";
  return out;
}

}  // namespace dgb
