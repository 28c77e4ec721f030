#include "dgbrauer/relative.hpp"

#include <algorithm>
#include <set>

namespace dgb {

namespace {

Scalar sign(Field f, long parity_sum) { return Scalar::from_int(f, (parity_sum & 1) ? -1 : 1); }

// Places a base element k as the coefficient of module index l in a carrier element.
void add_coefficient(Element& out, const Element& k, int l, int base_dim) {
  for (const auto& [key, c] : k.terms()) out.add_term({l * base_dim + key.basis, key.upow}, c);
}

std::string join_names(const std::string& b, const std::string& m) { return b + "*" + m; }

}  // namespace

const Element& StructureConstants::get(int i, int j, int l) const {
  const auto& r = rows_[i * rank_ + j];
  auto it = r.find(l);
  return it == r.end() ? zero_ : it->second;
}

void StructureConstants::add(int i, int j, int l, const Element& c) {
  if (c.is_zero()) return;
  auto& r = rows_[i * rank_ + j];
  auto [it, inserted] = r.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }
}

// ---------------------------------------------------------------- AlgebraOverBase

AlgebraOverBase AlgebraOverBase::build(Data d) {
  const Field f = d.base.algebra().field();
  const int r = static_cast<int>(d.module.size());
  const int B = d.base.algebra().dim();
  if (r == 0) throw PreconditionError("module basis must be nonempty");
  if (d.constants.rank() != r) throw ValidationError("structure constant table has the wrong rank");
  if (static_cast<int>(d.one.size()) != r) throw ValidationError("unit must have one coefficient per module element");
  if (d.diff.empty()) d.diff.assign(static_cast<std::size_t>(r * r), Element(f));
  if (static_cast<int>(d.diff.size()) != r * r) throw ValidationError("differential must be an r x r table");

  AlgebraOverBase a(std::move(d));
  const Data& D = a.data_;
  const GradedAlgebra& k = D.base.algebra();

  // Which module element is the unit of A (if any) and which base element is 1_K.
  int unit_module = -1;
  for (int i = 0; i < r && unit_module < 0; ++i) {
    bool ok = D.one[i] == k.one();
    for (int l = 0; l < r && ok; ++l)
      if (l != i && !D.one[l].is_zero()) ok = false;
    if (ok) unit_module = i;
  }
  auto make_names = [&](bool full) {
    std::vector<std::string> names;
    for (int i = 0; i < r; ++i)
      for (int s = 0; s < B; ++s) {
        const bool base_unit = k.basis_element(s) == k.one();
        if (!full && base_unit) names.push_back(D.module[i].name);
        else if (!full && i == unit_module) names.push_back(k.name(s));
        else names.push_back(join_names(k.name(s), D.module[i].name));
      }
    return names;
  };
  std::vector<std::string> names = make_names(false);
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) names = make_names(true);

  PresentationBuilder pb(f);
  if (k.periodic()) pb.unit_degree(*k.unit_degree());
  // Carrier index i*B + s for b_s m_i.
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < B; ++s) pb.add(names[i * B + s], k.degree(s) + D.module[i].degree);
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < B; ++s)
      for (int j = 0; j < r; ++j)
        for (int t = 0; t < B; ++t) {
          Element out(f);
          const Element bb = k.product(s, t);
          const Scalar sg = sign(f, static_cast<long>(D.module[i].degree) * k.degree(t));
          if (!bb.is_zero())
            for (const auto& [l, c] : D.constants.row(i, j)) add_coefficient(out, k.multiply(bb, c).scaled(sg), l, B);
          pb.set_product(i * B + s, j * B + t, out);
        }
  Element one(f);
  for (int l = 0; l < r; ++l) add_coefficient(one, D.one[l], l, B);
  pb.one(one);
  GradedAlgebra carrier = pb.build();

  std::vector<Element> images;
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < B; ++s) {
      Element out(f);
      add_coefficient(out, a.base().d(k.basis_element(s)), i, B);
      const Scalar sg = sign(f, k.degree(s));
      for (int l = 0; l < r; ++l) {
        const Element& dl = D.diff[i * r + l];
        if (!dl.is_zero()) add_coefficient(out, k.multiply(k.basis_element(s), dl).scaled(sg), l, B);
      }
      images.push_back(std::move(out));
    }
  a.carrier_ = validate_differential(carrier, std::move(images));
  return a;
}

bool AlgebraOverBase::has_zero_module_differential() const {
  return std::all_of(data_.diff.begin(), data_.diff.end(), [](const Element& e) { return e.is_zero(); });
}

int AlgebraOverBase::carrier_index(int base_basis, int module_index) const {
  return module_index * base_algebra().dim() + base_basis;
}

Element AlgebraOverBase::to_carrier(const std::vector<Element>& coeffs) const {
  Element out(field());
  for (int l = 0; l < rank(); ++l) add_coefficient(out, coeffs[l], l, base_algebra().dim());
  return out;
}

std::vector<Element> AlgebraOverBase::to_module(const Element& x) const {
  const int B = base_algebra().dim();
  std::vector<Element> out(static_cast<std::size_t>(rank()), Element(field()));
  for (const auto& [key, c] : x.terms()) out[key.basis / B].add_term({key.basis % B, key.upow}, c);
  return out;
}

Element AlgebraOverBase::embed_base(const Element& k) const {
  std::vector<Element> coeffs;
  for (int l = 0; l < rank(); ++l) coeffs.push_back(base_algebra().multiply(k, data_.one[l]));
  return to_carrier(coeffs);
}

Element AlgebraOverBase::module_element(int i) const {
  std::vector<Element> coeffs(static_cast<std::size_t>(rank()), Element(field()));
  coeffs[i] = base_algebra().one();
  return to_carrier(coeffs);
}

bool AlgebraOverBase::base_is_graded_central() const {
  const GradedAlgebra& c = carrier();
  const GradedAlgebra& k = base_algebra();
  for (int s = 0; s < k.dim(); ++s) {
    const Element nu = embed_base(k.basis_element(s));
    for (int x = 0; x < c.dim(); ++x) {
      const Element bx = c.basis_element(x);
      const Element lhs = c.multiply(nu, bx);
      const Element rhs = c.multiply(bx, nu).scaled(sign(field(), static_cast<long>(k.degree(s)) * c.degree(x)));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- constructors

DgAlgebra ground_base(Field f, std::optional<int> unit_degree) {
  PresentationBuilder b(f);
  if (unit_degree) b.unit_degree(*unit_degree);
  b.add("1", 0);
  b.set_product(0, 0, Element::basis(f, 0)).one(0);
  return zero_differential(b.build());
}

AlgebraOverBase base_change(const DgAlgebra& ad, const DgAlgebra& base) {
  const GradedAlgebra& a = ad.algebra();
  const GradedAlgebra& k = base.algebra();
  if (a.field() != k.field()) throw PreconditionError("base change across different fields");
  if (a.periodic() && k.unit_degree() != a.unit_degree())
    throw PreconditionError("base change of a periodic algebra needs a base with the same periodic unit");
  const int r = a.dim();
  auto lift = [&](const Element& x, int l) {
    Element out(k.field());
    for (const auto& [key, c] : x.terms())
      if (key.basis == l) out += k.one().shifted(key.upow).scaled(c);
    return out;
  };
  AlgebraOverBase::Data d{base, a.basis(), StructureConstants(k.field(), r), {}, {}};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& [key, c] : a.product(i, j).terms()) d.constants.add(i, j, key.basis, k.one().shifted(key.upow).scaled(c));
  for (int l = 0; l < r; ++l) d.one.push_back(lift(a.one(), l));
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < r; ++l) d.diff.push_back(lift(ad.images()[i], l));
  return AlgebraOverBase::build(std::move(d));
}

AlgebraOverBase over_itself(const DgAlgebra& k) {
  const Field f = k.field();
  StructureConstants c(f, 1);
  c.add(0, 0, 0, k.algebra().one());
  return AlgebraOverBase::build({k, {{"1", 0}}, c, {k.algebra().one()}, {Element(f)}});
}

AlgebraOverBase over_field(const DgAlgebra& a) {
  return base_change(a, ground_base(a.field(), a.algebra().unit_degree()));
}

AlgebraOverBase relative_opposite(const AlgebraOverBase& a) {
  const int r = a.rank();
  AlgebraOverBase::Data d = a.data();
  d.constants = StructureConstants(a.field(), r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& [l, c] : a.products(j, i))
        d.constants.add(i, j, l, c.scaled(sign(a.field(), static_cast<long>(a.module_degree(i)) * a.module_degree(j))));
  return AlgebraOverBase::build(std::move(d));
}

TensorProduct tensor_dg(const AlgebraOverBase& a, const AlgebraOverBase& b) {
  const GradedAlgebra& k = a.base_algebra();
  if (!(k == b.base_algebra()) || a.base().images() != b.base().images())
    throw PreconditionError("tensor product over different bases");
  const Field f = k.field();
  const int ra = a.rank(), rb = b.rank(), r = ra * rb;
  auto deg_a = [&](int p) { return static_cast<long>(a.module_degree(p)); };
  auto deg_b = [&](int q) { return static_cast<long>(b.module_degree(q)); };

  auto unit_index = [](const AlgebraOverBase& x, const GradedAlgebra& kk) {
    for (int i = 0; i < x.rank(); ++i) {
      bool ok = x.one()[i] == kk.one();
      for (int l = 0; l < x.rank() && ok; ++l)
        if (l != i && !x.one()[l].is_zero()) ok = false;
      if (ok) return i;
    }
    return -1;
  };
  const int ua = unit_index(a, k), ub = unit_index(b, k);
  auto names = [&](bool full) {
    std::vector<BasisElement> out;
    for (int p = 0; p < ra; ++p)
      for (int q = 0; q < rb; ++q) {
        const std::string& mp = a.module()[p].name;
        const std::string& nq = b.module()[q].name;
        std::string n = mp + "." + nq;
        if (!full && p == ua) n = nq;
        else if (!full && q == ub) n = mp;
        out.push_back({n, a.module_degree(p) + b.module_degree(q)});
      }
    return out;
  };
  std::vector<BasisElement> module = names(false);
  {
    std::set<std::string> seen;
    for (const auto& m : module) seen.insert(m.name);
    if (seen.size() != module.size()) module = names(true);
  }

  AlgebraOverBase::Data d{a.base(), module, StructureConstants(f, r),
                          std::vector<Element>(static_cast<std::size_t>(r), Element(f)),
                          std::vector<Element>(static_cast<std::size_t>(r) * r, Element(f))};
  for (int p = 0; p < ra; ++p)
    for (int q = 0; q < rb; ++q)
      for (int pr = 0; pr < ra; ++pr)
        for (int qs = 0; qs < rb; ++qs)
          for (const auto& [x, alpha] : a.products(p, pr))
            for (const auto& [y, beta] : b.products(q, qs)) {
              const long beta_deg = deg_b(q) + deg_b(qs) - deg_b(y);
              const long s = deg_b(q) * deg_a(pr) + deg_a(x) * beta_deg;
              d.constants.add(p * rb + q, pr * rb + qs, x * rb + y, k.multiply(alpha, beta).scaled(sign(f, s)));
            }
  for (int x = 0; x < ra; ++x)
    for (int y = 0; y < rb; ++y) {
      if (a.one()[x].is_zero() || b.one()[y].is_zero()) continue;
      const long s = deg_a(x) * (-deg_b(y));
      d.one[x * rb + y] += k.multiply(a.one()[x], b.one()[y]).scaled(sign(f, s));
    }
  for (int p = 0; p < ra; ++p)
    for (int q = 0; q < rb; ++q) {
      for (int x = 0; x < ra; ++x) d.diff[(p * rb + q) * r + (x * rb + q)] += a.diff(p, x);
      for (int y = 0; y < rb; ++y) {
        const Element& dl = b.diff(q, y);
        if (dl.is_zero()) continue;
        const long s = deg_a(p) + deg_a(p) * (deg_b(q) + 1 - deg_b(y));
        d.diff[(p * rb + q) * r + (p * rb + y)] += dl.scaled(sign(f, s));
      }
    }
  AlgebraOverBase t = AlgebraOverBase::build(std::move(d));

  const int B = k.dim();
  GradedLinearMap left{a.carrier(), t.carrier(), 0, {}};
  for (int p = 0; p < ra; ++p)
    for (int s = 0; s < B; ++s) {
      std::vector<Element> coeffs(static_cast<std::size_t>(r), Element(f));
      for (int y = 0; y < rb; ++y)
        if (!b.one()[y].is_zero())
          coeffs[p * rb + y] = k.multiply(k.basis_element(s), b.one()[y]).scaled(sign(f, deg_a(p) * (-deg_b(y))));
      left.images.push_back(t.to_carrier(coeffs));
    }
  GradedLinearMap right{b.carrier(), t.carrier(), 0, {}};
  for (int q = 0; q < rb; ++q)
    for (int s = 0; s < B; ++s) {
      std::vector<Element> coeffs(static_cast<std::size_t>(r), Element(f));
      for (int x = 0; x < ra; ++x)
        if (!a.one()[x].is_zero()) coeffs[x * rb + q] = k.multiply(k.basis_element(s), a.one()[x]);
      right.images.push_back(t.to_carrier(coeffs));
    }
  return {t, left, right};
}

AlgebraOverBase end_dg(const FreeDgModule& m) {
  const GradedAlgebra& k = m.base.algebra();
  const Field f = k.field();
  const int n = static_cast<int>(m.basis.size());
  std::vector<Element> delta = m.diff;
  if (delta.empty()) delta.assign(static_cast<std::size_t>(n * n), Element(f));
  if (static_cast<int>(delta.size()) != n * n) throw ValidationError("module differential must be an n x n table");
  auto deg = [&](int i) { return static_cast<long>(m.basis[i].degree); };
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < n; ++p) {
      const Element& c = delta[j * n + p];
      if (c.is_zero()) continue;
      if (k.degree_of(c) != deg(j) + 1 - deg(p))
        throw ValidationError("module differential on " + m.basis[j].name + " is not of degree +1");
    }
  // delta^2 = 0: d_K(delta_j^q) + sum_p (-1)^{|delta_j^p|} delta_j^p delta_p^q = 0.
  for (int j = 0; j < n; ++j)
    for (int q = 0; q < n; ++q) {
      Element acc = m.base.d(delta[j * n + q]);
      for (int p = 0; p < n; ++p)
        acc += k.multiply(delta[j * n + p], delta[p * n + q]).scaled(sign(f, deg(j) + 1 - deg(p)));
      if (!acc.is_zero()) throw ValidationError("module differential squares to nonzero on " + m.basis[j].name);
    }

  const bool short_names = n <= 9;
  auto unit_name = [&](int i, int j) {
    return short_names ? "e" + std::to_string(i + 1) + std::to_string(j + 1)
                       : "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };
  const int r = n * n;
  AlgebraOverBase::Data d{m.base, {}, StructureConstants(f, r),
                          std::vector<Element>(static_cast<std::size_t>(r), Element(f)),
                          std::vector<Element>(static_cast<std::size_t>(r) * r, Element(f))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.module.push_back({unit_name(i, j), m.basis[i].degree - m.basis[j].degree});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) d.constants.add(i * n + j, j * n + l, i * n + l, k.one());
  for (int i = 0; i < n; ++i) d.one[i * n + i] = k.one();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const long e = deg(i) - deg(j);
      for (int p = 0; p < n; ++p) d.diff[(i * n + j) * r + (p * n + j)] += delta[i * n + p];
      for (int l = 0; l < n; ++l) {
        const Element& c = delta[l * n + j];
        if (c.is_zero()) continue;
        d.diff[(i * n + j) * r + (i * n + l)] -= c.scaled(sign(f, e + e * (deg(l) + 1 - deg(j))));
      }
    }
  return AlgebraOverBase::build(std::move(d));
}

FreeDgModule underlying_module(const AlgebraOverBase& a) { return {a.base(), a.module(), a.data().diff}; }

// ---------------------------------------------------------------- mu

MuReport mu_map(const AlgebraOverBase& a) {
  const GradedAlgebra& k = a.base_algebra();
  const Field f = k.field();
  const int r = a.rank(), B = k.dim();
  TensorProduct env = tensor_dg(a, relative_opposite(a));
  AlgebraOverBase end = end_dg(underlying_module(a));
  const GradedAlgebra& c = a.carrier();

  // F^{pq}: matrix of x |-> (-1)^{|m_q||x|} m_p x m_q on the module basis.
  std::vector<std::vector<Element>> F(static_cast<std::size_t>(r * r));
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      std::vector<Element>& out = F[p * r + q];
      out.assign(static_cast<std::size_t>(r * r), Element(f));
      for (int j = 0; j < r; ++j) {
        const Element x = c.multiply(c.multiply(a.module_element(p), a.module_element(j)), a.module_element(q));
        const Scalar sg = sign(f, static_cast<long>(a.module_degree(q)) * a.module_degree(j));
        const std::vector<Element> coeffs = a.to_module(x);
        for (int i = 0; i < r; ++i) out[i * r + j] = coeffs[i].scaled(sg);
      }
    }
  GradedLinearMap map{env.product.carrier(), end.carrier(), 0, {}};
  for (int pq = 0; pq < r * r; ++pq)
    for (int s = 0; s < B; ++s) {
      std::vector<Element> coeffs;
      for (const Element& e : F[pq]) coeffs.push_back(k.multiply(k.basis_element(s), e));
      map.images.push_back(end.to_carrier(coeffs));
    }
  MuReport rep{env, end, map, false, true, false, {}};
  const MapCheck mc = check_algebra_map(map);
  rep.is_iso = mc.bijective;
  if (!mc.bijective) rep.failure = "mu " + mc.failure;
  const DgAlgebra& sd = env.product.carrier_dg();
  const DgAlgebra& td = end.carrier_dg();
  for (int t = 0; t < sd.algebra().dim() && rep.is_dg_map; ++t) {
    const Element x = sd.algebra().basis_element(t);
    if (!(map.apply(sd.d(x)) == td.d(map.apply(x)))) {
      rep.is_dg_map = false;
      if (rep.failure.empty())
        rep.failure = "mu does not commute with the differentials on " + sd.algebra().name(t);
    }
  }
  rep.is_algebra_map = mc.unital && mc.multiplicative;
  if (!rep.is_algebra_map && rep.failure.empty()) rep.failure = "mu is not an algebra map: " + mc.failure;
  return rep;
}

// ---------------------------------------------------------------- separability

SeparabilityResult separability_idempotent(const AlgebraOverBase& a) {
  TensorProduct sq = tensor_dg(a, a);
  const GradedAlgebra& t = sq.product.carrier();
  const GradedAlgebra& c = a.carrier();
  const GradedAlgebra& k = a.base_algebra();
  const Field f = a.field();
  const int B = k.dim();
  const auto unknowns = t.component(0);

  // mult: b_s (m_p (x) m_q) |-> b_s m_p m_q.
  auto mult = [&](const Element& x) {
    Element out(f);
    for (const auto& [key, coef] : x.terms()) {
      const int pq = key.basis / B, s = key.basis % B;
      const int p = pq / a.rank(), q = pq % a.rank();
      const Element y = c.multiply(c.multiply(a.embed_base(k.basis_element(s)), a.module_element(p)),
                                   a.module_element(q));
      out += y.shifted(key.upow).scaled(coef);
    }
    return out;
  };
  // The bimodule condition on algebra generators implies it everywhere.
  std::vector<Element> lefts, rights;
  std::vector<int> degrees;
  for (int g : core_generators(c, 0)) {
    lefts.push_back(sq.include_left.apply(c.basis_element(g)));
    rights.push_back(sq.include_right.apply(c.basis_element(g)));
    degrees.push_back(c.degree(g));
  }
  auto residual = [&](const Element& e) {
    Vector v;
    for (std::size_t i = 0; i < lefts.size(); ++i) {
      const Vector part = t.coords(t.multiply(lefts[i], e) - t.multiply(e, rights[i]), degrees[i]);
      v.insert(v.end(), part.begin(), part.end());
    }
    const Vector m = c.coords(mult(e), 0);
    v.insert(v.end(), m.begin(), m.end());
    return v;
  };
  std::vector<Vector> cols;
  for (const Key& key : unknowns) cols.push_back(residual(Element::monomial(f, key.basis, key.upow, Scalar::one(f))));
  Vector rhs = residual(Element(f));
  {
    const Vector one = c.coords(c.one(), 0);
    std::copy(one.begin(), one.end(), rhs.end() - static_cast<long>(one.size()));
  }
  SeparabilityResult out{std::nullopt, sq, {}};
  const std::string size = std::to_string(unknowns.size()) + " unknowns in degree 0 of A(x)A";
  if (unknowns.empty()) {
    out.method = "infeasible: degree 0 of A(x)A is zero";
    return out;
  }
  auto sol = solve(Matrix::from_columns(f, rhs.size(), cols), rhs);
  if (!sol) {
    out.method = "infeasible: mult(e) = 1 and (a(x)1)e = e(1(x)a) are inconsistent (" + size + ")";
    return out;
  }
  const Element e = t.from_coords(0, *sol);
  if (residual(e) != rhs) throw ValidationError("separability idempotent failed re-verification");
  out.idempotent = e;
  out.method = "solved linear system (" + size + "), re-verified";
  return out;
}

// ---------------------------------------------------------------- derivations

DegreeWindow derivation_window(const AlgebraOverBase& a) {
  const GradedAlgebra& c = a.carrier();
  if (c.periodic()) return c.natural_window();
  const DegreeWindow w = c.natural_window();
  return {w.lo - w.hi, w.hi - w.lo};
}

DerivationReport derivation_dims(const AlgebraOverBase& a, std::optional<DegreeWindow> window) {
  const DegreeWindow w = window.value_or(derivation_window(a));
  const GradedAlgebra& c = a.carrier();
  const Field f = a.field();
  const int r = a.rank();
  std::vector<Element> m;
  for (int i = 0; i < r; ++i) m.push_back(a.module_element(i));
  DerivationReport rep;
  for (int k = w.lo; k <= w.hi; ++k) {
    // Unknown coordinates: for each module element, its image in degree |m_i| + k.
    std::vector<std::pair<int, Key>> unknowns;
    for (int i = 0; i < r; ++i)
      for (const Key& key : c.component(a.module_degree(i) + k)) unknowns.push_back({i, key});
    auto residuals = [&](const std::vector<Element>& del) {
      Vector v;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          Element lhs(f);
          for (const auto& [l, cc] : a.products(i, j)) {
            const long cdeg = a.module_degree(i) + a.module_degree(j) - a.module_degree(l);
            lhs += c.multiply(a.embed_base(cc), del[l]).scaled(sign(f, k * cdeg));
          }
          lhs -= c.multiply(del[i], m[j]);
          lhs -= c.multiply(m[i], del[j]).scaled(sign(f, static_cast<long>(k) * a.module_degree(i)));
          const Vector part = c.coords(lhs, a.module_degree(i) + a.module_degree(j) + k);
          v.insert(v.end(), part.begin(), part.end());
        }
      return v;
    };
    std::size_t rows = 0;
    std::vector<Vector> cols;
    for (const auto& [i, key] : unknowns) {
      std::vector<Element> del(static_cast<std::size_t>(r), Element(f));
      del[i] = Element::monomial(f, key.basis, key.upow, Scalar::one(f));
      cols.push_back(residuals(del));
      rows = cols.back().size();
    }
    const int all = static_cast<int>(unknowns.size() - (cols.empty() ? 0 : rank(Matrix::from_columns(f, rows, cols))));
    // Inner derivations ad_x, x in degree k, written in the unknown coordinates.
    std::vector<Vector> inner_cols;
    for (const Key& key : c.component(k)) {
      const Element x = Element::monomial(f, key.basis, key.upow, Scalar::one(f));
      Vector v;
      for (int i = 0; i < r; ++i) {
        const Element ad = c.multiply(x, m[i]) -
                           c.multiply(m[i], x).scaled(sign(f, static_cast<long>(k) * a.module_degree(i)));
        const Vector part = c.coords(ad, a.module_degree(i) + k);
        v.insert(v.end(), part.begin(), part.end());
      }
      inner_cols.push_back(std::move(v));
    }
    const int inner =
        inner_cols.empty() ? 0 : static_cast<int>(rank(Matrix::from_columns(f, unknowns.size(), inner_cols)));
    rep.degrees.push_back({k, all, inner});
    if (all != inner) rep.all_inner = false;
  }
  return rep;
}

// ---------------------------------------------------------------- cycles over cycles

DegreeWindow carrier_window(const AlgebraOverBase& a) { return a.carrier().natural_window(); }

std::optional<std::vector<Element>> express_over(const AlgebraOverBase& a, const GradedAlgebra& coeffs,
                                                 const std::function<Element(const Element&)>& embed,
                                                 const std::vector<Element>& w, const Element& x, int n) {
  const GradedAlgebra& c = a.carrier();
  const Field f = a.field();
  std::vector<Vector> cols;
  std::vector<std::pair<int, Key>> owners;
  for (int j = 0; j < static_cast<int>(w.size()); ++j) {
    const int dj = *c.degree_of(w[j]);
    for (const Key& key : coeffs.component(n - dj)) {
      cols.push_back(c.coords(c.multiply(embed(Element::monomial(f, key.basis, key.upow, Scalar::one(f))), w[j]), n));
      owners.push_back({j, key});
    }
  }
  std::vector<Element> out(w.size(), Element(f));
  const Vector target = c.coords(x, n);
  if (cols.empty()) {
    if (is_zero_vector(target)) return out;
    return std::nullopt;
  }
  auto sol = solve(Matrix::from_columns(f, target.size(), cols), target);
  if (!sol) return std::nullopt;
  for (std::size_t i = 0; i < owners.size(); ++i)
    if (!(*sol)[i].is_zero()) out[owners[i].first].add_term(owners[i].second, (*sol)[i]);
  return out;
}

namespace {

// Dimension of the span of {embed(zeta) w_j : zeta in coeffs of degree n - |w_j|} in degree n.
std::size_t span_dim(const AlgebraOverBase& a, const GradedAlgebra& coeffs,
                     const std::function<Element(const Element&)>& embed, const std::vector<Element>& w, int n,
                     std::size_t* free_count) {
  const GradedAlgebra& c = a.carrier();
  const Field f = a.field();
  RowSpace span(f, c.component(n).size());
  std::size_t count = 0;
  for (const Element& wj : w) {
    const int dj = *c.degree_of(wj);
    for (const Key& key : coeffs.component(n - dj)) {
      span.insert(c.coords(c.multiply(embed(Element::monomial(f, key.basis, key.upow, Scalar::one(f))), wj), n));
      ++count;
    }
  }
  if (free_count) *free_count = count;
  return span.dim();
}

}  // namespace

RelativeCycles relative_cycles(const AlgebraOverBase& a) {
  const GradedAlgebra& c = a.carrier();
  const Field f = a.field();
  Cycles zk = cycles(a.base());
  if (!is_graded_commutative(zk.algebra)) throw PreconditionError("the cycles of the base are not graded-commutative");
  Cycles za = cycles(a.carrier_dg());
  auto embed = [&](const Element& z) { return a.embed_base(zk.include(z)); };
  const DegreeWindow w = carrier_window(a);

  std::vector<Element> basis;
  for (int n = w.lo; n <= w.hi; ++n) {
    RowSpace span(f, c.component(n).size());
    for (const Element& wj : basis) {
      const int dj = *c.degree_of(wj);
      for (const Key& key : zk.algebra.component(n - dj))
        span.insert(c.coords(c.multiply(embed(Element::monomial(f, key.basis, key.upow, Scalar::one(f))), wj), n));
    }
    for (const Key& key : za.algebra.component(n)) {
      const Element z = za.include(Element::monomial(f, key.basis, key.upow, Scalar::one(f)));
      if (span.contains(c.coords(z, n))) continue;
      basis.push_back(z);
      for (const Key& k0 : zk.algebra.component(0))
        span.insert(c.coords(c.multiply(embed(Element::monomial(f, k0.basis, k0.upow, Scalar::one(f))), z), n));
    }
  }
  for (int n = w.lo; n <= w.hi; ++n) {
    std::size_t count = 0;
    const std::size_t dim = span_dim(a, zk.algebra, embed, basis, n, &count);
    const int target = za.algebra.component_dim(n);
    if (static_cast<int>(dim) != target || static_cast<int>(count) != target)
      throw PreconditionError("cycles are not free over the cycles of the base in degree " + std::to_string(n));
  }

  const int r = static_cast<int>(basis.size());
  AlgebraOverBase::Data d{zero_differential(zk.algebra), {}, StructureConstants(f, r), {}, {}};
  std::set<std::string> used;
  for (int i = 0; i < r; ++i) {
    std::string name = "z" + std::to_string(i + 1);
    const Element& b = basis[i];
    if (b.size() == 1 && b.terms().begin()->second.is_one()) name = to_string(c, b);
    while (used.count(name)) name += "'";
    used.insert(name);
    d.module.push_back({name, *c.degree_of(b)});
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Element x = c.multiply(basis[i], basis[j]);
      const int n = d.module[i].degree + d.module[j].degree;
      auto g = express_over(a, zk.algebra, embed, basis, x, n);
      if (!g) throw ValidationError("product of cycles outside their span (internal error)");
      for (int l = 0; l < r; ++l) d.constants.add(i, j, l, (*g)[l]);
    }
  auto g = express_over(a, zk.algebra, embed, basis, c.one(), 0);
  if (!g) throw ValidationError("unit outside the span of the cycle basis (internal error)");
  d.one = *g;
  return {AlgebraOverBase::build(std::move(d)), zk, basis};
}

AlgebraOverBase induce_from_cycles(const AlgebraOverBase& cyc, const DgAlgebra& k, const Cycles& zk) {
  if (!(cyc.base_algebra() == zk.algebra)) throw PreconditionError("induce: algebra is not over the cycles of the base");
  const int r = cyc.rank();
  AlgebraOverBase::Data d{k, cyc.module(), StructureConstants(k.field(), r), {}, {}};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& [l, c] : cyc.products(i, j)) d.constants.add(i, j, l, zk.include(c));
  for (const Element& e : cyc.one()) d.one.push_back(zk.include(e));
  return AlgebraOverBase::build(std::move(d));
}

AlphaReport alpha_round_trip(const AlgebraOverBase& a) {
  RelativeCycles rc = relative_cycles(a);
  AlgebraOverBase induced = induce_from_cycles(rc.algebra, a.base(), rc.base_cycles);
  const GradedAlgebra& k = a.base_algebra();
  GradedLinearMap alpha{induced.carrier(), a.carrier(), 0, {}};
  for (int i = 0; i < induced.rank(); ++i)
    for (int s = 0; s < k.dim(); ++s)
      alpha.images.push_back(a.carrier().multiply(a.embed_base(k.basis_element(s)), rc.basis_in_carrier[i]));
  MapCheck check = check_algebra_map(alpha, &induced.carrier_dg(), &a.carrier_dg());
  std::vector<std::pair<int, int>> ranks;
  for (int n : deciding_degrees(alpha)) ranks.push_back({n, static_cast<int>(rank(alpha.block(n)))});
  return {induced, alpha, check, ranks};
}

CyclesTensorComparison compare_cycles_of_tensor(const AlgebraOverBase& a, const AlgebraOverBase& b) {
  CyclesTensorComparison out;
  TensorProduct t = tensor_dg(a, b);
  RelativeCycles ca = relative_cycles(a);
  RelativeCycles cb = relative_cycles(b);
  TensorProduct ct = tensor_dg(ca.algebra, cb.algebra);
  const AlgebraOverBase& prod = t.product;
  const GradedAlgebra& c = prod.carrier();
  const Cycles& zk = ca.base_cycles;
  auto embed = [&](const Element& z) { return prod.embed_base(zk.include(z)); };

  std::vector<Element> w;
  for (const Element& zp : ca.basis_in_carrier)
    for (const Element& zq : cb.basis_in_carrier)
      w.push_back(c.multiply(t.include_left.apply(zp), t.include_right.apply(zq)));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!prod.carrier_dg().d(w[i]).is_zero()) {
      out.failure = "canonical image of " + ct.product.module()[i].name + " is not a cycle";
      return out;
    }
    if (c.degree_of(w[i]) != ct.product.module_degree(static_cast<int>(i))) {
      out.failure = "degree mismatch on " + ct.product.module()[i].name;
      return out;
    }
  }
  Cycles zt = cycles(prod.carrier_dg());
  const DegreeWindow win = carrier_window(prod);
  for (int n = win.lo; n <= win.hi; ++n) {
    std::size_t count = 0;
    const std::size_t dim = span_dim(prod, zk.algebra, embed, w, n, &count);
    const auto target = static_cast<std::size_t>(zt.algebra.component_dim(n));
    if (dim != target || count != target) {
      out.failure = "canonical images do not form a basis of the cycles in degree " + std::to_string(n);
      return out;
    }
  }
  const int r = ct.product.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Element x = c.multiply(w[i], w[j]);
      auto g = express_over(prod, zk.algebra, embed, w, x, ct.product.module_degree(i) + ct.product.module_degree(j));
      if (!g) {
        out.failure = "product outside the span of the canonical images";
        return out;
      }
      for (int l = 0; l < r; ++l)
        if (!((*g)[l] == ct.product.constant(i, j, l))) {
          const auto& names = ct.product.module();
          out.failure = "structure constant mismatch at " + names[i].name + "*" + names[j].name + " -> " + names[l].name;
          return out;
        }
      ++out.compared_products;
    }
  auto g = express_over(prod, zk.algebra, embed, w, c.one(), 0);
  if (!g || *g != ct.product.one()) {
    out.failure = "unit mismatch";
    return out;
  }
  out.ok = true;
  return out;
}

AlgebraOverBase dgbr1_product(const AlgebraOverBase& a, const AlgebraOverBase& b) {
  RelativeCycles ca = relative_cycles(a);
  RelativeCycles cb = relative_cycles(b);
  TensorProduct ct = tensor_dg(ca.algebra, cb.algebra);
  return induce_from_cycles(ct.product, a.base(), ca.base_cycles);
}

}  // namespace dgb
