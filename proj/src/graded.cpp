#include "dgbrauer/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dgb {

// ---------------------------------------------------------------- Element

Element Element::monomial(Field f, int basis, int upow, Scalar c) {
  Element e(f);
  e.add_term({basis, upow}, c);
  return e;
}

Scalar Element::coeff(Key k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(Key k, const Scalar& c) {
  if (!(c.field() == field_)) throw FieldMismatch("element term over a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Element Element::operator-() const {
  Element r(field_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(field_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

Element Element::shifted(int s) const {
  if (s == 0) return *this;
  Element r(field_);
  for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.basis, k.upow + s}, v);
  return r;
}

// ---------------------------------------------------------------- presentation

int GradedPresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].name == name) return static_cast<int>(i);
  return -1;
}

int PresentationBuilder::add(const std::string& name, int degree) {
  pres_.basis.push_back({name, degree});
  return static_cast<int>(pres_.basis.size()) - 1;
}

PresentationBuilder& PresentationBuilder::set(int l, int r, int out, int upow, Scalar c) {
  auto [it, _] = pres_.table.try_emplace({l, r}, Element(pres_.field));
  it->second.add_term({out, upow}, c);
  return *this;
}

PresentationBuilder& PresentationBuilder::set(int l, int r, int out, int upow, long c) {
  return set(l, r, out, upow, Scalar::from_int(pres_.field, c));
}

PresentationBuilder& PresentationBuilder::set_product(int l, int r, Element e) {
  pres_.table.insert_or_assign({l, r}, std::move(e));
  return *this;
}

PresentationBuilder& PresentationBuilder::one(int b) {
  pres_.one = Element::basis(pres_.field, b);
  return *this;
}

PresentationBuilder& PresentationBuilder::one(Element e) {
  pres_.one = std::move(e);
  return *this;
}

// ---------------------------------------------------------------- algebra

int GradedAlgebra::index(const std::string& n) const {
  auto it = impl_->names.find(n);
  if (it == impl_->names.end()) throw std::out_of_range("unknown basis element '" + n + "'");
  return it->second;
}

int GradedAlgebra::period() const {
  int p = unit_degree_or_zero();
  return p < 0 ? -p : p;
}

Element GradedAlgebra::multiply(const Element& x, const Element& y) const {
  if (!(x.field() == field()) || !(y.field() == field()))
    throw FieldMismatch("multiplying elements over a different field");
  Element out(field());
  for (const auto& [kx, cx] : x.terms()) {
    if (kx.basis < 0 || kx.basis >= dim()) throw std::out_of_range("foreign basis index");
    for (const auto& [ky, cy] : y.terms()) {
      if (ky.basis < 0 || ky.basis >= dim()) throw std::out_of_range("foreign basis index");
      const Element& p = product(kx.basis, ky.basis);
      if (p.is_zero()) continue;
      const Scalar c = cx * cy;
      const int s = kx.upow + ky.upow;
      for (const auto& [kp, cp] : p.terms()) out.add_term({kp.basis, kp.upow + s}, cp * c);
    }
  }
  return out;
}

Element multiply(const GradedAlgebra& a, const Element& x, const Element& y) {
  return a.multiply(x, y);
}

std::optional<int> GradedAlgebra::degree_of(const Element& x) const {
  std::optional<int> d;
  for (const auto& [k, c] : x.terms()) {
    int e = degree(k);
    if (d && *d != e) throw ValidationError("element " + to_string(*this, x) + " is not homogeneous");
    d = e;
  }
  return d;
}

bool GradedAlgebra::is_homogeneous(const Element& x) const {
  std::optional<int> d;
  for (const auto& [k, c] : x.terms()) {
    int e = degree(k);
    if (d && *d != e) return false;
    d = e;
  }
  return true;
}

std::vector<Key> GradedAlgebra::component(int n) const {
  std::vector<Key> out;
  const int p = unit_degree_or_zero();
  for (int b = 0; b < dim(); ++b) {
    const int diff = n - degree(b);
    if (p == 0) {
      if (diff == 0) out.push_back({b, 0});
    } else if (diff % p == 0) {
      out.push_back({b, diff / p});
    }
  }
  return out;
}

Vector GradedAlgebra::coords(const Element& x, int n) const {
  auto comp = component(n);
  Vector v(comp.size(), Scalar::zero(field()));
  for (const auto& [k, c] : x.terms()) {
    auto it = std::find(comp.begin(), comp.end(), k);
    if (it == comp.end())
      throw ValidationError("term of " + to_string(*this, x) + " lies outside degree " +
                            std::to_string(n));
    v[it - comp.begin()] = c;
  }
  return v;
}

Element GradedAlgebra::from_coords(int n, const Vector& v) const {
  auto comp = component(n);
  if (comp.size() != v.size()) throw DimensionMismatch("coordinate vector length mismatch");
  Element e(field());
  for (std::size_t i = 0; i < comp.size(); ++i) e.add_term(comp[i], v[i]);
  return e;
}

std::pair<Element, int> GradedAlgebra::reduce_into(const Element& x, int deg,
                                                    const DegreeWindow& w) const {
  if (w.contains(deg)) return {x, deg};
  const int p = unit_degree_or_zero();
  if (p == 0) return {x, deg};
  const int per = period();
  int target = w.lo + (((deg - w.lo) % per) + per) % per;
  if (!w.contains(target)) return {x, deg};
  return {x.shifted((target - deg) / p), target};
}

DegreeWindow GradedAlgebra::natural_window() const {
  if (periodic()) {
    const int p = unit_degree_or_zero();
    return p < 0 ? DegreeWindow{p + 1, 0} : DegreeWindow{0, p - 1};
  }
  if (dim() == 0) return {0, 0};
  int lo = degree(0), hi = degree(0);
  for (int b = 1; b < dim(); ++b) {
    lo = std::min(lo, degree(b));
    hi = std::max(hi, degree(b));
  }
  return {lo, hi};
}

bool GradedAlgebra::is_concentrated_in_degree_zero() const {
  if (periodic()) return false;
  for (int b = 0; b < dim(); ++b)
    if (degree(b) != 0) return false;
  return true;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& pa = a.impl_->pres;
  const auto& pb = b.impl_->pres;
  return pa.field == pb.field && pa.basis == pb.basis && pa.unit_degree == pb.unit_degree &&
         pa.one == pb.one && a.impl_->table == b.impl_->table;
}

std::string to_string(const GradedAlgebra& a, const Element& x) {
  if (x.is_zero()) return "0";
  const Field f = a.field();
  std::optional<int> unit_basis;
  if (a.one().size() == 1 && a.one().terms().begin()->first.upow == 0 &&
      a.one().terms().begin()->second.is_one())
    unit_basis = a.one().terms().begin()->first.basis;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    const bool negative = f.is_rationals() ? c.rational() < 0 : false;
    const Scalar mag = negative ? -c : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const std::string upow = k.upow == 1 ? "u" : "u^" + std::to_string(k.upow);
    std::string mono;
    if (k.upow != 0 && unit_basis && k.basis == *unit_basis)
      mono = upow;
    else
      mono = (k.basis >= 0 && k.basis < a.dim() ? a.name(k.basis) : "?" + std::to_string(k.basis)) +
             (k.upow ? "*" + upow : std::string());
    if (!mag.is_one()) os << mag.to_string() << "*";
    os << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------- validation

GradedAlgebra validate_presentation(const GradedPresentation& raw) {
  auto impl = std::make_shared<GradedAlgebra::Impl>();
  impl->pres = raw;
  const Field f = raw.field;
  const int n = static_cast<int>(raw.basis.size());
  if (n == 0) throw ValidationError("empty core basis");
  for (int i = 0; i < n; ++i) {
    if (raw.basis[i].name.empty()) throw ValidationError("empty basis name at index " + std::to_string(i));
    if (!impl->names.emplace(raw.basis[i].name, i).second)
      throw ValidationError("duplicate basis name '" + raw.basis[i].name + "'");
  }
  if (raw.unit_degree) {
    if (*raw.unit_degree == 0 || (*raw.unit_degree & 1))
      throw ValidationError("unit_degree must be a nonzero even integer, got " +
                            std::to_string(*raw.unit_degree));
  }
  const int p = raw.unit_degree.value_or(0);
  auto check_terms = [&](const Element& e, const std::string& what, std::optional<int> expect) {
    if (!(e.field() == f)) throw ValidationError(what + ": coefficients over a different field");
    for (const auto& [k, c] : e.terms()) {
      if (k.basis < 0 || k.basis >= n) throw ValidationError(what + ": unknown basis index");
      if (p == 0 && k.upow != 0)
        throw ValidationError(what + ": u-power " + std::to_string(k.upow) +
                              " without a periodic unit");
      const int d = raw.basis[k.basis].degree + p * k.upow;
      if (expect && d != *expect)
        throw ValidationError("degree violation in " + what + ": term " + raw.basis[k.basis].name +
                              (k.upow ? "*u^" + std::to_string(k.upow) : std::string()) +
                              " has degree " + std::to_string(d) + ", expected " +
                              std::to_string(*expect));
    }
  };
  impl->table.assign(static_cast<std::size_t>(n) * n, Element(f));
  std::size_t missing = 0;
  std::string first_missing;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = raw.table.find({i, j});
      if (it == raw.table.end()) {
        if (missing++ == 0) first_missing = raw.basis[i].name + "*" + raw.basis[j].name;
        continue;
      }
      const std::string what = "product " + raw.basis[i].name + "*" + raw.basis[j].name;
      check_terms(it->second, what, raw.basis[i].degree + raw.basis[j].degree);
      impl->table[i * n + j] = it->second;
    }
  for (const auto& [lr, e] : raw.table)
    if (lr.first < 0 || lr.first >= n || lr.second < 0 || lr.second >= n)
      throw ValidationError("table entry refers to an unknown basis index");
  if (missing)
    impl->lint.push_back(std::to_string(missing) + " product(s) unspecified and defaulted to 0 (first: " +
                         first_missing + ")");
  if (raw.one.is_zero()) throw ValidationError("missing or zero unit element");
  check_terms(raw.one, "unit", 0);

  GradedAlgebra a(impl);
  // Unit laws.
  for (int b = 0; b < n; ++b) {
    Element e = a.basis_element(b);
    if (!(a.multiply(raw.one, e) == e) || !(a.multiply(e, raw.one) == e))
      throw ValidationError("invalid unit: one*" + raw.basis[b].name + " or " + raw.basis[b].name +
                            "*one differs from " + raw.basis[b].name);
  }
  // Associativity on core triples with the middle factor in a generating set:
  // (xg)y = x(gy) for all x, y and generators g implies associativity.
  const std::vector<int> middles = core_generators(a);
  for (int i = 0; i < n; ++i)
    for (int j : middles) {
      const Element& ij = a.product(i, j);
      for (int k = 0; k < n; ++k) {
        if (ij.is_zero() && a.product(j, k).is_zero()) continue;
        Element left = a.multiply(ij, a.basis_element(k));
        Element right = a.multiply(a.basis_element(i), a.product(j, k));
        if (!(left == right))
          throw ValidationError("non-associative table: (" + raw.basis[i].name + "*" +
                                raw.basis[j].name + ")*" + raw.basis[k].name + " = " +
                                to_string(a, left) + " but " + raw.basis[i].name + "*(" +
                                raw.basis[j].name + "*" + raw.basis[k].name + ") = " +
                                to_string(a, right));
      }
    }
  return a;
}

std::vector<int> core_generators(const GradedAlgebra& a, int full_below) {
  const int n = a.dim();
  std::vector<int> gens;
  if (n <= full_below) {
    for (int j = 0; j < n; ++j) gens.push_back(j);
    return gens;
  }
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int b = 0; b < n; ++b) {
    if (reached[b]) continue;
    gens.push_back(b);
    reached[b] = 1;
    queue.clear();
    for (int x = 0; x < n; ++x)
      if (reached[x]) queue.push_back(x);
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      for (int g : gens) {
        const Element& y = a.product(x, g);
        if (y.size() != 1) continue;
        const int t = y.terms().begin()->first.basis;
        if (!reached[t]) {
          reached[t] = 1;
          queue.push_back(t);
        }
      }
    }
  }
  return gens;
}

GradedAlgebra opposite(const GradedAlgebra& a) {
  GradedPresentation op = a.presentation();
  op.table.clear();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Element& ji = a.product(j, i);
      if (ji.is_zero()) continue;
      op.table.emplace(std::make_pair(i, j),
                       koszul(a.degree(i), a.degree(j)) < 0 ? -ji : ji);
    }
  // Fill zero entries explicitly so no lint is produced for them.
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) op.table.try_emplace({i, j}, Element(a.field()));
  return validate_presentation(op);
}

bool is_graded_commutative(const GradedAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) {
      Element ba = a.product(j, i);
      if (koszul(a.degree(i), a.degree(j)) < 0) ba = -ba;
      if (!(a.product(i, j) == ba)) return false;
    }
  return true;
}

bool is_commutative(const GradedAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (!(a.product(i, j) == a.product(j, i))) return false;
  return true;
}

}  // namespace dgb
