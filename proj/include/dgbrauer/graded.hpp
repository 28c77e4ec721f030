#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dgbrauer/linalg.hpp"
#include "dgbrauer/scalar.hpp"

namespace dgb {

/// Raised when a presentation, differential or construction violates an
/// algebraic invariant. what() names the witness.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for inputs that are well-formed but outside what an operation
/// supports (window too small, non-free module, bounds exceeded...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A monomial b * u^k: core basis index and power of the periodic unit.
struct Key {
  int basis = 0;
  int upow = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

/// Finite linear combination of monomials b * u^k, stored canonically
/// (sorted, no zero coefficients).
class Element {
 public:
  explicit Element(Field f) : field_(f) {}
  static Element monomial(Field f, int basis, int upow, Scalar c);
  static Element basis(Field f, int b) { return monomial(f, b, 0, Scalar::one(f)); }

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coeff(Key k) const;

  void add_term(Key k, const Scalar& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  Element scaled(const Scalar& c) const;
  /// Multiplies by u^k (shifts every u-power).
  Element shifted(int k) const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  std::map<Key, Scalar> terms_;
};

struct BasisElement {
  std::string name;
  int degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Raw, unvalidated homogeneous structure-constant presentation. Missing
/// products are zero.
struct GradedPresentation {
  Field field = Field::rationals();
  std::vector<BasisElement> basis;
  /// Degree of the formal central unit u; nonzero and even when present.
  std::optional<int> unit_degree;
  /// Products of core basis pairs; absent pairs are zero.
  std::map<std::pair<int, int>, Element> table;
  /// The multiplicative identity (usually a single basis element).
  Element one{Field::rationals()};

  int index_of(const std::string& name) const;
};

/// Inclusive degree range.
struct DegreeWindow {
  int lo = 0;
  int hi = -1;
  int size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool contains(int n) const { return lo <= n && n <= hi; }
  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

/// A validated graded algebra. Immutable; copies share state.
class GradedAlgebra {
 public:
  Field field() const { return impl_->pres.field; }
  int dim() const { return static_cast<int>(impl_->pres.basis.size()); }
  const std::vector<BasisElement>& basis() const { return impl_->pres.basis; }
  const std::string& name(int i) const { return impl_->pres.basis[i].name; }
  int degree(int i) const { return impl_->pres.basis[i].degree; }
  int degree(Key k) const { return degree(k.basis) + unit_degree_or_zero() * k.upow; }
  int index(const std::string& name) const;
  std::optional<int> unit_degree() const { return impl_->pres.unit_degree; }
  int unit_degree_or_zero() const { return impl_->pres.unit_degree.value_or(0); }
  bool periodic() const { return impl_->pres.unit_degree.has_value(); }
  /// |p| for periodic algebras, 0 otherwise.
  int period() const;
  const Element& one() const { return impl_->pres.one; }
  const Element& product(int i, int j) const { return impl_->table[i * dim() + j]; }
  const GradedPresentation& presentation() const { return impl_->pres; }
  /// Warnings produced during validation (e.g. defaulted table entries).
  const std::vector<std::string>& lint() const { return impl_->lint; }

  Element multiply(const Element& x, const Element& y) const;
  Element basis_element(int i) const { return Element::basis(field(), i); }

  /// Degree of a homogeneous element; nullopt for zero, throws for
  /// inhomogeneous input.
  std::optional<int> degree_of(const Element& x) const;
  bool is_homogeneous(const Element& x) const;

  /// Monomials spanning the degree-n component, in core order.
  std::vector<Key> component(int n) const;
  int component_dim(int n) const { return static_cast<int>(component(n).size()); }
  /// Coordinates of a degree-n element in component(n).
  Vector coords(const Element& x, int n) const;
  Element from_coords(int n, const Vector& v) const;
  /// Multiplies a homogeneous element by the u-power that moves its degree to
  /// the representative degree in `window` (periodic algebras only).
  std::pair<Element, int> reduce_into(const Element& x, int degree, const DegreeWindow& w) const;

  /// One full period ending or starting at 0 ([p+1,0] for p < 0, [0,p-1]
  /// for p > 0) when periodic, otherwise the support of the core.
  DegreeWindow natural_window() const;
  bool is_concentrated_in_degree_zero() const;

  /// Structural identity of presentations (same names, degrees, table).
  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  struct Impl {
    GradedPresentation pres;
    std::vector<Element> table;
    std::map<std::string, int> names;
    std::vector<std::string> lint;
  };
  explicit GradedAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend GradedAlgebra validate_presentation(const GradedPresentation& raw);
};

/// Checks degree additivity, associativity on all core triples, the unit laws
/// and periodic-unit bookkeeping. Throws ValidationError naming a witness.
GradedAlgebra validate_presentation(const GradedPresentation& raw);

Element multiply(const GradedAlgebra& a, const Element& x, const Element& y);

/// Opposite algebra: b *op a = (-1)^{|a||b|} a b.
GradedAlgebra opposite(const GradedAlgebra& a);

/// Core indices generating the algebra (with 1, modulo powers of u), grown
/// greedily and closed under products that are single terms. Algebras of
/// dimension at most `full_below` get the whole core.
std::vector<int> core_generators(const GradedAlgebra& a, int full_below = 64);

/// Positive-characteristic-safe parity of an integer degree.
inline int parity(int n) { return n & 1; }

/// Graded commutator sign test: ab == (-1)^{|a||b|} ba on all core pairs.
bool is_graded_commutative(const GradedAlgebra& a);
bool is_commutative(const GradedAlgebra& a);

/// Human-readable rendering like "2*T + u^-1*1".
std::string to_string(const GradedAlgebra& a, const Element& x);

/// Presentation builder used by constructions and tests.
class PresentationBuilder {
 public:
  explicit PresentationBuilder(Field f) { pres_.field = f; pres_.one = Element(f); }
  PresentationBuilder& unit_degree(int p) {
    pres_.unit_degree = p;
    return *this;
  }
  int add(const std::string& name, int degree);
  /// Sets l*r = c * out * u^upow (accumulating).
  PresentationBuilder& set(int l, int r, int out, int upow, Scalar c);
  PresentationBuilder& set(int l, int r, int out, int upow, long c);
  PresentationBuilder& set_product(int l, int r, Element e);
  PresentationBuilder& one(int b);
  PresentationBuilder& one(Element e);
  Field field() const { return pres_.field; }
  const GradedPresentation& raw() const { return pres_; }
  GradedAlgebra build() const { return validate_presentation(pres_); }

 private:
  GradedPresentation pres_;
};

}  // namespace dgb
