#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgbrauer/dg.hpp"
#include "dgbrauer/maps.hpp"

namespace dgb {

/// Sparse table of K-valued structure constants c_ij^l.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(Field f, int rank)
      : rank_(rank), rows_(static_cast<std::size_t>(rank) * rank), zero_(f) {}

  int rank() const { return rank_; }
  const Element& get(int i, int j, int l) const;
  /// Nonzero c_ij^l keyed by l.
  const std::map<int, Element>& row(int i, int j) const { return rows_[i * rank_ + j]; }
  void add(int i, int j, int l, const Element& c);
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  int rank_ = 0;
  std::vector<std::map<int, Element>> rows_;
  Element zero_{Field::rationals()};
};

/// A dg-algebra that is free over a dg base K on a homogeneous module basis
/// m_0..m_{r-1}. Structure constants, the unit and the differential are
/// K-valued:
///   m_i m_j = sum_l c_ij^l m_l,  1 = sum_l o_l m_l,  d(m_i) = sum_l delta_i^l m_l.
/// Base elements act on the left and pass module elements with the Koszul sign.
/// The carrier is the same algebra presented over the ground field on the
/// basis b_s m_i (b_s the core basis of K); it is validated as an ordinary
/// dg-algebra, so inconsistent data is rejected with a witness.
class AlgebraOverBase {
 public:
  struct Data {
    DgAlgebra base;
    std::vector<BasisElement> module;
    StructureConstants constants;
    std::vector<Element> one;        // r entries
    std::vector<Element> diff;       // index i*r + l; empty means zero
  };

  static AlgebraOverBase build(Data data);

  const DgAlgebra& base() const { return data_.base; }
  const GradedAlgebra& base_algebra() const { return data_.base.algebra(); }
  Field field() const { return base_algebra().field(); }
  int rank() const { return static_cast<int>(data_.module.size()); }
  const std::vector<BasisElement>& module() const { return data_.module; }
  int module_degree(int i) const { return data_.module[i].degree; }
  const Element& constant(int i, int j, int l) const { return data_.constants.get(i, j, l); }
  const std::map<int, Element>& products(int i, int j) const { return data_.constants.row(i, j); }
  const std::vector<Element>& one() const { return data_.one; }
  const Element& diff(int i, int l) const { return data_.diff[i * rank() + l]; }
  bool has_zero_module_differential() const;
  const Data& data() const { return data_; }

  const GradedAlgebra& carrier() const { return carrier_->algebra(); }
  const DgAlgebra& carrier_dg() const { return *carrier_; }

  /// Carrier index of b_s m_i.
  int carrier_index(int base_basis, int module_index) const;
  /// k * 1_A.
  Element embed_base(const Element& k) const;
  /// 1_K * m_i.
  Element module_element(int i) const;
  /// sum_i coeffs[i] m_i.
  Element to_carrier(const std::vector<Element>& coeffs) const;
  /// Inverse of to_carrier.
  std::vector<Element> to_module(const Element& x) const;
  /// nu(K) lies in the graded centre of the carrier (checked on core pairs).
  bool base_is_graded_central() const;

 private:
  explicit AlgebraOverBase(Data d) : data_(std::move(d)) {}
  Data data_;
  std::optional<DgAlgebra> carrier_;
};

/// A (K-linear) over the ground field tensored up to K. A periodic A needs a
/// periodic K with the same unit degree; A's unit is identified with K's.
AlgebraOverBase base_change(const DgAlgebra& a, const DgAlgebra& base);
AlgebraOverBase over_itself(const DgAlgebra& k);
/// A over its ground field, or over F[u, u^-1] when A is periodic.
AlgebraOverBase over_field(const DgAlgebra& a);
/// The ground field (or F[u, u^-1] with |u| = p) with zero differential.
DgAlgebra ground_base(Field f, std::optional<int> unit_degree = std::nullopt);

/// m_i *op m_j = (-1)^{|m_i||m_j|} m_j m_i.
AlgebraOverBase relative_opposite(const AlgebraOverBase& a);

struct TensorProduct {
  AlgebraOverBase product;
  GradedLinearMap include_left;   // a |-> a (x) 1
  GradedLinearMap include_right;  // b |-> 1 (x) b
};

/// Koszul tensor product over a common base; module basis m_p (x) n_q.
TensorProduct tensor_dg(const AlgebraOverBase& a, const AlgebraOverBase& b);

struct FreeDgModule {
  DgAlgebra base;
  std::vector<BasisElement> basis;
  /// delta(e_j) = sum_p diff[j*n + p] e_p; empty means zero.
  std::vector<Element> diff;
};

/// End_K(M) on the matrix units E_ij (e_j |-> e_i, degree |e_i| - |e_j|) with
/// d_Hom(f) = delta f - (-1)^{|f|} f delta.
AlgebraOverBase end_dg(const FreeDgModule& m);
/// The free module underlying a, with its differential.
FreeDgModule underlying_module(const AlgebraOverBase& a);

struct MuReport {
  TensorProduct enveloping;   // A (x)_K A^op
  AlgebraOverBase end;        // End_K(A)
  GradedLinearMap map;
  bool is_iso = false;
  bool is_dg_map = false;
  bool is_algebra_map = false;
  std::string failure;        // e.g. "mu not surjective in degree 0"
};

/// mu(a (x) b)(x) = (-1)^{|b||x|} a x b.
MuReport mu_map(const AlgebraOverBase& a);

/// e in (A (x)_K A)_0 with (a (x) 1) e = e (1 (x) a) and mult(e) = 1.
struct SeparabilityResult {
  std::optional<Element> idempotent;  // in the carrier of `square`
  TensorProduct square;
  std::string method;
};
SeparabilityResult separability_idempotent(const AlgebraOverBase& a);

struct DerivationDegree {
  int degree = 0;
  int all = 0;
  int inner = 0;
};
struct DerivationReport {
  std::vector<DerivationDegree> degrees;
  bool all_inner = true;
};
/// K-linear graded derivations per degree and the inner ones among them.
DerivationReport derivation_dims(const AlgebraOverBase& a, std::optional<DegreeWindow> window = std::nullopt);
/// Degrees of derivations that can be nonzero (one period when periodic).
DegreeWindow derivation_window(const AlgebraOverBase& a);

/// ker(d_A) as an algebra over ker(d_K) (with zero differential), found by a
/// greedy homogeneous basis and a freeness check.
struct RelativeCycles {
  AlgebraOverBase algebra;
  Cycles base_cycles;
  std::vector<Element> basis_in_carrier;  // the chosen basis, inside A's carrier
};
/// Throws PreconditionError when ker(d_A) is not free over ker(d_K).
RelativeCycles relative_cycles(const AlgebraOverBase& a);

/// C (x)_{ker d_K} K with differential id (x) d_K. `zk` must be cycles(K).
AlgebraOverBase induce_from_cycles(const AlgebraOverBase& c, const DgAlgebra& k, const Cycles& zk);

struct AlphaReport {
  AlgebraOverBase induced;
  GradedLinearMap alpha;  // carrier of induced -> carrier of A
  MapCheck check;
  std::vector<std::pair<int, int>> ranks;  // (degree, rank of alpha) over the deciding window
};
/// ker(d_A) (x) K -> A, a (x) x |-> a x.
AlphaReport alpha_round_trip(const AlgebraOverBase& a);

/// Cycles of A (x) B against cycles(A) (x) cycles(B) over ker(d_K): each
/// z_p (x) z'_q must be a cycle, they must form a basis of the cycles of the
/// product, and their structure constants must agree exactly.
struct CyclesTensorComparison {
  bool ok = false;
  std::string failure;
  int compared_products = 0;
};
CyclesTensorComparison compare_cycles_of_tensor(const AlgebraOverBase& a, const AlgebraOverBase& b);

/// Product in the first-kind group: (ker d_A (x) ker d_B) (x)_{ker d_K} K.
AlgebraOverBase dgbr1_product(const AlgebraOverBase& a, const AlgebraOverBase& b);

/// Writes x (homogeneous of degree n in the carrier of `a`) as
/// sum_j gamma_j w_j with gamma_j in the algebra `coeffs`, embedded in the base
/// of `a` through `embed`. Returns nullopt when impossible.
std::optional<std::vector<Element>> express_over(const AlgebraOverBase& a, const GradedAlgebra& coeffs,
                                                 const std::function<Element(const Element&)>& embed,
                                                 const std::vector<Element>& w, const Element& x, int n);

/// Window of degrees deciding per-degree statements about the carrier.
DegreeWindow carrier_window(const AlgebraOverBase& a);

}  // namespace dgb
