#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgbrauer/relative.hpp"
#include "dgbrauer/structure.hpp"

namespace dgb {

/// Graded-Azumaya checks of a dg-algebra over a dg base, at the level of the
/// algebra itself (second kind) and of its cycles over the base cycles (first kind).
struct AzumayaReport {
  Verdict faithfully_projective;
  bool mu_iso = false;
  bool mu_dg_map = false;
  std::string mu_failure;
  bool graded_central = false;
  std::string central_detail;
  Verdict graded_separable;
  std::optional<Element> idempotent;  // in the carrier of A (x)_K A
  Verdict kind_I;
  Verdict kind_II;
  /// (mu iso and central) agrees with (separable and central).
  bool cross_check = false;
  DegreeWindow window;
};

AzumayaReport azumaya_report(const AlgebraOverBase& a);

/// Z_gr(carrier) equals nu(K) in every degree of the carrier window.
bool graded_central_over_base(const AlgebraOverBase& a, std::string* detail = nullptr);

/// Second-kind product: the tensor product over the base.
AlgebraOverBase dgbr2_product(const AlgebraOverBase& a, const AlgebraOverBase& b);

/// Forget the differentials of A and of the base.
AlgebraOverBase psi_forget(const AlgebraOverBase& a);
/// A with the zero differential; the base differential must vanish.
AlgebraOverBase phi_inflate(const AlgebraOverBase& a);
/// psi_forget(phi_inflate(a)) has the same carrier table as a.
bool psi_phi_identity(const AlgebraOverBase& a);

struct BrauerWitness {
  int rank = 0;
  std::vector<int> shifts;      // degrees of the module basis, largest first, normalized to 0
  std::vector<Element> module;  // homogeneous K-basis of A e inside the carrier of A
  Element idempotent;
  AlgebraOverBase end;          // End_K of the free module with those degrees
  GradedLinearMap identification;  // carrier of A -> carrier of end
};

struct WitnessSearch {
  std::optional<BrauerWitness> witness;
  std::string outcome;  // "witness found ..." or "no witness found within bounds ..."
  std::size_t candidates = 0;
};

/// Looks for A = End_K(P) with P free of rank <= max_rank and shifts bounded by
/// shift_bound, through a rank-one idempotent of A_0. Over finite fields the
/// idempotents of the degree-0 component are enumerated (dimension <= 9);
/// over Q only `candidate` is tried.
WitnessSearch end_witness_search(const AlgebraOverBase& a, int max_rank, int shift_bound,
                                 std::optional<Element> candidate = std::nullopt);

/// Tries e as the rank-one idempotent of a witness.
std::optional<BrauerWitness> witness_from_idempotent(const AlgebraOverBase& a, const Element& e, int shift_bound);

}  // namespace dgb
