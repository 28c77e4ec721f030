#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgbrauer/classification.hpp"
#include "dgbrauer/dg.hpp"
#include "dgbrauer/graded.hpp"

namespace fx {

using namespace dgb;

inline const Field Q = Field::rationals();

inline Element mono(Field f, int b, int upow = 0, long c = 1) {
  return Element::monomial(f, b, upow, Scalar::from_int(f, c));
}

inline GradedAlgebra table(Field f, const std::vector<std::pair<std::string, int>>& basis,
                           const std::function<Element(int, int)>& prod, std::optional<int> p = std::nullopt,
                           std::optional<Element> one = std::nullopt) {
  PresentationBuilder b(f);
  if (p) b.unit_degree(*p);
  for (const auto& [n, d] : basis) b.add(n, d);
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set_product(i, j, prod(i, j));
  if (one) b.one(*one);
  else b.one(0);
  return b.build();
}

// Quaternion algebra (a,b) on 1, i, j, k = ij, all in degree 0.
inline GradedAlgebra quaternions(Field f, long a = -1, long b = -1) {
  // products of i^x j^y with i^2 = a, j^2 = b, ji = -ij
  return table(f, {{"1", 0}, {"i", 0}, {"j", 0}, {"k", 0}}, [=](int l, int r) {
    const int xi = l & 1, yi = l >> 1, xj = r & 1, yj = r >> 1;
    long c = 1;
    if (yi && xj) c = -c;  // move j of the left past i of the right
    if (xi && xj) c *= a;
    if (yi && yj) c *= b;
    return mono(f, ((xi ^ xj) | ((yi ^ yj) << 1)), 0, c);
  });
}

// Matrix units E_ij with |E_ij| = s_i - s_j.
inline GradedAlgebra matrix_units(Field f, const std::vector<int>& shifts) {
  const int n = static_cast<int>(shifts.size());
  std::vector<std::pair<std::string, int>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      basis.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), shifts[i] - shifts[j]});
  Element one(f);
  for (int i = 0; i < n; ++i) one.add_term({i * n + i, 0}, Scalar::one(f));
  return table(
      f, basis,
      [=](int l, int r) { return (l % n == r / n) ? mono(f, (l / n) * n + r % n) : Element(f); }, std::nullopt,
      one);
}

// 2x2 matrices graded by |e21| = -1, |e12| = 1 with d = [e12, -]:
// d(e11) = -e12, d(e22) = e12, d(e21) = 1, d(e12) = 0. Acyclic, not dg-division.
inline DgAlgebra acyclic_matrix(Field f) {
  GradedAlgebra a = matrix_units(f, {0, -1});
  Element one = a.one();
  return validate_differential(a, std::vector<Element>{mono(f, 1, 0, -1), Element(f), one, mono(f, 1)});
}

inline GradedAlgebra dual_numbers(Field f) {
  return table(f, {{"1", 0}, {"x", 0}}, [=](int l, int r) {
    if (l == 0) return mono(f, r);
    if (r == 0) return mono(f, l);
    return Element(f);
  });
}

// F x F on orthogonal idempotents.
inline GradedAlgebra split_pair(Field f) {
  Element one = mono(f, 0) + mono(f, 1);
  return table(
      f, {{"e1", 0}, {"e2", 0}}, [=](int l, int r) { return l == r ? mono(f, l) : Element(f); }, std::nullopt, one);
}

// F[i]/(i^2 - c) in degree 0.
inline GradedAlgebra quadratic(Field f, long c) {
  return table(f, {{"1", 0}, {"i", 0}}, [=](int l, int r) {
    if (l == 0) return mono(f, r);
    if (r == 0) return mono(f, l);
    return mono(f, 0, 0, c);
  });
}

// (case 4a) tensor (F x F): basis e1, e2, Ye1, Ye2 with d(Ye_i) = e_i.
inline DgAlgebra planted_ideal(Field f) {
  Element one = mono(f, 0) + mono(f, 1);
  GradedAlgebra a = table(
      f, {{"e1", 0}, {"e2", 0}, {"Ye1", -1}, {"Ye2", -1}},
      [=](int l, int r) {
        if ((l & 1) != (r & 1)) return Element(f);
        if (l >= 2 && r >= 2) return Element(f);
        return mono(f, (l & 1) + ((l >= 2 || r >= 2) ? 2 : 0));
      },
      std::nullopt, one);
  return validate_differential(a, std::vector<Element>{Element(f), Element(f), mono(f, 0), mono(f, 1)});
}

inline DgAlgebra tmpl(CaseLabel c, Field f, std::optional<int> t = std::nullopt) {
  return make_template({c, f, t});
}

struct Named {
  std::string name;
  DgAlgebra algebra;
  bool division;
};

// Small dg-algebras over F_2 and F_3 with known dg-division status.
inline std::vector<Named> small_fixtures() {
  std::vector<Named> out;
  for (long p : {2L, 3L}) {
    const Field f = Field::prime(p);
    const std::string s = "/F" + std::to_string(p);
    out.push_back({"case1" + s, tmpl(CaseLabel::c1, f), true});
    out.push_back({"case2(t=2)" + s, tmpl(CaseLabel::c2, f, 2), true});
    out.push_back({"case2(t=1)" + s, tmpl(CaseLabel::c2, f, 1), true});
    out.push_back({"case3" + s, tmpl(CaseLabel::c3, f), true});
    out.push_back({"case4a" + s, tmpl(CaseLabel::c4a, f), true});
    out.push_back({"case4b(t=2)" + s, tmpl(CaseLabel::c4b, f, 2), true});
    out.push_back({"case5a" + s, tmpl(CaseLabel::c5a, f), true});
    out.push_back({"case5b(t=1)" + s, tmpl(CaseLabel::c5b, f, 1), true});
    out.push_back({"dual numbers" + s, zero_differential(dual_numbers(f)), false});
    out.push_back({"acyclic 2x2 matrices" + s, acyclic_matrix(f), false});
    out.push_back({"planted (4a)x(FxF)" + s, planted_ideal(f), false});
    out.push_back({"FxF" + s, zero_differential(split_pair(f)), false});
    out.push_back({"M2" + s, zero_differential(matrix_units(f, {0, 0})), false});
  }
  // F_9 = F_3[i]/(i^2 + 1) and F_4 = F_2[i]/(i^2 + i + 1) are division algebras.
  out.push_back({"F9", zero_differential(quadratic(Field::prime(3), -1)), true});
  {
    const Field f = Field::prime(2);
    GradedAlgebra f4 = table(f, {{"1", 0}, {"w", 0}}, [=](int l, int r) {
      if (l == 0) return mono(f, r);
      if (r == 0) return mono(f, l);
      return mono(f, 0) + mono(f, 1);
    });
    out.push_back({"F4", zero_differential(f4), true});
  }
  // F_2[i]/(i^2 + 1) = F_2[x]/x^2 in disguise.
  out.push_back({"F2[i]/(i^2+1)", zero_differential(quadratic(Field::prime(2), -1)), false});
  return out;
}

}  // namespace fx
