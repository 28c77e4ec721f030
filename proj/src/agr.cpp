#include "dgbrauer/agr.hpp"

namespace dgb {

std::optional<Element> find_y(const DgAlgebra& ad) {
  const GradedAlgebra& a = ad.algebra();
  const Field f = a.field();
  const auto src = a.component(-1);
  if (src.empty() || a.component_dim(0) == 0) return std::nullopt;
  std::vector<Vector> cols;
  for (const Key& k : src)
    cols.push_back(a.coords(ad.d(Element::monomial(f, k.basis, k.upow, Scalar::one(f))), 0));
  auto sol = solve(Matrix::from_columns(f, a.component_dim(0), cols), a.coords(a.one(), 0));
  if (!sol) return std::nullopt;
  return a.from_coords(-1, *sol);
}

GradedAlgebra twisted_poly_quotient(const GradedAlgebra& r, const std::vector<Element>& D,
                                    const Element& y2, const std::string& t_name) {
  const Field f = r.field();
  const int k = r.dim();
  if (static_cast<int>(D.size()) != k) throw PreconditionError("D must be given on every basis element");
  for (int i = 0; i < k; ++i) {
    auto deg = r.degree_of(D[i]);
    if (deg && *deg != r.degree(i) - 1)
      throw PreconditionError("D(" + r.name(i) + ") has degree " + std::to_string(*deg) + ", expected " +
                              std::to_string(r.degree(i) - 1));
  }
  if (auto deg = r.degree_of(y2); deg && *deg != -2)
    throw PreconditionError("T^2 must have degree -2, got " + std::to_string(*deg));

  PresentationBuilder b(f);
  if (r.periodic()) b.unit_degree(*r.unit_degree());
  for (int i = 0; i < k; ++i) b.add(r.name(i), r.degree(i));
  const Element& one = r.one();
  for (int i = 0; i < k; ++i) {
    std::string name = t_name + "*" + r.name(i);
    if (one == r.basis_element(i)) name = t_name;
    b.add(name, r.degree(i) - 1);
  }
  auto times_t = [&](const Element& x) {
    Element out(f);
    for (const auto& [key, c] : x.terms()) out.add_term({key.basis + k, key.upow}, c);
    return out;
  };
  for (int i = 0; i < k; ++i) {
    const bool odd = r.degree(i) & 1;
    const Element di = D[i];
    for (int j = 0; j < k; ++j) {
      const Element bj = r.basis_element(j);
      const Element& rij = r.product(i, j);
      b.set_product(i, j, rij);
      b.set_product(i + k, j, times_t(rij));
      // a T = (-1)^{|a|} (T a - D(a))
      Element left = times_t(rij) - r.multiply(di, bj);
      b.set_product(i, j + k, odd ? -left : left);
      Element both = r.multiply(y2, rij) - times_t(r.multiply(di, bj));
      b.set_product(i + k, j + k, odd ? -both : both);
    }
  }
  b.one(one);
  return b.build();
}

DgAlgebra twisted_poly_quotient_dg(const GradedAlgebra& r, const std::vector<Element>& D,
                                   const Element& y2, const std::string& t_name) {
  GradedAlgebra q = twisted_poly_quotient(r, D, y2, t_name);
  std::vector<Element> images(q.dim(), Element(q.field()));
  for (int i = 0; i < r.dim(); ++i) images[i + r.dim()] = q.basis_element(i);
  return validate_differential(q, std::move(images));
}

AgrDecomposition agr_decompose(const DgAlgebra& ad) {
  const GradedAlgebra& a = ad.algebra();
  if (ad.is_zero_differential())
    throw PreconditionError("agr: the differential is zero; no decomposition exists");
  const DgStructureReport rep = dg_structure_report(ad);
  if (!rep.dg_division.is_yes())
    throw PreconditionError("agr: not certified dg-division (" + to_string(rep.dg_division.value) + ": " +
                            rep.dg_division.method +
                            (rep.dg_division.witness.empty() ? "" : ", witness " + rep.dg_division.witness) +
                            ")");
  if (rep.dichotomy != Dichotomy::acyclic) throw PreconditionError("agr: the algebra is not acyclic");
  auto y = find_y(ad);
  if (!y) throw ValidationError("agr: no y of degree -1 with d(y) = 1, although the algebra is acyclic");
  Cycles z = cycles(ad);
  const Element y2 = a.multiply(*y, *y);
  auto y2z = z.restrict(y2);
  if (!y2z) throw ValidationError("agr: y^2 is not a cycle");
  std::vector<Element> D;
  bool D_zero = true;
  for (int i = 0; i < z.algebra.dim(); ++i) {
    const Element& c = z.inclusion[i];
    Element ya = a.multiply(*y, c);
    Element ay = a.multiply(c, *y);
    Element v = (z.algebra.degree(i) & 1) ? ya + ay : ya - ay;
    auto vz = z.restrict(v);
    if (!vz) throw ValidationError("agr: D(" + z.algebra.name(i) + ") is not a cycle");
    if (!vz->is_zero()) D_zero = false;
    D.push_back(*vz);
  }
  std::string t_name = "T";
  auto taken = [&](const std::string& n) {
    for (int i = 0; i < z.algebra.dim(); ++i)
      if (z.algebra.name(i) == n || z.algebra.name(i).rfind(n + "*", 0) == 0) return true;
    return false;
  };
  for (const char* c : {"T", "Y", "S"})
    if (!taken(t_name = c)) break;
  while (taken(t_name)) t_name += "'";
  DgAlgebra quotient = twisted_poly_quotient_dg(z.algebra, D, *y2z, t_name);
  const GradedAlgebra& q = quotient.algebra();
  GradedLinearMap phi{q, a, 0, {}};
  for (int i = 0; i < z.algebra.dim(); ++i) phi.images.push_back(z.inclusion[i]);
  for (int i = 0; i < z.algebra.dim(); ++i) phi.images.push_back(a.multiply(*y, z.inclusion[i]));
  MapCheck check = check_algebra_map(phi, &quotient, &ad);

  AgrDecomposition out{*y, y2, z, *y2z, D, D_zero, quotient, phi, check, false, {}};
  if (check.bijective) {
    out.table_reproduced = true;
    std::vector<Element> pre;
    for (int i = 0; i < a.dim(); ++i) pre.push_back(*preimage(phi, a.basis_element(i)));
    for (int i = 0; i < a.dim() && out.table_reproduced; ++i)
      for (int j = 0; j < a.dim(); ++j) {
        const Element transported = phi.apply(q.multiply(pre[i], pre[j]));
        if (!(transported == a.product(i, j))) {
          out.table_reproduced = false;
          out.table_failure = "product " + a.name(i) + "*" + a.name(j) + " transports to " +
                              to_string(a, transported) + ", expected " + to_string(a, a.product(i, j));
          break;
        }
      }
  } else {
    out.table_failure = "phi is " + check.failure;
  }
  return out;
}

}  // namespace dgb
