#include "dgbrauer/maps.hpp"

#include <algorithm>
#include <set>

namespace dgb {

Element GradedLinearMap::apply(const Element& x) const {
  Element out(target.field());
  for (const auto& [k, c] : x.terms()) {
    if (k.basis < 0 || k.basis >= static_cast<int>(images.size()))
      throw std::out_of_range("foreign basis index in linear map");
    out += images[k.basis].shifted(k.upow).scaled(c);
  }
  return out;
}

Matrix GradedLinearMap::block(int n) const {
  const auto src = source.component(n);
  const auto dst = target.component(n + degree);
  Matrix m(target.field(), dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Element x = Element::monomial(source.field(), src[j].basis, src[j].upow, Scalar::one(source.field()));
    const Vector v = target.coords(apply(x), n + degree);
    for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, j) = v[r];
  }
  return m;
}

std::vector<int> deciding_degrees(const GradedLinearMap& f) {
  std::vector<int> out;
  if (f.source.periodic() || f.target.periodic()) {
    if (f.source.period() != f.target.period())
      throw PreconditionError("linear map between algebras with different periods");
    const DegreeWindow w = f.source.natural_window();
    for (int n = w.lo; n <= w.hi; ++n) out.push_back(n);
    return out;
  }
  std::set<int> degs;
  for (const auto& b : f.source.basis()) degs.insert(b.degree);
  for (const auto& b : f.target.basis()) degs.insert(b.degree - f.degree);
  return {degs.begin(), degs.end()};
}

std::optional<std::string> bijectivity_failure(const GradedLinearMap& f) {
  for (int n : deciding_degrees(f)) {
    const Matrix m = f.block(n);
    const std::size_t r = rank(m);
    if (r < m.rows()) return "not surjective in degree " + std::to_string(n);
    if (r < m.cols()) return "not injective in degree " + std::to_string(n);
  }
  return std::nullopt;
}

std::optional<Element> preimage(const GradedLinearMap& f, const Element& y) {
  const auto deg = f.target.degree_of(y);
  if (!deg) return Element(f.source.field());
  const int n = *deg - f.degree;
  auto sol = solve(f.block(n), f.target.coords(y, *deg));
  if (!sol) return std::nullopt;
  return f.source.from_coords(n, *sol);
}

MapCheck check_algebra_map(const GradedLinearMap& f, const DgAlgebra* sd, const DgAlgebra* td) {
  MapCheck r;
  auto fail = [&](const std::string& msg) {
    if (r.failure.empty()) r.failure = msg;
  };
  const GradedAlgebra& s = f.source;
  const GradedAlgebra& t = f.target;
  if (auto msg = bijectivity_failure(f))
    fail(*msg);
  else
    r.bijective = true;
  r.unital = f.apply(s.one()) == t.one();
  if (!r.unital) fail("unit not preserved: image of one is " + to_string(t, f.apply(s.one())));
  r.multiplicative = true;
  // f(xg) = f(x)f(g) for generators g suffices once f is unital.
  const std::vector<int> gens = core_generators(s);
  for (int i = 0; i < s.dim() && r.multiplicative; ++i)
    for (int j : gens) {
      const Element lhs = f.apply(s.product(i, j));
      const Element rhs = t.multiply(f.images[i], f.images[j]);
      if (!(lhs == rhs)) {
        r.multiplicative = false;
        fail("not multiplicative on (" + s.name(i) + "," + s.name(j) + "): " + to_string(t, lhs) +
             " vs " + to_string(t, rhs));
        break;
      }
    }
  if (sd && td) {
    for (int i = 0; i < s.dim(); ++i) {
      const Element lhs = f.apply(sd->d(s.basis_element(i)));
      const Element rhs = td->d(f.images[i]);
      if (!(lhs == rhs)) {
        r.dg_compatible = false;
        fail("does not commute with d on " + s.name(i) + ": " + to_string(t, lhs) + " vs " +
             to_string(t, rhs));
        break;
      }
    }
  }
  return r;
}

}  // namespace dgb
