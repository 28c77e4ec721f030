#include "dgbrauer/subspace.hpp"

#include <deque>

namespace dgb {

void require_full_period(const GradedAlgebra& a, const DegreeWindow& w, const char* op) {
  if (a.periodic() && w.size() < a.period())
    throw PreconditionError(std::string(op) + ": window [" + std::to_string(w.lo) + "," +
                            std::to_string(w.hi) + "] is smaller than the period " +
                            std::to_string(a.period()));
}

GradedSubspace::GradedSubspace(const GradedAlgebra& a, DegreeWindow w)
    : algebra_(a), window_(w), storage_(w), periodic_(a.periodic()) {
  if (periodic_) {
    require_full_period(a, w, "graded subspace");
    storage_ = {w.lo, w.lo + a.period() - 1};
  }
}

int GradedSubspace::representative(int n) const {
  if (!periodic_) return n;
  const int per = algebra_.period();
  return storage_.lo + (((n - storage_.lo) % per) + per) % per;
}

RowSpace& GradedSubspace::space(int n) {
  auto it = spaces_.find(n);
  if (it == spaces_.end())
    it = spaces_.emplace(n, RowSpace(algebra_.field(), algebra_.component(n).size())).first;
  return it->second;
}

int GradedSubspace::dim(int n) const {
  auto it = spaces_.find(representative(n));
  if (!periodic_ && !window_.contains(n)) return 0;
  return it == spaces_.end() ? 0 : static_cast<int>(it->second.dim());
}

const std::vector<Vector>& GradedSubspace::basis(int n) const {
  static const std::vector<Vector> empty;
  if (periodic_ && representative(n) != n)
    throw PreconditionError("basis requested outside the stored period; use a representative degree");
  auto it = spaces_.find(n);
  return it == spaces_.end() ? empty : it->second.basis();
}

std::vector<Element> GradedSubspace::basis_elements(int n) const {
  std::vector<Element> out;
  for (const auto& v : basis(n)) out.push_back(algebra_.from_coords(n, v));
  return out;
}

int GradedSubspace::total_dim() const {
  int t = 0;
  for (const auto& [n, s] : spaces_) t += static_cast<int>(s.dim());
  return t;
}

bool GradedSubspace::insert(const Element& x) {
  if (x.is_zero()) return false;
  auto deg = algebra_.degree_of(x);
  auto [y, n] = algebra_.reduce_into(x, *deg, storage_);
  if (!storage_.contains(n)) return false;
  return space(n).insert(algebra_.coords(y, n));
}

bool GradedSubspace::contains(const Element& x) const {
  if (x.is_zero()) return true;
  auto deg = algebra_.degree_of(x);
  auto [y, n] = algebra_.reduce_into(x, *deg, storage_);
  if (!storage_.contains(n)) return false;
  auto it = spaces_.find(n);
  if (it == spaces_.end()) return false;
  return it->second.contains(algebra_.coords(y, n));
}

bool GradedSubspace::is_whole() const {
  for (int n = storage_.lo; n <= storage_.hi; ++n)
    if (dim(n) != algebra_.component_dim(n)) return false;
  return true;
}

GradedSubspace graded_center(const GradedAlgebra& a, DegreeWindow w) {
  require_full_period(a, w, "graded_center");
  GradedSubspace z(a, w);
  const DegreeWindow span = a.periodic() ? DegreeWindow{w.lo, w.lo + a.period() - 1} : w;
  const Field f = a.field();
  for (int n = span.lo; n <= span.hi; ++n) {
    auto comp = a.component(n);
    if (comp.empty()) continue;
    // Stack the conditions for every core basis element a_b.
    std::vector<std::size_t> row_count;
    std::vector<std::vector<Vector>> blocks;  // per core element: columns
    std::size_t total_rows = 0;
    for (int b = 0; b < a.dim(); ++b) {
      const int target = n + a.degree(b);
      const std::size_t rows = a.component(target).size();
      if (rows == 0) continue;
      std::vector<Vector> cols;
      const int sign = koszul(a.degree(b), n);
      for (const Key& k : comp) {
        Element x = Element::monomial(f, k.basis, k.upow, Scalar::one(f));
        Element bx = a.multiply(a.basis_element(b), x);
        Element xb = a.multiply(x, a.basis_element(b));
        Element diff = sign < 0 ? bx + xb : bx - xb;
        cols.push_back(a.coords(diff, target));
      }
      blocks.push_back(std::move(cols));
      row_count.push_back(rows);
      total_rows += rows;
    }
    Matrix m(f, total_rows, comp.size());
    std::size_t r0 = 0;
    for (std::size_t blk = 0; blk < blocks.size(); ++blk) {
      for (std::size_t c = 0; c < comp.size(); ++c)
        for (std::size_t r = 0; r < row_count[blk]; ++r) m.at(r0 + r, c) = blocks[blk][c][r];
      r0 += row_count[blk];
    }
    for (auto& v : nullspace(m)) z.insert(a.from_coords(n, v));
  }
  // Multiplicative closure and unit membership are invariants of the center.
  if (!z.contains(a.one())) throw ValidationError("graded center misses the unit (internal error)");
  for (int n = span.lo; n <= span.hi; ++n)
    for (const auto& x : z.basis_elements(n))
      for (int m = span.lo; m <= span.hi; ++m)
        for (const auto& y : z.basis_elements(m))
          if (!z.contains(a.multiply(x, y)))
            throw ValidationError("graded center not multiplicatively closed (internal error)");
  return z;
}

GradedSubspace graded_center(const GradedAlgebra& a) { return graded_center(a, a.natural_window()); }

GradedSubspace graded_ideal(const GradedAlgebra& a, const std::vector<Element>& gens, Side side,
                            DegreeWindow w, const std::function<Element(const Element&)>& extra) {
  GradedSubspace ideal(a, w);
  std::deque<Element> queue;
  for (const auto& g : gens) {
    if (!a.is_homogeneous(g)) throw PreconditionError("non-homogeneous generator " + to_string(a, g));
    if (ideal.insert(g)) queue.push_back(g);
  }
  auto push = [&](const Element& e) {
    if (!e.is_zero() && ideal.insert(e)) queue.push_back(e);
  };
  while (!queue.empty()) {
    Element x = std::move(queue.front());
    queue.pop_front();
    for (int b = 0; b < a.dim(); ++b) {
      Element e = a.basis_element(b);
      if (side != Side::right) push(a.multiply(e, x));
      if (side != Side::left) push(a.multiply(x, e));
    }
    if (extra) push(extra(x));
  }
  return ideal;
}

GradedSubspace graded_ideal(const GradedAlgebra& a, const std::vector<Element>& gens, Side side) {
  return graded_ideal(a, gens, side, a.natural_window());
}

}  // namespace dgb
