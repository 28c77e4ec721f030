#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dgbrauer/graded.hpp"

namespace dgb {

enum class Side { left, right, twosided };

/// Per-degree subspaces of an algebra inside a degree window. For periodic
/// algebras the window holds one representative degree per residue class and
/// the subspace is understood to be u-stable.
class GradedSubspace {
 public:
  GradedSubspace(const GradedAlgebra& a, DegreeWindow w);

  const DegreeWindow& window() const { return window_; }
  bool periodic() const { return periodic_; }
  int dim(int n) const;
  /// Basis vectors (coordinates in GradedAlgebra::component(n)).
  const std::vector<Vector>& basis(int n) const;
  std::vector<Element> basis_elements(int n) const;
  /// Total dimension over the window.
  int total_dim() const;

  /// Adds a homogeneous element (reduced into the window for periodic
  /// algebras); returns true if the subspace grew. Elements whose degree lies
  /// outside a non-periodic window are ignored and reported via `false`.
  bool insert(const Element& x);
  bool contains(const Element& x) const;
  /// Equal to the whole algebra in every degree of the window.
  bool is_whole() const;
  bool is_zero() const { return total_dim() == 0; }

 private:
  int representative(int n) const;
  RowSpace& space(int n);

  GradedAlgebra algebra_;
  DegreeWindow window_;   // as requested
  DegreeWindow storage_;  // one period for periodic algebras
  bool periodic_;
  std::map<int, RowSpace> spaces_;
};

/// Throws PreconditionError when a periodic algebra's window misses a full period.
void require_full_period(const GradedAlgebra& a, const DegreeWindow& w, const char* op);

/// Z_gr(A) per degree: solutions of a x = (-1)^{|a||x|} x a for every core a.
GradedSubspace graded_center(const GradedAlgebra& a, DegreeWindow w);
GradedSubspace graded_center(const GradedAlgebra& a);

/// Smallest window-truncated subspace containing `gens` and absorbing core
/// multiplication on the chosen side(s). `extra` (if set) is an additional
/// linear operator the subspace is saturated under (e.g. a differential).
GradedSubspace graded_ideal(const GradedAlgebra& a, const std::vector<Element>& gens, Side side,
                            DegreeWindow w,
                            const std::function<Element(const Element&)>& extra = {});
GradedSubspace graded_ideal(const GradedAlgebra& a, const std::vector<Element>& gens, Side side);

}  // namespace dgb
