#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgbrauer/graded.hpp"
#include "dgbrauer/structure.hpp"
#include "dgbrauer/subspace.hpp"

namespace dgb {

/// A graded algebra with a validated degree +1 differential. The differential
/// is stored on the core basis and extended u-linearly (d(u) = 0).
class DgAlgebra {
 public:
  const GradedAlgebra& algebra() const { return algebra_; }
  Field field() const { return algebra_.field(); }
  /// d on each core basis element.
  const std::vector<Element>& images() const { return images_; }
  Element d(const Element& x) const;
  bool is_zero_differential() const;

 private:
  DgAlgebra(GradedAlgebra a, std::vector<Element> images)
      : algebra_(std::move(a)), images_(std::move(images)) {}
  GradedAlgebra algebra_;
  std::vector<Element> images_;

  friend DgAlgebra validate_differential(const GradedAlgebra& a, std::vector<Element> images);
};

/// Checks degree +1, d(one) = 0, d^2 = 0 and the graded Leibniz rule
/// d(ab) = d(a)b + (-1)^{|a|} a d(b) on every core pair.
DgAlgebra validate_differential(const GradedAlgebra& a, std::vector<Element> images);
/// Named form; basis elements not mentioned map to zero.
DgAlgebra validate_differential(const GradedAlgebra& a, const std::map<std::string, Element>& images);
DgAlgebra zero_differential(const GradedAlgebra& a);

/// ker(d) as a graded algebra, with the images of its core basis in A.
struct Cycles {
  GradedAlgebra algebra;
  GradedAlgebra ambient;
  std::vector<Element> inclusion;
  Element include(const Element& z) const;
  /// Coordinates of a homogeneous cycle of the ambient algebra; nullopt when
  /// x is not a cycle.
  std::optional<Element> restrict(const Element& x) const;
};

/// The window must contain one full period (periodic) or the whole support.
Cycles cycles(const DgAlgebra& ad, DegreeWindow w);
Cycles cycles(const DgAlgebra& ad);

struct HomologyDegree {
  int degree = 0;
  int cycles = 0;
  int boundaries = 0;
  int homology = 0;
  std::vector<Element> basis;  // representatives of a homology basis
};

struct HomologyReport {
  DegreeWindow window;
  bool periodic = false;
  std::vector<HomologyDegree> degrees;
  /// Every homology dimension in the window vanishes.
  bool acyclic = false;
  /// The window covers a full period plus one degree on each side (periodic)
  /// or the support plus one degree on each side, so `acyclic` is global.
  bool global = false;
};

/// Periodic algebras need a window of at least |p| + 2 degrees.
HomologyReport homology(const DgAlgebra& ad, DegreeWindow w);
/// Smallest window certifying global statements.
DegreeWindow covering_window(const GradedAlgebra& a);

GradedSubspace dg_ideal(const DgAlgebra& ad, const std::vector<Element>& gens, Side side, DegreeWindow w);
GradedSubspace dg_ideal(const DgAlgebra& ad, const std::vector<Element>& gens, Side side);

enum class Dichotomy { zero_differential, acyclic, neither };
std::string to_string(Dichotomy d);

/// Principal one-sided dg-ideals from every nonzero homogeneous element of one
/// period. Unknown over Q, above core dimension 6 or past the enumeration limit.
Verdict dg_division_oracle(const DgAlgebra& ad);

struct DgStructureReport {
  Verdict dg_division;  // via graded-division of the cycles
  Verdict dg_simple;
  Dichotomy dichotomy = Dichotomy::neither;
  std::optional<Verdict> oracle;
  bool oracle_agrees = true;
  StructureReport cycles_report;
  int cycles_dim = 0;
};

DgStructureReport dg_structure_report(const DgAlgebra& ad);

}  // namespace dgb
