#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgbrauer/dg.hpp"
#include "dgbrauer/maps.hpp"

namespace dgb {

/// Solution of d(y) = 1 in degree -1 with free variables set to zero (its
/// support sits on the earliest independent columns of the component).
std::optional<Element> find_y(const DgAlgebra& ad);

/// R[T;D]/(T^2 - y2) on the basis R ⊕ T R with |T| = -1, Ta = (-1)^{|a|} aT + D(a).
/// D is given on the core basis of R and lowers degree by one; y2 has degree
/// -2 or is zero.
GradedAlgebra twisted_poly_quotient(const GradedAlgebra& r, const std::vector<Element>& D,
                                    const Element& y2, const std::string& t_name = "T");

/// The same algebra with d(R) = 0 and d(T a) = a.
DgAlgebra twisted_poly_quotient_dg(const GradedAlgebra& r, const std::vector<Element>& D,
                                   const Element& y2, const std::string& t_name = "T");

struct AgrDecomposition {
  Element y;
  Element y_squared;          // y^2 in A
  Cycles cycles;              // ker(d)
  Element y_squared_cycle;    // y^2 in ker(d) coordinates
  std::vector<Element> D;     // D(a) = ya - (-1)^{|a|} a y on the cycle basis
  bool D_is_zero = true;
  DgAlgebra quotient;
  GradedLinearMap phi;        // b + T a |-> b + y a
  MapCheck phi_check;
  /// Transporting the quotient table along phi reproduces every product of A.
  bool table_reproduced = false;
  std::string table_failure;
};

/// Requires a dg-division algebra with acyclic, nonzero differential.
AgrDecomposition agr_decompose(const DgAlgebra& ad);

}  // namespace dgb
