#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgbrauer/dg.hpp"
#include "dgbrauer/graded.hpp"

namespace dgb {

/// Homogeneous linear map given on the source core basis and extended
/// u-linearly (sources and targets share the periodic unit when present).
struct GradedLinearMap {
  GradedAlgebra source;
  GradedAlgebra target;
  int degree = 0;
  std::vector<Element> images;

  Element apply(const Element& x) const;
  /// Matrix of source_n -> target_{n+degree} in component coordinates.
  Matrix block(int n) const;
};

/// Degrees whose blocks decide bijectivity: one period when periodic,
/// otherwise every degree where either side is nonzero.
std::vector<int> deciding_degrees(const GradedLinearMap& f);

/// Empty when bijective, otherwise e.g. "not surjective in degree 0".
std::optional<std::string> bijectivity_failure(const GradedLinearMap& f);

std::optional<Element> preimage(const GradedLinearMap& f, const Element& y);

struct MapCheck {
  bool bijective = false;
  bool unital = false;
  bool multiplicative = false;
  bool dg_compatible = true;
  std::string failure;
  bool ok() const { return bijective && unital && multiplicative && dg_compatible; }
};

/// Algebra-isomorphism test on core pairs; d-compatibility when both
/// differentials are supplied.
MapCheck check_algebra_map(const GradedLinearMap& f, const DgAlgebra* source_d = nullptr,
                           const DgAlgebra* target_d = nullptr);

}  // namespace dgb
