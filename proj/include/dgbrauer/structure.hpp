#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "dgbrauer/graded.hpp"
#include "dgbrauer/subspace.hpp"

namespace dgb {

enum class Truth { no, yes, unknown };

std::string to_string(Truth t);

/// A three-valued answer together with how it was reached and, when
/// available, the element that settles it.
struct Verdict {
  Truth value = Truth::unknown;
  std::string method;
  std::string witness;

  static Verdict yes(std::string method, std::string witness = {});
  static Verdict no(std::string method, std::string witness = {});
  static Verdict unknown(std::string method);
  bool is_yes() const { return value == Truth::yes; }
  bool is_no() const { return value == Truth::no; }
  bool is_unknown() const { return value == Truth::unknown; }
};

/// Largest number of projective points the enumeration methods visit.
inline constexpr std::size_t kEnumerationLimit = 60000;

/// Number of nonzero vectors up to scalars in F_p^k (0 over Q, which is infinite).
std::size_t projective_count(Field f, std::size_t k);

/// Calls fn on every nonzero homogeneous element (up to scalar) of every
/// degree in the window. Returns false without calling fn when the field is
/// infinite or the total count exceeds `limit`. fn returning false stops the
/// walk early.
bool for_each_homogeneous(const GradedAlgebra& a, DegreeWindow w, std::size_t limit,
                          const std::function<bool(const Element&)>& fn);

/// Two-sided inverse of a homogeneous element, if it exists.
std::optional<Element> inverse(const GradedAlgebra& a, const Element& x);

/// Presentation data showing A_0 is a quaternion algebra (a,b) over Q with a
/// positive definite norm form.
struct NormCertificate {
  std::string i, j;        // the two anticommuting generators
  Scalar a, b;             // i^2 = a, j^2 = b
  std::string norm_form;   // diagonal form x0^2 - a x1^2 - b x2^2 + ab x3^2
};

std::optional<NormCertificate> quaternion_norm_certificate(const GradedAlgebra& a);
std::string to_string(const NormCertificate& c);

Verdict graded_division(const GradedAlgebra& a);
Verdict graded_simple(const GradedAlgebra& a, const Verdict& division);

struct StructureReport {
  bool graded_commutative = false;
  bool commutative = false;
  Verdict graded_division;
  Verdict graded_field;
  Verdict graded_simple;
};

StructureReport structure_report(const GradedAlgebra& a);

}  // namespace dgb
