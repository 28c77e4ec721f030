#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgbrauer/dg.hpp"

namespace dgb {

enum class CaseLabel { c1, c2, c3, c4a, c4b, c5a, c5b };

std::string to_string(CaseLabel c);
/// Accepts "1", "2", "3", "4a", "4b", "5a", "5b".
CaseLabel parse_case(const std::string& text);
const std::vector<CaseLabel>& all_cases();

struct TemplateParams {
  CaseLabel label = CaseLabel::c1;
  Field field = Field::rationals();
  /// Degree of T: required for 2, 4b, 5b; fixed at -1 for 3 and 5a; absent for 1 and 4a.
  std::optional<int> t_degree;
};

/// Validated Laurent-periodic presentation of the dg-field template.
DgAlgebra make_template(const TemplateParams& p);

struct Generator {
  std::string role;     // "T", "y", "u"
  std::string element;  // rendered element
  int degree = 0;
};

struct ClassificationReport {
  CaseLabel label = CaseLabel::c1;
  std::vector<std::string> L_basis;
  std::vector<Generator> generators;
  std::optional<std::string> y;
  std::optional<std::string> y_squared;
  std::vector<std::string> notes;
  /// One-line summary such as "case 3, y = T".
  std::string summary() const;
};

/// Decision tree over the seven cases; throws PreconditionError for inputs that are
/// not (certified) dg-fields.
ClassificationReport classify_dg_field(const DgAlgebra& ad);

}  // namespace dgb
