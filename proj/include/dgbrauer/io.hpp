#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgbrauer/dg.hpp"

namespace dgb {

/// Invalid input document; `path` is a JSON pointer into the document (or
/// "line N" for syntax errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& msg)
      : std::runtime_error(path.empty() ? msg : path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A presentation as read from JSON:
///   {"field": "Q" | "Fp:p", "basis": [{"name", "degree"}], "unit_degree"?,
///    "one": name | [term], "mul": [{"l", "r", "out": [term]}],
///    "diff"?: [{"b", "out": [term]}], "base"?: path}
/// with term = {"b": name, "c": scalar string, "u": u-power}.
struct PresentationDocument {
  GradedPresentation presentation;
  /// d on the core basis; absent means no differential given (zero).
  std::optional<std::vector<Element>> diff;
  /// Default base (path, relative to the document) for commands taking --base.
  std::optional<std::string> base;
};

PresentationDocument parse_presentation(const std::string& text);
/// Sorted keys, no insignificant whitespace, scalars as strings, zero products omitted.
std::string emit_canonical(const PresentationDocument& doc);

PresentationDocument to_document(const GradedAlgebra& a);
PresentationDocument to_document(const DgAlgebra& ad);
/// Validates the presentation and the differential.
DgAlgebra to_dg_algebra(const PresentationDocument& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dgb
