#include <filesystem>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "dgbrauer/io.hpp"

using namespace dgb;

namespace {

std::string fixture(const std::string& name) { return read_text_file(std::string(DGB_FIXTURE_DIR) + "/" + name); }

std::string parse_error_path(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<none>";
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kTwoDim = R"({"field":"Q","basis":[{"name":"1","degree":0},{"name":"x","degree":%D%}],"one":"1",
  "mul":[{"l":"1","r":"1","out":[{"b":"1"}]},{"l":"1","r":"x","out":[{"b":"x"}]},
         {"l":"x","r":"1","out":[{"b":"x"}]},{"l":"x","r":"x","out":[{"b":"1","c":"%C%"}]}]})";

std::string two_dim(int deg, const std::string& c) {
  std::string s = kTwoDim;
  s.replace(s.find("%D%"), 3, std::to_string(deg));
  s.replace(s.find("%C%"), 3, c);
  return s;
}

}  // namespace

TEST_CASE("fixtures round-trip byte for byte") {
  for (const char* name : {"case3_f5.json", "case2_q.json", "case4a_q.json", "q.json", "qx2.json", "quaternions_q.json"}) {
    CAPTURE(name);
    const PresentationDocument doc = parse_presentation(fixture(name));
    const std::string once = emit_canonical(doc);
    const std::string twice = emit_canonical(parse_presentation(once));
    CHECK(once == twice);
    // Through validation and back.
    const DgAlgebra ad = to_dg_algebra(doc);
    const std::string again = emit_canonical(to_document(ad));
    CHECK(emit_canonical(parse_presentation(again)) == again);
    CHECK(ad.algebra().dim() == static_cast<int>(doc.presentation.basis.size()));
  }
}

TEST_CASE("templates survive serialisation") {
  for (const auto& named : fx::small_fixtures()) {
    CAPTURE(named.name);
    const DgAlgebra& t = named.algebra;
    const std::string text = emit_canonical(to_document(t));
    const DgAlgebra back = to_dg_algebra(parse_presentation(text));
    CHECK(back.algebra() == t.algebra());
    CHECK(back.images() == t.images());
  }
}

TEST_CASE("canonical form: sorted keys, scalars as strings, zero products dropped") {
  const std::string text = emit_canonical(parse_presentation(fixture("qx2.json")));
  CHECK(text.back() == '\n');
  CHECK(text.find(' ') == std::string::npos);
  CHECK(text.find(R"("l":"x","out")") != std::string::npos);
  CHECK(text.find(R"("c":"1")") != std::string::npos);
  CHECK(text.find(R"("l":"x","out":[],"r":"x")") == std::string::npos);
  CHECK(text.find("\"basis\"") < text.find("\"field\""));
  CHECK(text.find("\"field\"") < text.find("\"mul\""));
  CHECK(emit_canonical(parse_presentation(two_dim(0, "-3/6"))).find(R"("c":"-1/2")") != std::string::npos);
}

TEST_CASE("parse errors carry the location") {
  CHECK(parse_error_path(R"({"field":"Q","basis":[{"name":"1","degree":0}],"one":"1","extra":0})") == "/extra");
  CHECK(parse_error_path(R"({"field":"Q","basis":[{"name":"1","degree":0,"sign":1}],"one":"1"})") == "/basis/0/sign");
  CHECK(parse_error_path(R"({"field":"Q","basis":[{"name":"1","degree":0}],"one":"1","mul":[{"l":"1","r":"y","out":[]}]})") ==
        "/mul/0/r");
  CHECK(parse_error_path(R"({"field":"R","basis":[{"name":"1","degree":0}],"one":"1"})") == "/field");
  CHECK(parse_error_path(R"({"field":"Fp:6","basis":[{"name":"1","degree":0}],"one":"1"})") == "/field");
  CHECK(parse_error_path(R"({"field":"Q","basis":[{"name":"1","degree":0}],"one":"1","unit_degree":3})") == "/unit_degree");
  CHECK(parse_error_path(R"({"field":"Q","basis":[{"name":"a","degree":0},{"name":"a","degree":1}],"one":"a"})") ==
        "/basis/1/name");
  CHECK(parse_error_path(two_dim(0, "1/0")) == "/mul/3/out/0/c");
  CHECK(parse_error_path(two_dim(0, "1/-2")) == "/mul/3/out/0/c");
  CHECK(parse_error_path("{\n\"field\": \"Q\",\n") == "line 3");
  CHECK(parse_error_path(R"({"basis":[{"name":"1","degree":0}],"one":"1"})") == "");
}

TEST_CASE("degree diagnostics name the offending product") {
  const std::string msg = parse_error_message(two_dim(1, "1"));
  CHECK(msg.find("/mul/3/out/0") != std::string::npos);
  CHECK(msg.find("product x*x") != std::string::npos);
  CHECK(msg.find("degree 0, expected 2") != std::string::npos);
}

TEST_CASE("semantic validation is separate from parsing") {
  // Well-formed JSON, but (aa)a = ba = 0 while a(aa) = ab = 1.
  const std::string bad = R"({"field":"Q","basis":[{"name":"1","degree":0},{"name":"a","degree":0},{"name":"b","degree":0}],
    "one":"1","mul":[{"l":"1","r":"1","out":[{"b":"1"}]},{"l":"1","r":"a","out":[{"b":"a"}]},{"l":"a","r":"1","out":[{"b":"a"}]},
    {"l":"1","r":"b","out":[{"b":"b"}]},{"l":"b","r":"1","out":[{"b":"b"}]},{"l":"a","r":"a","out":[{"b":"b"}]},
    {"l":"a","r":"b","out":[{"b":"1"}]}]})";
  const PresentationDocument doc = parse_presentation(bad);
  CHECK_THROWS_AS(to_dg_algebra(doc), ValidationError);
}

TEST_CASE("file helpers") {
  const auto path = std::filesystem::temp_directory_path() / "dgb_io_roundtrip.json";
  const std::string text = emit_canonical(parse_presentation(fixture("case3_f5.json")));
  write_text_file(path.string(), text);
  CHECK(read_text_file(path.string()) == text);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_text_file("/nonexistent/x.json"), ParseError);
}
