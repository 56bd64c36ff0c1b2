#include "isodisc/catalog.hpp"
#include "isodisc/discriminant.hpp"
#include "isodisc/equivariant.hpp"
#include "isodisc/io.hpp"

#include <doctest.h>

using namespace isodisc;

TEST_CASE("polynomial documents round trip byte for byte") {
  const LinearAction a = build_case(CaseId::SymReal, 3);
  const MVPoly delta = discriminant_minors(a);
  const std::string text = dump(poly_to_json(delta, a.var_names));
  std::vector<std::string> vars;
  const MVPoly back = poly_from_json(parse_document(text), &vars);
  CHECK(back == delta);
  CHECK(vars == a.var_names);
  CHECK(dump(poly_to_json(back, vars)) == text);
}

TEST_CASE("polynomial documents are validated") {
  CHECK_THROWS_AS(parse_document("{"), FormatError);
  CHECK_THROWS_AS(poly_from_json(parse_document(R"({"vars":["x"]})")), FormatError);
  CHECK_THROWS_AS(poly_from_json(parse_document(R"({"vars":["x"],"terms":[["1/0",[1]]]})")), FormatError);
  CHECK_THROWS_AS(poly_from_json(parse_document(R"({"vars":["x","y"],"terms":[["1",[1]]]})")), FormatError);
  // Out of graded-lex order.
  CHECK_THROWS_AS(poly_from_json(parse_document(R"({"vars":["x","y"],"terms":[["1",[0,2]],["1",[2,0]]]})")), FormatError);
  const MVPoly p = poly_from_json(parse_document(R"({"vars":["x","y"],"terms":[["3/6",[2,0]],["-1",[0,2]]]})"));
  CHECK(p.coefficient(Monomial::from_exponents(std::vector<unsigned>{2, 0})) == Rat(1, 2));
}

TEST_CASE("action documents round trip") {
  for (CaseId id : all_cases()) {
    const int n = case_has_size(id) ? 3 : 0;
    const LinearAction a = build_case(id, n);
    const std::string text = dump(action_to_json(a));
    const LinearAction back = action_from_json(parse_document(text));
    CHECK(back == a);
    CHECK(dump(action_to_json(back)) == text);
  }
}

TEST_CASE("action loader re-validates") {
  Json j = action_to_json(build_case(CaseId::Torus2));
  j["generators"][1][0][0] = "1";
  CHECK_THROWS_WITH_AS(action_from_json(j), doctest::Contains("generator 1"), ActionError);
  Json k = action_to_json(build_case(CaseId::Torus2));
  k["generators"].erase(1);
  CHECK_THROWS_AS(action_from_json(k), FormatError);
  Json c = action_to_json(build_case(CaseId::SymReal, 2));
  c["cartan"]["roots"][0]["functional"] = Json::array({"1", "1"});
  CHECK_THROWS_AS(action_from_json(c), ActionError);
}

TEST_CASE("hand-written sym_real n=2 file equals the catalog") {
  // Coordinates (y11, y22, y12); x = E12 - E21 acts by x Y - Y x.
  const char* text = R"({
    "name": "sym_real", "d": 3, "p": 1,
    "generators": [[["0","0","2"],["0","0","-2"],["-1","1","0"]]],
    "inner_g": [["1"]],
    "inner_V": [["1/2","0","0"],["0","1/2","0"],["0","0","1"]],
    "var_names": ["y11","y22","y12"],
    "cartan": {"basis": [["1","0","0"],["0","1","0"]],
               "roots": [{"functional": ["1","-1"], "multiplicity": 1}],
               "diagram": "A1"}
  })";
  CHECK(action_from_json(parse_document(text)) == build_case(CaseId::SymReal, 2));
}

TEST_CASE("certificate documents round trip byte for byte") {
  SearchOptions opts;
  opts.case_label = "sym_real_traceless";
  opts.n = 3;
  const SosCertificate cert = sos_search(build_case(CaseId::SymRealTraceless, 3), opts);
  const std::string text = dump(certificate_to_json(cert));
  const SosCertificate back = certificate_from_json(parse_document(text));
  CHECK(dump(certificate_to_json(back)) == text);
  CHECK(back.verified);
  CHECK(back.constant == cert.constant);
  CHECK(back.squares.size() == cert.squares.size());
  SosCertificate reverified = back;
  CHECK(verify_certificate(reverified, discriminant_minors(build_case(CaseId::SymRealTraceless, 3))));
}
