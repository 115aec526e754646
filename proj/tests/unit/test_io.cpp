#include <functional>
#include <random>

#include "doctest.h"
#include "maps.hpp"
#include "projlink/error.hpp"
#include "projlink/io.hpp"

using namespace projlink;
using namespace projlink::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalContradiction;
}

}  // namespace

TEST_CASE("map JSON round trip") {
  const std::vector<Sign> signs{Sign::plus, Sign::minus, Sign::plus, Sign::plus, Sign::minus,
                                Sign::minus};
  const auto text = map_to_json(k4(), &signs);
  const auto doc = parse_map_json(text);
  CHECK(doc.map == k4());
  REQUIRE(doc.signs.has_value());
  CHECK(*doc.signs == signs);
  CHECK(map_to_json(doc.map, &*doc.signs) == text);
  CHECK_FALSE(parse_map_json(map_to_json(digon())).signs.has_value());
}

TEST_CASE("map JSON errors") {
  CHECK(code_of([] { parse_map_json("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_map_json("[]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_map_json(R"({"rotations": [[0, 2], [1, 3]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_map_json(R"({"rotations": [[0, "x"]], "pairing": [1, 0]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_map_json(R"({"rotations": [[0, 2], [1, 3]], "pairing": [1, 0, 3, 2],
                             "edge_signs": ["+"]})");
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_map_json(R"({"rotations": [[0, 2], [1, 3]], "pairing": [1, 0, 3, 2],
                             "edge_signs": ["+", "?"]})");
        }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_map_json(R"({"rotations": [[0], [1]], "pairing": [0, 1]})"); }) ==
        ErrorCode::MalformedPairing);
  CHECK(code_of([] { parse_map_json("{}").signed_map(); }) == ErrorCode::ParseError);
  CHECK(code_of([] { map_document_from_file(PROJLINK_FIXTURE_DIR "/nonspherical.json"); }) ==
        ErrorCode::NotSpherical);
  CHECK(code_of([] { read_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("DOT export lists every edge and highlights bold ones") {
  DotOptions opt;
  opt.bold_edges = {1};
  const auto dot = map_to_dot(k4(), opt);
  CHECK(dot.find("graph map {") == 0);
  CHECK(dot.find("label=\"e5\"") != std::string::npos);
  CHECK(dot.find("label=\"e1\", style=bold") != std::string::npos);
  CHECK(dot.find("label=\"e0\", style=bold") == std::string::npos);
}

TEST_CASE("PD text") {
  const auto d = parse_pd_text(" PD[ X[1, 4, 2, 5], X[3, 6, 4, 1], X[5, 2, 6, 3] ] ");
  CHECK(d.crossings.size() == 3);
  CHECK(to_pd_text(d) == "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]");
  CHECK(parse_pd_text(to_pd_text(d)) == d);
  CHECK(parse_pd_text("").free_loops == 1);
  CHECK(code_of([] { parse_pd_text("X[1,2,3]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd_text("X[1,2,3,4,5]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd_text("Y[1,1,2,2]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd_text("X[1,a,2,2]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd_text("X[1,2,3,4]"); }) == ErrorCode::ParseError);
}

TEST_CASE("PD JSON") {
  auto d = tait_to_diagram(EdgeSignedMap::constant(k4(), Sign::minus));
  d.first_crossing_sign = Sign::minus;
  CHECK(parse_diagram_json(diagram_to_json(d)) == d);
  CHECK(code_of([] { parse_diagram_json(R"({"pd": [[1, 2, 3]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_diagram_json(R"({"crossings": []})"); }) == ErrorCode::ParseError);
}

TEST_CASE("Gauss code of the standard trefoil") {
  const auto d = diagram_from_gauss(parse_gauss_text("gauss: -1 2 -3 1 -2 3\nwrithe: + + +\n"));
  CHECK(d.crossings.size() == 3);
  CHECK(component_count(d) == 1);
  const auto b = kauffman_bracket(d);
  const auto expected = kauffman_bracket(tait_to_diagram(EdgeSignedMap::constant(triangle(), Sign::plus)));
  CHECK((b == expected || b == expected.invert_variable()));
}

TEST_CASE("Gauss code round trips") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const PlanarMap m = random_map(rng, 1 + i % 8);
    const auto g = EdgeSignedMap::make(m, random_signs(rng, m.num_edges()));
    const auto d = tait_to_diagram(g);
    const auto code = gauss_code(d);
    const auto back = diagram_from_gauss(code);
    CHECK(gauss_code(back) == code);
    CHECK(kauffman_bracket(back) == kauffman_bracket(d));
    CHECK(parse_gauss_text(to_gauss_text(code)) == code);
    CHECK(parse_gauss_json(gauss_to_json(code)) == code);
    CHECK(diagram_from_gauss(gauss_code(back)) == back);
  }
}

TEST_CASE("Gauss errors and free loops") {
  CHECK(code_of([] { diagram_from_gauss(parse_gauss_text("gauss: 1 2\nwrithe: + +\n")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_gauss_text("gauss: 1 -1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_gauss_text("knot: 1 -1\nwrithe: +\n"); }) == ErrorCode::ParseError);
  const auto d = diagram_from_gauss(parse_gauss_text("gauss: 1 -1 |\nwrithe: +\n"));
  CHECK(d.free_loops == 1);
  CHECK(gauss_code(d).components.size() == 2);
}

TEST_CASE("format detection") {
  const auto d = tait_to_diagram(EdgeSignedMap::constant(digon(), Sign::plus));
  const auto code = gauss_code(d);
  CHECK(parse_diagram_any(to_pd_text(d)).crossings == d.crossings);
  CHECK(parse_diagram_any(diagram_to_json(d)) == d);
  CHECK(gauss_code(parse_diagram_any(to_gauss_text(code))) == code);
  CHECK(gauss_code(parse_diagram_any(gauss_to_json(code))) == code);
}
