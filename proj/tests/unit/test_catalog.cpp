#include <algorithm>

#include "doctest.h"
#include "maps.hpp"
#include "projlink/catalog.hpp"
#include "projlink/error.hpp"

using namespace projlink;
using namespace projlink::testing;

TEST_CASE("catalog contents") {
  const auto entries = load_catalog();
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const auto& a, const auto& b) { return a.name < b.name; }));
  for (const char* name : {"2_1", "trefoil", "borromean_K4", "H_fig16", "k4_opposite_signs"}) {
    const auto e = find_entry(entries, name);
    REQUIRE_MESSAGE(e.has_value(), name);
    CHECK(e->signed_map.has_value());
  }
  int absent = 0;
  for (const auto& e : entries) absent += !e.signed_map.has_value();
  CHECK(absent == 13);
  CHECK_FALSE(find_entry(entries, "nonspherical").has_value());
}

TEST_CASE("catalog maps are the expected graphs") {
  const auto entries = load_catalog();
  CHECK(is_isomorphic(find_entry(entries, "2_1")->signed_map->map, digon(),
                      OrientationPolicy::either));
  CHECK(is_isomorphic(find_entry(entries, "trefoil")->signed_map->map, triangle(),
                      OrientationPolicy::either));
  CHECK(is_isomorphic(find_entry(entries, "borromean_K4")->signed_map->map, k4(),
                      OrientationPolicy::either));
  CHECK(is_isomorphic(find_entry(entries, "H_fig16")->signed_map->map, medial(digon()).map,
                      OrientationPolicy::either));
}

TEST_CASE("the first census row") {
  const auto e = *find_entry(load_catalog(), "2_1");
  CHECK(e.expected.alpha2 == std::optional<std::string>("color-preserving,sign-preserving"));
  const auto p = compute_properties(*e.signed_map);
  CHECK(p.alpha2 == "color-preserving,sign-preserving");
  CHECK(p.alternating);
  CHECK(p.self_dual);
  CHECK_FALSE(p.antipodally_self_dual);
  CHECK(p.antipodally_symmetric);
  CHECK(p.projective);
}

TEST_CASE("full regression has no failures") {
  const auto report = run_regression(load_catalog());
  CHECK(report.ok());
  CHECK(report.failed == 0);
  CHECK(report.passed > 0);
  CHECK(report.absent > 0);
  CHECK(report.unrecorded > 0);
  for (const auto& r : report.results) {
    if (r.outcome == Outcome::fail) FAIL(r.entry << "." << r.field);
  }
}

TEST_CASE("a tampered expectation produces exactly one failure") {
  auto entries = load_catalog();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [](const auto& e) { return e.name == "borromean_K4"; });
  it->expected.projective = true;
  const auto report = run_regression(entries);
  CHECK(report.failed == 1);
  const auto failed = std::find_if(report.results.begin(), report.results.end(),
                                   [](const auto& r) { return r.outcome == Outcome::fail; });
  CHECK(failed->entry == "borromean_K4");
  CHECK(failed->field == "projective");
}

TEST_CASE("regression does not depend on entry order") {
  auto entries = load_catalog();
  const auto forward = run_regression(entries);
  std::reverse(entries.begin(), entries.end());
  const auto backward = run_regression(entries);
  REQUIRE(forward.results.size() == backward.results.size());
  for (std::size_t i = 0; i < forward.results.size(); ++i) {
    CHECK(forward.results[i].entry == backward.results[i].entry);
    CHECK(forward.results[i].field == backward.results[i].field);
    CHECK(forward.results[i].outcome == backward.results[i].outcome);
  }
}

TEST_CASE("unrecorded and absent fields") {
  const auto parsed = parse_catalog_json(R"({
    "name": "partial", "rotations": [[0, 2], [1, 3]], "pairing": [1, 0, 3, 2],
    "edge_signs": ["+", "+"], "expected": {"projective": true}})");
  REQUIRE(parsed.size() == 1);
  const auto report = run_regression(parsed);
  CHECK(report.passed == 1);
  CHECK(report.unrecorded == 6);

  const auto missing = parse_catalog_json(R"({"entries": [{"name": "drawn", "expected": {"projective": true}}]})");
  const auto r2 = run_regression(missing);
  CHECK(r2.absent == 7);
  CHECK(r2.passed == 0);
}

TEST_CASE("catalog parse errors") {
  CHECK(parse_catalog_json(R"({"rotations": [[0], [1]], "pairing": [1, 0]})").empty());
  CHECK_THROWS_AS(parse_catalog_json(R"({"expected": {}})"), Error);
  CHECK_THROWS_AS(parse_catalog_json(R"({"name": "x", "expected": {"projective": 1}})"), Error);
  CHECK_THROWS_AS(parse_catalog_json(R"({"name": "x", "rotations": [[0], [1]],
      "pairing": [1, 0], "expected": {}})"),
                  Error);
}
