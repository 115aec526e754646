#include "doctest.h"
#include "maps.hpp"
#include "projlink/symmetry.hpp"
#include "projlink/taitlink.hpp"

using namespace projlink;
using namespace projlink::testing;

TEST_CASE("automorphism groups of the small maps") {
  CHECK(automorphisms(triangle(), OrientationPolicy::preserving).size() == 6);
  CHECK(automorphisms(triangle(), OrientationPolicy::either).size() == 12);
  CHECK(automorphisms(digon(), OrientationPolicy::either).size() == 8);
  CHECK(automorphisms(k4(), OrientationPolicy::reversing).size() == 12);
}

TEST_CASE("antipodal involutions") {
  SUBCASE("the digon is antipodally symmetric") {
    const auto all = antipodal_involutions(digon());
    REQUIRE(all.size() == 1);
    CHECK(is_antipodal_involution(digon(), all.front().involution));
    CHECK(all.front().kind == WitnessKind::symmetry);
  }
  SUBCASE("an odd face count rules it out") {
    CHECK_FALSE(is_antipodally_symmetric(triangle()));
    CHECK(medial(triangle()).map.num_faces() == 5);
    CHECK_FALSE(is_antipodally_symmetric(medial(triangle()).map));
  }
  SUBCASE("K4 is not, its medial the octahedron is") {
    CHECK_FALSE(is_antipodally_symmetric(k4()));
    CHECK(antipodal_involutions(medial(k4()).map).size() == 1);
  }
  SUBCASE("identity and preserving automorphisms are rejected") {
    const PlanarMap m = medial(k4()).map;
    CHECK_FALSE(is_antipodal_involution(m, identity_isomorphism(m)));
    for (const auto& a : automorphisms(m, OrientationPolicy::preserving)) {
      CHECK_FALSE(is_antipodal_involution(m, a));
    }
  }
}

TEST_CASE("self-duality") {
  CHECK(is_self_dual(digon()).has_value());
  CHECK(is_self_dual(k4()).has_value());
  CHECK_FALSE(is_self_dual(triangle()).has_value());
  const auto iso = is_self_dual(k4());
  CHECK(verify_isomorphism(k4(), dual(k4()), *iso));
}

TEST_CASE("antipodal self-duality") {
  SUBCASE("K4 has one, with a verified orientation-reversing duality") {
    const auto all = antipodal_self_dualities(k4());
    REQUIRE(all.size() == 1);
    const auto& w = all.front();
    CHECK(w.kind == WitnessKind::self_duality);
    REQUIRE(w.duality.has_value());
    CHECK(w.duality->orientation == Orientation::reversing);
    CHECK(verify_isomorphism(k4(), dual(k4()), *w.duality));
    // The medial involution swaps vertex-type and face-type regions.
    const Medial med = medial(k4());
    const auto fp = face_permutation(med.map, med.map, w.involution);
    for (std::size_t f = 0; f < fp.size(); ++f) {
      CHECK(med.face_tags[f].kind != med.face_tags[static_cast<std::size_t>(fp[f])].kind);
    }
  }
  SUBCASE("self-dual but not antipodally self-dual") {
    CHECK(is_self_dual(digon()).has_value());
    CHECK_FALSE(is_antipodally_self_dual(digon()).has_value());
  }
  SUBCASE("not self-dual at all") { CHECK_FALSE(is_antipodally_self_dual(triangle())); }
}

TEST_CASE("an antipodal self-duality implies a symmetric medial") {
  for (const PlanarMap& m : random_corpus(120, 7, 99)) {
    if (is_antipodally_self_dual(m)) {
      CHECK(is_self_dual(m).has_value());
      CHECK(is_antipodally_symmetric(medial(m).map).has_value());
    }
  }
}

TEST_CASE("every antipodal witness found on a random map has an even face count") {
  for (const PlanarMap& m : random_corpus(200, 8, 7)) {
    for (const PlanarMap* x : {&m}) {
      if (!antipodal_involutions(*x).empty()) CHECK(x->num_faces() % 2 == 0);
    }
  }
}
