#pragma once

// Edge-signed maps, checkerboard colorings and the Tait graph <-> link
// diagram correspondence.
//
// Conventions
// -----------
// * The medial map of an edge-signed map is the diagram shadow. Its faces
//   around vertices of the map are black, faces inside faces of the map are
//   white, so the black checkerboard graph is the map itself and the white
//   one is its dual.
// * Edge sign, seen from black: stand in a black region facing the crossing.
//   A positive crossing has the strand on the left passing over the strand on
//   the right. Seen from white the same crossing reads negative.
// * PD code: one entry per crossing, four arc labels listed counterclockwise
//   starting from the incoming under-strand. Crossing i of a diagram built
//   from a map is edge i of that map.
// * A PD code fixes the shadow but not which checkerboard class is black.
//   `first_crossing_sign` records the sign of crossing 0 as seen from black;
//   it defaults to positive when a bare PD string is parsed.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "projlink/combmap.hpp"
#include "projlink/laurent.hpp"

namespace projlink {

enum class Sign : std::int8_t { minus = -1, plus = 1 };
enum class Color : std::int8_t { black, white };

inline Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }

struct EdgeSignedMap {
  PlanarMap map;
  std::vector<Sign> signs;  // one per edge

  /// Throws MalformedPairing when the sign count differs from the edge count.
  static EdgeSignedMap make(PlanarMap map, std::vector<Sign> signs);
  static EdgeSignedMap constant(PlanarMap map, Sign s);
};

/// -S_E: every sign flipped.
EdgeSignedMap negate(const EdgeSignedMap& g);

/// Isomorphisms that also carry each edge to an edge of the same sign.
std::optional<MapIsomorphism> is_isomorphic_signed(const EdgeSignedMap& a,
                                                   const EdgeSignedMap& b,
                                                   OrientationPolicy policy);

/// Proper 2-coloring of the faces of a 4-regular map with `black_face` black.
/// Throws NotEulerian on any vertex of degree other than 4.
std::vector<Color> checkerboard(const PlanarMap& m, int black_face = 0);

/// Canonical coloring of a medial map: vertex-type faces black.
std::vector<Color> checkerboard(const Medial& med);

struct LabeledMedial {
  Medial medial;
  std::vector<Color> face_colors;  // C_F
  std::vector<Sign> vertex_signs;  // S_V, lifted from the edge signs
  EdgeSignedMap source;
};

LabeledMedial labeled_medial(const EdgeSignedMap& g);

struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;
  /// Components with no crossing at all.
  int free_loops = 0;
  Sign first_crossing_sign = Sign::plus;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// Each arc label must occur exactly twice. Throws ParseError otherwise.
void validate(const LinkDiagram& d);

/// The 4-regular shadow: crossing c owns darts 4c..4c+3 in PD order.
/// Throws when the diagram has free loops or a disconnected shadow.
PlanarMap shadow(const LinkDiagram& d);

LinkDiagram tait_to_diagram(const EdgeSignedMap& g);

/// black: (B_D, S_E); white: (W_D, -S_E). Crossing c becomes edge c with
/// darts 2c (first region counterclockwise) and 2c+1.
EdgeSignedMap diagram_to_tait(const LinkDiagram& d, Color side);

/// True when all signs agree, i.e. D(G, S_E) alternates.
bool is_alternating_signature(const EdgeSignedMap& g);

int component_count(const LinkDiagram& d);

/// Kauffman bracket by summing over all 2^n smoothings, normalized to 1 on
/// the crossingless unknot, with loop value d = -A^2 - A^-2. X[i,j,k,l]
/// smooths to (i,j)(k,l) with weight A and to (i,l)(j,k) with weight A^-1.
/// Throws TooLarge above `max_crossings`.
LaurentPolynomial kauffman_bracket(const LinkDiagram& d, int max_crossings = 20);

}  // namespace projlink
