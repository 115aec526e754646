#pragma once

// Vertex-face incidence graph I(G) embedded on the sphere, and its symmetric
// cycles.
//
// I(G) is built as the dual of the medial map, so it shares darts with the
// medial: incidence edge k is corner k of G (darts 2k, 2k+1), incidence
// vertex i is medial face i, and incidence face j is medial vertex j, i.e.
// edge j of G. A vertex met k times along a face walk gets k parallel edges.

#include <optional>
#include <vector>

#include "projlink/combmap.hpp"
#include "projlink/projective.hpp"

namespace projlink {

struct IncidenceVertex {
  enum class Kind { primal, dual };
  Kind kind = Kind::primal;
  int index = 0;  // vertex of G (primal) or face of G (dual)

  friend bool operator==(const IncidenceVertex&, const IncidenceVertex&) = default;
};

struct IncidenceMap {
  PlanarMap map;
  std::vector<IncidenceVertex> vertex_tags;
};

IncidenceMap incidence_graph(const PlanarMap& g);

/// Cycle given by its vertices in order and edge i joining vertices i and
/// i+1 (cyclically). Starts at its least vertex, first edge id below last.
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Every simple cycle with at most max_length edges, sorted.
std::vector<Cycle> simple_cycles(const PlanarMap& m, int max_length);

/// The two regions a simple cycle cuts the sphere into. Side 0 holds face 0.
struct CycleSides {
  std::vector<int> face_side;  // 0 or 1 per face
  std::vector<int> side_vertices[2];  // vertices off the cycle, by side
};

CycleSides cycle_sides(const PlanarMap& m, const Cycle& c);

/// True when iso maps the cycle onto itself and exchanges its two sides.
bool realizes_symmetry(const PlanarMap& m, const Cycle& c, const CycleSides& sides,
                       const MapIsomorphism& iso);

struct SymmetricCycle {
  Cycle cycle;
  MapIsomorphism sigma;
  int half_length = 0;
  /// Some realizing automorphism is an antipodal involution; sigma is then
  /// the least such.
  bool antipodally_realized = false;
};

/// max_length <= 0 means the number of incidence vertices.
std::vector<SymmetricCycle> symmetric_cycles(const PlanarMap& g, int max_length = 0);

/// Transport of a medial automorphism to I(G): itself when orientation
/// preserving, composed with the dart pairing when reversing.
MapIsomorphism incidence_automorphism(const PlanarMap& medial_map, const MapIsomorphism& tau);

struct ParityCheck {
  int cycle = 0;    // index into the cycles passed in
  int witness = 0;  // index into report.witnesses
  int half_length = 0;
  Behaviour color = Behaviour::neither;
  bool expected_odd = false;  // color-reversing predicts odd n
  bool matches = false;
};

struct ParityReport {
  bool applicable = false;  // false unless the report is projective
  std::vector<ParityCheck> checks;
  int matches = 0;
  int mismatches = 0;
};

/// Compares the half-length of each antipodally realized cycle against the
/// color class of every accepting witness that realizes it. Reports, never
/// throws on a mismatch.
ParityReport parity_consistency(const EdgeSignedMap& g, const ProjectivityReport& report,
                                const std::vector<SymmetricCycle>& cycles);

}  // namespace projlink
