#pragma once

// Automorphisms and antipodal symmetry of sphere maps.
//
// The antipodal map of the sphere reverses orientation and has no fixed
// point. On a map this becomes: an orientation-reversing automorphism that is
// an involution and fixes no vertex, no edge and no face (each as a set). A
// cell fixed setwise would force a fixed point of any realizing
// homeomorphism, and an orientation-reversing involution of the sphere
// without fixed points is conjugate to the antipodal map.
//
// All decisions are about the embedding given; re-embeddings are not searched.

#include <optional>
#include <vector>

#include "projlink/combmap.hpp"

namespace projlink {

enum class WitnessKind { symmetry, self_duality };

struct AntipodalWitness {
  /// symmetry: an antipodal involution of the map itself.
  /// self_duality: an antipodal involution of the medial map that swaps the
  /// vertex-type and face-type medial faces.
  MapIsomorphism involution;
  WitnessKind kind = WitnessKind::symmetry;
  /// self_duality only: the induced orientation-reversing isomorphism from
  /// the map onto its dual (dual darts as produced by dual()).
  std::optional<MapIsomorphism> duality;
};

/// Complete, verified, sorted. `either` means both orientations.
std::vector<MapIsomorphism> automorphisms(const PlanarMap& m, OrientationPolicy policy);

/// True when `iso` is an orientation-reversing involutive automorphism of m
/// with no fixed vertex, edge or face.
bool is_antipodal_involution(const PlanarMap& m, const MapIsomorphism& iso);

std::vector<AntipodalWitness> antipodal_involutions(const PlanarMap& m);

std::optional<AntipodalWitness> is_antipodally_symmetric(const PlanarMap& m);

/// Isomorphism m -> dual(m), either orientation.
std::optional<MapIsomorphism> is_self_dual(const PlanarMap& m);

/// All antipodal self-dualities, one per color-reversing antipodal
/// involution of the medial map.
std::vector<AntipodalWitness> antipodal_self_dualities(const PlanarMap& m);

std::optional<AntipodalWitness> is_antipodally_self_dual(const PlanarMap& m);

}  // namespace projlink
