#pragma once

// Projectivity of the link presented by an edge-signed map, and the numeric
// check of the negative-inversion identity behind the RP^3 correspondence.
//
// The decision is about the given presentation L(G, S_E): the medial map must
// admit an antipodal involution that is either color- and sign-preserving or
// color- and sign-reversing. Whether some other presentation of the same link
// works is not searched.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "projlink/symmetry.hpp"
#include "projlink/taitlink.hpp"

namespace projlink {

enum class Behaviour { preserving, reversing, neither };

struct Alpha2Classification {
  Behaviour color = Behaviour::neither;
  Behaviour sign = Behaviour::neither;

  friend bool operator==(const Alpha2Classification&, const Alpha2Classification&) = default;
};

/// Throws NotAWitness when w is not an antipodal involution of lm.medial.map.
Alpha2Classification classify_witness(const LabeledMedial& lm, const AntipodalWitness& w);

struct ClassifiedWitness {
  AntipodalWitness witness;
  Alpha2Classification classification;
};

struct ProjectivityReport {
  bool medial_antipodal = false;
  std::vector<ClassifiedWitness> witnesses;
  bool projective = false;
  std::optional<int> accepting_witness;  // index of the first accepting witness
};

bool accepts(const Alpha2Classification& c);

/// Every antipodal involution of the medial map is enumerated and classified.
ProjectivityReport check_projective(const EdgeSignedMap& g);

/// True when every antipodal involution of medial(g) is color-reversing under
/// the canonical coloring. Throws NotAntipodallySelfDual when g has no
/// antipodal self-duality.
bool antipodal_self_duality_forces_color_reversal(const PlanarMap& g);

enum class NonalternatingVerdict { forces_nonalternating, inconclusive };

/// forces_nonalternating when every accepting witness is color-reversing,
/// since a sign-reversing involution needs both signs. Throws NotProjective
/// when the report does not accept, InternalContradiction when the verdict
/// disagrees with a constant signature.
NonalternatingVerdict nonalternating_criterion(const EdgeSignedMap& g,
                                               const ProjectivityReport& report);

// ---- negative inversion -------------------------------------------------

/// Unit vector in R^4. make() normalizes and rejects the zero vector.
struct SpherePoint4 {
  std::array<double, 4> x{};

  static SpherePoint4 make(std::array<double, 4> v);
};

/// R^3 together with a point at infinity.
struct ExtendedPoint3 {
  bool at_infinity = false;
  std::array<double, 3> v{};

  static ExtendedPoint3 infinity() { return {true, {}}; }
};

/// Stereographic projection from (0,0,0,1): (x,y,z,w) -> (x,y,z)/(1-w).
ExtendedPoint3 stereographic(const SpherePoint4& p);

/// Inversion in the unit sphere, swapping 0 and infinity.
ExtendedPoint3 inversion(const ExtendedPoint3& p);

ExtendedPoint3 negate(const ExtendedPoint3& p);

/// Distance between -inversion(stereographic(x)) and stereographic(-x); zero
/// when both are at infinity. Throws PoleInput when exactly one is.
double inversion_identity_residual(const SpherePoint4& x);

struct InversionCheck {
  int samples = 0;
  double max_residual = 0.0;
  double pole_residual_north = 0.0;  // x = (0,0,0,1)
  double pole_residual_south = 0.0;  // x = (0,0,0,-1)
  bool passed = false;               // every residual below the tolerance
};

inline constexpr double kInversionTolerance = 1e-12;

/// `samples` uniform points from a seeded Gaussian generator, plus both poles.
InversionCheck verify_inversion_identity(int samples, std::uint64_t seed);

}  // namespace projlink
