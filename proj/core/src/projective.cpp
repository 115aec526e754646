#include "projlink/projective.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "projlink/error.hpp"

namespace projlink {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

template <typename T>
Behaviour pair_behaviour(const std::vector<T>& label, const std::vector<int>& perm) {
  bool same = false;
  bool differ = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    (label[i] == label[ix(perm[i])] ? same : differ) = true;
  }
  if (same && differ) return Behaviour::neither;
  return differ ? Behaviour::reversing : Behaviour::preserving;
}

}  // namespace

Alpha2Classification classify_witness(const LabeledMedial& lm, const AntipodalWitness& w) {
  const PlanarMap& m = lm.medial.map;
  if (!is_antipodal_involution(m, w.involution)) {
    throw Error(ErrorCode::NotAWitness, "not an antipodal involution of this medial map");
  }
  return {pair_behaviour(lm.face_colors, face_permutation(m, m, w.involution)),
          pair_behaviour(lm.vertex_signs, vertex_permutation(m, m, w.involution))};
}

bool accepts(const Alpha2Classification& c) {
  return c.color != Behaviour::neither && c.color == c.sign;
}

ProjectivityReport check_projective(const EdgeSignedMap& g) {
  const LabeledMedial lm = labeled_medial(g);
  ProjectivityReport report;
  for (auto& w : antipodal_involutions(lm.medial.map)) {
    const auto c = classify_witness(lm, w);
    report.witnesses.push_back({std::move(w), c});
  }
  report.medial_antipodal = !report.witnesses.empty();
  for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
    if (accepts(report.witnesses[i].classification)) {
      report.projective = true;
      report.accepting_witness = static_cast<int>(i);
      break;
    }
  }
  return report;
}

bool antipodal_self_duality_forces_color_reversal(const PlanarMap& g) {
  if (!is_antipodally_self_dual(g)) {
    throw Error(ErrorCode::NotAntipodallySelfDual, "map has no antipodal self-duality");
  }
  const auto report = check_projective(EdgeSignedMap::constant(g, Sign::plus));
  return std::all_of(report.witnesses.begin(), report.witnesses.end(), [](const auto& cw) {
    return cw.classification.color == Behaviour::reversing;
  });
}

NonalternatingVerdict nonalternating_criterion(const EdgeSignedMap& g,
                                               const ProjectivityReport& report) {
  if (!report.projective) {
    throw Error(ErrorCode::NotProjective, "criterion needs a projective presentation");
  }
  bool all_reversing = true;
  for (const auto& cw : report.witnesses) {
    if (accepts(cw.classification) && cw.classification.color != Behaviour::reversing) {
      all_reversing = false;
    }
  }
  if (!all_reversing) return NonalternatingVerdict::inconclusive;
  if (is_alternating_signature(g)) {
    throw Error(ErrorCode::InternalContradiction,
                "color-reversing acceptance on a constant signature");
  }
  return NonalternatingVerdict::forces_nonalternating;
}

SpherePoint4 SpherePoint4::make(std::array<double, 4> v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
  if (!(n > 0.0)) throw Error(ErrorCode::PoleInput, "cannot normalize the zero vector");
  for (double& c : v) c /= n;
  return {v};
}

ExtendedPoint3 stereographic(const SpherePoint4& p) {
  const double denom = 1.0 - p.x[3];
  if (denom == 0.0) return ExtendedPoint3::infinity();
  return {false, {p.x[0] / denom, p.x[1] / denom, p.x[2] / denom}};
}

ExtendedPoint3 inversion(const ExtendedPoint3& p) {
  if (p.at_infinity) return {false, {0.0, 0.0, 0.0}};
  const double r2 = p.v[0] * p.v[0] + p.v[1] * p.v[1] + p.v[2] * p.v[2];
  if (r2 == 0.0) return ExtendedPoint3::infinity();
  return {false, {p.v[0] / r2, p.v[1] / r2, p.v[2] / r2}};
}

ExtendedPoint3 negate(const ExtendedPoint3& p) {
  if (p.at_infinity) return p;
  return {false, {-p.v[0], -p.v[1], -p.v[2]}};
}

double inversion_identity_residual(const SpherePoint4& x) {
  const ExtendedPoint3 lhs = negate(inversion(stereographic(x)));
  const SpherePoint4 minus_x{{-x.x[0], -x.x[1], -x.x[2], -x.x[3]}};
  const ExtendedPoint3 rhs = stereographic(minus_x);
  if (lhs.at_infinity && rhs.at_infinity) return 0.0;
  if (lhs.at_infinity != rhs.at_infinity) {
    throw Error(ErrorCode::PoleInput, "exactly one side is the point at infinity");
  }
  const double dx = lhs.v[0] - rhs.v[0];
  const double dy = lhs.v[1] - rhs.v[1];
  const double dz = lhs.v[2] - rhs.v[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

InversionCheck verify_inversion_identity(int samples, std::uint64_t seed) {
  InversionCheck out;
  out.samples = samples;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    std::array<double, 4> v{};
    do {
      for (double& c : v) c = normal(rng);
    } while (v == std::array<double, 4>{});
    out.max_residual =
        std::max(out.max_residual, inversion_identity_residual(SpherePoint4::make(v)));
  }
  out.pole_residual_north = inversion_identity_residual({{0.0, 0.0, 0.0, 1.0}});
  out.pole_residual_south = inversion_identity_residual({{0.0, 0.0, 0.0, -1.0}});
  out.max_residual =
      std::max({out.max_residual, out.pole_residual_north, out.pole_residual_south});
  out.passed = out.max_residual < kInversionTolerance;
  return out;
}

}  // namespace projlink
