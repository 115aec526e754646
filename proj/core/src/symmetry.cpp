#include "projlink/symmetry.hpp"

#include <stdexcept>

namespace projlink {

namespace {
std::size_t ix(int i) { return static_cast<std::size_t>(i); }
}  // namespace

std::vector<MapIsomorphism> automorphisms(const PlanarMap& m, OrientationPolicy policy) {
  auto autos = find_isomorphisms(m, m, policy);
  for (const auto& a : autos) {
    if (!verify_isomorphism(m, m, a)) {
      throw std::logic_error("automorphism search returned an invalid map");
    }
  }
  return autos;
}

bool is_antipodal_involution(const PlanarMap& m, const MapIsomorphism& iso) {
  if (iso.orientation != Orientation::reversing) return false;
  if (!verify_isomorphism(m, m, iso)) return false;
  for (Dart d = 0; d < m.num_darts(); ++d) {
    if (iso(iso(d)) != d) return false;
  }
  const auto vp = vertex_permutation(m, m, iso);
  for (std::size_t v = 0; v < vp.size(); ++v) {
    if (vp[v] == static_cast<int>(v)) return false;
  }
  const auto ep = edge_permutation(m, m, iso);
  for (std::size_t e = 0; e < ep.size(); ++e) {
    if (ep[e] == static_cast<int>(e)) return false;
  }
  const auto fp = face_permutation(m, m, iso);
  for (std::size_t f = 0; f < fp.size(); ++f) {
    if (fp[f] == static_cast<int>(f)) return false;
  }
  return true;
}

std::vector<AntipodalWitness> antipodal_involutions(const PlanarMap& m) {
  std::vector<AntipodalWitness> out;
  for (auto& a : automorphisms(m, OrientationPolicy::reversing)) {
    if (is_antipodal_involution(m, a)) {
      out.push_back(AntipodalWitness{std::move(a), WitnessKind::symmetry, std::nullopt});
    }
  }
  if (!out.empty() && m.num_faces() % 2 != 0) {
    throw std::logic_error("antipodal involution on a map with an odd face count");
  }
  return out;
}

std::optional<AntipodalWitness> is_antipodally_symmetric(const PlanarMap& m) {
  auto all = antipodal_involutions(m);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<MapIsomorphism> is_self_dual(const PlanarMap& m) {
  return is_isomorphic(m, dual(m), OrientationPolicy::either);
}

std::vector<AntipodalWitness> antipodal_self_dualities(const PlanarMap& m) {
  std::vector<AntipodalWitness> out;
  if (m.num_vertices() != m.num_faces()) return out;

  const Medial med = medial(m);
  const PlanarMap& mm = med.map;
  const PlanarMap d = dual(m);
  for (auto& w : antipodal_involutions(mm)) {
    const auto fp = face_permutation(mm, mm, w.involution);
    bool swaps = true;
    for (std::size_t f = 0; f < fp.size() && swaps; ++f) {
      swaps = med.face_tags[f].kind != med.face_tags[ix(fp[f])].kind;
    }
    if (!swaps) continue;

    // Dart d of the map is the region after medial dart 2d; dart d of the
    // dual is the region after medial dart 2*prev(d)+1. A reversing tau sends
    // the region after x to the region after prev(tau(x)).
    MapIsomorphism theta;
    theta.orientation = Orientation::reversing;
    theta.darts.resize(ix(m.num_darts()));
    for (Dart g = 0; g < m.num_darts(); ++g) {
      const Dart y = mm.prev(w.involution(2 * g));
      if (y % 2 != 1) throw std::logic_error("color-reversing involution landed on a vertex region");
      theta.darts[ix(g)] = m.next((y - 1) / 2);
    }
    if (!verify_isomorphism(m, d, theta)) {
      throw std::logic_error("induced duality is not an orientation-reversing isomorphism");
    }
    out.push_back(AntipodalWitness{std::move(w.involution), WitnessKind::self_duality,
                                   std::move(theta)});
  }
  return out;
}

std::optional<AntipodalWitness> is_antipodally_self_dual(const PlanarMap& m) {
  auto all = antipodal_self_dualities(m);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace projlink
