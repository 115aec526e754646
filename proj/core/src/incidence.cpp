#include "projlink/incidence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "projlink/symmetry.hpp"

namespace projlink {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

IncidenceMap incidence_graph(const PlanarMap& g) {
  const Medial med = medial(g);
  IncidenceMap out{dual(med.map), {}};
  for (const auto& tag : med.face_tags) {
    out.vertex_tags.push_back({tag.kind == FaceTag::Kind::vertex ? IncidenceVertex::Kind::primal
                                                                  : IncidenceVertex::Kind::dual,
                               tag.index});
  }
  return out;
}

std::vector<Cycle> simple_cycles(const PlanarMap& m, int max_length) {
  std::vector<Cycle> out;
  const int n = m.num_vertices();
  std::vector<char> on_path(ix(n), 0);
  Cycle path;

  for (int s = 0; s < n; ++s) {
    std::function<void(int)> extend = [&](int v) {
      for (Dart d : m.rotations()[ix(v)]) {
        const int e = m.edge_of(d);
        const int w = m.vertex_of(m.pair(d));
        if (!path.edges.empty() && e == path.edges.back()) continue;
        if (w == s) {
          if (path.edges.empty()) {
            if (d < m.pair(d) && max_length >= 1) out.push_back({{s}, {e}});
            continue;
          }
          if (path.edges.front() < e &&
              path.length() + 1 <= max_length) {
            Cycle c = path;
            c.edges.push_back(e);
            out.push_back(std::move(c));
          }
          continue;
        }
        if (w < s || on_path[ix(w)] || path.length() + 2 > max_length) continue;
        on_path[ix(w)] = 1;
        path.vertices.push_back(w);
        path.edges.push_back(e);
        extend(w);
        path.vertices.pop_back();
        path.edges.pop_back();
        on_path[ix(w)] = 0;
      }
    };
    path.vertices = {s};
    path.edges.clear();
    on_path[ix(s)] = 1;
    extend(s);
    on_path[ix(s)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleSides cycle_sides(const PlanarMap& m, const Cycle& c) {
  std::vector<char> cut(ix(m.num_edges()), 0);
  for (int e : c.edges) cut[ix(e)] = 1;
  CycleSides sides;
  sides.face_side.assign(ix(m.num_faces()), -1);
  int next_side = 0;
  for (int f0 = 0; f0 < m.num_faces(); ++f0) {
    if (sides.face_side[ix(f0)] != -1) continue;
    if (next_side == 2) throw std::logic_error("simple cycle with more than two sides");
    std::vector<int> stack{f0};
    sides.face_side[ix(f0)] = next_side;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (Dart d : m.faces()[ix(f)]) {
        if (cut[ix(m.edge_of(d))]) continue;
        const int g = m.face_of(m.pair(d));
        if (sides.face_side[ix(g)] == -1) {
          sides.face_side[ix(g)] = next_side;
          stack.push_back(g);
        }
      }
    }
    ++next_side;
  }
  if (next_side != 2) throw std::logic_error("simple cycle with one side");

  std::vector<char> on_cycle(ix(m.num_vertices()), 0);
  for (int v : c.vertices) on_cycle[ix(v)] = 1;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (on_cycle[ix(v)]) continue;
    const Dart d = m.rotations()[ix(v)].front();
    sides.side_vertices[sides.face_side[ix(m.face_of(d))]].push_back(v);
  }
  return sides;
}

bool realizes_symmetry(const PlanarMap& m, const Cycle& c, const CycleSides& sides,
                       const MapIsomorphism& iso) {
  const auto ep = edge_permutation(m, m, iso);
  const std::set<int> edges(c.edges.begin(), c.edges.end());
  for (int e : c.edges) {
    if (!edges.count(ep[ix(e)])) return false;
  }
  const auto fp = face_permutation(m, m, iso);
  for (std::size_t f = 0; f < fp.size(); ++f) {
    if (sides.face_side[f] == sides.face_side[ix(fp[f])]) return false;
  }
  return true;
}

std::vector<SymmetricCycle> symmetric_cycles(const PlanarMap& g, int max_length) {
  const IncidenceMap inc = incidence_graph(g);
  const PlanarMap& m = inc.map;
  if (max_length <= 0) max_length = m.num_vertices();
  const auto autos = automorphisms(m, OrientationPolicy::either);
  std::vector<char> antipodal(autos.size(), 0);
  for (std::size_t i = 0; i < autos.size(); ++i) {
    antipodal[i] = is_antipodal_involution(m, autos[i]) ? 1 : 0;
  }

  std::vector<SymmetricCycle> out;
  for (const auto& c : simple_cycles(m, max_length)) {
    const CycleSides sides = cycle_sides(m, c);
    std::optional<std::size_t> first;
    std::optional<std::size_t> first_antipodal;
    for (std::size_t i = 0; i < autos.size() && !first_antipodal; ++i) {
      if (!realizes_symmetry(m, c, sides, autos[i])) continue;
      if (!first) first = i;
      if (antipodal[i]) first_antipodal = i;
    }
    if (!first) continue;
    const std::size_t pick = first_antipodal.value_or(*first);
    if (c.length() % 2 != 0) throw std::logic_error("odd cycle in a bipartite incidence graph");
    out.push_back({c, autos[pick], c.length() / 2, first_antipodal.has_value()});
  }
  return out;
}

MapIsomorphism incidence_automorphism(const PlanarMap& medial_map, const MapIsomorphism& tau) {
  if (tau.orientation == Orientation::preserving) return tau;
  MapIsomorphism out = tau;
  for (auto& y : out.darts) y = medial_map.pair(y);
  return out;
}

ParityReport parity_consistency(const EdgeSignedMap& g, const ProjectivityReport& report,
                                const std::vector<SymmetricCycle>& cycles) {
  ParityReport out;
  if (!report.projective) return out;
  out.applicable = true;
  const Medial med = medial(g.map);
  const PlanarMap inc = dual(med.map);
  for (std::size_t w = 0; w < report.witnesses.size(); ++w) {
    const auto& cw = report.witnesses[w];
    if (!accepts(cw.classification)) continue;
    const MapIsomorphism sigma = incidence_automorphism(med.map, cw.witness.involution);
    if (!verify_isomorphism(inc, inc, sigma)) {
      throw std::logic_error("medial witness does not transport to the incidence map");
    }
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      const auto& sc = cycles[k];
      if (!sc.antipodally_realized) continue;
      if (!realizes_symmetry(inc, sc.cycle, cycle_sides(inc, sc.cycle), sigma)) continue;
      ParityCheck check;
      check.cycle = static_cast<int>(k);
      check.witness = static_cast<int>(w);
      check.half_length = sc.half_length;
      check.color = cw.classification.color;
      check.expected_odd = cw.classification.color == Behaviour::reversing;
      check.matches = (sc.half_length % 2 == 1) == check.expected_odd;
      ++(check.matches ? out.matches : out.mismatches);
      out.checks.push_back(check);
    }
  }
  return out;
}

}  // namespace projlink
