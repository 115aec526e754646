#include "maps.hpp"

#include <algorithm>

namespace projlink::testing {

namespace {

std::vector<Dart> consecutive_pairing(int edges) {
  std::vector<Dart> p;
  for (int e = 0; e < edges; ++e) {
    p.push_back(2 * e + 1);
    p.push_back(2 * e);
  }
  return p;
}

void insert_before(std::vector<Dart>& rotation, Dart at, Dart added) {
  rotation.insert(std::find(rotation.begin(), rotation.end(), at), added);
}

}  // namespace

PlanarMap triangle() { return build_map({{0, 5}, {1, 2}, {3, 4}}, consecutive_pairing(3)); }

PlanarMap digon() { return build_map({{0, 2}, {1, 3}}, consecutive_pairing(2)); }

PlanarMap k4() { return build_map({{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}}, k4_pairing()); }

PlanarMap four_parallel() {
  return build_map({{0, 2, 4, 6}, {7, 5, 3, 1}}, consecutive_pairing(4));
}

std::vector<std::vector<Dart>> k4_torus_rotations() {
  return {{0, 4, 2}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}};
}

std::vector<Dart> k4_pairing() { return consecutive_pairing(6); }

PlanarMap random_map(std::mt19937_64& rng, int edges) {
  std::vector<std::vector<Dart>> rot{{0}, {1}};
  int e = 1;
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  while (e < edges) {
    const PlanarMap m = build_map(rot, consecutive_pairing(e));
    const Dart a = 2 * e;
    const Dart b = 2 * e + 1;
    if (pick(2) == 0) {
      // New leaf in the corner just before a random dart.
      const Dart y = pick(m.num_darts());
      insert_before(rot[static_cast<std::size_t>(m.vertex_of(y))], y, a);
      rot.push_back({b});
    } else {
      // Chord between two corners of one face; the corner before y lies in face_of(y).
      const auto& walk = m.faces()[static_cast<std::size_t>(pick(m.num_faces()))];
      const Dart y1 = walk[static_cast<std::size_t>(pick(static_cast<int>(walk.size())))];
      const Dart y2 = walk[static_cast<std::size_t>(pick(static_cast<int>(walk.size())))];
      insert_before(rot[static_cast<std::size_t>(m.vertex_of(y1))], y1, a);
      insert_before(rot[static_cast<std::size_t>(m.vertex_of(y2))], y2, b);
    }
    ++e;
  }
  return build_map(rot, consecutive_pairing(e));
}

std::vector<Sign> random_signs(std::mt19937_64& rng, int edges) {
  std::vector<Sign> s;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < edges; ++i) s.push_back(coin(rng) ? Sign::plus : Sign::minus);
  return s;
}

std::vector<PlanarMap> random_corpus(int count, int max_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PlanarMap> out;
  for (int i = 0; i < count; ++i) {
    const int edges = std::uniform_int_distribution<int>(1, max_edges)(rng);
    out.push_back(random_map(rng, edges));
  }
  return out;
}

}  // namespace projlink::testing
