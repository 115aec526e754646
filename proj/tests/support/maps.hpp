#pragma once

#include <random>
#include <vector>

#include "projlink/combmap.hpp"
#include "projlink/taitlink.hpp"

namespace projlink::testing {

PlanarMap triangle();
PlanarMap digon();
PlanarMap k4();
/// Two vertices joined by four parallel edges.
PlanarMap four_parallel();
/// K4 with one rotation reversed: embeds on the torus, not the sphere.
std::vector<std::vector<Dart>> k4_torus_rotations();
std::vector<Dart> k4_pairing();

/// Random connected sphere map with exactly `edges` edges, grown by adding
/// leaves and chords inside faces. Loops and parallel edges occur.
PlanarMap random_map(std::mt19937_64& rng, int edges);

std::vector<Sign> random_signs(std::mt19937_64& rng, int edges);

/// `count` random maps with 1..max_edges edges from a fixed seed.
std::vector<PlanarMap> random_corpus(int count, int max_edges, std::uint64_t seed);

}  // namespace projlink::testing
