#pragma once

// Maps on the sphere encoded as rotation systems over darts.
//
// A map with E edges has 2E darts. Each dart belongs to one vertex rotation
// (its counterclockwise cyclic order around the vertex) and is paired with the
// other half of its edge by a fixed-point-free involution. Writing `next` for
// the rotation successor and `pair` for the involution, face walks are the
// orbits of `next(pair(d))`; the face of dart d is the region on its right.
//
// Everything here is immutable after construction.

#include <optional>
#include <utility>
#include <vector>

namespace projlink {

using Dart = int;

enum class Orientation { preserving, reversing };

enum class OrientationPolicy { preserving, reversing, either };

/// A dart bijection between two maps that commutes with the pairings and
/// carries rotations to rotations (reversed when orientation is reversing).
struct MapIsomorphism {
  std::vector<Dart> darts;
  Orientation orientation = Orientation::preserving;

  Dart operator()(Dart d) const { return darts[static_cast<std::size_t>(d)]; }

  friend bool operator==(const MapIsomorphism&, const MapIsomorphism&) = default;
  friend auto operator<=>(const MapIsomorphism& a, const MapIsomorphism& b) {
    if (auto c = a.darts <=> b.darts; c != 0) return c;
    return a.orientation <=> b.orientation;
  }
};

class PlanarMap {
 public:
  /// Validates and builds. Throws Error with MalformedPairing,
  /// MalformedRotation, NotConnected or NotSpherical.
  static PlanarMap build(std::vector<std::vector<Dart>> rotations,
                         std::vector<Dart> pairing);

  int num_darts() const { return static_cast<int>(pair_.size()); }
  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  Dart pair(Dart d) const { return pair_[idx(d)]; }
  Dart next(Dart d) const { return next_[idx(d)]; }
  Dart prev(Dart d) const { return prev_[idx(d)]; }
  Dart face_next(Dart d) const { return next(pair(d)); }

  int vertex_of(Dart d) const { return vertex_of_[idx(d)]; }
  int edge_of(Dart d) const { return edge_of_[idx(d)]; }
  int face_of(Dart d) const { return face_of_[idx(d)]; }

  /// Darts of edge e, smaller dart first. Edges are numbered by smaller dart.
  std::pair<Dart, Dart> edge_darts(int e) const { return edges_[idx(e)]; }

  int degree(int v) const { return static_cast<int>(rotations_[idx(v)].size()); }
  int face_degree(int f) const { return static_cast<int>(faces_[idx(f)].size()); }

  const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  const std::vector<Dart>& pairing() const { return pair_; }

  /// Dart-identical comparison: same rotation lists and the same pairing.
  friend bool operator==(const PlanarMap& a, const PlanarMap& b) {
    return a.rotations_ == b.rotations_ && a.pair_ == b.pair_;
  }

 private:
  PlanarMap() = default;
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  std::vector<std::vector<Dart>> rotations_;
  std::vector<Dart> pair_;
  std::vector<Dart> next_;
  std::vector<Dart> prev_;
  std::vector<int> vertex_of_;
  std::vector<int> edge_of_;
  std::vector<int> face_of_;
  std::vector<std::pair<Dart, Dart>> edges_;
  std::vector<std::vector<Dart>> faces_;
};

inline PlanarMap build_map(std::vector<std::vector<Dart>> rotations,
                           std::vector<Dart> pairing) {
  return PlanarMap::build(std::move(rotations), std::move(pairing));
}

/// Geometric dual on the same oriented sphere. Darts are shared: dual dart d
/// crosses the edge of d and leaves the face on the right of d. Dual vertex i
/// is face i of the input.
PlanarMap dual(const PlanarMap& m);

/// Medial faces come in two kinds: those surrounding a vertex of the source
/// map and those sitting inside one of its faces.
struct FaceTag {
  enum class Kind { vertex, face };
  Kind kind = Kind::vertex;
  int index = 0;

  friend bool operator==(const FaceTag&, const FaceTag&) = default;
};

struct Medial {
  PlanarMap map;
  /// Medial vertex v sits on edge source_edge[v] of the source map.
  std::vector<int> source_edge;
  /// One tag per medial face.
  std::vector<FaceTag> face_tags;
};

/// Medial map: one vertex per edge, one edge per corner.
///
/// Corner k is the angle between dart k and next(k). Medial edge k has darts
/// 2k (at the vertex of edge_of(k)) and 2k+1 (at the vertex of
/// edge_of(next(k))). Around the medial vertex of an edge with darts (lo, hi)
/// the rotation is
///     [2*prev(hi)+1, 2*lo, 2*prev(lo)+1, 2*hi]
/// so the regions after positions 1 and 3 surround the endpoints of the edge
/// and the regions after positions 0 and 2 lie in its two faces.
Medial medial(const PlanarMap& m);

/// Reverses every rotation list. mirror(mirror(m)) == m.
PlanarMap mirror(const PlanarMap& m);

/// Checks bijectivity, commutation with the pairings, and the rotation
/// relation required by iso.orientation.
bool verify_isomorphism(const PlanarMap& a, const PlanarMap& b,
                        const MapIsomorphism& iso);

/// Every isomorphism a -> b allowed by the policy, sorted.
std::vector<MapIsomorphism> find_isomorphisms(const PlanarMap& a,
                                              const PlanarMap& b,
                                              OrientationPolicy policy);

/// First isomorphism in sorted order, if any.
std::optional<MapIsomorphism> is_isomorphic(const PlanarMap& a,
                                            const PlanarMap& b,
                                            OrientationPolicy policy);

/// Images of vertices, edges and faces of a under an isomorphism a -> b.
std::vector<int> vertex_permutation(const PlanarMap& a, const PlanarMap& b,
                                    const MapIsomorphism& iso);
std::vector<int> edge_permutation(const PlanarMap& a, const PlanarMap& b,
                                  const MapIsomorphism& iso);
std::vector<int> face_permutation(const PlanarMap& a, const PlanarMap& b,
                                  const MapIsomorphism& iso);

MapIsomorphism identity_isomorphism(const PlanarMap& m);
MapIsomorphism inverse(const MapIsomorphism& iso);
/// (second after first)
MapIsomorphism compose(const MapIsomorphism& second, const MapIsomorphism& first);

/// Minimum breadth-first relabelling code over all root darts (and both
/// orientations under `either`). Equal codes iff isomorphic under the policy.
std::vector<int> canonical_code(const PlanarMap& m, OrientationPolicy policy);

}  // namespace projlink
