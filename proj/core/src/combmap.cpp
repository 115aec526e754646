#include "projlink/combmap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "projlink/error.hpp"

namespace projlink {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace

PlanarMap PlanarMap::build(std::vector<std::vector<Dart>> rotations,
                           std::vector<Dart> pairing) {
  const int n = static_cast<int>(pairing.size());
  if (n == 0) fail(ErrorCode::MalformedPairing, "map has no darts");

  for (int d = 0; d < n; ++d) {
    const Dart p = pairing[ix(d)];
    if (p < 0 || p >= n) {
      fail(ErrorCode::MalformedPairing,
           "pairing of dart " + std::to_string(d) + " is out of range");
    }
    if (p == d) {
      fail(ErrorCode::MalformedPairing,
           "dart " + std::to_string(d) + " is paired with itself");
    }
    if (pairing[ix(p)] != d) {
      fail(ErrorCode::MalformedPairing,
           "pairing is not an involution at dart " + std::to_string(d));
    }
  }

  PlanarMap m;
  m.vertex_of_.assign(ix(n), -1);
  m.next_.assign(ix(n), -1);
  m.prev_.assign(ix(n), -1);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    const auto& rot = rotations[v];
    if (rot.empty()) {
      fail(ErrorCode::NotConnected,
           "vertex " + std::to_string(v) + " has no darts");
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      if (d < 0 || d >= n) {
        fail(ErrorCode::MalformedRotation,
             "rotation of vertex " + std::to_string(v) + " names unknown dart " +
                 std::to_string(d));
      }
      if (m.vertex_of_[ix(d)] != -1) {
        fail(ErrorCode::MalformedRotation,
             "dart " + std::to_string(d) + " appears in more than one rotation slot");
      }
      m.vertex_of_[ix(d)] = static_cast<int>(v);
      m.next_[ix(d)] = rot[(i + 1) % rot.size()];
    }
  }
  for (int d = 0; d < n; ++d) {
    if (m.vertex_of_[ix(d)] == -1) {
      fail(ErrorCode::MalformedRotation,
           "dart " + std::to_string(d) + " is missing from every rotation");
    }
    m.prev_[ix(m.next_[ix(d)])] = d;
  }
  m.rotations_ = std::move(rotations);
  m.pair_ = std::move(pairing);

  m.edge_of_.assign(ix(n), -1);
  for (Dart d = 0; d < n; ++d) {
    const Dart p = m.pair_[ix(d)];
    if (d < p) {
      const int e = static_cast<int>(m.edges_.size());
      m.edges_.emplace_back(d, p);
      m.edge_of_[ix(d)] = e;
      m.edge_of_[ix(p)] = e;
    }
  }

  // Connectivity over the group generated by next and pair.
  std::vector<char> seen(ix(n), 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    ++reached;
    for (Dart x : {m.next_[ix(d)], m.prev_[ix(d)], m.pair_[ix(d)]}) {
      if (!seen[ix(x)]) {
        seen[ix(x)] = 1;
        stack.push_back(x);
      }
    }
  }
  if (reached != n) fail(ErrorCode::NotConnected, "underlying graph is not connected");

  m.face_of_.assign(ix(n), -1);
  for (Dart start = 0; start < n; ++start) {
    if (m.face_of_[ix(start)] != -1) continue;
    const int f = static_cast<int>(m.faces_.size());
    std::vector<Dart> walk;
    Dart d = start;
    do {
      m.face_of_[ix(d)] = f;
      walk.push_back(d);
      d = m.face_next(d);
    } while (d != start);
    m.faces_.push_back(std::move(walk));
  }

  const int euler = m.num_vertices() - m.num_edges() + m.num_faces();
  if (euler != 2) {
    std::ostringstream os;
    os << "V - E + F = " << m.num_vertices() << " - " << m.num_edges() << " + "
       << m.num_faces() << " = " << euler << ", expected 2";
    fail(ErrorCode::NotSpherical, os.str());
  }
  return m;
}

PlanarMap dual(const PlanarMap& m) {
  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(m.faces().size());
  for (const auto& walk : m.faces()) {
    std::vector<Dart> rot;
    const Dart start = walk.front();
    Dart d = start;
    do {
      rot.push_back(d);
      d = m.pair(m.prev(d));
    } while (d != start);
    rotations.push_back(std::move(rot));
  }
  return PlanarMap::build(std::move(rotations), m.pairing());
}

Medial medial(const PlanarMap& m) {
  const int n = m.num_darts();
  std::vector<Dart> pairing(ix(2 * n));
  for (Dart k = 0; k < n; ++k) {
    pairing[ix(2 * k)] = 2 * k + 1;
    pairing[ix(2 * k + 1)] = 2 * k;
  }
  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(ix(m.num_edges()));
  std::vector<int> source_edge;
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto [lo, hi] = m.edge_darts(e);
    rotations.push_back({2 * m.prev(hi) + 1, 2 * lo, 2 * m.prev(lo) + 1, 2 * hi});
    source_edge.push_back(e);
  }
  Medial med{PlanarMap::build(std::move(rotations), std::move(pairing)),
             std::move(source_edge), {}};

  // Dart 2k+1 runs around the vertex of corner k with that vertex on its
  // right; dart 2k has the face holding the corner on its right.
  const int medial_faces = med.map.num_faces();
  if (medial_faces != m.num_vertices() + m.num_faces()) {
    throw std::logic_error("medial face count differs from V + F");
  }
  std::vector<std::optional<FaceTag>> tags(ix(medial_faces));
  for (Dart md = 0; md < 2 * n; ++md) {
    const Dart k = md / 2;
    const FaceTag tag = (md % 2 == 1)
                            ? FaceTag{FaceTag::Kind::vertex, m.vertex_of(k)}
                            : FaceTag{FaceTag::Kind::face, m.face_of(m.next(k))};
    auto& slot = tags[ix(med.map.face_of(md))];
    if (slot && !(*slot == tag)) {
      throw std::logic_error("inconsistent medial face tags");
    }
    slot = tag;
  }
  med.face_tags.reserve(tags.size());
  for (const auto& t : tags) med.face_tags.push_back(*t);
  return med;
}

PlanarMap mirror(const PlanarMap& m) {
  auto rotations = m.rotations();
  for (auto& rot : rotations) std::reverse(rot.begin(), rot.end());
  return PlanarMap::build(std::move(rotations), m.pairing());
}

bool verify_isomorphism(const PlanarMap& a, const PlanarMap& b,
                        const MapIsomorphism& iso) {
  const int n = a.num_darts();
  if (b.num_darts() != n || static_cast<int>(iso.darts.size()) != n) return false;
  std::vector<char> hit(ix(n), 0);
  for (Dart d = 0; d < n; ++d) {
    const Dart y = iso(d);
    if (y < 0 || y >= n || hit[ix(y)]) return false;
    hit[ix(y)] = 1;
  }
  const bool rev = iso.orientation == Orientation::reversing;
  for (Dart d = 0; d < n; ++d) {
    if (iso(a.pair(d)) != b.pair(iso(d))) return false;
    const Dart expect = rev ? b.prev(iso(d)) : b.next(iso(d));
    if (iso(a.next(d)) != expect) return false;
  }
  return true;
}

namespace {

// Propagates root -> target over next and pair. A connected map leaves no
// dart unassigned, so success yields a full candidate.
std::optional<std::vector<Dart>> extend_from_root(const PlanarMap& a,
                                                  const PlanarMap& b, Dart root,
                                                  Dart target, bool reversing) {
  const int n = a.num_darts();
  std::vector<Dart> img(ix(n), -1);
  std::vector<char> used(ix(n), 0);
  std::vector<Dart> stack;
  auto assign = [&](Dart x, Dart y) {
    if (img[ix(x)] == -1) {
      if (used[ix(y)]) return false;
      img[ix(x)] = y;
      used[ix(y)] = 1;
      stack.push_back(x);
      return true;
    }
    return img[ix(x)] == y;
  };
  assign(root, target);
  while (!stack.empty()) {
    const Dart x = stack.back();
    stack.pop_back();
    const Dart y = img[ix(x)];
    if (!assign(a.next(x), reversing ? b.prev(y) : b.next(y))) return std::nullopt;
    if (!assign(a.pair(x), b.pair(y))) return std::nullopt;
  }
  return img;
}

bool same_counts(const PlanarMap& a, const PlanarMap& b) {
  return a.num_darts() == b.num_darts() && a.num_vertices() == b.num_vertices() &&
         a.num_faces() == b.num_faces();
}

void collect(const PlanarMap& a, const PlanarMap& b, bool reversing,
             std::vector<MapIsomorphism>& out) {
  const Dart root = 0;
  const int root_degree = a.degree(a.vertex_of(root));
  const int root_face = a.face_degree(a.face_of(root));
  for (Dart t = 0; t < b.num_darts(); ++t) {
    if (b.degree(b.vertex_of(t)) != root_degree) continue;
    // A reversing map sends the face right of d to the face right of pair(image).
    const Dart face_dart = reversing ? b.pair(t) : t;
    if (b.face_degree(b.face_of(face_dart)) != root_face) continue;
    if (auto img = extend_from_root(a, b, root, t, reversing)) {
      out.push_back(MapIsomorphism{std::move(*img), reversing ? Orientation::reversing
                                                              : Orientation::preserving});
    }
  }
}

}  // namespace

std::vector<MapIsomorphism> find_isomorphisms(const PlanarMap& a,
                                              const PlanarMap& b,
                                              OrientationPolicy policy) {
  std::vector<MapIsomorphism> out;
  if (!same_counts(a, b)) return out;
  if (policy != OrientationPolicy::reversing) collect(a, b, false, out);
  if (policy != OrientationPolicy::preserving) collect(a, b, true, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MapIsomorphism> is_isomorphic(const PlanarMap& a, const PlanarMap& b,
                                            OrientationPolicy policy) {
  auto all = find_isomorphisms(a, b, policy);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<int> vertex_permutation(const PlanarMap& a, const PlanarMap& b,
                                    const MapIsomorphism& iso) {
  std::vector<int> out;
  out.reserve(ix(a.num_vertices()));
  for (const auto& rot : a.rotations()) out.push_back(b.vertex_of(iso(rot.front())));
  return out;
}

std::vector<int> edge_permutation(const PlanarMap& a, const PlanarMap& b,
                                  const MapIsomorphism& iso) {
  std::vector<int> out;
  out.reserve(ix(a.num_edges()));
  for (int e = 0; e < a.num_edges(); ++e) {
    out.push_back(b.edge_of(iso(a.edge_darts(e).first)));
  }
  return out;
}

std::vector<int> face_permutation(const PlanarMap& a, const PlanarMap& b,
                                  const MapIsomorphism& iso) {
  std::vector<int> out;
  out.reserve(ix(a.num_faces()));
  const bool rev = iso.orientation == Orientation::reversing;
  for (const auto& walk : a.faces()) {
    const Dart y = iso(walk.front());
    out.push_back(b.face_of(rev ? b.pair(y) : y));
  }
  return out;
}

MapIsomorphism identity_isomorphism(const PlanarMap& m) {
  MapIsomorphism id;
  id.darts.resize(ix(m.num_darts()));
  for (Dart d = 0; d < m.num_darts(); ++d) id.darts[ix(d)] = d;
  return id;
}

MapIsomorphism inverse(const MapIsomorphism& iso) {
  MapIsomorphism inv;
  inv.orientation = iso.orientation;
  inv.darts.resize(iso.darts.size());
  for (std::size_t d = 0; d < iso.darts.size(); ++d) {
    inv.darts[ix(iso.darts[d])] = static_cast<Dart>(d);
  }
  return inv;
}

MapIsomorphism compose(const MapIsomorphism& second, const MapIsomorphism& first) {
  MapIsomorphism out;
  out.orientation = (second.orientation == first.orientation) ? Orientation::preserving
                                                              : Orientation::reversing;
  out.darts.resize(first.darts.size());
  for (std::size_t d = 0; d < first.darts.size(); ++d) {
    out.darts[d] = second(first.darts[d]);
  }
  return out;
}

namespace {

std::vector<int> bfs_code(const PlanarMap& m, Dart root, bool reversed) {
  const int n = m.num_darts();
  std::vector<int> label(ix(n), -1);
  std::vector<Dart> order;
  order.reserve(ix(n));
  label[ix(root)] = 0;
  order.push_back(root);
  auto step = [&](Dart d) { return reversed ? m.prev(d) : m.next(d); };
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart x = order[i];
    for (Dart y : {step(x), m.pair(x)}) {
      if (label[ix(y)] < 0) {
        label[ix(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<int> code;
  code.reserve(ix(2 * n));
  for (Dart x : order) {
    code.push_back(label[ix(step(x))]);
    code.push_back(label[ix(m.pair(x))]);
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(const PlanarMap& m, OrientationPolicy policy) {
  std::vector<int> best;
  for (Dart root = 0; root < m.num_darts(); ++root) {
    for (bool reversed : {false, true}) {
      if (reversed && policy == OrientationPolicy::preserving) continue;
      if (!reversed && policy == OrientationPolicy::reversing) continue;
      auto code = bfs_code(m, root, reversed);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

}  // namespace projlink
