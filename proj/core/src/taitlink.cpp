#include "projlink/taitlink.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "projlink/error.hpp"

namespace projlink {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

EdgeSignedMap EdgeSignedMap::make(PlanarMap map, std::vector<Sign> signs) {
  if (static_cast<int>(signs.size()) != map.num_edges()) {
    throw Error(ErrorCode::MalformedPairing,
                "expected " + std::to_string(map.num_edges()) + " edge signs, got " +
                    std::to_string(signs.size()));
  }
  return EdgeSignedMap{std::move(map), std::move(signs)};
}

EdgeSignedMap EdgeSignedMap::constant(PlanarMap map, Sign s) {
  std::vector<Sign> signs(ix(map.num_edges()), s);
  return EdgeSignedMap{std::move(map), std::move(signs)};
}

EdgeSignedMap negate(const EdgeSignedMap& g) {
  EdgeSignedMap out = g;
  for (auto& s : out.signs) s = -s;
  return out;
}

std::optional<MapIsomorphism> is_isomorphic_signed(const EdgeSignedMap& a,
                                                   const EdgeSignedMap& b,
                                                   OrientationPolicy policy) {
  for (auto& iso : find_isomorphisms(a.map, b.map, policy)) {
    const auto ep = edge_permutation(a.map, b.map, iso);
    bool ok = true;
    for (std::size_t e = 0; e < ep.size() && ok; ++e) {
      ok = a.signs[e] == b.signs[ix(ep[e])];
    }
    if (ok) return iso;
  }
  return std::nullopt;
}

std::vector<Color> checkerboard(const PlanarMap& m, int black_face) {
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.degree(v) != 4) {
      throw Error(ErrorCode::NotEulerian,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(m.degree(v)) + ", expected 4");
    }
  }
  std::vector<int> color(ix(m.num_faces()), -1);
  std::vector<int> queue{black_face};
  color[ix(black_face)] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Dart d : m.faces()[ix(queue[i])]) {
      const int here = m.face_of(d);
      const int there = m.face_of(m.pair(d));
      if (color[ix(there)] == -1) {
        color[ix(there)] = 1 - color[ix(here)];
        queue.push_back(there);
      } else if (color[ix(there)] == color[ix(here)]) {
        throw std::logic_error("faces of a 4-regular sphere map are not 2-colorable");
      }
    }
  }
  std::vector<Color> out;
  out.reserve(color.size());
  for (int c : color) out.push_back(c == 0 ? Color::black : Color::white);
  return out;
}

std::vector<Color> checkerboard(const Medial& med) {
  int anchor = 0;
  for (std::size_t f = 0; f < med.face_tags.size(); ++f) {
    if (med.face_tags[f].kind == FaceTag::Kind::vertex) {
      anchor = static_cast<int>(f);
      break;
    }
  }
  auto colors = checkerboard(med.map, anchor);
  for (std::size_t f = 0; f < colors.size(); ++f) {
    const bool black = med.face_tags[f].kind == FaceTag::Kind::vertex;
    if ((colors[f] == Color::black) != black) {
      throw std::logic_error("medial face tags disagree with the checkerboard coloring");
    }
  }
  return colors;
}

LabeledMedial labeled_medial(const EdgeSignedMap& g) {
  LabeledMedial lm{medial(g.map), {}, {}, g};
  lm.face_colors = checkerboard(lm.medial);
  lm.vertex_signs.reserve(lm.medial.source_edge.size());
  for (int e : lm.medial.source_edge) lm.vertex_signs.push_back(g.signs[ix(e)]);
  return lm;
}

void validate(const LinkDiagram& d) {
  if (d.free_loops < 0) throw Error(ErrorCode::ParseError, "negative free loop count");
  if (d.crossings.empty() && d.free_loops == 0) {
    throw Error(ErrorCode::ParseError, "diagram has neither crossings nor loops");
  }
  std::map<int, int> seen;
  for (const auto& x : d.crossings) {
    for (int label : x) ++seen[label];
  }
  for (const auto& [label, count] : seen) {
    if (count != 2) {
      throw Error(ErrorCode::ParseError, "arc label " + std::to_string(label) +
                                             " occurs " + std::to_string(count) +
                                             " times, expected 2");
    }
  }
}

PlanarMap shadow(const LinkDiagram& d) {
  validate(d);
  if (d.free_loops != 0 || d.crossings.empty()) {
    throw Error(ErrorCode::NotConnected, "diagram has crossingless components");
  }
  const int n = static_cast<int>(d.crossings.size());
  std::vector<std::vector<Dart>> rotations;
  std::vector<Dart> pairing(ix(4 * n), -1);
  std::map<int, Dart> first_end;
  for (int c = 0; c < n; ++c) {
    rotations.push_back({4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3});
    for (int p = 0; p < 4; ++p) {
      const Dart x = 4 * c + p;
      const int label = d.crossings[ix(c)][ix(p)];
      auto [it, inserted] = first_end.try_emplace(label, x);
      if (!inserted) {
        pairing[ix(x)] = it->second;
        pairing[ix(it->second)] = x;
      }
    }
  }
  return PlanarMap::build(std::move(rotations), std::move(pairing));
}

LinkDiagram tait_to_diagram(const EdgeSignedMap& g) {
  const Medial med = medial(g.map);
  const PlanarMap& m = med.map;

  // Orient each strand and label arcs consecutively along it.
  std::vector<int> label(ix(m.num_edges()), -1);
  std::vector<char> incoming(ix(m.num_darts()), 0);
  int next_label = 1;
  for (Dart s = 0; s < m.num_darts(); ++s) {
    if (label[ix(m.edge_of(s))] != -1) continue;
    Dart d = s;
    while (label[ix(m.edge_of(d))] == -1) {
      label[ix(m.edge_of(d))] = next_label++;
      const Dart in = m.pair(d);
      incoming[ix(in)] = 1;
      d = m.next(m.next(in));
    }
    if (d != s) throw std::logic_error("strand did not close up at its start");
  }

  LinkDiagram out;
  out.first_crossing_sign = g.signs.front();
  for (int c = 0; c < m.num_vertices(); ++c) {
    const auto& rot = m.rotations()[ix(c)];
    // Positive: the strand through positions 1 and 3 is over.
    const int under = g.signs[ix(med.source_edge[ix(c)])] == Sign::plus ? 0 : 1;
    const int start = incoming[ix(rot[ix(under)])] ? under : under + 2;
    std::array<int, 4> entry{};
    for (int i = 0; i < 4; ++i) {
      entry[ix(i)] = label[ix(m.edge_of(rot[ix((start + i) % 4)]))];
    }
    out.crossings.push_back(entry);
  }
  return out;
}

EdgeSignedMap diagram_to_tait(const LinkDiagram& d, Color side) {
  const PlanarMap sh = shadow(d);
  const int n = sh.num_vertices();

  // The region after position 1 of crossing 0 is black iff crossing 0 is
  // positive; that region lies in the face of the dart at position 2.
  auto colors = checkerboard(sh, sh.face_of(2));
  if (d.first_crossing_sign == Sign::minus) {
    for (auto& c : colors) c = opposite(c);
  }
  auto region_after = [&](int c, int p) { return sh.face_of(4 * c + (p + 1) % 4); };

  std::vector<int> first_pos(ix(n));
  std::vector<Sign> signs(ix(n));
  for (int c = 0; c < n; ++c) {
    const bool after_one = colors[ix(region_after(c, 1))] == side;
    first_pos[ix(c)] = after_one ? 1 : 0;
    signs[ix(c)] = after_one ? Sign::plus : Sign::minus;
  }

  auto dart_for = [&](int c, int p) -> Dart {
    if (p == first_pos[ix(c)]) return 2 * c;
    if (p == first_pos[ix(c)] + 2) return 2 * c + 1;
    throw std::logic_error("region of the wrong color reached while tracing a face");
  };

  std::vector<Dart> next(ix(2 * n));
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 2; ++k) {
      const int p = first_pos[ix(c)] + 2 * k;
      const Dart y = sh.pair(4 * c + p);
      const int c2 = y / 4;
      const int q = y % 4;
      next[ix(2 * c + k)] = dart_for(c2, (q + 3) % 4);
    }
  }

  std::vector<std::vector<Dart>> rotations;
  std::vector<char> seen(ix(2 * n), 0);
  for (Dart s = 0; s < 2 * n; ++s) {
    if (seen[ix(s)]) continue;
    std::vector<Dart> rot;
    Dart x = s;
    do {
      seen[ix(x)] = 1;
      rot.push_back(x);
      x = next[ix(x)];
    } while (x != s);
    rotations.push_back(std::move(rot));
  }
  std::vector<Dart> pairing(ix(2 * n));
  for (int c = 0; c < n; ++c) {
    pairing[ix(2 * c)] = 2 * c + 1;
    pairing[ix(2 * c + 1)] = 2 * c;
  }
  return EdgeSignedMap::make(PlanarMap::build(std::move(rotations), std::move(pairing)),
                             std::move(signs));
}

bool is_alternating_signature(const EdgeSignedMap& g) {
  return std::all_of(g.signs.begin(), g.signs.end(),
                     [&](Sign s) { return s == g.signs.front(); });
}

int component_count(const LinkDiagram& d) {
  validate(d);
  const std::size_t n = d.crossings.size();
  std::map<int, std::vector<std::size_t>> ends;  // label -> slots 4c+p
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < 4; ++p) ends[d.crossings[c][p]].push_back(4 * c + p);
  }
  std::vector<char> used(4 * n, 0);
  int components = 0;
  for (std::size_t s = 0; s < 4 * n; ++s) {
    if (used[s]) continue;
    ++components;
    std::size_t slot = s;
    while (!used[slot]) {
      used[slot] = 1;
      const std::size_t through = 4 * (slot / 4) + (slot % 4 + 2) % 4;
      used[through] = 1;
      const auto& both = ends[d.crossings[through / 4][through % 4]];
      slot = both[0] == through ? both[1] : both[0];
    }
  }
  return components + d.free_loops;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { reset(); }
  void reset() { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LaurentPolynomial kauffman_bracket(const LinkDiagram& d, int max_crossings) {
  validate(d);
  const int n = static_cast<int>(d.crossings.size());
  if (n > max_crossings) {
    throw Error(ErrorCode::TooLarge, "diagram has " + std::to_string(n) +
                                         " crossings, bound is " +
                                         std::to_string(max_crossings));
  }
  const LaurentPolynomial loop =
      LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  if (n == 0) return loop.pow(d.free_loops - 1);

  std::map<int, std::size_t> index;
  for (const auto& x : d.crossings) {
    for (int label : x) index.try_emplace(label, index.size());
  }
  std::vector<std::array<std::size_t, 4>> arcs;
  for (const auto& x : d.crossings) {
    arcs.push_back({index[x[0]], index[x[1]], index[x[2]], index[x[3]]});
  }

  // tally[a - b + n][loops]
  std::vector<std::vector<std::int64_t>> tally(ix(2 * n + 1),
                                               std::vector<std::int64_t>(index.size() + 1, 0));
  DisjointSets sets(index.size());
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    sets.reset();
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& [i, j, k, l] = arcs[ix(c)];
      if (mask >> c & 1U) {
        sets.unite(i, l);
        sets.unite(j, k);
      } else {
        ++a_count;
        sets.unite(i, j);
        sets.unite(k, l);
      }
    }
    std::size_t loops = 0;
    for (std::size_t x = 0; x < index.size(); ++x) loops += sets.find(x) == x;
    ++tally[ix(2 * a_count)][loops];
  }

  LaurentPolynomial result;
  for (int twice_a = 0; twice_a <= 2 * n; twice_a += 2) {
    const int exponent = twice_a - n;  // a - b
    for (std::size_t loops = 1; loops < tally[ix(twice_a)].size(); ++loops) {
      const auto count = tally[ix(twice_a)][loops];
      if (count == 0) continue;
      result += LaurentPolynomial::monomial(count, exponent) *
                loop.pow(static_cast<int>(loops) - 1 + d.free_loops);
    }
  }
  return result;
}

}  // namespace projlink
