#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace projlink::testing {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

int endpoint(const PlanarMap& m, int e, int which) {
  const auto [lo, hi] = m.edge_darts(e);
  return m.vertex_of(which == 0 ? lo : hi);
}

bool cyclic_shift_of(const std::vector<Dart>& a, const std::vector<Dart>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 0; s < b.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + s) % b.size()];
    if (ok) return true;
  }
  return a.empty();
}

// Face of each face walk under the dart map, found by matching walks.
std::vector<int> image_faces(const PlanarMap& m, const MapIsomorphism& iso) {
  std::vector<int> out;
  for (const auto& walk : m.faces()) {
    std::vector<Dart> image;
    if (iso.orientation == Orientation::preserving) {
      for (Dart d : walk) image.push_back(iso(d));
    } else {
      // A reversed walk traverses the image darts backwards on the paired side.
      for (auto it = walk.rbegin(); it != walk.rend(); ++it) image.push_back(m.pair(iso(*it)));
    }
    int found = -1;
    for (int f = 0; f < m.num_faces(); ++f) {
      if (cyclic_shift_of(image, m.faces()[ix(f)])) found = f;
    }
    out.push_back(found);
  }
  return out;
}

// Sides of a cycle: faces joined across edges outside the cycle.
std::vector<int> sides_of(const PlanarMap& m, const std::vector<int>& cycle) {
  const int nf = m.num_faces();
  std::vector<int> parent(ix(nf));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[ix(x)] == x ? x : parent[ix(x)] = find(parent[ix(x)]);
  };
  for (int e = 0; e < m.num_edges(); ++e) {
    if (std::binary_search(cycle.begin(), cycle.end(), e)) continue;
    const auto [lo, hi] = m.edge_darts(e);
    parent[ix(find(m.face_of(lo)))] = find(m.face_of(hi));
  }
  std::vector<int> side;
  for (int f = 0; f < nf; ++f) side.push_back(find(f) == find(0) ? 0 : 1);
  return side;
}

}  // namespace

std::set<std::vector<int>> subset_cycles(const PlanarMap& m) {
  const int ne = m.num_edges();
  std::set<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << ne); ++mask) {
    std::vector<int> degree(ix(m.num_vertices()), 0);
    std::vector<int> edges;
    for (int e = 0; e < ne; ++e) {
      if (!(mask >> e & 1u)) continue;
      edges.push_back(e);
      ++degree[ix(endpoint(m, e, 0))];
      ++degree[ix(endpoint(m, e, 1))];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) {
      continue;
    }
    // Connected: flood from the first edge through shared endpoints.
    std::vector<char> reached(edges.size(), 0);
    reached[0] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (reached[i]) continue;
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if (!reached[j]) continue;
          const int a0 = endpoint(m, edges[i], 0), a1 = endpoint(m, edges[i], 1);
          const int b0 = endpoint(m, edges[j], 0), b1 = endpoint(m, edges[j], 1);
          if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) {
            reached[i] = 1;
            grew = true;
            break;
          }
        }
      }
    }
    if (std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; })) {
      out.insert(edges);
    }
  }
  return out;
}

std::vector<MapIsomorphism> permutation_automorphisms(const PlanarMap& m) {
  const int nv = m.num_vertices();
  std::map<std::pair<int, int>, Dart> dart_of;  // (tail, head) -> dart
  for (Dart d = 0; d < m.num_darts(); ++d) {
    dart_of[{m.vertex_of(d), m.vertex_of(m.pair(d))}] = d;
  }
  std::vector<int> perm(ix(nv));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MapIsomorphism> out;
  do {
    MapIsomorphism iso;
    iso.darts.resize(ix(m.num_darts()));
    bool ok = true;
    for (Dart d = 0; d < m.num_darts() && ok; ++d) {
      auto it = dart_of.find({perm[ix(m.vertex_of(d))], perm[ix(m.vertex_of(m.pair(d)))]});
      if (it == dart_of.end()) ok = false;
      else iso.darts[ix(d)] = it->second;
    }
    if (!ok) continue;
    for (Orientation o : {Orientation::preserving, Orientation::reversing}) {
      iso.orientation = o;
      bool rotations_match = true;
      for (int v = 0; v < nv && rotations_match; ++v) {
        std::vector<Dart> image;
        for (Dart d : m.rotations()[ix(v)]) image.push_back(iso(d));
        if (o == Orientation::reversing) std::reverse(image.begin(), image.end());
        rotations_match = cyclic_shift_of(image, m.rotations()[ix(perm[ix(v)])]);
      }
      if (rotations_match) out.push_back(iso);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<OracleCycle> oracle_symmetric_cycles(const PlanarMap& m) {
  const auto autos = permutation_automorphisms(m);
  std::vector<OracleCycle> out;
  for (const auto& cycle : subset_cycles(m)) {
    const auto side = sides_of(m, cycle);
    bool symmetric = false;
    bool antipodal = false;
    for (const auto& a : autos) {
      bool keeps = true;
      for (int e : cycle) {
        const int image = m.edge_of(a(m.edge_darts(e).first));
        keeps = keeps && std::binary_search(cycle.begin(), cycle.end(), image);
      }
      if (!keeps) continue;
      const auto faces = image_faces(m, a);
      bool swaps = true;
      for (int f = 0; f < m.num_faces(); ++f) swaps = swaps && side[ix(f)] != side[ix(faces[ix(f)])];
      if (!swaps) continue;
      symmetric = true;
      if (a.orientation != Orientation::reversing) continue;
      bool involution = true;
      for (Dart d = 0; d < m.num_darts(); ++d) involution = involution && a(a(d)) == d;
      bool free = involution;
      for (int v = 0; v < m.num_vertices() && free; ++v) {
        free = m.vertex_of(a(m.rotations()[ix(v)].front())) != v;
      }
      for (int e = 0; e < m.num_edges() && free; ++e) {
        free = m.edge_of(a(m.edge_darts(e).first)) != e;
      }
      for (int f = 0; f < m.num_faces() && free; ++f) free = faces[ix(f)] != f;
      antipodal = antipodal || free;
    }
    if (symmetric) out.push_back({cycle, antipodal});
  }
  return out;
}

LaurentPolynomial skein_bracket(const LinkDiagram& d) {
  const LaurentPolynomial loop = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::function<LaurentPolynomial(std::vector<std::array<int, 4>>, int)> go =
      [&](std::vector<std::array<int, 4>> xs, int loops) -> LaurentPolynomial {
    if (xs.empty()) return loop.pow(loops - 1);
    const auto x = xs.back();
    xs.pop_back();
    auto smooth = [&](std::pair<int, int> p, std::pair<int, int> q) {
      auto rest = xs;
      int closed = loops;
      auto join = [&](int a, int b) {
        if (a == b) {
          ++closed;
          return;
        }
        for (auto& c : rest) {
          for (int& l : c) if (l == b) l = a;
        }
        if (q.first == b) q.first = a;
        if (q.second == b) q.second = a;
      };
      join(p.first, p.second);
      join(q.first, q.second);
      return go(rest, closed);
    };
    LaurentPolynomial a = smooth({x[0], x[1]}, {x[2], x[3]});
    a *= LaurentPolynomial::monomial(1, 1);
    LaurentPolynomial b = smooth({x[0], x[3]}, {x[1], x[2]});
    b *= LaurentPolynomial::monomial(1, -1);
    return a + b;
  };
  return go(d.crossings, d.free_loops);
}

}  // namespace projlink::testing
