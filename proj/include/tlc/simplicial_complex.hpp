#ifndef TLC_SIMPLICIAL_COMPLEX_HPP
#define TLC_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlc {

using vertex_t = int;

// A face is a strictly increasing vertex list; {} is the empty face (dim -1).
using Face = std::vector<vertex_t>;

inline Face make_face(std::initializer_list<vertex_t> vs) {
  Face f(vs);
  std::sort(f.begin(), f.end());
  assert(std::adjacent_find(f.begin(), f.end()) == f.end());
  return f;
}

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

inline bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_union(const Face& a, const Face& b) {
  Face r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline Face face_intersection(const Face& a, const Face& b) {
  Face r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline Face face_minus(const Face& a, const Face& b) {
  Face r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline bool faces_disjoint(const Face& a, const Face& b) {
  return face_intersection(a, b).empty();
}

// All subsets of f (including {} and f itself).
inline std::vector<Face> all_subfaces(const Face& f) {
  std::vector<Face> out;
  const size_t n = f.size();
  assert(n < 31);
  out.reserve(size_t{1} << n);
  for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) {
    Face g;
    for (size_t i = 0; i < n; ++i)
      if (m & (uint32_t{1} << i)) g.push_back(f[i]);
    out.push_back(std::move(g));
  }
  return out;
}

// Codimension-1 subfaces, ordered by omitted position (for boundary signs).
inline std::vector<Face> boundary_faces(const Face& f) {
  std::vector<Face> out;
  for (size_t i = 0; i < f.size(); ++i) {
    Face g = f;
    g.erase(g.begin() + static_cast<long>(i));
    out.push_back(std::move(g));
  }
  return out;
}

// Facet-list representation.  facets == {} is the void complex (no faces at
// all); facets == {{}} is the complex whose only face is the empty face.
// Facets are kept sorted and inclusion-maximal.
struct SimplicialComplex {
  std::vector<Face> facets;

  int dim() const {
    int d = -2;
    for (const auto& f : facets) d = std::max(d, face_dim(f));
    return d;
  }
  bool pure() const {
    const int d = dim();
    for (const auto& f : facets)
      if (face_dim(f) != d) return false;
    return true;
  }
  size_t facet_count() const { return facets.size(); }
  bool operator==(const SimplicialComplex& o) const = default;
};

// Builds a complex from an arbitrary face collection, dropping non-maximal
// entries and duplicates.
inline SimplicialComplex from_faces(std::vector<Face> fs) {
  for (auto& f : fs) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("face with repeated vertex");
  }
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  SimplicialComplex K;
  for (size_t i = 0; i < fs.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < fs.size() && maximal; ++j)
      if (i != j && fs[i].size() < fs[j].size() && face_subset(fs[i], fs[j]))
        maximal = false;
    if (maximal) K.facets.push_back(fs[i]);
  }
  return K;
}

inline SimplicialComplex simplex_complex(int d) {
  Face f(static_cast<size_t>(d + 1));
  std::iota(f.begin(), f.end(), 0);
  return SimplicialComplex{{f}};
}

// All faces, including the empty face (a face of every complex, also of the
// one with no facets).  euler_characteristic excludes it.
inline std::set<Face> closure(const SimplicialComplex& K) {
  std::set<Face> out;
  out.insert(Face{});
  for (const auto& f : K.facets)
    for (auto& g : all_subfaces(f)) out.insert(std::move(g));
  return out;
}

inline std::vector<Face> faces_of_dim(const SimplicialComplex& K, int k) {
  std::set<Face> out;
  for (const auto& f : K.facets) {
    if (face_dim(f) < k) continue;
    for (auto& g : all_subfaces(f))
      if (face_dim(g) == k) out.insert(std::move(g));
  }
  return {out.begin(), out.end()};
}

inline bool has_face(const SimplicialComplex& K, const Face& s) {
  for (const auto& f : K.facets)
    if (face_subset(s, f)) return true;
  return false;
}

inline std::vector<vertex_t> vertices(const SimplicialComplex& K) {
  std::set<vertex_t> vs;
  for (const auto& f : K.facets) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

inline SimplicialComplex skeleton(const SimplicialComplex& K, int k) {
  if (k < -1 || k > K.dim())
    throw std::invalid_argument("skeleton: k out of range");
  std::vector<Face> fs;
  for (const auto& f : K.facets) {
    if (face_dim(f) <= k) {
      fs.push_back(f);
    } else {
      for (auto& g : all_subfaces(f))
        if (face_dim(g) == k) fs.push_back(std::move(g));
    }
  }
  return from_faces(std::move(fs));
}

inline SimplicialComplex star(const SimplicialComplex& K, const Face& s) {
  if (!has_face(K, s)) throw std::invalid_argument("star: face not in complex");
  std::vector<Face> fs;
  for (const auto& f : K.facets)
    if (face_subset(s, f)) fs.push_back(f);
  return from_faces(std::move(fs));
}

inline SimplicialComplex link(const SimplicialComplex& K, const Face& s) {
  if (!has_face(K, s)) throw std::invalid_argument("link: face not in complex");
  std::vector<Face> fs;
  for (const auto& f : K.facets)
    if (face_subset(s, f)) fs.push_back(face_minus(f, s));
  return from_faces(std::move(fs));
}

// Vertex connectivity: all facets reachable from one another through shared
// vertices.  Void and empty-face complexes count as connected.
inline bool is_connected(const SimplicialComplex& K) {
  std::map<vertex_t, vertex_t> root;
  auto find = [&](vertex_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& f : K.facets)
    for (vertex_t v : f)
      if (!root.count(v)) root[v] = v;
  for (const auto& f : K.facets)
    for (size_t i = 1; i < f.size(); ++i) root[find(f[0])] = find(f[i]);
  std::set<vertex_t> comps;
  for (auto& [v, _] : root) comps.insert(find(v));
  return comps.size() <= 1;
}

// Faces common to two complexes, collected into a complex of the maximal
// ones.  When nothing but the empty face is shared, the result is the
// empty-face complex (dimension -1).
inline SimplicialComplex intersection_complex(const SimplicialComplex& A,
                                              const SimplicialComplex& B) {
  auto cb = closure(B);
  std::vector<Face> common;
  for (const auto& f : closure(A))
    if (cb.count(f)) common.push_back(f);
  return from_faces(std::move(common));
}

inline bool is_pseudomanifold(const SimplicialComplex& K) {
  if (K.facets.empty() || K.dim() < 0) return false;
  if (!K.pure()) return false;
  const int d = K.dim();
  // at d = 0 the ridge is the empty face, shared by every point
  if (d == 0) return K.facets.size() <= 2;
  std::map<Face, int> ridge_use;
  for (const auto& f : K.facets)
    for (auto& r : boundary_faces(f)) ridge_use[r]++;
  for (const auto& [r, c] : ridge_use)
    if (c > 2) return false;
  return true;
}

struct DualGraph {
  int n = 0;                              // facet count
  std::vector<std::pair<int, int>> edges; // facet index pairs (i < j)
  std::vector<Face> edge_ridges;          // shared ridge per edge
};

// Facet adjacency through ridges.  Requires a pure complex; two facets of a
// simplicial complex share at most one ridge, so this is a simple graph.
inline DualGraph dual_graph(const SimplicialComplex& K) {
  if (!K.pure()) throw std::invalid_argument("dual_graph: complex not pure");
  DualGraph G;
  G.n = static_cast<int>(K.facets.size());
  std::map<Face, std::vector<int>> ridge_cofaces;
  for (int i = 0; i < G.n; ++i)
    for (auto& r : boundary_faces(K.facets[static_cast<size_t>(i)]))
      ridge_cofaces[r].push_back(i);
  for (auto& [r, cof] : ridge_cofaces) {
    for (size_t a = 0; a < cof.size(); ++a)
      for (size_t b = a + 1; b < cof.size(); ++b) {
        G.edges.emplace_back(cof[a], cof[b]);
        G.edge_ridges.push_back(r);
      }
  }
  return G;
}

inline bool is_strongly_connected(const SimplicialComplex& K) {
  if (K.facets.empty()) return true;
  if (!K.pure())
    throw std::invalid_argument("is_strongly_connected: complex not pure");
  // Any two 0-faces share the empty face, so 0-dimensional complexes are
  // always strongly connected (and so is the {empty-face} complex).
  if (K.dim() <= 0) return true;
  DualGraph G = dual_graph(K);
  std::vector<std::vector<int>> adj(static_cast<size_t>(G.n));
  for (auto [a, b] : G.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<size_t>(G.n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++cnt;
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  return cnt == G.n;
}

// Closure of the ridges lying in exactly one facet.  Requires a pure complex.
inline SimplicialComplex boundary_complex(const SimplicialComplex& K) {
  if (!K.pure())
    throw std::invalid_argument("boundary_complex: complex not pure");
  if (K.dim() < 0) return SimplicialComplex{};
  // A single point has the empty face as its unique boundary ridge; this keeps
  // link(s, boundary_complex(K)) == boundary_complex(link(K, s)) exact even
  // when s is a boundary ridge.
  if (K.dim() == 0)
    return K.facets.size() == 1 ? from_faces({Face{}}) : SimplicialComplex{};
  std::map<Face, int> ridge_use;
  for (const auto& f : K.facets)
    for (auto& r : boundary_faces(f)) ridge_use[r]++;
  std::vector<Face> fs;
  for (const auto& [r, c] : ridge_use)
    if (c == 1) fs.push_back(r);
  return from_faces(std::move(fs));
}

inline SimplicialComplex cone(vertex_t apex, const SimplicialComplex& K) {
  for (const auto& f : K.facets)
    if (std::binary_search(f.begin(), f.end(), apex))
      throw std::invalid_argument("cone: apex already a vertex");
  std::vector<Face> fs;
  if (K.facets.empty()) fs.push_back(Face{apex});
  for (const auto& f : K.facets) fs.push_back(face_union(f, Face{apex}));
  return from_faces(std::move(fs));
}

inline SimplicialComplex suspension(const SimplicialComplex& K) {
  vertex_t m = 0;
  for (vertex_t v : vertices(K)) m = std::max(m, v + 1);
  std::vector<Face> fs;
  for (const auto& f : K.facets) {
    fs.push_back(face_union(f, Face{m}));
    fs.push_back(face_union(f, Face{m + 1}));
  }
  if (K.facets.empty()) {
    fs.push_back(Face{m});
    fs.push_back(Face{m + 1});
  }
  return from_faces(std::move(fs));
}

// Alternating face count; the empty face is not counted.
inline long euler_characteristic(const SimplicialComplex& K) {
  long chi = 0;
  for (const auto& f : closure(K)) {
    const int d = face_dim(f);
    if (d < 0) continue;
    chi += (d % 2 == 0) ? 1 : -1;
  }
  return chi;
}

inline SimplicialComplex relabel(const SimplicialComplex& K,
                                 const std::map<vertex_t, vertex_t>& m) {
  std::vector<Face> fs;
  for (const auto& f : K.facets) {
    Face g;
    for (vertex_t v : f) g.push_back(m.at(v));
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw std::invalid_argument("relabel: map not injective on a face");
    fs.push_back(std::move(g));
  }
  return from_faces(std::move(fs));
}

// Identifies vertex b with vertex a (used by the pinched example generators).
// Throws if some face would acquire a repeated vertex.
inline SimplicialComplex identify_vertices(const SimplicialComplex& K,
                                           vertex_t a, vertex_t b) {
  std::map<vertex_t, vertex_t> m;
  for (vertex_t v : vertices(K)) m[v] = (v == b) ? a : v;
  return relabel(K, m);
}

} // namespace tlc

#endif
