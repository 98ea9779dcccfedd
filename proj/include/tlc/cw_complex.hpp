#pragma once

// Regular CW quotients of trees of simplices.  Gluings identify cells, so a
// state is the tree's fully expanded face poset plus one union-find per
// dimension (d-cells are never identified).  Every cell class keeps the full
// Boolean face structure of its representatives, which is what makes link
// extraction and intersection queries well defined after identifications.

#include <tlc/canonical.hpp>
#include <tlc/surface.hpp>
#include <tlc/tree_of_simplices.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace tlc {

// Enumerate the subfaces of f with `size` vertices (f has at most d+1 <= a
// machine word of vertices, so a bitmask walk is fine).
template <typename Fn>
inline void for_each_subface(const Face& f, int size, Fn&& fn) {
  const int n = static_cast<int>(f.size());
  if (size < 1 || size > n) return;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    Face g;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) g.push_back(f[static_cast<size_t>(i)]);
    fn(g);
  }
}

struct BaseComplex {
  int d = 0;
  std::vector<Face> simplices;             // d-simplices in tree order
  std::vector<std::vector<Face>> faces;    // per dim 0..d, sorted
  std::vector<std::map<Face, int>> index;  // face -> id, per dim
  // per dim 1..d: cell id -> ordered ids of its (dim-1)-subfaces, entry j
  // omitting vertex j of the sorted face
  std::vector<std::vector<std::vector<int>>> sub;
  std::vector<std::vector<int>> facet_cofaces;  // (d-1)-face id -> d-cell ids
};

inline std::shared_ptr<const BaseComplex> build_base(const TreeOfSimplices& T) {
  auto B = std::make_shared<BaseComplex>();
  B->d = T.d;
  B->simplices = tree_simplices(T);
  auto K = from_faces(B->simplices);
  B->faces.resize(static_cast<size_t>(T.d) + 1);
  B->index.resize(static_cast<size_t>(T.d) + 1);
  B->sub.resize(static_cast<size_t>(T.d) + 1);
  for (int k = 0; k <= T.d; ++k) {
    B->faces[static_cast<size_t>(k)] = faces_of_dim(K, k);
    for (size_t i = 0; i < B->faces[static_cast<size_t>(k)].size(); ++i)
      B->index[static_cast<size_t>(k)][B->faces[static_cast<size_t>(k)][i]] =
          static_cast<int>(i);
  }
  // vertex labels are consecutive from 0, so vertex id == vertex label
  for (size_t i = 0; i < B->faces[0].size(); ++i)
    if (B->faces[0][i] != Face{static_cast<int>(i)})
      throw std::logic_error("build_base: non-consecutive vertex labels");
  for (int k = 1; k <= T.d; ++k) {
    auto& subs = B->sub[static_cast<size_t>(k)];
    subs.resize(B->faces[static_cast<size_t>(k)].size());
    for (size_t i = 0; i < subs.size(); ++i)
      for (const auto& bf : boundary_faces(B->faces[static_cast<size_t>(k)][i]))
        subs[i].push_back(B->index[static_cast<size_t>(k) - 1].at(bf));
  }
  B->facet_cofaces.resize(B->faces[static_cast<size_t>(T.d) - 1].size());
  for (size_t s = 0; s < B->faces[static_cast<size_t>(T.d)].size(); ++s)
    for (int f : B->sub[static_cast<size_t>(T.d)][s])
      B->facet_cofaces[static_cast<size_t>(f)].push_back(static_cast<int>(s));
  return B;
}

// A CW state: the base plus identifications.  Class representatives are the
// minimal base ids, so everything downstream is deterministic.
struct CWState {
  std::shared_ptr<const BaseComplex> base;
  std::vector<std::vector<int>> parent;  // dims 0..d-1

  int find(int k, int i) const {
    const auto& p = parent[static_cast<size_t>(k)];
    while (p[static_cast<size_t>(i)] != i) i = p[static_cast<size_t>(i)];
    return i;
  }
  // Returns false if already united.
  bool unite(int k, int a, int b) {
    a = find(k, a);
    b = find(k, b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(k)][static_cast<size_t>(b)] = a;
    return true;
  }
  int n_cells(int k) const {
    return static_cast<int>(base->faces[static_cast<size_t>(k)].size());
  }
};

inline CWState cw_from_tree(const TreeOfSimplices& T) {
  CWState s;
  s.base = build_base(T);
  s.parent.resize(static_cast<size_t>(T.d));
  for (int k = 0; k < T.d; ++k) {
    s.parent[static_cast<size_t>(k)].resize(
        s.base->faces[static_cast<size_t>(k)].size());
    std::iota(s.parent[static_cast<size_t>(k)].begin(),
              s.parent[static_cast<size_t>(k)].end(), 0);
  }
  return s;
}

// Class roots at dimension k, ascending.  k = d lists every d-cell.
inline std::vector<int> cw_classes(const CWState& s, int k) {
  std::vector<int> out;
  for (int i = 0; i < s.n_cells(k); ++i)
    if (k == s.base->d || s.find(k, i) == i) out.push_back(i);
  return out;
}

inline std::vector<int> class_members(const CWState& s, int k, int cls) {
  std::vector<int> out;
  for (int i = 0; i < s.n_cells(k); ++i)
    if (s.find(k, i) == cls) out.push_back(i);
  return out;
}

// Vertex classes of a cell, sorted; repeats mean the cell is degenerate.
// Cell ids at every dimension, including d, index the sorted base face lists.
inline std::vector<int> cell_vertex_classes(const CWState& s, int k, int id) {
  std::vector<int> out;
  const Face& f = s.base->faces[static_cast<size_t>(k)][static_cast<size_t>(id)];
  for (vertex_t v : f) out.push_back(s.find(0, v));
  std::sort(out.begin(), out.end());
  return out;
}

// Number of (d-cell, member facet) incidences of a (d-1)-class: 1 = boundary,
// 2 = interior, more = overused.
inline std::map<int, int> facet_incidence_counts(const CWState& s) {
  std::map<int, int> counts;
  const int nf = s.n_cells(s.base->d - 1);
  for (int i = 0; i < nf; ++i)
    counts[s.find(s.base->d - 1, i)] +=
        static_cast<int>(s.base->facet_cofaces[static_cast<size_t>(i)].size());
  return counts;
}

inline std::vector<int> boundary_facet_classes(const CWState& s) {
  std::vector<int> out;
  for (const auto& [cls, n] : facet_incidence_counts(s))
    if (n == 1) out.push_back(cls);
  return out;
}

// Classes of the k_lo-dimensional subfaces of a class at dimension k.
inline std::set<int> sub_classes(const CWState& s, int k, int cls, int k_lo) {
  std::set<int> out;
  for (int m : class_members(s, k, cls)) {
    const Face& f = s.base->faces[static_cast<size_t>(k)][static_cast<size_t>(m)];
    for_each_subface(f, k_lo + 1, [&](const Face& g) {
      out.insert(s.find(k_lo, s.base->index[static_cast<size_t>(k_lo)].at(g)));
    });
  }
  return out;
}

// Common subcells of two (d-1)-classes, per dimension, plus the intersection
// dimension (-1 when the closed cells are disjoint).
struct CommonCells {
  int dim = -1;
  std::vector<std::set<int>> per_dim;  // dims 0..d-2
};

inline CommonCells common_cells(const CWState& s, int A, int B) {
  CommonCells c;
  const int d = s.base->d;
  c.per_dim.resize(static_cast<size_t>(std::max(d - 1, 0)));
  for (int k = 0; k <= d - 2; ++k) {
    auto sa = sub_classes(s, d - 1, A, k);
    auto sb = sub_classes(s, d - 1, B, k);
    std::set_intersection(
        sa.begin(), sa.end(), sb.begin(), sb.end(),
        std::inserter(c.per_dim[static_cast<size_t>(k)],
                      c.per_dim[static_cast<size_t>(k)].begin()));
    if (!c.per_dim[static_cast<size_t>(k)].empty()) c.dim = k;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Materialized value type: cells per dimension with ordered boundary lists.
// Position j of a cell's boundary omits position j of its vertex list.

struct CWCell {
  std::vector<int> boundary;  // ids one dimension down; empty for vertices
  std::vector<int> vertices;  // vertex-cell ids, positional
};

struct CWComplex {
  int d = 0;
  std::vector<std::vector<CWCell>> cells;  // dims 0..d
};

inline CWComplex materialize(const CWState& s) {
  const int d = s.base->d;
  CWComplex cw;
  cw.d = d;
  cw.cells.resize(static_cast<size_t>(d) + 1);
  std::vector<std::map<int, int>> local(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    for (int root : cw_classes(s, k))
      local[static_cast<size_t>(k)][root] =
          static_cast<int>(local[static_cast<size_t>(k)].size());
  }
  for (int k = 0; k <= d; ++k) {
    for (const auto& [root, id] : local[static_cast<size_t>(k)]) {
      CWCell cell;
      const Face& f = s.base->faces[static_cast<size_t>(k)][static_cast<size_t>(root)];
      for (vertex_t v : f)
        cell.vertices.push_back(local[0].at(s.find(0, v)));
      if (k >= 1)
        for (int sb : s.base->sub[static_cast<size_t>(k)][static_cast<size_t>(root)])
          cell.boundary.push_back(
              local[static_cast<size_t>(k) - 1].at(s.find(k - 1, sb)));
      cw.cells[static_cast<size_t>(k)].push_back(std::move(cell));
    }
  }
  return cw;
}

// ---------------------------------------------------------------------------
// Simplicialization: succeeds iff distinct cells have distinct vertex sets.

struct DoubledCellError : std::runtime_error {
  int dim;
  int cell_a, cell_b;
  DoubledCellError(int k, int a, int b)
      : std::runtime_error("cw_to_simplicial: two " + std::to_string(k) +
                           "-cells share one vertex set"),
        dim(k),
        cell_a(a),
        cell_b(b) {}
};

inline SimplicialComplex cw_to_simplicial(const CWComplex& cw) {
  for (int k = 0; k <= cw.d; ++k) {
    std::map<std::vector<int>, int> seen;
    for (size_t i = 0; i < cw.cells[static_cast<size_t>(k)].size(); ++i) {
      auto vs = cw.cells[static_cast<size_t>(k)][i].vertices;
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::logic_error("cw_to_simplicial: degenerate cell");
      auto [it, fresh] = seen.emplace(vs, static_cast<int>(i));
      if (!fresh) throw DoubledCellError(k, it->second, static_cast<int>(i));
    }
  }
  std::vector<Face> facets;
  for (const auto& cell : cw.cells[static_cast<size_t>(cw.d)]) {
    Face f(cell.vertices.begin(), cell.vertices.end());
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  return from_faces(facets);
}

// ---------------------------------------------------------------------------
// Canonical key of a CW complex: canonical labeling of the covering graph of
// the cell poset, cells colored by dimension and (d-1)-cells additionally by
// their d-cell incidence count.

inline std::string cw_canonical_key(const CWComplex& cw) {
  canon::Graph g;
  std::vector<int> offset(static_cast<size_t>(cw.d) + 2, 0);
  for (int k = 0; k <= cw.d; ++k)
    offset[static_cast<size_t>(k) + 1] =
        offset[static_cast<size_t>(k)] +
        static_cast<int>(cw.cells[static_cast<size_t>(k)].size());
  g.n = offset[static_cast<size_t>(cw.d) + 1];
  g.color.assign(static_cast<size_t>(g.n), 0);
  g.adj.assign(static_cast<size_t>(g.n), {});
  std::vector<int> ridge_use;
  if (cw.d >= 1) {
    ridge_use.assign(cw.cells[static_cast<size_t>(cw.d) - 1].size(), 0);
    for (const auto& cell : cw.cells[static_cast<size_t>(cw.d)])
      for (int b : cell.boundary) ++ridge_use[static_cast<size_t>(b)];
  }
  for (int k = 0; k <= cw.d; ++k) {
    for (size_t i = 0; i < cw.cells[static_cast<size_t>(k)].size(); ++i) {
      const int node = offset[static_cast<size_t>(k)] + static_cast<int>(i);
      g.color[static_cast<size_t>(node)] =
          3 * k + (k == cw.d - 1 ? std::min(ridge_use[i], 2) : 0);
      if (k >= 1) {
        std::set<int> subs(cw.cells[static_cast<size_t>(k)][i].boundary.begin(),
                           cw.cells[static_cast<size_t>(k)][i].boundary.end());
        for (int b : subs) {
          const int bnode = offset[static_cast<size_t>(k) - 1] + b;
          g.adj[static_cast<size_t>(node)].push_back(bnode);
          g.adj[static_cast<size_t>(bnode)].push_back(node);
        }
      }
    }
  }
  auto res = canon::canonical_labeling(g);
  std::string s;
  for (int32_t x : res.key) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

inline std::string cw_canonical_key(const CWState& s) {
  return cw_canonical_key(materialize(s));
}

// ---------------------------------------------------------------------------
// Link of a (d-3)-class as incidence data for the surface analyzer, with the
// translation tables needed to speak about ambient cells.  One triangle per
// (d-cell, contained (d-3)-face) incidence; its edges are the three facets of
// that d-cell containing the face; edge endpoints are the two (d-2)-classes
// between the face and the facet.

struct LinkComplex {
  TwoComplex c;
  std::vector<int> edge_cls;           // link edge -> (d-1)-class root
  std::vector<int> vert_cls;           // link vertex -> (d-2)-class root
  std::map<int, int> edge_local;       // (d-1)-class root -> link edge
  std::map<int, int> vert_local;       // (d-2)-class root -> link vertex
  std::vector<std::pair<int, int>> tri_src;  // triangle -> (d-cell, base face)
};

inline LinkComplex link_of(const CWState& s, int delta_cls) {
  const int d = s.base->d;
  if (d < 3) throw std::invalid_argument("link_of: requires d >= 3");
  LinkComplex L;
  auto vert_id = [&](int cls) {
    auto it = L.vert_local.find(cls);
    if (it != L.vert_local.end()) return it->second;
    int id = static_cast<int>(L.vert_cls.size());
    L.vert_local[cls] = id;
    L.vert_cls.push_back(cls);
    return id;
  };
  const auto& dfaces = s.base->faces[static_cast<size_t>(d)];
  for (size_t sigma = 0; sigma < dfaces.size(); ++sigma) {
    for_each_subface(dfaces[sigma], d - 2, [&](const Face& delta_face) {
      const int db = s.base->index[static_cast<size_t>(d) - 3].at(delta_face);
      if (s.find(d - 3, db) != delta_cls) return;
      std::array<int, 3> tri{};
      size_t slot = 0;
      for (int fb : s.base->sub[static_cast<size_t>(d)][sigma]) {
        const Face& facet =
            s.base->faces[static_cast<size_t>(d) - 1][static_cast<size_t>(fb)];
        if (!face_subset(delta_face, facet)) continue;
        const int ecls = s.find(d - 1, fb);
        auto it = L.edge_local.find(ecls);
        int eid;
        if (it == L.edge_local.end()) {
          eid = static_cast<int>(L.edge_cls.size());
          L.edge_local[ecls] = eid;
          L.edge_cls.push_back(ecls);
          std::array<int, 2> ends{-1, -1};
          size_t eslot = 0;
          for_each_subface(facet, d - 1, [&](const Face& mid) {
            if (!face_subset(delta_face, mid)) return;
            if (eslot >= 2)
              throw std::logic_error("link_of: more than two edge endpoints");
            ends[eslot++] = vert_id(
                s.find(d - 2, s.base->index[static_cast<size_t>(d) - 2].at(mid)));
          });
          if (eslot != 2)
            throw std::logic_error("link_of: edge endpoint count");
          L.c.edges.push_back(ends);
        } else {
          eid = it->second;
        }
        if (slot >= 3)
          throw std::logic_error("link_of: face in more than three facets");
        tri[slot++] = eid;
      }
      if (slot != 3)
        throw std::logic_error("link_of: face not in exactly three facets");
      L.c.triangles.push_back(tri);
      L.tri_src.emplace_back(static_cast<int>(sigma), db);
    });
  }
  L.c.n_vertices = static_cast<int>(L.vert_cls.size());
  return L;
}

}  // namespace tlc
