#pragma once

// Classification of 2-dimensional complexes by incidence data.  The engine
// works on an abstract description (vertices, edges with endpoints, triangles
// with edge ids) rather than on vertex sets, because links inside CW quotients
// routinely contain parallel edges and doubled triangles.
//
// The same analysis drives three consumers: the public classify_surface, the
// manifold certificates (vertex links), and the gluing filters (links of
// (d-3)-cells, normalized by cutting at pinch vertices into "pieces").

#include <tlc/simplicial_complex.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tlc {

struct TwoComplex {
  int n_vertices = 0;
  std::vector<std::array<int, 2>> edges;      // endpoint vertex ids
  std::vector<std::array<int, 3>> triangles;  // edge ids, distinct endpoints

  std::array<int, 3> triangle_vertices(size_t t) const {
    std::array<int, 3> vs{-1, -1, -1};
    size_t n = 0;
    for (int e : triangles[t])
      for (int v : edges[static_cast<size_t>(e)]) {
        bool seen = false;
        for (size_t i = 0; i < n; ++i) seen |= (vs[i] == v);
        if (!seen && n < 3) vs[n++] = v;
      }
    std::sort(vs.begin(), vs.end());
    return vs;
  }
};

// Requires a pure 2-dimensional simplicial complex.
inline TwoComplex to_two_complex(const SimplicialComplex& K) {
  if (K.dim() != 2 || !K.pure())
    throw std::invalid_argument("to_two_complex: not a pure 2-complex");
  TwoComplex C;
  std::map<vertex_t, int> vid;
  for (vertex_t v : vertices(K)) {
    vid[v] = C.n_vertices++;
  }
  std::map<Face, int> eid;
  for (const auto& f : faces_of_dim(K, 1)) {
    eid[f] = static_cast<int>(C.edges.size());
    C.edges.push_back({vid.at(f[0]), vid.at(f[1])});
  }
  for (const auto& f : K.facets) {
    std::array<int, 3> es{};
    auto bd = boundary_faces(f);
    for (size_t i = 0; i < 3; ++i) es[i] = eid.at(bd[i]);
    C.triangles.push_back(es);
  }
  return C;
}

struct SurfaceClass {
  bool orientable = true;
  int genus = 0;      // meaningful when orientable
  int crosscaps = 0;  // meaningful when non-orientable
  int boundary_circles = 0;
  long euler = 0;
  bool operator==(const SurfaceClass&) const = default;

  bool is_sphere() const {
    return orientable && genus == 0 && boundary_circles == 0;
  }
  bool is_disk() const {
    return orientable && genus == 0 && boundary_circles == 1;
  }
};

struct NotASurface {
  std::string reason;
  int witness = -1;  // edge or vertex id, depending on the reason
};

using SurfaceResult = std::variant<SurfaceClass, NotASurface>;

// Full structural analysis.  A "fan" is a maximal run of triangles around one
// vertex glued along edges at that vertex; vertices with several fans are
// pinch points.  A "piece" is an edge-connected component of triangles; for
// Euler characteristic purposes each fan counts as one vertex, which is
// exactly the normalization that cuts the complex at its pinch points.
struct LinkAnalysis {
  struct Fan {
    int vertex = -1;
    int piece = -1;
    bool cycle = false;  // closed fan: the vertex copy is interior
    std::vector<int> triangles;
    std::array<int, 2> end_edges{-1, -1};  // boundary edges, path fans only
  };
  struct Piece {
    long euler = 0;
    bool orientable = true;
    int boundary_circles = 0;
    std::vector<int> triangles;
    SurfaceClass surface() const {
      SurfaceClass s;
      s.orientable = orientable;
      s.boundary_circles = boundary_circles;
      s.euler = euler;
      long deficit = 2 - euler - boundary_circles;
      if (orientable)
        s.genus = static_cast<int>(deficit / 2);
      else
        s.crosscaps = static_cast<int>(deficit);
      return s;
    }
  };

  bool valid = false;          // false: not even a pseudo-surface
  std::string failure;         // reason when invalid
  int failure_witness = -1;    // edge or vertex id
  std::vector<int> edge_triangle_count;
  std::vector<Fan> fans;
  std::vector<std::vector<int>> fans_of_vertex;
  std::vector<int> fan_of_triangle_at_vertex(int tri, int v) const {
    // convenience for callers; linear scan is fine at this scale
    std::vector<int> out;
    for (int fid : fans_of_vertex[static_cast<size_t>(v)])
      for (int t : fans[static_cast<size_t>(fid)].triangles)
        if (t == tri) out.push_back(fid);
    return out;
  }
  std::vector<Piece> pieces;
  std::vector<int> piece_of_triangle;
  // Boundary circle structure: circle ids on boundary edges, -1 elsewhere.
  std::vector<int> circle_of_edge;
  int n_circles = 0;
  std::vector<int> piece_of_circle;

  bool vertex_all_path_fans(int v) const {
    for (int fid : fans_of_vertex[static_cast<size_t>(v)])
      if (fans[static_cast<size_t>(fid)].cycle) return false;
    return !fans_of_vertex[static_cast<size_t>(v)].empty();
  }
  // Boundary circle of vertex v within fan `fid` (path fans only): the circle
  // of either end edge.
  int circle_of_fan(int fid) const {
    const Fan& f = fans[static_cast<size_t>(fid)];
    if (f.cycle || f.end_edges[0] < 0) return -1;
    return circle_of_edge[static_cast<size_t>(f.end_edges[0])];
  }
};

inline LinkAnalysis analyze_two_complex(const TwoComplex& C) {
  LinkAnalysis A;
  const size_t E = C.edges.size(), T = C.triangles.size(), V =
      static_cast<size_t>(C.n_vertices);
  A.edge_triangle_count.assign(E, 0);
  for (const auto& tri : C.triangles)
    for (int e : tri) ++A.edge_triangle_count[static_cast<size_t>(e)];

  for (size_t e = 0; e < E; ++e) {
    if (A.edge_triangle_count[e] > 2) {
      A.failure = "edge in more than two triangles";
      A.failure_witness = static_cast<int>(e);
      return A;
    }
    if (A.edge_triangle_count[e] == 0) {
      A.failure = "edge in no triangle";
      A.failure_witness = static_cast<int>(e);
      return A;
    }
  }
  for (size_t v = 0; v < V; ++v) {
    bool used = false;
    for (const auto& ed : C.edges)
      used |= (ed[0] == static_cast<int>(v) || ed[1] == static_cast<int>(v));
    if (!used) {
      A.failure = "isolated vertex";
      A.failure_witness = static_cast<int>(v);
      return A;
    }
  }

  // Fans: for each vertex, union triangles at v along shared edges at v.
  A.fans_of_vertex.assign(V, {});
  for (size_t v = 0; v < V; ++v) {
    // edges at v and the (at most 2) triangles at each
    std::map<int, std::vector<int>> tris_at_edge;
    std::vector<int> tris_at_v;
    for (size_t t = 0; t < T; ++t) {
      int count = 0;
      for (int e : C.triangles[t]) {
        const auto& ed = C.edges[static_cast<size_t>(e)];
        if (ed[0] == static_cast<int>(v) || ed[1] == static_cast<int>(v)) {
          tris_at_edge[e].push_back(static_cast<int>(t));
          ++count;
        }
      }
      if (count > 0) {
        tris_at_v.push_back(static_cast<int>(t));
        if (count != 2) {
          A.failure = "triangle meets a vertex in other than two edges";
          A.failure_witness = static_cast<int>(v);
          return A;
        }
      }
    }
    // components over triangles at v via shared edges at v
    std::map<int, int> comp;
    for (int t : tris_at_v) comp[t] = t;
    std::function<int(int)> find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (auto& [e, ts] : tris_at_edge)
      if (ts.size() == 2) comp[find(ts[0])] = find(ts[1]);
    std::map<int, int> fan_id;
    for (int t : tris_at_v) {
      int root = find(t);
      auto it = fan_id.find(root);
      if (it == fan_id.end()) {
        fan_id[root] = static_cast<int>(A.fans.size());
        A.fans.push_back({});
        A.fans.back().vertex = static_cast<int>(v);
        A.fans_of_vertex[v].push_back(fan_id[root]);
      }
      A.fans[static_cast<size_t>(fan_id[root])].triangles.push_back(t);
    }
    // path vs cycle: a fan is a cycle iff all its edges at v have 2 triangles
    for (auto& [e, ts] : tris_at_edge) {
      if (ts.size() == 1) {
        int fid = fan_id[find(ts[0])];
        auto& fan = A.fans[static_cast<size_t>(fid)];
        if (fan.end_edges[0] < 0)
          fan.end_edges[0] = e;
        else if (fan.end_edges[1] < 0)
          fan.end_edges[1] = e;
        else {
          A.failure = "vertex fan is not a path or cycle";
          A.failure_witness = static_cast<int>(v);
          return A;
        }
      }
    }
    for (int fid : A.fans_of_vertex[v]) {
      auto& fan = A.fans[static_cast<size_t>(fid)];
      fan.cycle = (fan.end_edges[0] < 0);
      if (!fan.cycle && fan.end_edges[1] < 0) {
        // single boundary end cannot happen on a path: each path fan has
        // exactly two ends (a lone triangle has both its at-v edges free)
        A.failure = "vertex fan is not a path or cycle";
        A.failure_witness = static_cast<int>(v);
        return A;
      }
    }
  }

  // Pieces: edge-connected components of triangles.
  std::vector<int> pc(T);
  for (size_t t = 0; t < T; ++t) pc[t] = static_cast<int>(t);
  std::function<int(int)> pfind = [&](int x) {
    while (pc[static_cast<size_t>(x)] != x)
      x = pc[static_cast<size_t>(x)] = pc[static_cast<size_t>(pc[static_cast<size_t>(x)])];
    return x;
  };
  {
    std::vector<std::vector<int>> tris_of_edge(E);
    for (size_t t = 0; t < T; ++t)
      for (int e : C.triangles[t])
        tris_of_edge[static_cast<size_t>(e)].push_back(static_cast<int>(t));
    for (auto& ts : tris_of_edge)
      if (ts.size() == 2) pc[static_cast<size_t>(pfind(ts[0]))] = pfind(ts[1]);
  }
  std::map<int, int> piece_id;
  A.piece_of_triangle.assign(T, -1);
  for (size_t t = 0; t < T; ++t) {
    int root = pfind(static_cast<int>(t));
    auto it = piece_id.find(root);
    if (it == piece_id.end()) {
      piece_id[root] = static_cast<int>(A.pieces.size());
      A.pieces.push_back({});
    }
    A.piece_of_triangle[t] = piece_id[root];
    A.pieces[static_cast<size_t>(piece_id[root])].triangles.push_back(
        static_cast<int>(t));
  }
  for (auto& fan : A.fans)
    fan.piece = A.piece_of_triangle[static_cast<size_t>(fan.triangles[0])];

  // Euler characteristic per piece: fans as vertices.
  {
    std::vector<long> ve(A.pieces.size(), 0), ee(A.pieces.size(), 0);
    for (const auto& fan : A.fans) ++ve[static_cast<size_t>(fan.piece)];
    for (size_t e = 0; e < E; ++e) {
      // edge's piece = piece of any triangle containing it
      for (size_t t = 0; t < T; ++t) {
        bool has = false;
        for (int ce : C.triangles[t]) has |= (ce == static_cast<int>(e));
        if (has) {
          ++ee[static_cast<size_t>(A.piece_of_triangle[t])];
          break;
        }
      }
    }
    for (size_t p = 0; p < A.pieces.size(); ++p)
      A.pieces[p].euler = ve[p] - ee[p] +
                          static_cast<long>(A.pieces[p].triangles.size());
  }

  // Orientability per piece via orientation propagation.  Reference
  // orientation of a triangle: its sorted vertex triple (a,b,c) traversed
  // a->b->c->a; adjacent triangles must induce opposite directions on the
  // shared edge.
  {
    std::vector<std::vector<int>> tris_of_edge(E);
    for (size_t t = 0; t < T; ++t)
      for (int e : C.triangles[t])
        tris_of_edge[static_cast<size_t>(e)].push_back(static_cast<int>(t));
    auto direction = [&](size_t t, int e) {
      auto vs = C.triangle_vertices(t);
      const auto& ed = C.edges[static_cast<size_t>(e)];
      // +1 if the cycle (vs0,vs1,vs2) traverses the edge min->max
      for (int i = 0; i < 3; ++i) {
        int from = vs[static_cast<size_t>(i)], to = vs[static_cast<size_t>((i + 1) % 3)];
        if ((from == ed[0] && to == ed[1]) || (from == ed[1] && to == ed[0]))
          return (from == std::min(ed[0], ed[1])) ? 1 : -1;
      }
      return 0;  // unreachable for well-formed triangles
    };
    std::vector<int> flip(T, 0);
    for (size_t seed = 0; seed < T; ++seed) {
      if (flip[seed] != 0) continue;
      flip[seed] = 1;
      std::vector<int> stack{static_cast<int>(seed)};
      auto& piece = A.pieces[static_cast<size_t>(A.piece_of_triangle[seed])];
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int e : C.triangles[static_cast<size_t>(t)]) {
          for (int u : tris_of_edge[static_cast<size_t>(e)]) {
            if (u == t) continue;
            int want = -flip[static_cast<size_t>(t)] *
                       direction(static_cast<size_t>(t), e) *
                       direction(static_cast<size_t>(u), e);
            if (flip[static_cast<size_t>(u)] == 0) {
              flip[static_cast<size_t>(u)] = want;
              stack.push_back(u);
            } else if (flip[static_cast<size_t>(u)] != want) {
              piece.orientable = false;
            }
          }
        }
      }
    }
  }

  // Boundary circles: boundary edges joined through path-fan copies of their
  // endpoint vertices.  Union-find over fan ids.
  {
    std::vector<int> fc(A.fans.size());
    for (size_t i = 0; i < fc.size(); ++i) fc[i] = static_cast<int>(i);
    std::function<int(int)> cfind = [&](int x) {
      while (fc[static_cast<size_t>(x)] != x)
        x = fc[static_cast<size_t>(x)] = fc[static_cast<size_t>(fc[static_cast<size_t>(x)])];
      return x;
    };
    A.circle_of_edge.assign(E, -1);
    auto boundary_fan_at = [&](size_t e, int v) -> int {
      for (int fid : A.fans_of_vertex[static_cast<size_t>(v)]) {
        const auto& fan = A.fans[static_cast<size_t>(fid)];
        if (fan.end_edges[0] == static_cast<int>(e) ||
            fan.end_edges[1] == static_cast<int>(e))
          return fid;
      }
      return -1;
    };
    for (size_t e = 0; e < E; ++e) {
      if (A.edge_triangle_count[e] != 1) continue;
      int f0 = boundary_fan_at(e, C.edges[e][0]);
      int f1 = boundary_fan_at(e, C.edges[e][1]);
      if (f0 >= 0 && f1 >= 0) fc[static_cast<size_t>(cfind(f0))] = cfind(f1);
    }
    std::map<int, int> circle_id;
    for (size_t e = 0; e < E; ++e) {
      if (A.edge_triangle_count[e] != 1) continue;
      int f0 = boundary_fan_at(e, C.edges[e][0]);
      int root = cfind(f0);
      auto it = circle_id.find(root);
      if (it == circle_id.end()) {
        circle_id[root] = A.n_circles++;
        A.piece_of_circle.push_back(
            A.fans[static_cast<size_t>(f0)].piece);
      }
      A.circle_of_edge[e] = circle_id[root];
      ++A.pieces[static_cast<size_t>(A.fans[static_cast<size_t>(f0)].piece)]
            .boundary_circles;  // counted per edge; fixed below
    }
    // boundary_circles currently counts edges; recount circles per piece
    for (auto& p : A.pieces) p.boundary_circles = 0;
    for (int c = 0; c < A.n_circles; ++c)
      ++A.pieces[static_cast<size_t>(A.piece_of_circle[static_cast<size_t>(c)])]
            .boundary_circles;
  }

  A.valid = true;
  return A;
}

// A connected surface, possibly with boundary; anything else reports failure
// with a witness cell.
inline SurfaceResult classify_surface(const TwoComplex& C) {
  if (C.triangles.empty())
    return NotASurface{"no triangles", -1};
  LinkAnalysis A = analyze_two_complex(C);
  if (!A.valid) return NotASurface{A.failure, A.failure_witness};
  for (int v = 0; v < C.n_vertices; ++v)
    if (A.fans_of_vertex[static_cast<size_t>(v)].size() > 1)
      return NotASurface{"pinched vertex", v};
  if (A.pieces.size() != 1) return NotASurface{"disconnected", -1};
  return A.pieces[0].surface();
}

inline SurfaceResult classify_surface(const SimplicialComplex& K) {
  if (K.dim() != 2 || !K.pure())
    return NotASurface{"not a pure 2-complex", -1};
  return classify_surface(to_two_complex(K));
}

// 1-dimensional analogue used for d=2 manifold certificates: is the complex a
// single cycle, a single path (including a lone edge), or neither?
enum class CurveClass { Cycle, Path, Neither };

inline CurveClass classify_curve(const SimplicialComplex& K) {
  if (K.dim() != 1 || !K.pure()) return CurveClass::Neither;
  std::map<vertex_t, int> deg;
  for (const auto& e : K.facets) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  int ones = 0;
  for (auto& [v, d] : deg) {
    if (d > 2) return CurveClass::Neither;
    if (d == 1) ++ones;
  }
  // connectivity over edges
  std::map<vertex_t, vertex_t> parent;
  for (auto& [v, d] : deg) parent[v] = v;
  std::function<vertex_t(vertex_t)> find = [&](vertex_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : K.facets) parent[find(e[0])] = find(e[1]);
  std::set<vertex_t> roots;
  for (auto& [v, d] : deg) roots.insert(find(v));
  if (roots.size() != 1) return CurveClass::Neither;
  if (ones == 0) return CurveClass::Cycle;
  if (ones == 2) return CurveClass::Path;
  return CurveClass::Neither;
}

}  // namespace tlc
