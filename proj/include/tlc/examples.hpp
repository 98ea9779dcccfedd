#pragma once

// Named example complexes and constructions.  Everything here is
// deterministic: fixed facet lists, or small parameterized families.  The
// recognition and census tests lean on these, and the command-line tool can
// emit them by name.

#include <tlc/gluing.hpp>
#include <tlc/simplicial_complex.hpp>
#include <tlc/tree_of_simplices.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlc {

// The unique 6-vertex triangulation of the real projective plane (vertex
// links are pentagons; the quotient of the icosahedron by the antipodal map).
inline SimplicialComplex projective_plane_6() {
  return from_faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                     {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

// The vertex-transitive 7-vertex torus: facets {i, i+1, i+3} and
// {i, i+2, i+3} modulo 7.
inline SimplicialComplex torus_7() {
  std::vector<Face> fs;
  for (int i = 0; i < 7; ++i) {
    fs.push_back(make_face({i, (i + 1) % 7, (i + 3) % 7}));
    fs.push_back(make_face({i, (i + 2) % 7, (i + 3) % 7}));
  }
  return from_faces(fs);
}

// Cone over the 7-vertex torus: a 3-pseudomanifold whose apex link is a
// torus, so it is not a manifold, yet every edge link is planar.
inline SimplicialComplex cone_over_torus() { return cone(7, torus_7()); }

// Two stacked 3-balls glued along a bowtie: each ball is a path of four
// tetrahedra, and the gluing identifies two boundary triangles that share
// exactly the vertex 3.  The link of 3 is an annulus, so the complex is a
// 3-pseudomanifold but not a manifold.
inline SimplicialComplex balls_glued_at_bowtie() {
  return from_faces({{0, 1, 2, 3},
                     {1, 2, 3, 4},
                     {2, 3, 4, 5},
                     {3, 4, 5, 6},
                     {0, 1, 3, 7},
                     {1, 3, 7, 8},
                     {3, 5, 7, 8},
                     {3, 5, 6, 8}});
}

// The two halves of balls_glued_at_bowtie, each a stacked ball, for tests
// that replay the gluing themselves.
inline SimplicialComplex stacked_four_ball_a() {
  return from_faces({{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}});
}
inline SimplicialComplex stacked_four_ball_b() {
  return from_faces({{0, 1, 3, 7}, {1, 3, 7, 8}, {3, 5, 7, 8}, {3, 5, 6, 8}});
}

// Path of four tetrahedra whose two end facets {0,1,3} and {3,5,6} are glued
// across their one shared vertex.  The result is a quasimanifold (every edge
// link planar and connected) that is pinched at the vertex 3, hence not a
// manifold.  Returned as a replayable construction; the final complex has
// doubled edges, so it is honestly CW rather than simplicial.
inline LocalConstruction pinched_ring_construction() {
  LocalConstruction lc;
  lc.tree.d = 3;
  lc.tree.attachments = {{0, {1, 2, 3}}, {1, {2, 3, 4}}, {2, {3, 4, 5}}};
  lc.t = 2;
  auto s = cw_from_tree(lc.tree);
  GluingMove m;
  m.cell_a = s.base->index[2].at({0, 1, 3});
  m.cell_b = s.base->index[2].at({3, 5, 6});
  m.vmap = {{0, 5}, {1, 6}, {3, 3}};
  lc.moves = {m};
  return lc;
}

// Path of m simplices of dimension t+1, facet i on {i, ..., i+t+1}, with the
// first and last vertex identified.  For m >= t+3 the link of the glued
// vertex is two disjoint t-simplices, which keeps depth low while the
// complex stays t-constructible.
inline SimplicialComplex pinched_simplex_path(int t, int m) {
  if (t < 0 || m < t + 3)
    throw std::invalid_argument("pinched_simplex_path: need t >= 0, m >= t+3");
  std::vector<Face> fs;
  for (int i = 0; i < m; ++i) {
    Face f;
    for (int v = i; v <= i + t + 1; ++v) f.push_back(v);
    fs.push_back(std::move(f));
  }
  return identify_vertices(from_faces(std::move(fs)), 0, m + t);
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

// Deterministic catalogue of small named complexes.  The first block keeps
// to at most 8 facets so that exhaustive recognition stays cheap; the tail
// adds the larger classics.
inline std::vector<NamedComplex> example_corpus() {
  std::vector<NamedComplex> out;
  auto add = [&](std::string name, SimplicialComplex K) {
    out.push_back({std::move(name), std::move(K)});
  };

  add("triangle", simplex_complex(2));
  add("tetrahedron", simplex_complex(3));
  add("sphere-2", boundary_complex(simplex_complex(3)));
  add("sphere-3", boundary_complex(simplex_complex(4)));
  {  // boundary of the cross-polytope, opposite pairs (0,1),(2,3),(4,5)
    std::vector<Face> fs;
    for (int a : {0, 1})
      for (int b : {2, 3})
        for (int c : {4, 5}) fs.push_back(make_face({a, b, c}));
    add("octahedron", from_faces(fs));
  }
  add("bipyramid", suspension(boundary_complex(simplex_complex(2))));
  add("moebius-band",
      from_faces({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}}));
  add("annulus",
      from_faces({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {0, 4, 5},
                  {0, 1, 5}}));
  for (int k : {3, 4, 5}) {  // cone over a k-cycle
    std::vector<Face> cyc;
    for (int i = 0; i < k; ++i) cyc.push_back(make_face({i, (i + 1) % k}));
    add("disk-fan-" + std::to_string(k), cone(k, from_faces(cyc)));
  }
  for (int n : {2, 3}) {  // paths of triangles
    std::vector<Face> fs;
    for (int i = 0; i < n; ++i) fs.push_back(make_face({i, i + 1, i + 2}));
    add("strip-" + std::to_string(n), from_faces(fs));
  }
  {  // the three shapes of trees of four triangles
    auto trees = generate_trees(2, 4, true);
    for (size_t i = 0; i < trees.size(); ++i)
      add("tree-2-4-" + std::string(1, static_cast<char>('a' + i)),
          tree_complex(trees[i]));
  }
  {  // stacked balls: trees of two and three tetrahedra
    auto t2 = generate_trees(3, 2, true);
    add("ball-2", tree_complex(t2[0]));
    auto t3 = generate_trees(3, 3, true);
    add("ball-3", tree_complex(t3[0]));
    add("stacked-sphere", boundary_complex(tree_complex(t2[0])));
  }
  add("pinched-path-1-4", pinched_simplex_path(1, 4));
  add("bowtie-balls", balls_glued_at_bowtie());

  add("projective-plane", projective_plane_6());
  add("torus", torus_7());
  add("cone-torus", cone_over_torus());
  return out;
}

}  // namespace tlc
