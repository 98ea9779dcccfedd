#pragma once

// Gluing moves on CW states: admissibility, the identification cascade, the
// link-topology filters that carve quasimanifolds out of pseudomanifolds,
// forced gluings, and replayable constructions.

#include <tlc/cw_complex.hpp>

#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace tlc {

// A move names two boundary (d-1)-cells by base face ids (any member of the
// class) and a vertex bijection as pairs of base vertex ids.  Base ids are
// stable across the whole construction, which keeps serialized moves
// replayable bit-exactly.
struct GluingMove {
  int cell_a = -1;
  int cell_b = -1;
  std::vector<std::pair<int, int>> vmap;
  bool operator==(const GluingMove&) const = default;
};

namespace detail {

struct ResolvedMove {
  int A = -1, B = -1;           // class roots at dimension d-1
  Face a_face, b_face;          // their representative base faces
  std::map<int, int> psi;       // vertex class -> vertex class
  std::map<int, int> b_vertex;  // vertex class -> base vertex of b_face
};

// Structural validation; throws std::invalid_argument on malformed moves.
// Boundary-ness is deliberately not checked here: gluing a non-boundary cell
// surfaces as OverusedRidge in apply_gluing.
inline ResolvedMove resolve_move(const CWState& s, const GluingMove& mv) {
  const int d = s.base->d;
  if (d < 2) throw std::invalid_argument("gluing: requires d >= 2");
  const int nf = s.n_cells(d - 1);
  if (mv.cell_a < 0 || mv.cell_a >= nf || mv.cell_b < 0 || mv.cell_b >= nf)
    throw std::invalid_argument("gluing: cell id out of range");
  ResolvedMove r;
  r.A = s.find(d - 1, mv.cell_a);
  r.B = s.find(d - 1, mv.cell_b);
  if (r.A == r.B)
    throw std::invalid_argument("gluing: cells are already one cell");
  r.a_face = s.base->faces[static_cast<size_t>(d) - 1][static_cast<size_t>(r.A)];
  r.b_face = s.base->faces[static_cast<size_t>(d) - 1][static_cast<size_t>(r.B)];
  std::set<int> a_classes, b_classes;
  for (vertex_t v : r.a_face) a_classes.insert(s.find(0, v));
  for (vertex_t w : r.b_face) {
    const int cw = s.find(0, w);
    b_classes.insert(cw);
    r.b_vertex[cw] = w;
  }
  if (a_classes.size() != r.a_face.size() ||
      b_classes.size() != r.b_face.size())
    throw std::invalid_argument("gluing: degenerate cell in move");
  if (mv.vmap.size() != r.a_face.size())
    throw std::invalid_argument("gluing: bijection has wrong size");
  std::set<int> image;
  for (const auto& [va, vb] : mv.vmap) {
    if (va < 0 || va >= s.n_cells(0) || vb < 0 || vb >= s.n_cells(0))
      throw std::invalid_argument("gluing: bijection vertex out of range");
    const int ca = s.find(0, va), cb = s.find(0, vb);
    if (!a_classes.count(ca) || !b_classes.count(cb))
      throw std::invalid_argument("gluing: bijection not between the cells");
    if (r.psi.count(ca) || !image.insert(cb).second)
      throw std::invalid_argument("gluing: bijection not one-to-one");
    r.psi[ca] = cb;
  }
  return r;
}

}  // namespace detail

// Every class identification implied by a move, as (dimension, class, class)
// in pre-move classes: one entry per subface of the glued cell, including the
// cell pair itself.  Entries with equal classes are no-ops for the state but
// still listed.
inline std::vector<std::tuple<int, int, int>> cascade_merges(
    const CWState& s, const GluingMove& mv) {
  const auto r = detail::resolve_move(s, mv);
  const int n = static_cast<int>(r.a_face.size());
  std::vector<std::tuple<int, int, int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Face sa, sb;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        const vertex_t v = r.a_face[static_cast<size_t>(i)];
        sa.push_back(v);
        sb.push_back(r.b_vertex.at(r.psi.at(s.find(0, v))));
      }
    std::sort(sb.begin(), sb.end());
    const int k = static_cast<int>(sa.size()) - 1;
    const int xa = s.find(k, s.base->index[static_cast<size_t>(k)].at(sa));
    const int xb = s.find(k, s.base->index[static_cast<size_t>(k)].at(sb));
    out.emplace_back(k, xa, xb);
  }
  return out;
}

inline int intersection_dimension(const CWState& s, const GluingMove& mv) {
  const auto r = detail::resolve_move(s, mv);
  return common_cells(s, r.A, r.B).dim;
}

struct GluingRejection {
  enum class Kind { DegenerateCell, OverusedRidge } kind;
  int dim = -1;
  std::vector<int> cells;  // offending base ids at `dim`
  std::string message;
};

using ApplyResult = std::variant<CWState, GluingRejection>;

// The identification cascade.  Atomic: works on a copy, so the input state is
// unchanged on rejection.  Rejects with DegenerateCell if any cell's vertex
// multiset acquires a repeat, with OverusedRidge if any (d-1)-class ends up
// with more than two d-cell incidences (e.g. one of the glued cells was
// interior).  The move's vertex bijection must fix every common vertex class;
// violations of that are malformed input, not rejections.
inline ApplyResult apply_gluing(const CWState& s, const GluingMove& mv) {
  const auto r = detail::resolve_move(s, mv);
  {
    const auto common = common_cells(s, r.A, r.B);
    if (!common.per_dim.empty())
      for (int c : common.per_dim[0])
        if (r.psi.at(c) != c)
          throw std::invalid_argument(
              "gluing: bijection moves a common vertex");
  }
  CWState next = s;
  for (const auto& [k, xa, xb] : cascade_merges(s, mv)) next.unite(k, xa, xb);

  const int d = s.base->d;
  for (int k = 1; k <= d; ++k) {
    const auto& faces = s.base->faces[static_cast<size_t>(k)];
    for (size_t i = 0; i < faces.size(); ++i) {
      std::vector<int> vs;
      for (vertex_t v : faces[i]) vs.push_back(next.find(0, v));
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
        GluingRejection rej;
        rej.kind = GluingRejection::Kind::DegenerateCell;
        rej.dim = k;
        rej.cells = {static_cast<int>(i)};
        rej.message = "cell acquires a repeated vertex";
        return rej;
      }
    }
  }
  for (const auto& [cls, count] : facet_incidence_counts(next)) {
    if (count > 2) {
      GluingRejection rej;
      rej.kind = GluingRejection::Kind::OverusedRidge;
      rej.dim = d - 1;
      rej.cells = {cls};
      rej.message = "(d-1)-cell in more than two d-cells";
      return rej;
    }
  }
  return next;
}

// All t-admissible moves of a state: unordered pairs of distinct boundary
// (d-1)-classes whose intersection dimension is at least d-1-t, each with
// every vertex bijection fixing the intersection pointwise.  Deterministic
// order: by (class, class, bijection).
inline std::vector<GluingMove> admissible_moves(const CWState& s, int t) {
  const int d = s.base->d;
  if (d < 2) throw std::invalid_argument("admissible_moves: requires d >= 2");
  if (t < 1) throw std::invalid_argument("admissible_moves: t must be >= 1");
  std::vector<GluingMove> out;
  const auto boundary = boundary_facet_classes(s);
  for (size_t ia = 0; ia < boundary.size(); ++ia) {
    for (size_t ib = ia + 1; ib < boundary.size(); ++ib) {
      const int A = boundary[ia], B = boundary[ib];
      const auto common = common_cells(s, A, B);
      if (common.dim < d - 1 - t) continue;
      const Face& a_face =
          s.base->faces[static_cast<size_t>(d) - 1][static_cast<size_t>(A)];
      const Face& b_face =
          s.base->faces[static_cast<size_t>(d) - 1][static_cast<size_t>(B)];
      const std::set<int>& fixed = common.per_dim[0];
      std::map<int, int> b_vertex;
      for (vertex_t w : b_face) b_vertex[s.find(0, w)] = w;
      std::vector<int> free_a;
      std::vector<int> free_b;
      for (vertex_t v : a_face)
        if (!fixed.count(s.find(0, v))) free_a.push_back(v);
      for (vertex_t w : b_face)
        if (!fixed.count(s.find(0, w))) free_b.push_back(w);
      if (free_a.size() != free_b.size())
        throw std::logic_error("admissible_moves: free vertex mismatch");
      std::sort(free_b.begin(), free_b.end());
      do {
        GluingMove mv;
        mv.cell_a = A;
        mv.cell_b = B;
        size_t fi = 0;
        for (vertex_t v : a_face) {
          const int cv = s.find(0, v);
          if (fixed.count(cv))
            mv.vmap.emplace_back(v, b_vertex.at(cv));
          else
            mv.vmap.emplace_back(v, free_b[fi++]);
        }
        out.push_back(std::move(mv));
      } while (std::next_permutation(free_b.begin(), free_b.end()));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Link-topology filters.  A move on a d >= 3 state is checked against the
// links of every (d-3)-class it touches, in this order per link:
//   (1) every piece of the updated link stays orientable;
//   (2) every piece stays genus zero;
//   (3) the move identified only boundary cells of the old links;
//   (4) the move never joined two distinct boundary circles of one piece of
//       one link (joins across links or across pieces are fine).

struct QuasimanifoldViolation {
  int condition = 0;  // 1..4
  int cell = -1;      // post-move (d-3)-class root whose link witnessed it
};

inline std::optional<QuasimanifoldViolation> check_quasimanifold_conditions(
    const CWState& s, const GluingMove& mv) {
  const int d = s.base->d;
  if (d < 3)
    throw std::invalid_argument(
        "check_quasimanifold_conditions: requires d >= 3");
  const auto merges = cascade_merges(s, mv);
  auto applied = apply_gluing(s, mv);
  if (!std::holds_alternative<CWState>(applied))
    throw std::invalid_argument(
        "check_quasimanifold_conditions: move does not apply");
  const CWState& post = std::get<CWState>(applied);

  // Post-classes of (d-3)-cells whose links the move touched.
  std::set<int> affected;
  for (const auto& [k, xa, xb] : merges) {
    if (k == d - 3) {
      affected.insert(post.find(d - 3, xa));
    } else if (k >= d - 2) {
      for (int r : sub_classes(s, k, xa, d - 3))
        affected.insert(post.find(d - 3, r));
      for (int r : sub_classes(s, k, xb, d - 3))
        affected.insert(post.find(d - 3, r));
    }
  }

  for (int delta_post : affected) {
    // Pre-move links of the classes that fused into this one.
    std::vector<int> group;
    for (int r : cw_classes(s, d - 3))
      if (post.find(d - 3, r) == delta_post) group.push_back(r);
    std::map<int, LinkComplex> pre_link;
    std::map<int, LinkAnalysis> pre_an;
    for (int r : group) {
      pre_link.emplace(r, link_of(s, r));
      auto an = analyze_two_complex(pre_link.at(r).c);
      if (!an.valid)
        throw std::logic_error("check_quasimanifold_conditions: bad pre link");
      pre_an.emplace(r, std::move(an));
    }

    auto post_link = link_of(post, delta_post);
    auto post_an = analyze_two_complex(post_link.c);
    if (!post_an.valid)
      throw std::logic_error("check_quasimanifold_conditions: bad post link");

    for (const auto& piece : post_an.pieces)
      if (!piece.orientable)
        return QuasimanifoldViolation{1, delta_post};
    for (const auto& piece : post_an.pieces)
      if (piece.surface().genus > 0)
        return QuasimanifoldViolation{2, delta_post};

    // Which pre-link contains a given cell class, if any.
    auto locate = [&](int k, int cls) -> int {
      for (int r : group) {
        const auto& L = pre_link.at(r);
        if (k == d - 1 ? L.edge_local.count(cls) : L.vert_local.count(cls))
          return r;
      }
      return -1;
    };

    for (const auto& [k, xa, xb] : merges) {
      if (xa == xb || k < d - 2 || k > d - 1) continue;
      const int ra = locate(k, xa), rb = locate(k, xb);
      if (ra < 0 && rb < 0) continue;  // merge elsewhere in the complex
      if (k == d - 1) {
        for (auto [r, cls] : {std::pair{ra, xa}, std::pair{rb, xb}}) {
          if (r < 0) continue;
          const auto& L = pre_link.at(r);
          const auto& an = pre_an.at(r);
          const int e = L.edge_local.at(cls);
          if (an.edge_triangle_count[static_cast<size_t>(e)] != 1)
            return QuasimanifoldViolation{3, delta_post};
        }
      } else {
        for (auto [r, cls] : {std::pair{ra, xa}, std::pair{rb, xb}}) {
          if (r < 0) continue;
          const auto& an = pre_an.at(r);
          if (!an.vertex_all_path_fans(pre_link.at(r).vert_local.at(cls)))
            return QuasimanifoldViolation{3, delta_post};
        }
      }
    }

    for (const auto& [k, xa, xb] : merges) {
      if (xa == xb || k < d - 2 || k > d - 1) continue;
      const int ra = locate(k, xa), rb = locate(k, xb);
      if (ra < 0 || rb < 0 || ra != rb) continue;  // across links: benign
      const auto& L = pre_link.at(ra);
      const auto& an = pre_an.at(ra);
      std::set<std::pair<int, int>> ca, cb;  // (piece, circle)
      auto circles_of = [&](int cls, std::set<std::pair<int, int>>& out) {
        if (k == d - 1) {
          const int e = L.edge_local.at(cls);
          const int c = an.circle_of_edge[static_cast<size_t>(e)];
          if (c >= 0)
            out.insert({an.piece_of_circle[static_cast<size_t>(c)], c});
        } else {
          const int v = L.vert_local.at(cls);
          for (int fid : an.fans_of_vertex[static_cast<size_t>(v)]) {
            const int c = an.circle_of_fan(fid);
            if (c >= 0)
              out.insert({an.piece_of_circle[static_cast<size_t>(c)], c});
          }
        }
      };
      circles_of(xa, ca);
      circles_of(xb, cb);
      for (const auto& [pa, cca] : ca)
        for (const auto& [pb, ccb] : cb)
          if (pa == pb && cca != ccb)
            return QuasimanifoldViolation{4, delta_post};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Forced gluings: two boundary (d-1)-classes that run between the same two
// link vertices of some (d-3)-class form a parallel pair; a simplicial end
// state must identify them, so schedulers treat these moves as mandatory.
// The bijection is forced too: the pair's common cells cover all vertices.

inline std::vector<GluingMove> forced_gluings(const CWState& s) {
  const int d = s.base->d;
  if (d < 3) throw std::invalid_argument("forced_gluings: requires d >= 3");
  std::map<std::pair<int, int>, GluingMove> found;
  for (int delta : cw_classes(s, d - 3)) {
    const auto L = link_of(s, delta);
    std::vector<int> tri_count(L.c.edges.size(), 0);
    for (const auto& tri : L.c.triangles)
      for (int e : tri) ++tri_count[static_cast<size_t>(e)];
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (size_t e = 0; e < L.c.edges.size(); ++e) {
      if (tri_count[e] != 1) continue;  // interior edges are already glued
      auto ends = L.c.edges[e];
      by_ends[{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])}]
          .push_back(static_cast<int>(e));
    }
    for (const auto& [ends, edges] : by_ends) {
      for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
          int A = L.edge_cls[static_cast<size_t>(edges[i])];
          int B = L.edge_cls[static_cast<size_t>(edges[j])];
          if (A > B) std::swap(A, B);
          if (found.count({A, B})) continue;
          const Face& a_face =
              s.base->faces[static_cast<size_t>(d) - 1][static_cast<size_t>(A)];
          const Face& b_face =
              s.base->faces[static_cast<size_t>(d) - 1][static_cast<size_t>(B)];
          std::map<int, int> b_vertex;
          for (vertex_t w : b_face) b_vertex[s.find(0, w)] = w;
          GluingMove mv;
          mv.cell_a = A;
          mv.cell_b = B;
          for (vertex_t v : a_face)
            mv.vmap.emplace_back(v, b_vertex.at(s.find(0, v)));
          found.emplace(std::pair{A, B}, std::move(mv));
        }
      }
    }
  }
  std::vector<GluingMove> out;
  for (auto& [key, mv] : found) out.push_back(std::move(mv));
  return out;
}

// ---------------------------------------------------------------------------
// Replayable constructions.

struct LocalConstruction {
  TreeOfSimplices tree;
  int t = 2;
  std::vector<GluingMove> moves;
  bool operator==(const LocalConstruction&) const = default;
};

struct ReplayResult {
  bool valid = false;
  int failed_index = -1;  // first bad move when invalid
  std::string reason;
  CWState state;  // after the longest valid prefix
};

inline ReplayResult replay(const LocalConstruction& lc) {
  ReplayResult r;
  r.state = cw_from_tree(lc.tree);
  const int d = lc.tree.d;
  for (size_t i = 0; i < lc.moves.size(); ++i) {
    const auto& mv = lc.moves[i];
    try {
      const auto rm = detail::resolve_move(r.state, mv);
      const auto counts = facet_incidence_counts(r.state);
      if (counts.at(rm.A) != 1 || counts.at(rm.B) != 1) {
        r.failed_index = static_cast<int>(i);
        r.reason = "cell not on the boundary";
        return r;
      }
      if (common_cells(r.state, rm.A, rm.B).dim < d - 1 - lc.t) {
        r.failed_index = static_cast<int>(i);
        r.reason = "intersection dimension too small for t";
        return r;
      }
      auto applied = apply_gluing(r.state, mv);
      if (auto* rej = std::get_if<GluingRejection>(&applied)) {
        r.failed_index = static_cast<int>(i);
        r.reason = rej->message;
        return r;
      }
      r.state = std::move(std::get<CWState>(applied));
    } catch (const std::invalid_argument& e) {
      r.failed_index = static_cast<int>(i);
      r.reason = e.what();
      return r;
    }
  }
  r.valid = true;
  return r;
}

// ---------------------------------------------------------------------------
// Round partition of a complete construction: round 1 holds the moves whose
// cells share a (d-3)-class in the initial tree; each later round holds the
// moves whose cells first share one after the previous rounds.

struct RoundPartition {
  std::vector<std::vector<int>> rounds;  // move indices
  std::vector<long long> m;              // facets glued per round
  std::vector<long long> n;              // distinct shared (d-3)-classes used
  std::vector<mpq_class> L;              // L[i] = m[i-1]/2 * (d(d-1)/2 - 1), i >= 1
};

inline RoundPartition round_partition(const LocalConstruction& lc) {
  const int d = lc.tree.d;
  if (d < 3) throw std::invalid_argument("round_partition: requires d >= 3");
  auto rr = replay(lc);
  if (!rr.valid) throw std::invalid_argument("round_partition: invalid moves");
  if (!boundary_facet_classes(rr.state).empty())
    throw std::invalid_argument("round_partition: construction incomplete");

  RoundPartition out;
  CWState state = cw_from_tree(lc.tree);
  std::vector<int> remaining(lc.moves.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    std::vector<int> round, rest;
    std::set<int> used;
    for (int i : remaining) {
      const auto rm = detail::resolve_move(state, lc.moves[static_cast<size_t>(i)]);
      const auto common = common_cells(state, rm.A, rm.B);
      const auto& shared = common.per_dim[static_cast<size_t>(d) - 3];
      if (!shared.empty()) {
        round.push_back(i);
        used.insert(shared.begin(), shared.end());
      } else {
        rest.push_back(i);
      }
    }
    if (round.empty())
      throw std::invalid_argument(
          "round_partition: some move never shares a (d-3)-face");
    for (int i : round) {
      auto applied = apply_gluing(state, lc.moves[static_cast<size_t>(i)]);
      state = std::move(std::get<CWState>(applied));
    }
    out.rounds.push_back(round);
    out.m.push_back(2LL * static_cast<long long>(round.size()));
    out.n.push_back(static_cast<long long>(used.size()));
    remaining = std::move(rest);
  }
  out.L.assign(out.m.size(), mpq_class(0));
  for (size_t i = 1; i < out.m.size(); ++i) {
    out.L[i] = mpq_class(static_cast<long>(out.m[i - 1]), 2) *
               (mpq_class(static_cast<long>(d) * (d - 1), 2) - 1);
    out.L[i].canonicalize();
  }
  return out;
}

}  // namespace tlc
