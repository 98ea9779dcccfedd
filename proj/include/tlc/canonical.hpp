#ifndef TLC_CANONICAL_HPP
#define TLC_CANONICAL_HPP

#include <cstdint>
#include <limits>
#include <unordered_map>

#include "tlc/simplicial_complex.hpp"

namespace tlc {

// Canonical labeling of a vertex-colored graph by iterated color refinement
// plus individualization/backtracking.  Correctness does not depend on the
// refinement being strong: at the leaves every color class is a singleton and
// all consistent labelings are compared, so the minimum serialization is a
// true canonical form.  Refinement only prunes the search.
namespace canon {

struct Graph {
  int n = 0;
  std::vector<int> color;             // initial colors, >= 0
  std::vector<std::vector<int>> adj;  // symmetric, no self-loops
};

using Key = std::vector<int32_t>;

namespace detail {

inline void refine(const Graph& g, std::vector<int>& color) {
  const size_t n = static_cast<size_t>(g.n);
  int classes = 0;
  for (size_t v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
  while (true) {
    // signature = own color + sorted neighbor colors
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (size_t v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.adj[v].size() + 1);
      s.push_back(color[v]);
      for (int w : g.adj[v]) s.push_back(color[static_cast<size_t>(w)]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), static_cast<int>(v)};
    }
    auto order = sig;
    std::sort(order.begin(), order.end());
    int next = 0;
    for (size_t i = 0; i < n; ++i) {
      if (i > 0 && order[i].first != order[i - 1].first) ++next;
      color[static_cast<size_t>(order[i].second)] = next;
    }
    ++next;
    if (next == classes) return;
    classes = next;
  }
}

// Serialization of the graph under the labeling implied by `color` (all
// classes singleton): initial colors then adjacency, both in new-label order.
inline Key serialize(const Graph& g, const std::vector<int>& color) {
  const size_t n = static_cast<size_t>(g.n);
  std::vector<int> node_of(n);
  for (size_t v = 0; v < n; ++v) node_of[static_cast<size_t>(color[v])] = static_cast<int>(v);
  Key key;
  key.push_back(static_cast<int32_t>(n));
  for (size_t i = 0; i < n; ++i)
    key.push_back(static_cast<int32_t>(g.color[static_cast<size_t>(node_of[i])]));
  for (size_t i = 0; i < n; ++i) {
    const auto& nb = g.adj[static_cast<size_t>(node_of[i])];
    std::vector<int32_t> row;
    row.reserve(nb.size());
    for (int w : nb) row.push_back(static_cast<int32_t>(color[static_cast<size_t>(w)]));
    std::sort(row.begin(), row.end());
    key.push_back(static_cast<int32_t>(row.size()));
    key.insert(key.end(), row.begin(), row.end());
  }
  return key;
}

inline void search(const Graph& g, std::vector<int> color, Key& best,
                   std::vector<int>& best_color, bool& have) {
  refine(g, color);
  const size_t n = static_cast<size_t>(g.n);
  // first non-singleton class, in color order
  std::vector<int> count(n + 1, 0);
  for (size_t v = 0; v < n; ++v) count[static_cast<size_t>(color[v])]++;
  int target = -1;
  for (size_t c = 0; c < n; ++c)
    if (count[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  if (target < 0) {
    Key key = serialize(g, color);
    if (!have || key < best) {
      best = std::move(key);
      best_color = color;
      have = true;
    }
    return;
  }
  for (size_t v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> c2 = color;
    // individualize v: split it below its class
    for (size_t w = 0; w < n; ++w)
      if (c2[w] >= target) ++c2[w];
    c2[v] = target;
    search(g, std::move(c2), best, best_color, have);
  }
}

} // namespace detail

struct Result {
  Key key;                  // canonical serialization
  std::vector<int> label;   // node -> canonical label
};

inline Result canonical_labeling(const Graph& g) {
  Result r;
  if (g.n == 0) {
    r.key.push_back(0);
    return r;
  }
  Key best;
  std::vector<int> best_color;
  bool have = false;
  detail::search(g, g.color, best, best_color, have);
  r.key = std::move(best);
  r.label = std::move(best_color);
  return r;
}

} // namespace canon

struct CanonicalForm {
  SimplicialComplex complex;              // canonically labeled copy
  std::map<vertex_t, vertex_t> relabeling; // original vertex -> canonical label
};

// Canonical form of a simplicial complex: vertices are relabeled
// 0..n-1 so that isomorphic complexes produce identical facet lists.
// Encoded as a colored bipartite graph (vertices vs. facet nodes; facet
// nodes colored by dimension so non-pure complexes stay honest).
inline CanonicalForm canonical_form(const SimplicialComplex& K) {
  const auto vs = vertices(K);
  const int nv = static_cast<int>(vs.size());
  std::map<vertex_t, int> idx;
  for (int i = 0; i < nv; ++i) idx[vs[static_cast<size_t>(i)]] = i;

  canon::Graph g;
  g.n = nv + static_cast<int>(K.facets.size());
  g.color.assign(static_cast<size_t>(g.n), 0);
  g.adj.assign(static_cast<size_t>(g.n), {});
  for (size_t fi = 0; fi < K.facets.size(); ++fi) {
    const int fnode = nv + static_cast<int>(fi);
    g.color[static_cast<size_t>(fnode)] = 1 + static_cast<int>(K.facets[fi].size());
    for (vertex_t v : K.facets[fi]) {
      const int vn = idx[v];
      g.adj[static_cast<size_t>(vn)].push_back(fnode);
      g.adj[static_cast<size_t>(fnode)].push_back(vn);
    }
  }
  auto res = canon::canonical_labeling(g);

  CanonicalForm out;
  // vertex nodes all carry color 0, so they occupy the lowest canonical labels
  for (int i = 0; i < nv; ++i)
    out.relabeling[vs[static_cast<size_t>(i)]] = res.label[static_cast<size_t>(i)];
  std::vector<Face> fs;
  for (const auto& f : K.facets) {
    Face g2;
    for (vertex_t v : f) g2.push_back(out.relabeling[v]);
    std::sort(g2.begin(), g2.end());
    fs.push_back(std::move(g2));
  }
  std::sort(fs.begin(), fs.end());
  out.complex.facets = std::move(fs);
  return out;
}

// Flat serialization of the canonical facet list, usable as a dedup key.
inline std::string canonical_key(const SimplicialComplex& K) {
  auto cf = canonical_form(K);
  std::string s;
  for (const auto& f : cf.complex.facets) {
    for (vertex_t v : f) {
      s += std::to_string(v);
      s += ',';
    }
    s += ';';
  }
  return s;
}

inline bool isomorphic(const SimplicialComplex& A, const SimplicialComplex& B) {
  return canonical_form(A).complex == canonical_form(B).complex;
}

} // namespace tlc

#endif
