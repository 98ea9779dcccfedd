#pragma once

// Trees of d-simplices: the seed objects of every local construction.  A tree
// is stored as a growth recipe (each later simplex names the free facet of an
// earlier simplex it is glued onto), which keeps generation, serialization
// and replay trivially deterministic.

#include <tlc/canonical.hpp>
#include <tlc/simplicial_complex.hpp>

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tlc {

struct TreeOfSimplices {
  struct Attachment {
    int parent = 0;  // index of an earlier simplex
    Face facet;      // one of its free (d-1)-faces, by complex vertex ids
    bool operator==(const Attachment&) const = default;
  };

  int d = 3;
  std::vector<Attachment> attachments;  // attachment k describes simplex k+1

  int facet_count() const { return static_cast<int>(attachments.size()) + 1; }
  bool operator==(const TreeOfSimplices&) const = default;
};

// The simplices in tree order: simplex 0 is {0..d}; simplex k+1 shares
// attachment k's facet and adds the fresh vertex d+k+1.  Validates the
// recipe: parents must be earlier, facets must exist and be free.
inline std::vector<Face> tree_simplices(const TreeOfSimplices& T) {
  if (T.d < 1) throw std::invalid_argument("tree_simplices: d must be >= 1");
  std::vector<Face> simplices;
  Face first;
  for (int v = 0; v <= T.d; ++v) first.push_back(v);
  simplices.push_back(first);
  std::set<Face> used;  // facets already shared by two simplices
  for (size_t k = 0; k < T.attachments.size(); ++k) {
    const auto& at = T.attachments[k];
    if (at.parent < 0 || at.parent > static_cast<int>(k))
      throw std::invalid_argument("tree_simplices: parent out of range");
    if (static_cast<int>(at.facet.size()) != T.d ||
        !face_subset(at.facet, simplices[static_cast<size_t>(at.parent)]))
      throw std::invalid_argument("tree_simplices: not a facet of the parent");
    if (used.count(at.facet))
      throw std::invalid_argument("tree_simplices: facet already shared");
    used.insert(at.facet);
    Face next = at.facet;
    next.push_back(T.d + static_cast<int>(k) + 1);
    std::sort(next.begin(), next.end());
    simplices.push_back(next);
  }
  return simplices;
}

inline SimplicialComplex tree_complex(const TreeOfSimplices& T) {
  return from_faces(tree_simplices(T));
}

// Exhaustive generation by growing one simplex at a time.  With up_to_iso the
// stream is deduplicated by the canonical form of the complex; the dual tree
// is recoverable from the complex, so complex isomorphism is tree isomorphism.
inline std::vector<TreeOfSimplices> generate_trees(int d, int N,
                                                   bool up_to_iso = true) {
  if (d < 1 || N < 1)
    throw std::invalid_argument("generate_trees: need d >= 1, N >= 1");
  std::vector<TreeOfSimplices> level{TreeOfSimplices{d, {}}};
  for (int n = 2; n <= N; ++n) {
    std::vector<TreeOfSimplices> next;
    std::set<std::string> seen;
    for (const auto& T : level) {
      auto simplices = tree_simplices(T);
      std::set<Face> used;
      for (const auto& at : T.attachments) used.insert(at.facet);
      for (int p = 0; p < static_cast<int>(simplices.size()); ++p) {
        for (const auto& f : boundary_faces(simplices[static_cast<size_t>(p)])) {
          if (used.count(f)) continue;
          TreeOfSimplices grown = T;
          grown.attachments.push_back({p, f});
          if (up_to_iso) {
            auto key = canonical_key(tree_complex(grown));
            if (!seen.insert(key).second) continue;
          }
          next.push_back(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

// Boundary face counts of a tree of N d-simplices in closed form.  All
// (d-2)- and (d-3)-faces of a tree lie on its boundary, so those two counts
// are also the total counts.
struct FaceCountReport {
  mpq_class D;       // half the number of boundary facets, possibly non-integer
  long long n_dm1;   // boundary (d-1)-faces: 2D
  long long n_dm2;   // (d-2)-faces: dD
  long long n_dm3;   // (d-3)-faces
};

inline FaceCountReport face_counts(int d, int N) {
  if (d < 1 || N < 1)
    throw std::invalid_argument("face_counts: need d >= 1, N >= 1");
  FaceCountReport r;
  r.D = 1 + mpq_class(static_cast<long>(N) * (d - 1), 2);
  r.D.canonicalize();
  r.n_dm1 = 2 + static_cast<long long>(N) * (d - 1);
  r.n_dm2 = d + static_cast<long long>(N) * d * (d - 1) / 2;
  const long long num =
      static_cast<long long>(d) *
      (static_cast<long long>(N) * d * d + 2LL * N - 3LL * N * d + 3LL * d - 3);
  if (num % 6 != 0)
    throw std::logic_error("face_counts: (d-3)-face formula not integral");
  r.n_dm3 = num / 6;
  return r;
}

inline FaceCountReport face_counts(const TreeOfSimplices& T) {
  return face_counts(T.d, T.facet_count());
}

}  // namespace tlc
