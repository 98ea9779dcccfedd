#pragma once

// Integer simplicial homology via Smith normal form, plus the derived
// Cohen-Macaulay / depth certificates.  Reduced convention throughout: the
// chain complex is augmented, so dimensions run from -1 to dim K and a single
// point has vanishing homology everywhere.

#include <tlc/simplicial_complex.hpp>

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <vector>

namespace tlc {

struct SnfOverflow : std::runtime_error {
  SnfOverflow() : std::runtime_error("smith normal form: entry overflow") {}
};

namespace detail {

// Magnitude guard for the machine-word path.  Past this we restart the whole
// computation over GMP integers rather than trying to patch up mid-run.
inline const long long kSnfLimit = (1LL << 62);

// a - q*b and a + b with overflow detection on the machine-word path; the
// GMP overloads never overflow.
inline long long snf_mulsub(long long a, long long q, long long b) {
  __int128 r = static_cast<__int128>(a) - static_cast<__int128>(q) * b;
  if (r > kSnfLimit || r < -kSnfLimit) throw SnfOverflow();
  return static_cast<long long>(r);
}
inline mpz_class snf_mulsub(const mpz_class& a, const mpz_class& q,
                            const mpz_class& b) {
  return a - q * b;
}
inline long long snf_add(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) + b;
  if (r > kSnfLimit || r < -kSnfLimit) throw SnfOverflow();
  return static_cast<long long>(r);
}
inline mpz_class snf_add(const mpz_class& a, const mpz_class& b) {
  return a + b;
}

template <typename I>
I snf_abs(const I& x) {
  return x < 0 ? I(-x) : x;
}

// In-place Smith normal form, returning the diagonal (nonzero entries only,
// normalized positive, each dividing the next).  Classic pivoting on the
// smallest nonzero entry; rows and columns are reduced by Euclidean steps, so
// entries stay tame on the inputs this project produces.
template <typename I>
std::vector<I> snf_diagonal(std::vector<std::vector<I>> M) {
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  std::vector<I> diag;
  size_t top = 0;
  while (top < rows && top < cols) {
    // Locate the entry of minimal absolute value in the working block.
    size_t pr = rows, pc = cols;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = top; j < cols; ++j)
        if (M[i][j] != 0 &&
            (pr == rows || snf_abs(M[i][j]) < snf_abs(M[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;  // block is zero
    std::swap(M[top], M[pr]);
    for (size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = top + 1; i < rows; ++i) {
        if (M[i][top] == 0) continue;
        I q = M[i][top] / M[top][top];
        if (q != 0)
          for (size_t j = top; j < cols; ++j)
            M[i][j] = snf_mulsub(M[i][j], q, M[top][j]);
        if (M[i][top] != 0) {  // remainder smaller than pivot: swap up, redo
          std::swap(M[top], M[i]);
          clean = false;
        }
      }
      for (size_t j = top + 1; j < cols; ++j) {
        if (M[top][j] == 0) continue;
        I q = M[top][j] / M[top][top];
        if (q != 0)
          for (size_t i = top; i < rows; ++i)
            M[i][j] = snf_mulsub(M[i][j], q, M[i][top]);
        if (M[top][j] != 0) {
          for (size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility fix-up: the pivot must divide the rest of the block.
      for (size_t i = top + 1; i < rows && clean; ++i)
        for (size_t j = top + 1; j < cols && clean; ++j)
          if (M[i][j] % M[top][top] != 0) {
            for (size_t k = top; k < cols; ++k)
              M[top][k] = snf_add(M[top][k], M[i][k]);
            clean = false;
          }
    }
    diag.push_back(snf_abs(M[top][top]));
    ++top;
  }
  return diag;
}

}  // namespace detail

struct SnfResult {
  std::vector<long long> factors;  // nonzero diagonal, divisibility chain
  int rank = 0;
};

inline SnfResult smith_normal_form(const std::vector<std::vector<long long>>& A) {
  SnfResult r;
  std::vector<long long> diag;
  try {
    diag = detail::snf_diagonal<long long>(A);
  } catch (const SnfOverflow&) {
    std::vector<std::vector<mpz_class>> B(A.size());
    for (size_t i = 0; i < A.size(); ++i)
      for (long long x : A[i]) B[i].push_back(mpz_class(static_cast<long>(x)));
    for (const mpz_class& f : detail::snf_diagonal<mpz_class>(std::move(B))) {
      if (!f.fits_slong_p())
        throw std::overflow_error("smith normal form: factor exceeds int64");
      diag.push_back(f.get_si());
    }
  }
  r.factors = std::move(diag);
  r.rank = static_cast<int>(r.factors.size());
  return r;
}

// Reduced homology profile.  Index i+1 addresses dimension i, for
// i = -1 .. dim; betti are free ranks, torsion lists invariant factors > 1.
struct HomologyProfile {
  int dim = -2;
  std::vector<long long> betti;
  std::vector<std::vector<long long>> torsion;
  bool operator==(const HomologyProfile&) const = default;

  long long betti_at(int i) const {
    if (i < -1 || i > dim) return 0;
    return betti[static_cast<size_t>(i + 1)];
  }
  const std::vector<long long>& torsion_at(int i) const {
    static const std::vector<long long> none;
    if (i < -1 || i > dim) return none;
    return torsion[static_cast<size_t>(i + 1)];
  }
  bool trivial_at(int i) const {
    return betti_at(i) == 0 && torsion_at(i).empty();
  }
};

// Boundary matrix from k-faces (columns) to (k-1)-faces (rows) with the
// alternating-sign convention on sorted vertex lists.  k = 0 produces the
// augmentation row onto the empty face.
inline std::vector<std::vector<long long>> boundary_matrix(
    const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::map<Face, size_t> row;
  for (size_t i = 0; i < lower.size(); ++i) row[lower[i]] = i;
  std::vector<std::vector<long long>> M(
      lower.size(), std::vector<long long>(upper.size(), 0));
  for (size_t j = 0; j < upper.size(); ++j) {
    auto faces = boundary_faces(upper[j]);
    for (size_t pos = 0; pos < faces.size(); ++pos) {
      auto it = row.find(faces[pos]);
      if (it == row.end())
        throw std::logic_error("boundary_matrix: missing face");
      M[it->second][j] += (pos % 2 == 0) ? 1 : -1;
    }
  }
  return M;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& K) {
  HomologyProfile H;
  const int d = std::max(K.dim(), -1);
  H.dim = d;
  H.betti.assign(static_cast<size_t>(d + 2), 0);
  H.torsion.assign(static_cast<size_t>(d + 2), {});

  // Faces per dimension, -1 .. d.
  std::vector<std::vector<Face>> faces(static_cast<size_t>(d + 2));
  for (const auto& f : closure(K))
    faces[static_cast<size_t>(face_dim(f) + 1)].push_back(f);

  // ranks[k+1] = rank of the boundary map leaving dimension k.
  std::vector<int> rank(static_cast<size_t>(d + 3), 0);
  std::vector<SnfResult> snf(static_cast<size_t>(d + 2));
  for (int k = 0; k <= d; ++k) {
    snf[static_cast<size_t>(k + 1)] = smith_normal_form(
        boundary_matrix(faces[static_cast<size_t>(k)],
                        faces[static_cast<size_t>(k + 1)]));
    rank[static_cast<size_t>(k + 1)] = snf[static_cast<size_t>(k + 1)].rank;
  }
  for (int i = -1; i <= d; ++i) {
    long long chains =
        static_cast<long long>(faces[static_cast<size_t>(i + 1)].size());
    H.betti[static_cast<size_t>(i + 1)] = chains -
                                          rank[static_cast<size_t>(i + 1)] -
                                          rank[static_cast<size_t>(i + 2)];
    if (i + 1 <= d)
      for (long long f : snf[static_cast<size_t>(i + 2)].factors)
        if (f > 1) H.torsion[static_cast<size_t>(i + 1)].push_back(f);
  }
  return H;
}

// Homological Cohen-Macaulayness: every link (including the whole complex as
// the link of the empty face) has vanishing reduced homology below its
// dimension.
inline bool is_cohen_macaulay(const SimplicialComplex& K) {
  if (!K.pure()) throw std::invalid_argument("is_cohen_macaulay: not pure");
  for (const auto& f : closure(K)) {
    auto lk = link(K, f);
    auto H = reduced_homology(lk);
    for (int i = -1; i < lk.dim(); ++i)
      if (!H.trivial_at(i)) return false;
  }
  return true;
}

// Depth normalization used throughout: the largest k whose k-skeleton is
// Cohen-Macaulay.  The (-1)-skeleton {empty face} is always CM, so the value
// is at least -1.
inline int homological_depth(const SimplicialComplex& K) {
  if (!K.pure()) throw std::invalid_argument("homological_depth: not pure");
  int depth = -1;
  for (int k = K.dim(); k >= -1; --k) {
    if (is_cohen_macaulay(skeleton(K, k))) {
      depth = k;
      break;
    }
  }
  return depth;
}

inline bool is_t_CM(const SimplicialComplex& K, int t) {
  if (t < 1) throw std::invalid_argument("is_t_CM: t must be >= 1");
  return homological_depth(K) > K.dim() - t;
}

}  // namespace tlc
