#pragma once

// Counting partial matchings of points on a circle by non-crossing chords.
// These counts ceiling the number of ways one merging round can pair up the
// boundary facets around a link circle, which is where the census bound
// report gets its per-round factors.

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace tlc {

// Memoized tables for the matching counts M(m) and the Catalan numbers C_m.
// Not thread-safe; give each worker its own instance or use the stateless
// wrappers below.
class MatchingCounter {
 public:
  // M(m) = M(m-1) + sum_{m1+m2=m-2} M(m1) M(m2), M(0) = M(1) = 1: the last
  // point is either left unmatched, or its chord splits the others into two
  // independent arcs of sizes m1 and m2.
  const mpz_class& M(int m) {
    if (m < 0) throw std::invalid_argument("MatchingCounter::M: m >= 0");
    while (static_cast<int>(m_.size()) <= m) {
      const int k = static_cast<int>(m_.size());
      mpz_class v = m_[static_cast<size_t>(k) - 1];
      for (int a = 0; a <= k - 2; ++a)
        v += m_[static_cast<size_t>(a)] * m_[static_cast<size_t>(k - 2 - a)];
      m_.push_back(std::move(v));
    }
    return m_[static_cast<size_t>(m)];
  }

  // C_m = binom(2m, m) / (m + 1).
  const mpz_class& C(int m) {
    if (m < 0) throw std::invalid_argument("MatchingCounter::C: m >= 0");
    while (static_cast<int>(c_.size()) <= m) {
      const int k = static_cast<int>(c_.size());
      mpz_class v;
      mpz_bin_uiui(v.get_mpz_t(), 2 * static_cast<unsigned long>(k),
                   static_cast<unsigned long>(k));
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(),
                      static_cast<unsigned long>(k) + 1);
      c_.push_back(std::move(v));
    }
    return c_[static_cast<size_t>(m)];
  }

 private:
  std::vector<mpz_class> m_ = {1, 1};
  std::vector<mpz_class> c_;
};

inline mpz_class matching_count(int m) { return MatchingCounter().M(m); }

inline mpz_class catalan(int m) { return MatchingCounter().C(m); }

// Independent check of matching_count: explicitly enumerate every partial
// matching of m labeled points on a circle and test all chord pairs for
// crossings.  Chords (a,b) and (c,d) cross exactly when one of c,d lies
// strictly between a and b and the other does not.
inline mpz_class brute_force_planar_matchings(int m) {
  if (m < 0)
    throw std::invalid_argument("brute_force_planar_matchings: m >= 0");
  mpz_class count = 0;
  std::vector<std::pair<int, int>> chords;
  std::vector<bool> used(static_cast<size_t>(m), false);
  auto crossing_free = [&] {
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = i + 1; j < chords.size(); ++j) {
        auto [a, b] = chords[i];
        auto [c, d] = chords[j];
        const bool c_in = a < c && c < b;
        const bool d_in = a < d && d < b;
        if (c_in != d_in) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int from) -> void {
    int i = from;
    while (i < m && used[static_cast<size_t>(i)]) ++i;
    if (i == m) {
      if (crossing_free()) ++count;
      return;
    }
    used[static_cast<size_t>(i)] = true;
    self(self, i + 1);  // leave point i unmatched
    for (int j = i + 1; j < m; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = true;
      chords.emplace_back(i, j);
      self(self, i + 1);
      chords.pop_back();
      used[static_cast<size_t>(j)] = false;
    }
    used[static_cast<size_t>(i)] = false;
  };
  rec(rec, 0);
  return count;
}

}  // namespace tlc
