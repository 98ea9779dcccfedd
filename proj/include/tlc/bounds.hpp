#pragma once

// Counting-bound arithmetic for the census.  All ceilings live in exponent
// (log2) space: exact rationals where the chain is exact, doubles only for
// the transcendental tree-count base.  Nothing here materializes a ceiling
// like 2^67.5 as an integer.

#include <tlc/gluing.hpp>
#include <tlc/tree_of_simplices.hpp>

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tlc {

struct BoundChain {
  int d = 3;
  int N = 1;
  mpq_class D;        // 1 + N(d-1)/2
  mpz_class two_D;    // 2 + N(d-1): boundary facets of any tree
  mpz_class n_dm3;    // boundary (d-3)-faces of any tree

  struct Round {
    mpz_class m;      // facets glued in this round
    mpq_class pool;   // (d-3)-faces available to host its gluings
    mpz_class used;   // distinct (d-3)-faces actually used (when known)
  };
  std::vector<Round> rounds;

  // Per-tree gluing ceiling, two equal spellings of the same exponent.
  mpq_class per_tree_log2;   // n_dm3 + D(d(d-1)/2 - 1) + 4D + (D - 1)
  mpq_class collapsed_log2;  // N(d-1)(5d^2-7d+24)/12 + d(d-1) + 3
  mpq_class middle_log2;     // 5d^3N/12 + d(d-1) + 3
  mpq_class ceiling_log2;    // d^3 N / 2
  double tree_count_log2 = 0;  // N log2( d (d/(d-1))^(d-1) )
  double de_log2 = 0;          // N log2(d e)
};

struct BoundVerdicts {
  bool identity_collapsed = false;  // per-tree exponent == collapsed form
  bool compositions_exact = false;  // sum_f binom(D-1, f-1) == 2^(D-1)
  bool tree_base_below_de = false;  // d (d/(d-1))^(d-1) < d e
  bool de_below_slack = false;      // log2(de) < (12d^2 - 31d + 24)/12
  bool chain_ordered = false;       // collapsed <= middle
  bool headroom = false;            // d^3 N/12 > d(d-1)+3, the "N large" gate
  bool rounds_consistent = true;    // round data fits its pools (when given)
  bool count_below_total = false;   // count < trees * per-tree ceiling
  bool count_below_ceiling = false; // count < 2^(d^3 N/2)

  bool all_count_bounds() const {
    return count_below_total && count_below_ceiling;
  }
};

struct BoundReport {
  BoundChain chain;
  mpz_class census_count;
  BoundVerdicts verdicts;
};

namespace detail {

// count < 2^(p/q) decided exactly: compare count^q against 2^p.
inline bool below_power_of_two(const mpz_class& count, mpq_class e) {
  if (count <= 0) return true;
  e.canonicalize();
  if (e <= 0) return false;
  const unsigned long p = static_cast<unsigned long>(e.get_num().get_ui());
  const unsigned long q = static_cast<unsigned long>(e.get_den().get_ui());
  const size_t bits = mpz_sizeinbase(count.get_mpz_t(), 2);  // floor(log2)+1
  if (mpq_class(static_cast<long>(bits)) <= e) return true;
  if (e <= mpq_class(static_cast<long>(bits - 1))) return false;
  mpz_class lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), count.get_mpz_t(), q);
  mpz_ui_pow_ui(rhs.get_mpz_t(), 2, p);
  return lhs < rhs;
}

}  // namespace detail

inline BoundReport bound_report(int d, int N, const mpz_class& census_count,
                                const RoundPartition* observed = nullptr) {
  if (d < 3) throw std::invalid_argument("bound_report: requires d >= 3");
  if (N < 1) throw std::invalid_argument("bound_report: requires N >= 1");
  BoundReport rep;
  BoundChain& c = rep.chain;
  c.d = d;
  c.N = N;
  const auto fc = face_counts(d, N);
  c.D = fc.D;
  c.two_D = static_cast<long>(fc.n_dm1);
  c.n_dm3 = static_cast<long>(fc.n_dm3);

  const mpq_class half_ridge(static_cast<long>(d) * (d - 1) - 2, 2);  // d(d-1)/2 - 1
  c.per_tree_log2 = mpq_class(c.n_dm3) + c.D * half_ridge + 4 * c.D + (c.D - 1);
  c.per_tree_log2.canonicalize();
  c.collapsed_log2 =
      mpq_class(static_cast<long>(N) * (d - 1) *
                    (5L * d * d - 7 * d + 24),
                12) +
      d * (d - 1) + 3;
  c.collapsed_log2.canonicalize();
  c.middle_log2 = mpq_class(5L * d * d * d * N, 12) + d * (d - 1) + 3;
  c.middle_log2.canonicalize();
  c.ceiling_log2 = mpq_class(static_cast<long>(d) * d * d * N, 2);
  c.ceiling_log2.canonicalize();
  const double base = d * std::pow(static_cast<double>(d) / (d - 1), d - 1);
  c.tree_count_log2 = N * std::log2(base);
  c.de_log2 = N * std::log2(d * std::exp(1.0));

  if (observed) {
    for (size_t i = 0; i < observed->m.size(); ++i) {
      BoundChain::Round r;
      r.m = static_cast<long>(observed->m[i]);
      r.pool = i == 0 ? mpq_class(c.n_dm3) : observed->L[i];
      r.used = static_cast<long>(observed->n[i]);
      c.rounds.push_back(std::move(r));
    }
  } else {
    // Worst case: everything glued in one round drawing on all (d-3)-faces.
    c.rounds.push_back({c.two_D, mpq_class(c.n_dm3), 0});
  }

  rep.census_count = census_count;
  BoundVerdicts& v = rep.verdicts;
  v.identity_collapsed = c.per_tree_log2 == c.collapsed_log2;
  v.chain_ordered = c.collapsed_log2 <= c.middle_log2;
  v.tree_base_below_de = base < d * std::exp(1.0);
  v.de_below_slack =
      std::log2(d * std::exp(1.0)) <
      mpq_class(12L * d * d - 31 * d + 24, 12).get_d();
  {
    mpq_class slack = c.ceiling_log2 - c.middle_log2;  // d^3 N/12 - d(d-1) - 3
    v.headroom = slack > 0;
  }
  v.compositions_exact = true;
  if (c.D.get_den() == 1 && c.D.get_num().fits_ulong_p()) {
    const unsigned long Dl = c.D.get_num().get_ui();
    if (Dl >= 1 && Dl <= 64) {
      mpz_class total = 0, binom;
      for (unsigned long f = 1; f <= Dl; ++f) {
        mpz_bin_uiui(binom.get_mpz_t(), Dl - 1, f - 1);
        total += binom;
      }
      mpz_class want;
      mpz_ui_pow_ui(want.get_mpz_t(), 2, Dl - 1);
      v.compositions_exact = total == want;
    }
  }
  if (observed) {
    mpz_class total_m = 0;
    for (const auto& r : c.rounds) {
      total_m += r.m;
      if (mpq_class(r.used) > r.pool) v.rounds_consistent = false;
    }
    if (total_m > c.two_D) v.rounds_consistent = false;
  }
  v.count_below_ceiling = detail::below_power_of_two(census_count, c.ceiling_log2);
  if (census_count <= 0) {
    v.count_below_total = true;
  } else {
    const double count_log2 =
        std::log2(census_count.get_d());  // desk-scale counts fit a double
    v.count_below_total =
        count_log2 < c.tree_count_log2 + c.per_tree_log2.get_d();
  }
  return rep;
}

}  // namespace tlc
