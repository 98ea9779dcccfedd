// Acceptance gate.  One test case per shipping criterion, each self-contained
// and ending with its pinned wall-clock budget.  A listener prints one
// PASS/FAIL line per criterion so the binary's output reads as a checklist.

#include <catch2/catch_amalgamated.hpp>

#include <tlc/bounds.hpp>
#include <tlc/census.hpp>
#include <tlc/examples.hpp>
#include <tlc/homology.hpp>
#include <tlc/matchings.hpp>
#include <tlc/recognition.hpp>

#include <gmpxx.h>

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "test_support.hpp"

using namespace tlc;

namespace {

class CriterionReporter : public Catch::EventListenerBase {
 public:
  using EventListenerBase::EventListenerBase;
  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::cout << stats.testInfo->name << " -> "
              << (stats.totals.assertions.allOk() ? "PASS" : "FAIL")
              << std::endl;
  }
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

CensusResult run_census(int d, int n, int t, CensusClass cls, int workers = 8) {
  CensusParams p;
  p.d = d;
  p.n = n;
  p.t = t;
  p.cls = cls;
  p.closed = true;
  p.workers = workers;
  return census(p);
}

// Corpus for the cone and monotonicity criteria: every catalogued
// pseudomanifold small enough for exhaustive recognition.
std::vector<NamedComplex> small_pseudomanifolds() {
  std::vector<NamedComplex> out;
  for (auto& nc : example_corpus())
    if (nc.complex.facets.size() <= 8 && is_pseudomanifold(nc.complex))
      out.push_back(std::move(nc));
  return out;
}

GluingMove mk(const CWState& s, const Face& a, const Face& b,
              std::vector<std::pair<int, int>> vm) {
  GluingMove m;
  m.cell_a = s.base->index[static_cast<size_t>(s.base->d) - 1].at(a);
  m.cell_b = s.base->index[static_cast<size_t>(s.base->d) - 1].at(b);
  m.vmap = std::move(vm);
  return m;
}

std::vector<std::vector<Face>> faces_by_dim(const SimplicialComplex& K) {
  std::vector<std::vector<Face>> out(static_cast<size_t>(K.dim() + 2));
  for (const auto& f : closure(K))
    out[static_cast<size_t>(face_dim(f) + 1)].push_back(f);
  return out;
}

}  // namespace

CATCH_REGISTER_LISTENER(CriterionReporter)

TEST_CASE("criterion 1: boundary face counts match their closed forms") {
  Stopwatch watch;
  for (int d : {3, 4, 5})
    for (int N = 1; N <= 8; ++N) {
      const auto want = face_counts(d, N);
      const auto trees = generate_trees(d, N, true);
      REQUIRE_FALSE(trees.empty());
      for (const auto& T : trees) {
        const auto K = tree_complex(T);
        const auto B = boundary_complex(K);
        REQUIRE(static_cast<long long>(faces_of_dim(B, d - 1).size()) ==
                want.n_dm1);
        REQUIRE(static_cast<long long>(faces_of_dim(B, d - 2).size()) ==
                want.n_dm2);
        REQUIRE(static_cast<long long>(faces_of_dim(B, d - 3).size()) ==
                want.n_dm3);
      }
    }
  CHECK(watch.seconds() < 10.0);
}

TEST_CASE("criterion 2: matching counts are certified by brute force") {
  Stopwatch watch;
  for (int m = 0; m <= 12; ++m)
    REQUIRE(matching_count(m) == brute_force_planar_matchings(m));
  const std::vector<long> first = {1, 1, 2, 4, 9, 21, 51};
  for (size_t m = 0; m < first.size(); ++m)
    REQUIRE(matching_count(static_cast<int>(m)) == first[m]);
  MatchingCounter mc;
  for (int m = 0; m <= 30; ++m) {
    mpz_class four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
    REQUIRE(mc.M(m) <= mc.C(m));
    REQUIRE(mc.C(m) <= four_m);
  }
  CHECK(watch.seconds() < 5.0);
}

TEST_CASE("criterion 3: tetrahedral trees stay under the growth bound") {
  Stopwatch watch;
  for (int N = 1; N <= 7; ++N) {
    const auto count = generate_trees(3, N, true).size();
    // count <= 6.75^N checked in exact integers: count * 4^N <= 27^N
    mpz_class lhs(static_cast<long>(count)), four_N, twentyseven_N;
    mpz_ui_pow_ui(four_N.get_mpz_t(), 4, static_cast<unsigned long>(N));
    mpz_ui_pow_ui(twentyseven_N.get_mpz_t(), 27,
                  static_cast<unsigned long>(N));
    REQUIRE(lhs * four_N <= twentyseven_N);
  }
  CHECK(watch.seconds() < 60.0);
}

TEST_CASE("criterion 4: small surface censuses see only spheres until t=2") {
  Stopwatch watch;
  for (int N = 1; N <= 10; ++N) {
    const auto res = run_census(2, N, 1, CensusClass::manifold);
    INFO("N = " << N);
    REQUIRE(res.complete);
    for (const auto& [key, rec] : res.records) {
      const auto K = from_faces(rec.facets);
      REQUIRE(euler_characteristic(K) == 2);
      REQUIRE(rec.homology.betti_at(2) == 1);
      for (int k = -1; k <= 1; ++k) REQUIRE(rec.homology.trivial_at(k));
      REQUIRE(rec.homology.torsion_at(2).empty());
    }
  }
  const auto wide = run_census(2, 10, 2, CensusClass::pseudomanifold);
  REQUIRE(wide.complete);
  CHECK(wide.records.size() == 6);
  CHECK(wide.states_visited == 191130);
  REQUIRE(wide.records.count(canonical_key(projective_plane_6())) == 1);
  CHECK(watch.seconds() < 300.0);
}

TEST_CASE("criterion 5: the pinched ring splits t=1 from t=2") {
  Stopwatch watch;
  const auto lc = pinched_ring_construction();
  const auto rep = replay(lc);
  REQUIRE(rep.valid);
  const CWState ring = rep.state;

  const auto r2 = is_t_LC(ring, 2);
  REQUIRE(r2.verdict == Verdict::yes);
  REQUIRE(r2.witness.has_value());
  const auto wrep = replay(*r2.witness);
  REQUIRE(wrep.valid);
  REQUIRE(cw_canonical_key(wrep.state) == cw_canonical_key(ring));

  const auto r1 = is_t_LC(ring, 1);
  REQUIRE(r1.verdict == Verdict::no);
  REQUIRE(r1.trees_tried == 4);  // every spanning tree of the dual four-cycle
  CHECK(watch.seconds() < 120.0);
}

TEST_CASE("criterion 6: coning changes no recognition verdict") {
  Stopwatch watch;
  const auto corpus = small_pseudomanifolds();
  REQUIRE(corpus.size() >= 20);
  for (const auto& nc : corpus) {
    const vertex_t apex = vertices(nc.complex).back() + 1;
    const auto C = cone(apex, nc.complex);
    for (int t : {1, 2}) {
      const auto base = is_t_LC(nc.complex, t);
      const auto coned = is_t_LC(C, t);
      INFO(nc.name << " at t = " << t);
      REQUIRE(base.verdict != Verdict::indeterminate);
      REQUIRE(coned.verdict != Verdict::indeterminate);
      REQUIRE(base.verdict == coned.verdict);
    }
  }
  CHECK(watch.seconds() < 600.0);
}

TEST_CASE("criterion 7: locality is monotone and constructibility implies it") {
  Stopwatch watch;
  const auto corpus = small_pseudomanifolds();
  REQUIRE(corpus.size() >= 20);
  int lc_implications = 0, con_implications = 0;
  for (const auto& nc : corpus) {
    std::map<int, Verdict> lc;
    for (int t : {1, 2}) {
      lc[t] = is_t_LC(nc.complex, t).verdict;
      REQUIRE(lc[t] != Verdict::indeterminate);
    }
    if (lc[1] == Verdict::yes) {
      REQUIRE(lc[2] == Verdict::yes);
      ++lc_implications;
    }
    for (int t : {1, 2}) {
      const auto con = is_t_constructible(nc.complex, t).verdict;
      REQUIRE(con != Verdict::indeterminate);
      if (con == Verdict::yes) {
        REQUIRE(lc[t] == Verdict::yes);
        ++con_implications;
      }
    }
  }
  REQUIRE(lc_implications > 0);
  REQUIRE(con_implications > 0);
  CHECK(watch.seconds() < 600.0);
}

TEST_CASE("criterion 8: the bowtie ball splits constructibility at t=2") {
  Stopwatch watch;
  const auto B = balls_glued_at_bowtie();

  const auto r2 = is_t_constructible(B, 2);
  REQUIRE(r2.verdict == Verdict::yes);
  REQUIRE(r2.witness != nullptr);
  REQUIRE(r2.witness->facets == B.facets);

  const auto r1 = is_t_constructible(B, 1);
  REQUIRE(r1.verdict == Verdict::no);
  REQUIRE(r1.nodes > 0);

  // the pinch vertex sees an annulus
  const auto sr = classify_surface(link(B, Face{3}));
  const auto* sc = std::get_if<SurfaceClass>(&sr);
  REQUIRE(sc != nullptr);
  REQUIRE(sc->orientable);
  REQUIRE(sc->genus == 0);
  REQUIRE(sc->boundary_circles == 2);
  REQUIRE(sc->euler == 0);

  REQUIRE(is_t_CM(B, 2));
  REQUIRE_FALSE(is_cohen_macaulay(B));
  CHECK(watch.seconds() < 300.0);
}

TEST_CASE("criterion 9: the homology engine matches its oracles") {
  Stopwatch watch;
  for (int d = 1; d <= 5; ++d) {
    const auto H = reduced_homology(boundary_complex(simplex_complex(d + 1)));
    INFO("sphere dimension " << d);
    REQUIRE(H.betti_at(d) == 1);
    for (int k = -1; k < d; ++k) REQUIRE(H.trivial_at(k));
    REQUIRE(H.torsion_at(d).empty());
  }
  {
    const auto H = reduced_homology(projective_plane_6());
    REQUIRE(H.betti_at(1) == 0);
    REQUIRE(H.betti_at(2) == 0);
    REQUIRE(H.torsion_at(1) == std::vector<long long>{2});
  }
  // free ranks against exact rational elimination
  std::mt19937 rng(2026);
  for (int iter = 0; iter < 100; ++iter) {
    const int d = 2 + iter % 2;
    const auto K = fixtures::random_pure_complex(rng, d, 9, 3 + iter % 6);
    REQUIRE(closure(K).size() <= 200);
    const auto faces = faces_by_dim(K);
    std::vector<int> rank(faces.size() + 1, 0);
    for (size_t j = 0; j + 1 < faces.size(); ++j)
      rank[j] = fixtures::rational_rank(
          boundary_matrix(faces[j], faces[j + 1]));
    const auto H = reduced_homology(K);
    for (int k = -1; k <= K.dim(); ++k) {
      const auto nk = static_cast<long long>(
          faces[static_cast<size_t>(k + 1)].size());
      REQUIRE(H.betti_at(k) ==
              nk - rank[static_cast<size_t>(k + 1)] -
                  (k >= 0 ? rank[static_cast<size_t>(k)] : 0));
    }
  }
  CHECK(watch.seconds() < 60.0);
}

TEST_CASE("criterion 10: the quasimanifold census checks out at desk scale") {
  Stopwatch watch;
  for (int N = 1; N <= 6; ++N) {
    INFO("N = " << N);
    const auto solo = run_census(3, N, 2, CensusClass::quasimanifold, 1);
    const auto pool = run_census(3, N, 2, CensusClass::quasimanifold, 8);
    REQUIRE(solo.complete);
    REQUIRE(pool.complete);
    REQUIRE(solo.states_visited == pool.states_visited);
    std::set<std::string> k1, k8;
    for (const auto& [k, r] : solo.records) k1.insert(k);
    for (const auto& [k, r] : pool.records) k8.insert(k);
    REQUIRE(k1 == k8);

    for (const auto& [key, rec] : pool.records) {
      const auto rr = replay(rec.witness);
      REQUIRE(rr.valid);
      REQUIRE(canonical_key(cw_to_simplicial(materialize(rr.state))) == key);
      const auto K = from_faces(rec.facets);
      for (vertex_t v : vertices(K)) {
        const auto sr = classify_surface(link(K, Face{v}));
        const auto* sc = std::get_if<SurfaceClass>(&sr);
        REQUIRE(sc != nullptr);
        REQUIRE(sc->is_sphere());
      }
    }

    const auto rep =
        bound_report(3, N, static_cast<long>(pool.records.size()));
    REQUIRE(rep.verdicts.count_below_ceiling);
    REQUIRE(rep.verdicts.compositions_exact);
    REQUIRE(rep.verdicts.identity_collapsed);
  }
  CHECK(watch.seconds() < 1800.0);
}

TEST_CASE("criterion 11: the gluing filters name the violated condition") {
  Stopwatch watch;
  {  // fan of three tetrahedra around an edge: the only applicable bijection
     // of the outer facets reverses orientation in the central edge's link
    TreeOfSimplices T;
    T.d = 3;
    T.attachments = {{0, {0, 1, 3}}, {1, {0, 1, 4}}};
    const auto s = cw_from_tree(T);
    const auto v = check_quasimanifold_conditions(
        s, mk(s, {0, 2, 3}, {0, 4, 5}, {{0, 0}, {2, 4}, {3, 5}}));
    REQUIRE(v.has_value());
    REQUIRE(v->condition == 1);
  }
  {  // fan of eight tetrahedra around a vertex: chords that interleave around
     // the link's boundary circle would add genus and are refused
    TreeOfSimplices T;
    T.d = 3;
    for (int j = 0; j < 7; ++j) T.attachments.push_back({j, {0, j + 2, j + 3}});
    const auto s = cw_from_tree(T);
    const auto first = mk(s, {0, 1, 3}, {0, 7, 9}, {{0, 0}, {1, 9}, {3, 7}});
    REQUIRE_FALSE(check_quasimanifold_conditions(s, first).has_value());
    const auto applied = apply_gluing(s, first);
    REQUIRE(std::holds_alternative<CWState>(applied));
    const auto& s1 = std::get<CWState>(applied);
    const auto v = check_quasimanifold_conditions(
        s1, mk(s1, {0, 5, 7}, {0, 8, 10}, {{0, 0}, {5, 8}, {7, 10}}));
    REQUIRE(v.has_value());
    REQUIRE(v->condition == 2);
  }
  CHECK(watch.seconds() < 1.0);
}
