#include <catch2/catch_amalgamated.hpp>

#include <tlc/homology.hpp>
#include <tlc/surface.hpp>

#include "test_support.hpp"

using namespace tlc;
using fixtures::rational_rank;

namespace {

// Integer matrix product, for the chain-complex identity.
std::vector<std::vector<long long>> matmul(
    const std::vector<std::vector<long long>>& A,
    const std::vector<std::vector<long long>>& B) {
  if (A.empty() || B.empty()) return {};
  std::vector<std::vector<long long>> C(A.size(),
                                        std::vector<long long>(B[0].size(), 0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t k = 0; k < B.size(); ++k)
      for (size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
  return C;
}

std::vector<std::vector<Face>> faces_by_dim(const SimplicialComplex& K) {
  std::vector<std::vector<Face>> out(static_cast<size_t>(K.dim() + 2));
  for (const auto& f : closure(K))
    out[static_cast<size_t>(face_dim(f) + 1)].push_back(f);
  return out;
}

}  // namespace

TEST_CASE("smith normal form on small known matrices") {
  auto r = smith_normal_form({{1, 1}, {1, 1}});
  REQUIRE(r.factors == std::vector<long long>{1});
  REQUIRE(r.rank == 1);

  r = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  REQUIRE(r.factors == std::vector<long long>{1, 1, 1});
  REQUIRE(r.rank == 3);

  r = smith_normal_form({{2, 0}, {0, 2}});
  REQUIRE(r.factors == std::vector<long long>{2, 2});

  r = smith_normal_form({{2, 4}, {6, 8}});
  // det = -8, gcd of entries 2: invariant factors 2, 4
  REQUIRE(r.factors == std::vector<long long>{2, 4});

  r = smith_normal_form({{0, 0}, {0, 0}});
  REQUIRE(r.rank == 0);
  REQUIRE(r.factors.empty());

  r = smith_normal_form({});
  REQUIRE(r.rank == 0);

  r = smith_normal_form({{6}});
  REQUIRE(r.factors == std::vector<long long>{6});

  // Non-square, rank-deficient.
  r = smith_normal_form({{1, 2, 3}, {2, 4, 6}});
  REQUIRE(r.factors == std::vector<long long>{1});
}

TEST_CASE("smith normal form divisibility chain on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> entry(-9, 9);
  for (int iter = 0; iter < 200; ++iter) {
    size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    std::vector<std::vector<long long>> M(rows,
                                          std::vector<long long>(cols, 0));
    for (auto& row : M)
      for (auto& x : row) x = entry(rng);
    auto r = smith_normal_form(M);
    REQUIRE(r.rank == rational_rank(M));
    for (size_t i = 0; i < r.factors.size(); ++i) {
      REQUIRE(r.factors[i] > 0);
      if (i + 1 < r.factors.size())
        REQUIRE(r.factors[i + 1] % r.factors[i] == 0);
    }
    // The machine-word path and the GMP path must agree entry for entry.
    std::vector<std::vector<mpz_class>> Mz(rows);
    for (size_t i = 0; i < rows; ++i)
      for (long long x : M[i]) Mz[i].push_back(mpz_class(static_cast<long>(x)));
    auto dz = detail::snf_diagonal<mpz_class>(std::move(Mz));
    REQUIRE(dz.size() == r.factors.size());
    for (size_t i = 0; i < dz.size(); ++i)
      REQUIRE(dz[i].get_si() == r.factors[i]);
  }
}

TEST_CASE("smith normal form overflow guard and big-entry fallback") {
  const long long big = (1LL << 40);
  REQUIRE_THROWS_AS(detail::snf_mulsub(0, big, big), SnfOverflow);
  REQUIRE_THROWS_AS(detail::snf_add(detail::kSnfLimit, detail::kSnfLimit),
                    SnfOverflow);
  REQUIRE(detail::snf_mulsub(10, 3, 2) == 4);
  REQUIRE(detail::snf_add(-5, 7) == 2);

  // Entries near the guard force the GMP restart; the factors still fit.
  const long long L = (1LL << 62) - 1;  // odd
  auto r = smith_normal_form({{2, 0, 0}, {0, L, L}, {0, L, L}});
  REQUIRE(r.rank == 2);
  REQUIRE(r.factors == std::vector<long long>{1, 2 * L});
}

TEST_CASE("reduced homology of spheres, balls and points") {
  for (int d = 0; d <= 4; ++d) {
    auto S = boundary_complex(simplex_complex(d + 1));
    auto H = reduced_homology(S);
    INFO("sphere dimension " << d);
    for (int i = -1; i <= d; ++i) {
      REQUIRE(H.betti_at(i) == (i == d ? 1 : 0));
      REQUIRE(H.torsion_at(i).empty());
    }
  }
  for (int d = 0; d <= 4; ++d) {
    auto H = reduced_homology(simplex_complex(d));
    for (int i = -1; i <= d; ++i) REQUIRE(H.trivial_at(i));
  }
  // The empty space carries one unit of reduced homology in dimension -1.
  auto H = reduced_homology(from_faces({Face{}}));
  REQUIRE(H.betti_at(-1) == 1);
  // Two points: one unit in dimension 0.
  H = reduced_homology(from_faces({{1}, {2}}));
  REQUIRE(H.betti_at(-1) == 0);
  REQUIRE(H.betti_at(0) == 1);
}

TEST_CASE("reduced homology of surfaces") {
  auto H = reduced_homology(fixtures::rp2_6());
  REQUIRE(H.betti_at(0) == 0);
  REQUIRE(H.betti_at(1) == 0);
  REQUIRE(H.betti_at(2) == 0);
  REQUIRE(H.torsion_at(1) == std::vector<long long>{2});
  REQUIRE(H.torsion_at(0).empty());
  REQUIRE(H.torsion_at(2).empty());

  H = reduced_homology(fixtures::torus_7());
  REQUIRE(H.betti_at(1) == 2);
  REQUIRE(H.betti_at(2) == 1);
  REQUIRE(H.torsion_at(1).empty());

  H = reduced_homology(fixtures::annulus_6());
  REQUIRE(H.betti_at(0) == 0);
  REQUIRE(H.betti_at(1) == 1);
  REQUIRE(H.betti_at(2) == 0);

  H = reduced_homology(fixtures::moebius_5());
  REQUIRE(H.betti_at(1) == 1);
  REQUIRE(H.torsion_at(1).empty());

  H = reduced_homology(fixtures::octahedron());
  REQUIRE(H.betti_at(2) == 1);
  REQUIRE(H.betti_at(1) == 0);
}

TEST_CASE("boundary of boundary is zero") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 25; ++iter) {
    auto K = fixtures::random_pure_complex(rng, 2 + iter % 2, 8, 10);
    auto faces = faces_by_dim(K);
    for (size_t k = 0; k + 2 < faces.size(); ++k) {
      auto lowermat = boundary_matrix(faces[k], faces[k + 1]);
      auto uppermat = boundary_matrix(faces[k + 1], faces[k + 2]);
      for (const auto& row : matmul(lowermat, uppermat))
        for (long long x : row) REQUIRE(x == 0);
    }
  }
}

TEST_CASE("euler characteristic matches alternating betti sum") {
  std::mt19937 rng(78);
  std::vector<SimplicialComplex> cases = {
      fixtures::rp2_6(),      fixtures::torus_7(),  fixtures::annulus_6(),
      fixtures::moebius_5(),  fixtures::octahedron(),
      boundary_complex(simplex_complex(4))};
  for (int iter = 0; iter < 20; ++iter)
    cases.push_back(fixtures::random_pure_complex(rng, 3, 8, 6));
  for (const auto& K : cases) {
    auto H = reduced_homology(K);
    long long sum = 0;
    for (int i = 0; i <= K.dim(); ++i)
      sum += (i % 2 == 0 ? 1 : -1) * H.betti_at(i);
    REQUIRE(euler_characteristic(K) - 1 == sum);
  }
}

TEST_CASE("smith ranks agree with rational elimination on boundary maps") {
  std::mt19937 rng(79);
  for (int iter = 0; iter < 30; ++iter) {
    int d = 2 + iter % 3;
    auto K = fixtures::random_pure_complex(rng, d, 9, 8);
    auto faces = faces_by_dim(K);
    for (size_t k = 0; k + 1 < faces.size(); ++k) {
      auto M = boundary_matrix(faces[k], faces[k + 1]);
      REQUIRE(smith_normal_form(M).rank == rational_rank(M));
    }
  }
}

TEST_CASE("cohen-macaulay classification") {
  REQUIRE(is_cohen_macaulay(boundary_complex(simplex_complex(3))));
  REQUIRE(is_cohen_macaulay(simplex_complex(3)));
  REQUIRE(is_cohen_macaulay(fixtures::octahedron()));
  REQUIRE(is_cohen_macaulay(cone(99, boundary_complex(simplex_complex(3)))));
  // Torsion is an obstruction over the integers.
  REQUIRE_FALSE(is_cohen_macaulay(fixtures::rp2_6()));
  // A homotopy circle in codimension one is an obstruction too.
  REQUIRE_FALSE(is_cohen_macaulay(fixtures::annulus_6()));
  REQUIRE_FALSE(is_cohen_macaulay(fixtures::moebius_5()));
  REQUIRE_FALSE(is_cohen_macaulay(fixtures::torus_7()));
  // Disconnected but pure: fails already at the empty face.
  REQUIRE_FALSE(is_cohen_macaulay(from_faces({{1, 2}, {3, 4}})));
  // Purity is a precondition.
  REQUIRE_THROWS_AS(is_cohen_macaulay(from_faces({{1, 2, 3}, {4, 5}})),
                    std::invalid_argument);
}

TEST_CASE("homological depth and t-CM") {
  REQUIRE(homological_depth(boundary_complex(simplex_complex(3))) == 2);
  REQUIRE(homological_depth(fixtures::annulus_6()) == 1);
  REQUIRE(homological_depth(fixtures::rp2_6()) == 1);
  REQUIRE(homological_depth(fixtures::octahedron()) == 2);
  REQUIRE(homological_depth(from_faces({{1, 2, 3}, {4, 5, 6}})) == 0);
  REQUIRE(homological_depth(from_faces({{1}, {2}, {3}})) == 0);

  // depth(K) > dim(K) - t is the t-CM normalization.
  REQUIRE(is_t_CM(boundary_complex(simplex_complex(3)), 1));
  REQUIRE(is_t_CM(fixtures::annulus_6(), 2));
  REQUIRE_FALSE(is_t_CM(fixtures::annulus_6(), 1));
  REQUIRE(is_t_CM(fixtures::rp2_6(), 2));
  REQUIRE_FALSE(is_t_CM(fixtures::rp2_6(), 1));
  REQUIRE_THROWS_AS(is_t_CM(fixtures::annulus_6(), 0), std::invalid_argument);
}

TEST_CASE("surface classification of simplicial fixtures") {
  auto expect_surface = [](const SimplicialComplex& K) {
    auto r = classify_surface(K);
    REQUIRE(std::holds_alternative<SurfaceClass>(r));
    return std::get<SurfaceClass>(r);
  };

  auto s = expect_surface(boundary_complex(simplex_complex(3)));
  REQUIRE(s.is_sphere());
  REQUIRE(s.euler == 2);

  s = expect_surface(fixtures::octahedron());
  REQUIRE(s.is_sphere());

  s = expect_surface(fixtures::annulus_6());
  REQUIRE(s.orientable);
  REQUIRE(s.genus == 0);
  REQUIRE(s.boundary_circles == 2);
  REQUIRE(s.euler == 0);

  s = expect_surface(fixtures::moebius_5());
  REQUIRE_FALSE(s.orientable);
  REQUIRE(s.crosscaps == 1);
  REQUIRE(s.boundary_circles == 1);

  s = expect_surface(fixtures::torus_7());
  REQUIRE(s.orientable);
  REQUIRE(s.genus == 1);
  REQUIRE(s.boundary_circles == 0);
  REQUIRE(s.euler == 0);

  s = expect_surface(fixtures::rp2_6());
  REQUIRE_FALSE(s.orientable);
  REQUIRE(s.crosscaps == 1);
  REQUIRE(s.boundary_circles == 0);
  REQUIRE(s.euler == 1);

  // A single triangle is a disk.
  s = expect_surface(from_faces({{1, 2, 3}}));
  REQUIRE(s.is_disk());
}

TEST_CASE("surface classification failure witnesses") {
  auto expect_failure = [](const SimplicialComplex& K) {
    auto r = classify_surface(K);
    REQUIRE(std::holds_alternative<NotASurface>(r));
    return std::get<NotASurface>(r);
  };

  // Two triangles sharing only a vertex: pinched.
  auto f = expect_failure(from_faces({{1, 2, 3}, {1, 4, 5}}));
  REQUIRE(f.reason == "pinched vertex");

  // Disjoint triangles.
  f = expect_failure(from_faces({{1, 2, 3}, {4, 5, 6}}));
  REQUIRE(f.reason == "disconnected");

  // Three triangles around one edge.
  f = expect_failure(from_faces({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
  REQUIRE(f.reason == "edge in more than two triangles");

  // Not two-dimensional.
  auto r = classify_surface(from_faces({{1, 2}}));
  REQUIRE(std::holds_alternative<NotASurface>(r));
}

TEST_CASE("surface classification of CW-style incidence data") {
  // Pillow: two triangles glued along all three edges form a sphere.
  TwoComplex pillow;
  pillow.n_vertices = 3;
  pillow.edges = {{0, 1}, {0, 2}, {1, 2}};
  pillow.triangles = {{0, 1, 2}, {0, 1, 2}};
  auto r = classify_surface(pillow);
  REQUIRE(std::holds_alternative<SurfaceClass>(r));
  REQUIRE(std::get<SurfaceClass>(r).is_sphere());

  // Lens: two triangles glued along two of three edges; a disk whose
  // boundary is a doubled edge (a bigon).
  TwoComplex lens;
  lens.n_vertices = 3;
  lens.edges = {{0, 1}, {0, 2}, {1, 2}, {1, 2}};
  lens.triangles = {{0, 1, 2}, {0, 1, 3}};
  r = classify_surface(lens);
  REQUIRE(std::holds_alternative<SurfaceClass>(r));
  auto s = std::get<SurfaceClass>(r);
  REQUIRE(s.is_disk());
  REQUIRE(s.euler == 1);

  // Empty input.
  r = classify_surface(TwoComplex{});
  REQUIRE(std::holds_alternative<NotASurface>(r));
}

TEST_CASE("link analysis exposes fans, pieces and boundary circles") {
  // Wedge of two triangles at vertex 0.
  TwoComplex W;
  W.n_vertices = 5;
  W.edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
  W.triangles = {{0, 1, 2}, {3, 4, 5}};
  auto A = analyze_two_complex(W);
  REQUIRE(A.valid);
  REQUIRE(A.fans_of_vertex[0].size() == 2);
  REQUIRE(A.fans_of_vertex[1].size() == 1);
  REQUIRE(A.pieces.size() == 2);
  for (const auto& p : A.pieces) {
    REQUIRE(p.euler == 1);
    REQUIRE(p.orientable);
    REQUIRE(p.boundary_circles == 1);
    REQUIRE(p.surface().is_disk());
  }
  REQUIRE(A.n_circles == 2);
  REQUIRE_FALSE(A.fans[static_cast<size_t>(A.fans_of_vertex[0][0])].cycle);
  REQUIRE(A.vertex_all_path_fans(0));

  // An annulus made of two squares of triangles: interior vertices have
  // cycle fans.
  auto An = to_two_complex(fixtures::annulus_6());
  auto B = analyze_two_complex(An);
  REQUIRE(B.valid);
  REQUIRE(B.pieces.size() == 1);
  REQUIRE(B.pieces[0].boundary_circles == 2);
  REQUIRE(B.n_circles == 2);
  int path_fans = 0, cycle_fans = 0;
  for (const auto& fan : B.fans) (fan.cycle ? cycle_fans : path_fans)++;
  REQUIRE(cycle_fans == 0);  // every vertex of this annulus is on the boundary
  REQUIRE(path_fans == 6);

  auto T = to_two_complex(fixtures::torus_7());
  auto C = analyze_two_complex(T);
  REQUIRE(C.valid);
  for (const auto& fan : C.fans) REQUIRE(fan.cycle);
  REQUIRE(C.n_circles == 0);
  REQUIRE(C.pieces[0].surface() ==
          SurfaceClass{true, 1, 0, 0, 0});
}

TEST_CASE("curve classification") {
  REQUIRE(classify_curve(from_faces({{1, 2}, {2, 3}, {3, 4}, {1, 4}})) ==
          CurveClass::Cycle);
  REQUIRE(classify_curve(from_faces({{1, 2}, {2, 3}, {3, 4}})) ==
          CurveClass::Path);
  REQUIRE(classify_curve(from_faces({{1, 2}})) == CurveClass::Path);
  // Theta graph: a degree-3 vertex.
  REQUIRE(classify_curve(from_faces({{1, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}})) ==
          CurveClass::Neither);
  // Two disjoint cycles.
  REQUIRE(classify_curve(from_faces(
              {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})) ==
          CurveClass::Neither);
  // Not one-dimensional.
  REQUIRE(classify_curve(from_faces({{1, 2, 3}})) == CurveClass::Neither);
}
