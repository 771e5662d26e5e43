#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "pbc/chains.hpp"
#include "pbc/complex.hpp"
#include "pbc/errors.hpp"
#include "pbc/homology.hpp"
#include "pbc/poset.hpp"
#include "pbc/smith.hpp"
#include "pbc/sphericity.hpp"

using namespace pbc;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix m;
  for (auto r : rows) {
    Vector v;
    for (auto x : r) v.push_back(x);
    m.push_back(std::move(v));
  }
  return m;
}

using gen::boundary_of_simplex;
using gen::projective_plane;
using gen::random_complex;
using gen::torus7;
using gen::two_points;
using gen::random_poset;

// Homology computed with the oracle ranks, torsion-free part only.
std::vector<std::size_t> oracle_betti(const SimplicialComplex& k) {
  std::vector<std::size_t> out;
  for (int d = -1; d <= k.dimension(); ++d) {
    const std::size_t rk_out = d >= 0 ? oracle::rational_rank(boundary_matrix(k, d).dense()) : 0;
    const std::size_t rk_in = oracle::rational_rank(boundary_matrix(k, d + 1).dense());
    out.push_back(k.count(d) - rk_out - rk_in);
  }
  return out;
}

std::set<Simplex> all_simplices(const SimplicialComplex& k) {
  std::set<Simplex> s;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& x : k.simplices(d)) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("smith normal form of a small matrix") {
  const Matrix m = mat({{2, 4}, {6, 8}});
  const SmithForm f = smith_normal_form(m);
  CHECK(f.S == mat({{2, 0}, {0, 4}}));
  CHECK(multiply(multiply(f.U, m), f.V) == f.S);
  CHECK(abs(determinant(f.U)) == 1);
  CHECK(abs(determinant(f.V)) == 1);
  CHECK(multiply(f.V, f.V_inv) == identity_matrix(2));
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const Matrix m = oracle::random_matrix(rng, r, c, -6, 6, 0.7);
    const SmithForm f = smith_normal_form(m);
    CHECK(multiply(multiply(f.U, m), f.V) == f.S);
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
    CHECK(multiply(f.V, f.V_inv) == identity_matrix(c));
    const auto expect = oracle::determinantal_invariants(m);
    CHECK(f.invariants == expect);
    CHECK(invariant_factors(m) == expect);
    SparseMatrix sm;
    sm.rows = r;
    sm.cols = c;
    sm.columns.resize(c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i)
        if (m[i][j] != 0) sm.columns[j].emplace_back(static_cast<int>(i), static_cast<long long>(m[i][j]));
    CHECK(invariant_factors(sm) == expect);
    for (std::size_t i = 0; i + 1 < f.invariants.size(); ++i) CHECK(f.invariants[i + 1] % f.invariants[i] == 0);
  }
}

TEST_CASE("invariant factors survive int64 overflow") {
  const long long big = 3'000'000'000'000'000'000LL;
  const Matrix m = mat({{big, big - 1}, {big - 7, big}});
  const auto expect = oracle::determinantal_invariants(m);
  CHECK(invariant_factors(m) == expect);
  SparseMatrix sm{2, 2, {{{0, big}, {1, big - 7}}, {{0, big - 1}, {1, big}}}};
  CHECK(invariant_factors(sm) == expect);
}

TEST_CASE("kernel basis and integer solving") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const Matrix m = oracle::random_matrix(rng, r, c, -3, 3, 0.6);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == c - oracle::rational_rank(m));
    for (const auto& v : ker) CHECK(multiply(m, v) == Vector(r));
    Vector x(c);
    for (auto& e : x) e = static_cast<long long>(rng() % 7) - 3;
    const Vector b = multiply(m, x);
    const auto sol = solve_integer(m, b);
    REQUIRE(sol.has_value());
    CHECK(multiply(m, *sol) == b);
  }
  CHECK_FALSE(solve_integer(mat({{2}}), Vector{BigInt(1)}).has_value());
}

TEST_CASE("homology of standard complexes") {
  const auto s1 = reduced_homology(boundary_of_simplex(2));
  CHECK(s1.rank(1) == 1);
  CHECK(s1.rank(0) == 0);
  const auto s2 = reduced_homology(boundary_of_simplex(3));
  CHECK(s2.rank(2) == 1);
  CHECK(s2.rank(1) == 0);
  CHECK(s2.rank(0) == 0);
  const auto oct = reduced_homology(complex_join(complex_join(two_points(), two_points()), two_points()));
  CHECK(oct.rank(2) == 1);
  CHECK(oct.zero_below(2));
  const auto rp2 = reduced_homology(projective_plane());
  CHECK(rp2.at(1).rank == 0);
  CHECK(rp2.at(1).torsion == std::vector<BigInt>{2});
  CHECK(rp2.at(2).zero());
  CHECK(rp2.at(0).zero());
  const auto t2 = reduced_homology(torus7());
  CHECK(t2.rank(1) == 2);
  CHECK(t2.rank(2) == 1);
  CHECK(t2.at(1).torsion.empty());
  const auto empty = reduced_homology(SimplicialComplex());
  CHECK(empty.rank(-1) == 1);
  CHECK(reduced_homology(SimplicialComplex::from_facets(1, {})).acyclic());
}

TEST_CASE("projective plane torsion matches the mod-2 rank drop") {
  const SimplicialComplex k = projective_plane();
  const Matrix d2 = boundary_matrix(k, 2).dense();
  CHECK(oracle::rank_mod_p(d2, 2) + 1 == oracle::rational_rank(d2));
  CHECK(oracle::rank_mod_p(d2, 3) == oracle::rational_rank(d2));
}

TEST_CASE("random complexes: d o d = 0, Euler characteristic, oracle Betti numbers") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const SimplicialComplex k = random_complex(rng);
    const auto c = augmented_chain_complex(k);
    CHECK(boundaries_square_to_zero(c));
    const auto h = homology(c);
    // Reduced Euler characteristic = chi - 1.
    CHECK(h.reduced_euler_characteristic() == k.euler_characteristic() - 1);
    const auto betti = oracle_betti(k);
    for (int d = -1; d <= k.dimension(); ++d) CHECK(h.rank(d) == betti[d + 1]);
    CHECK(homology(c, Exec::serial) == h);
  }
}

TEST_CASE("order complexes") {
  const FinitePoset chain({"a", "b", "c"}, {{0, 1}, {1, 2}});
  const auto k = order_complex(chain);
  CHECK(k.dimension() == 2);
  CHECK(k.count(2) == 1);
  const FinitePoset anti({"a", "b"}, {});
  CHECK(order_complex(anti).dimension() == 0);
  CHECK(order_complex(anti).count(0) == 2);
  // Proper nonempty subsets of {1,2,3}.
  const FinitePoset subsets({"1", "2", "3", "12", "13", "23"},
                            {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}});
  const auto hex = order_complex(subsets);
  CHECK(hex.count(0) == 6);
  CHECK(hex.count(1) == 6);
  CHECK(reduced_homology(hex).rank(1) == 1);
  CHECK(chain.height(2) == 2);
  CHECK(chain.height(0) == 0);
  CHECK(chain.dimension() == 2);
}

TEST_CASE("poset axioms are enforced") {
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {}), InvalidArgument);
  CHECK_THROWS_AS(FinitePoset({"a"}, {{0, 3}}), InvalidArgument);
}

TEST_CASE("face posets") {
  const SimplicialComplex edge = SimplicialComplex::from_facets(2, {{0, 1}});
  const FinitePoset x = face_poset(edge);
  CHECK(x.size() == 3);
  CHECK(x.less(0, 2));
  CHECK(x.less(1, 2));
  CHECK_FALSE(x.comparable(0, 1));
  CHECK(face_poset(SimplicialComplex::from_facets(3, {{0, 1, 2}})).size() == 7);
  const FinitePoset tri = face_poset(boundary_of_simplex(2));
  CHECK(tri.size() == 6);
  const auto sd = order_complex(tri);
  CHECK(sd.count(0) == 6);
  CHECK(sd.count(1) == 6);
  CHECK(reduced_homology(sd).rank(1) == 1);
  CHECK(tri.index_order_is_linear_extension());
}

TEST_CASE("subdivision preserves homology") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const SimplicialComplex k = random_complex(rng);
    CHECK(reduced_homology(order_complex(face_poset(k))) == reduced_homology(k));
  }
}

TEST_CASE("joins") {
  const FinitePoset a2({"a", "b"}, {});
  const FinitePoset c2({"c", "d"}, {});
  const FinitePoset j = poset_join(a2, c2);
  const auto k4 = order_complex(j);
  CHECK(k4.count(1) == 4);
  CHECK(reduced_homology(k4).rank(1) == 1);
  // Join with the empty poset.
  const FinitePoset e = poset_join(a2, FinitePoset());
  CHECK(e.size() == 2);
  CHECK_FALSE(e.comparable(0, 1));
  // K(X1 * X2) = K(X1) * K(X2).
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const FinitePoset x1 = random_poset(rng, 5), x2 = random_poset(rng, 5);
    const auto lhs = order_complex(poset_join(x1, x2));
    const auto rhs = complex_join(order_complex(x1), order_complex(x2));
    CHECK(lhs.labels() == rhs.labels());
    CHECK(all_simplices(lhs) == all_simplices(rhs));
  }
}

TEST_CASE("links, upper and lower sets, opposites") {
  const auto tri = boundary_of_simplex(2);
  const auto lv = link_complex({0}, tri);
  CHECK(lv.count(0) == 2);
  CHECK(lv.dimension() == 0);
  const auto tet = boundary_of_simplex(3);
  const auto le = link_complex({0, 1}, tet);
  CHECK(le.count(0) == 2);
  CHECK(le.dimension() == 0);
  CHECK_THROWS_AS(link_complex({0, 1}, SimplicialComplex::from_facets(3, {{1, 2}})), InvalidArgument);

  // X(lk(s, K)) is isomorphic to X(K)_{>s} under t -> s u t.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const SimplicialComplex k = random_complex(rng, 6);
    const auto faces = face_list(k);
    const Simplex s = faces[rng() % faces.size()];
    const auto lk = link_complex(s, k);
    const auto verts = link_vertices(s, k);
    const FinitePoset xl = face_poset(lk);
    const FinitePoset xk = face_poset(k);
    const int si = static_cast<int>(std::find(faces.begin(), faces.end(), s) - faces.begin());
    const auto up = xk.above(si);
    REQUIRE(up.size() == xl.size());
    const auto lfaces = face_list(lk);
    std::vector<int> image;
    for (const auto& t : lfaces) {
      Simplex u = s;
      for (int v : t) u.push_back(verts[v]);
      std::sort(u.begin(), u.end());
      const int ui = static_cast<int>(std::find(faces.begin(), faces.end(), u) - faces.begin());
      CHECK(std::find(up.begin(), up.end(), ui) != up.end());
      image.push_back(ui);
    }
    CHECK(std::set<int>(image.begin(), image.end()).size() == image.size());
    for (std::size_t a = 0; a < image.size(); ++a)
      for (std::size_t b = 0; b < image.size(); ++b)
        CHECK(xl.leq(static_cast<int>(a), static_cast<int>(b)) == xk.leq(image[a], image[b]));
  }

  for (int trial = 0; trial < 40; ++trial) {
    const FinitePoset p = random_poset(rng, 10);
    CHECK(reduced_homology(p) == reduced_homology(p.opposite()));
    if (p.empty()) continue;
    const int x = static_cast<int>(rng() % p.size());
    const FinitePoset lk = link_poset(x, p);
    CHECK(lk.size() == p.above(x).size() + p.below(x).size());
    CHECK(upper_set(p, x).size() == p.above(x).size());
    CHECK(lower_set(p, x).size() == p.below(x).size());
  }
}

TEST_CASE("subdivision chain map") {
  const auto tri = boundary_of_simplex(2);
  for (int d = 0; d <= 1; ++d)
    for (const auto& s : tri.simplices(d)) {
      const Chain c = Chain::simplex(s);
      CHECK(boundary(subdivision_chain(c, tri)) == subdivision_chain(boundary(c), tri));
    }
  // [u, v] -> [u, b] + [b, v] with b the barycenter (vertex 2 of the edge's
  // subdivision, after the two vertices).
  const auto edge = SimplicialComplex::from_facets(2, {{0, 1}});
  Chain expect(1);
  expect.add({0, 2}, 1);
  expect.add({1, 2}, -1);
  CHECK(subdivision_chain(Chain::simplex({0, 1}), edge) == expect);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const SimplicialComplex k = random_complex(rng, 6);
    const int d = static_cast<int>(rng() % (k.dimension() + 1));
    Chain c(d);
    for (const auto& s : k.simplices(d)) c.add(s, static_cast<long long>(rng() % 5) - 2);
    CHECK(boundary(subdivision_chain(c, k)) == subdivision_chain(boundary(c), k));
  }

  // The subdivided fundamental cycle generates H_1 of the hexagon.
  Chain z(1);
  z.add({0, 1}, 1);
  z.add({1, 2}, 1);
  z.add({0, 2}, -1);
  CHECK(boundary(z).is_zero());
  const auto hex = order_complex(face_poset(tri));
  const Chain lz = subdivision_chain(z, tri);
  CHECK(boundary(lz).is_zero());
  const auto basis = cycle_basis(hex, 1);
  REQUIRE(basis.size() == 1);
  const Vector coords = chain_coordinates(lz, hex);
  const auto sol = solve_integer(transpose(Matrix{basis[0]}), coords);
  REQUIRE(sol.has_value());
  CHECK(abs((*sol)[0]) == 1);
}

TEST_CASE("chain joins satisfy the Leibniz rule") {
  std::mt19937_64 rng(41);
  const auto k1 = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
  const auto k2 = SimplicialComplex::from_facets(3, {{0, 1, 2}});
  for (int trial = 0; trial < 100; ++trial) {
    const int p = static_cast<int>(rng() % 5) - 1, q = static_cast<int>(rng() % 4) - 1;
    Chain a(p), b(q);
    for (const auto& s : k1.simplices(p)) a.add(s, static_cast<long long>(rng() % 5) - 2);
    for (const auto& s : k2.simplices(q)) b.add(s, static_cast<long long>(rng() % 5) - 2);
    const Chain lhs = boundary(chain_join(a, b, 4));
    const BigInt sign = (p + 1) % 2 == 0 ? 1 : -1;
    const Chain rhs = chain_join(boundary(a), b, 4) + chain_join(a, boundary(b), 4) * sign;
    CHECK(lhs == rhs);
  }
  // point * point = oriented edge.
  CHECK(chain_join(Chain::simplex({0}), Chain::simplex({0}), 1) == Chain::simplex({0, 1}));
  // Fundamental cycles of S^0 * S^0 give the 4-cycle's generator.
  Chain z(0);
  z.add({1}, 1);
  z.add({0}, -1);
  const Chain w = chain_join(z, z, 2);
  const auto square = complex_join(two_points(), two_points());
  CHECK(boundary(w).is_zero());
  const auto basis = cycle_basis(square, 1);
  REQUIRE(basis.size() == 1);
  const Vector coords = chain_coordinates(w, square);
  const auto sol = solve_integer(transpose(Matrix{basis[0]}), coords);
  REQUIRE(sol.has_value());
  CHECK(abs((*sol)[0]) == 1);
}

TEST_CASE("sphericity verdicts") {
  CHECK(is_homologically_spherical(boundary_of_simplex(3), 2) == Verdict::yes);
  CHECK(is_homologically_spherical(order_complex(face_poset(boundary_of_simplex(2))), 1) == Verdict::yes);
  // A cone satisfies the homological definition.
  CHECK(is_homologically_spherical(SimplicialComplex::from_facets(3, {{0, 1, 2}}), 2) == Verdict::yes);
  CHECK(is_homologically_spherical(boundary_of_simplex(3), 1) == Verdict::no);
  CHECK(is_homologically_spherical(torus7(), 2) == Verdict::no);
  CHECK(is_homologically_spherical(SimplicialComplex(), -1) == Verdict::yes);
  CHECK(is_spherical(boundary_of_simplex(3), 2) == Verdict::yes);
  CHECK(is_spherical(boundary_of_simplex(4), 3) == Verdict::yes);
  CHECK(is_spherical(complex_join(complex_join(two_points(), two_points()), two_points()), 2) == Verdict::yes);
  CHECK(is_spherical(order_complex(face_poset(boundary_of_simplex(3))), 2) == Verdict::yes);
  CHECK(is_spherical(torus7(), 2) == Verdict::no);
}

TEST_CASE("edge-path group simplification") {
  // Free group of rank 1 (a circle) is visibly nontrivial.
  CHECK(simplify_to_trivial(edge_path_group(boundary_of_simplex(2)), 1000) == Verdict::no);
  // <x | x^2> cannot be shown trivial.
  GroupPresentation g{1, {{1, 1}}};
  CHECK(simplify_to_trivial(g, 1000) == Verdict::unknown);
  // <x, y | [x, y], xy> is infinite cyclic.
  GroupPresentation h{2, {{1, 2, -1, -2}, {1, 2}}};
  CHECK(simplify_to_trivial(h, 1000) == Verdict::no);
  GroupPresentation t{2, {{1, 2}, {2}}};
  CHECK(simplify_to_trivial(t, 1000) == Verdict::yes);
}
