#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "sutured/exterior.hpp"

using namespace sutured;

namespace {

Multivector e(int rank, std::vector<int> idx, Integer c = 1, Ring r = Ring::Integers) {
  return Multivector::monomial(r, rank, index_set(idx), c);
}

// Leibniz expansion over all permutations; independent of the elimination code.
Integer leibniz_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Integer term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

template <class S>
BasicMultivector<S> random_mv(std::mt19937_64& rng, Ring ring, int rank, int max_terms) {
  BasicMultivector<S> x(ring, rank);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<IndexSet> set(0, (IndexSet(1) << rank) - 1);
  int n = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int k = 0; k < n; ++k) x.add_term(set(rng), coef(rng));
  return x;
}

}  // namespace

TEST_CASE("wedge is antisymmetric and alternating on generators") {
  const int r = 4;
  auto e0 = Multivector::generator(Ring::Integers, r, 0);
  auto e1 = Multivector::generator(Ring::Integers, r, 1);
  CHECK(wedge(e0, e1) == e(r, {0, 1}));
  CHECK(wedge(e1, e0) == e(r, {0, 1}, -1));
  auto x = e0 + 2 * e1;
  CHECK(wedge(x, x).is_zero());
  auto f = e0.in_ring(Ring::F2), g = e1.in_ring(Ring::F2);
  CHECK(wedge(f, g) == wedge(g, f));
}

TEST_CASE("wedge expands the three-factor disk element") {
  // Basis index k stands for the arc b_{2k+1}; rank 5 for six suture pairs.
  const int r = 5;
  auto b = [&](int odd) { return Multivector::generator(Ring::Integers, r, (odd - 1) / 2); };
  auto x = wedge(wedge(b(3), b(5)), b(7) + b(9));
  CHECK(x == e(r, {1, 2, 3}) + e(r, {1, 2, 4}));
  CHECK(x.to_string() == "1·[1,2,3] + 1·[1,2,4]");
}

TEST_CASE("wedge is associative and bilinear on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    for (Ring ring : {Ring::Integers, Ring::F2}) {
      auto a = random_mv<PrimalSpace>(rng, ring, 6, 5);
      auto b = random_mv<PrimalSpace>(rng, ring, 6, 5);
      auto c = random_mv<PrimalSpace>(rng, ring, 6, 5);
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
      CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
    }
  }
}

TEST_CASE("pairing on decomposables equals the determinant of f_i(e_j)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      const int r = 5;
      std::vector<DualMultivector> fs;
      std::vector<Multivector> es;
      std::vector<std::vector<Integer>> fv(k, std::vector<Integer>(r)), ev(k, std::vector<Integer>(r));
      for (int i = 0; i < k; ++i) {
        for (int t = 0; t < r; ++t) fv[i][t] = coef(rng), ev[i][t] = coef(rng);
        fs.push_back(DualMultivector::from_coordinates(Ring::Integers, fv[i]));
        es.push_back(Multivector::from_coordinates(Ring::Integers, ev[i]));
      }
      std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          for (int t = 0; t < r; ++t) m[i][j] += fv[i][t] * ev[j][t];
      auto F = wedge_all(Ring::Integers, r, fs);
      auto E = wedge_all(Ring::Integers, r, es);
      CHECK(pair(F, E) == leibniz_det(m));
    }
  }
}

TEST_CASE("pairing is zero across gradings and the Gram matrix of basis sets is the identity") {
  const int r = 4;
  auto c13 = DualMultivector::monomial(Ring::Integers, r, index_set({1, 3}), 1);
  CHECK(pair(c13, e(r, {1, 3})) == 1);
  CHECK(pair(c13, e(r, {1, 2})) == 0);
  auto f1 = DualMultivector::generator(Ring::Integers, r, 1);
  CHECK(pair(f1, e(r, {1, 2})) == 0);
  for (int rr = 0; rr <= 6; ++rr)
    for (IndexSet I = 0; I < (IndexSet(1) << rr); ++I)
      for (IndexSet J = 0; J < (IndexSet(1) << rr); ++J) {
        auto cI = DualMultivector::monomial(Ring::Integers, rr, I, 1);
        auto bJ = Multivector::monomial(Ring::Integers, rr, J, 1);
        REQUIRE(pair(cI, bJ) == (I == J ? 1 : 0));
      }
}

TEST_CASE("interior product matches its adjunction") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    for (Ring ring : {Ring::Integers, Ring::F2}) {
      const int r = 6;
      auto E = random_mv<PrimalSpace>(rng, ring, r, 4);
      auto F = random_mv<DualSpace>(rng, ring, r, 6);
      auto G = random_mv<PrimalSpace>(rng, ring, r, 6);
      CHECK(pair(interior(E, F), G) == pair(F, wedge(E, G)));
      auto Fd = random_mv<DualSpace>(rng, ring, r, 4);
      auto Ed = random_mv<PrimalSpace>(rng, ring, r, 6);
      auto H = random_mv<DualSpace>(rng, ring, r, 6);
      CHECK(pair(H, interior(Fd, Ed)) == pair(wedge(Fd, H), Ed));
    }
  }
}

TEST_CASE("interior product on basis elements and the unit") {
  const int r = 3;
  auto c23 = DualMultivector::monomial(Ring::Integers, r, index_set({1, 2}), 1);
  auto x = interior(c23, e(r, {0, 1, 2}));
  CHECK(x.equal_up_to_sign(e(r, {0})));
  CHECK(interior(c23, e(r, {0, 1})).is_zero());
  auto F = DualMultivector::monomial(Ring::Integers, r, index_set({0, 2}), 5);
  CHECK(interior(Multivector::one(Ring::Integers, r), F) == F);
}

TEST_CASE("interior product reproduces the annulus gluing computation") {
  // eta(g1) = 0, eta(g2) = eta(g3) = 1.
  const int r = 3;
  DualMultivector eta = DualMultivector::from_coordinates(Ring::Integers, {0, 1, 1});
  auto x = interior(eta, e(r, {0, 1, 2}));
  CHECK(x == e(r, {0, 1}) - e(r, {0, 2}));
  // In the basis b1 = g1, b2 = g2 - g3 of the annihilator of eta this is b1 ^ b2.
  auto g = [&](int i) { return Multivector::generator(Ring::Integers, r, i); };
  CHECK(x == wedge(g(0), g(1) - g(2)));
}

TEST_CASE("grade projection") {
  const int r = 3;
  auto x = e(r, {0}) + e(r, {0, 1});
  CHECK(x.grade_project(2) == e(r, {0, 1}));
  auto y = Multivector::one(Ring::Integers, r) + e(r, {0});
  CHECK(y.grade_project(0) == Multivector::one(Ring::Integers, r));
  CHECK(y.grade_project(7).is_zero());
  std::mt19937_64 rng(5);
  auto z = random_mv<PrimalSpace>(rng, Ring::Integers, 5, 10);
  Multivector sum(Ring::Integers, 5);
  for (int i = 0; i <= 5; ++i) {
    sum += z.grade_project(i);
    for (int j = 0; j <= 5; ++j)
      if (i != j) CHECK(z.grade_project(j).grade_project(i).is_zero());
  }
  CHECK(sum == z);
}

TEST_CASE("induced maps") {
  std::mt19937_64 rng(9);
  auto x = random_mv<PrimalSpace>(rng, Ring::Integers, 4, 8);
  CHECK(induced_map(Matrix::identity(Ring::Integers, 4), x) == x);

  Matrix T(Ring::Integers, 2, 2);
  T.set(0, 0, 1), T.set(1, 0, 1), T.set(1, 1, 1);
  auto b1 = Multivector::generator(Ring::Integers, 2, 0), b2 = Multivector::generator(Ring::Integers, 2, 1);
  Multivector y = b1;
  for (int n = 1; n <= 5; ++n) {
    y = induced_map(T, y);
    CHECK(y == b1 + Integer(n) * b2);
  }
  CHECK(induced_map(T, Multivector::one(Ring::Integers, 2)) == Multivector::one(Ring::Integers, 2));

  // Top degree picks up the determinant; a rank-deficient map kills it.
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(Ring::Integers, 3, 3);
    std::vector<std::vector<Integer>> rows(3, std::vector<Integer>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rows[i][j] = coef(rng), m.set(i, j, rows[i][j]);
    if (trial % 2 == 0)
      for (int i = 0; i < 3; ++i) rows[i][2] = rows[i][0] + rows[i][1], m.set(i, 2, rows[i][2]);
    auto top = top_generator<PrimalSpace>(Ring::Integers, 3);
    Integer d = leibniz_det(rows);
    CHECK(induced_map(m, top) == Integer(d) * top);
    CHECK(determinant(m) == d);
    if (trial % 2 == 0) CHECK(induced_map(m, top).is_zero());
  }
}

TEST_CASE("wedging with a generator is acyclic over F2") {
  for (int r = 1; r <= 8; ++r) {
    const std::size_t n = std::size_t(1) << r;
    Matrix M(Ring::F2, n, n);
    auto e0 = Multivector::generator(Ring::F2, r, 0);
    for (IndexSet I = 0; I < n; ++I) {
      auto img = wedge(e0, Multivector::monomial(Ring::F2, r, I, 1));
      CHECK(wedge(e0, img).is_zero());
      for (const auto& [J, c] : img.terms()) M.set(J, I, c);
    }
    // kernel dimension n - rank equals image dimension rank
    CHECK(rank(M) == n / 2);
  }
}

TEST_CASE("exterior algebra of a direct sum factors into blocks") {
  std::mt19937_64 rng(21);
  const int r1 = 3, r2 = 3;
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_mv<PrimalSpace>(rng, Ring::Integers, r1, 4);
    auto y = random_mv<PrimalSpace>(rng, Ring::Integers, r2, 4);
    Multivector X(Ring::Integers, r1 + r2), Y(Ring::Integers, r1 + r2);
    for (const auto& [I, c] : x.terms()) X.add_term(I, c);
    for (const auto& [J, c] : y.terms()) Y.add_term(J << r1, c);
    auto w = wedge(X, Y);
    for (const auto& [I, a] : x.terms())
      for (const auto& [J, b] : y.terms()) CHECK(w.coefficient(I | (J << r1)) == a * b);
  }
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(Multivector(Ring::Integers, 65), StructuralError);
  auto a = Multivector::one(Ring::Integers, 2), b = Multivector::one(Ring::Integers, 3);
  CHECK_THROWS_AS(wedge(a, b), StructuralError);
  CHECK_THROWS_AS(wedge(a, a.in_ring(Ring::F2)), StructuralError);
  CHECK_THROWS_AS(pair(DualMultivector::one(Ring::Integers, 2), b), StructuralError);
  CHECK_THROWS_AS(induced_map(Matrix::identity(Ring::Integers, 2), b), StructuralError);
  CHECK(Multivector::one(Ring::Integers, 0).to_string() == "1");
  CHECK(Multivector::zero(Ring::Integers, 2).to_string() == "0");
  CHECK((-e(3, {0, 2})).to_string() == "-1·[0,2]");
}

TEST_CASE("smith form transforms are consistent") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (Ring ring : {Ring::Integers, Ring::F2})
    for (int trial = 0; trial < 30; ++trial) {
      Matrix A(ring, 4, 6);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 6; ++j) A.set(i, j, coef(rng));
      SmithForm s = smith(A);
      CHECK(s.U * A * s.W == s.D);
      CHECK(s.U * s.Uinv == Matrix::identity(ring, 4));
      CHECK(s.W * s.Winv == Matrix::identity(ring, 6));
      CHECK(s.rank == rank(A));
    }
}
