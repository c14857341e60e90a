#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "sutured/homology.hpp"
#include "sutured/intersection.hpp"
#include "sutured/random_surface.hpp"

using namespace sutured;
using boost::multiprecision::cpp_rational;

namespace {

// Plain Gaussian elimination over Q; shares no code with the diagonalization.
std::size_t rank_over_q(std::vector<std::vector<cpp_rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      cpp_rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Elimination over F2 on bit rows.
std::size_t rank_over_f2(std::vector<std::vector<bool>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] ^ m[r][j];
    ++r;
  }
  return r;
}

// rank H_1(X, S) = dim C_1 - rank(d1 restricted to non-S rows) - rank(d2), built from raw incidences.
template <class Rank, class Entry>
std::size_t oracle_rank(const Complex& c, const std::vector<char>& rel, Rank rank_fn, Entry entry) {
  const int E = c.edge_count();
  std::vector<decltype(entry(0))> d1, d2;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (rel[v]) continue;
    auto row = entry(E);
    for (int h = 0; h < c.halfedge_count(); ++h)
      if (h < c.twin(h)) {
        int e = c.edge_of(h);
        int val = (c.head(h) == v) - (c.tail(h) == v);
        row[e] = row[e] + val;
      }
    d1.push_back(row);
  }
  for (int e = 0; e < E; ++e) d2.push_back(entry(c.face_count()));
  for (int f = 0; f < c.face_count(); ++f)
    for (int h : c.face(f)) {
      int e = c.edge_of(h);
      d2[e][f] = d2[e][f] + (h < c.twin(h) ? 1 : -1);
    }
  return E - rank_fn(d1) - rank_fn(d2);
}

std::size_t q_rank(const Complex& c, const std::vector<char>& rel) {
  return oracle_rank(c, rel, rank_over_q, [](int n) { return std::vector<cpp_rational>(n); });
}

std::size_t f2_rank(const Complex& c, const std::vector<char>& rel) {
  auto to_bits = [](std::vector<std::vector<cpp_rational>> m) {
    std::vector<std::vector<bool>> b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (auto& x : m[i]) b[i].push_back(numerator(x) % 2 != 0);
    return rank_over_f2(b);
  };
  return oracle_rank(c, rel, to_bits, [](int n) { return std::vector<cpp_rational>(n); });
}

bool has_violation(const std::vector<Violation>& vs, const std::string& kind) {
  for (const auto& v : vs)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("standard disk models") {
  for (int N = 1; N <= 6; ++N) {
    SuturedSurface d = standard_disk(N);
    CHECK(d.validate().empty());
    CHECK(d.euler() == 1);
    CHECK(d.n_F() == N);
    CHECK(d.L() == N - 1);
    CHECK(d.complex().boundary_circles().size() == 1);
  }
  CHECK_THROWS_AS(standard_disk(0), StructuralError);
}

TEST_CASE("disk homology has the beta basis with the stated boundaries") {
  for (int N = 1; N <= 6; ++N) {
    SuturedSurface d = standard_disk(N);
    for (Ring ring : {Ring::Integers, Ring::F2}) {
      RelativeHomology h = alpha_plus_homology(d, ring);
      CHECK(h.rank() == N - 1);
      RelativeHomology hb = disk_homology(d.complex(), N, ring);
      for (int i = 1, k = 0; i <= 2 * N - 3; i += 2, ++k) {
        Chain b = disk_beta(d.complex(), N, i);
        auto bd = d.complex().boundary(b);
        for (int v = 0; v < 4 * N; ++v) {
          int expect = (v == disk_alpha(N, i + 2)) - (v == disk_alpha(N, i));
          CHECK(bd[v] == expect);
        }
        CHECK(hb.express(b) == Multivector::generator(ring, N - 1, k));
      }
    }
  }
}

TEST_CASE("validation reports marking and closedness defects") {
  SuturedSurface d = standard_disk(3);
  auto marks = d.marks();
  std::swap(marks[disk_alpha(3, 1)], marks[disk_F(2)]);  // F+ followed by F-
  SuturedSurface bad(d.complex(), marks);
  CHECK(has_violation(bad.validate(), "mark_pattern"));

  auto marks2 = d.marks();
  marks2[disk_F(3)] = Mark::FPlus;
  marks2[disk_F(2)] = Mark::FPlus;  // two consecutive F+
  CHECK(!SuturedSurface(d.complex(), marks2).validate().empty());

  // Square with sides a b a^-1 b^-1 glued: a closed torus.
  Complex sq = Complex::from_vertex_faces(4, {{0, 1, 2, 3}});
  Complex torus = identify_boundary(sq, {{0, 2}, {1, 3}}).complex;
  SuturedSurface t(torus, std::vector<Mark>(torus.vertex_count(), Mark::None));
  CHECK(has_violation(t.validate(), "closed_component"));
  CHECK(torus.euler() == 0);

  auto marks3 = d.marks();
  marks3[disk_alpha(3, 2)] = Mark::None;
  CHECK(has_violation(SuturedSurface(d.complex(), marks3).validate(), "mark_counts"));
}

TEST_CASE("structural errors in raw complexes") {
  CHECK_THROWS_AS(Complex(2, {1, 0}, {0, 1}, {}), StructuralError);           // twin fixed point
  CHECK_THROWS_AS(Complex(2, {1, 0}, {1, 0}, {{0}}), StructuralError);        // open face walk
  CHECK_THROWS_AS(Complex(2, {1, 0}, {1, 0}, {{0, 1}, {0, 1}}), StructuralError);  // shared halfedge
  CHECK_THROWS_AS(Complex(1, {3, 0}, {1, 0}, {}), StructuralError);           // head out of range
}

TEST_CASE("standard annulus") {
  SuturedSurface a = standard_annulus();
  CHECK(a.validate().empty());
  CHECK(a.euler() == 0);
  CHECK(a.n_F() == 2);
  CHECK(a.L() == 2);
  CHECK(a.complex().boundary_circles().size() == 2);
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    RelativeHomology h = annulus_homology(a, ring);
    CHECK(h.rank() == 2);
    CHECK(h.express(annulus_beta1(a.complex())) == Multivector::generator(ring, 2, 0));
    CHECK(h.express(annulus_beta2(a.complex())) == Multivector::generator(ring, 2, 1));
  }
}

TEST_CASE("boundary arcs alternate between A+ and A-") {
  SuturedSurface d = standard_disk(3);
  auto sign = d.boundary_arc_signs();
  auto bd = disk_boundary_halfedges(d.complex(), 3);
  for (int v = 0; v < 12; ++v) {
    int k = v / 2 + 1;  // F_k sits at 2(k-1); the arc from F_k to F_{k+1} is A+ for odd k
    CHECK(sign[bd[v]] == (k % 2 ? 1 : -1));
  }
}

TEST_CASE("express is constant on homology classes") {
  SuturedSurface d = standard_disk(4);
  Complex& c = d.mutable_complex();
  c.cone_face(0);
  d.sync_marks();
  CHECK(d.validate().empty());
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    RelativeHomology h = disk_homology(c, 4, ring);
    Chain z = disk_beta(c, 4, 1);
    Chain b3 = disk_beta(c, 4, 3);
    for (int e = 0; e < c.edge_count(); ++e) z[e] += b3[e];
    auto before = h.express(z);
    CHECK(before == Multivector::generator(ring, 3, 0) + Multivector::generator(ring, 3, 1));
    for (int f = 0; f < c.face_count(); ++f) {
      Chain w = z;
      Chain fb = c.face_boundary(f);
      for (int e = 0; e < c.edge_count(); ++e) w[e] += (f + 2) * fb[e];
      CHECK(h.express(w) == before);
      CHECK(h.express(fb).is_zero());
    }
    Chain bad = c.zero_chain();
    c.add_halfedge(bad, c.boundary_out(disk_F(1)));
    CHECK_THROWS_AS(h.express(bad), StructuralError);
  }
}

TEST_CASE("genus one surface with one boundary circle and one suture pair") {
  std::mt19937_64 rng(1);
  SuturedSurface s = random_component(rng, 1, {1}, 4);
  CHECK(s.validate().empty());
  CHECK(s.euler() == -1);
  CHECK(s.L() == 2);
  for (Ring ring : {Ring::Integers, Ring::F2}) CHECK(alpha_plus_homology(s, ring).rank() == 2);
  CHECK(q_rank(s.complex(), s.mask(Mark::AlphaPlus)) == 2);
}

TEST_CASE("rank law on random surfaces agrees with elimination oracles") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    SuturedSurface s = random_sutured_surface(rng);
    REQUIRE(s.validate().empty());
    auto rel = s.mask(Mark::AlphaPlus);
    std::size_t oracle = q_rank(s.complex(), rel);
    CHECK(oracle == static_cast<std::size_t>(s.L()));
    CHECK(f2_rank(s.complex(), rel) == oracle);
    for (Ring ring : {Ring::Integers, Ring::F2}) {
      RelativeHomology h = alpha_plus_homology(s, ring);
      CHECK(h.rank() == s.L());
      for (int i = 0; i < h.rank(); ++i) {
        CHECK(h.is_relative_cycle(h.basis()[i]));
        CHECK(h.express(h.basis()[i]) == Multivector::generator(ring, h.rank(), i));
      }
    }
  }
}

TEST_CASE("homology is invariant under subdivision") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    SuturedSurface s = random_sutured_surface(rng);
    for (Ring ring : {Ring::Integers, Ring::F2}) {
      RelativeHomology h = alpha_plus_homology(s, ring);
      Complex fine = s.complex();
      // Each split keeps h and appends its continuation; track chains on halfedges.
      std::vector<std::vector<std::pair<int, Integer>>> cycles(h.rank());
      for (int i = 0; i < h.rank(); ++i)
        for (int e = 0; e < s.complex().edge_count(); ++e)
          if (h.basis()[i][e] != 0) cycles[i].push_back({s.complex().edge_rep(e), h.basis()[i][e]});
      for (int k = 0; k < 6; ++k) {
        int he = std::uniform_int_distribution<int>(0, fine.halfedge_count() - 1)(rng);
        const int before = fine.halfedge_count();
        const int tw = fine.twin(he);
        fine.split_edge(he);
        // he now ends mid-edge and halfedge `before` continues it; tw likewise with before + 1.
        for (auto& cyc : cycles) {
          std::vector<std::pair<int, Integer>> extra;
          for (auto& [x, coef] : cyc) {
            if (x == he) extra.push_back({before, coef});
            if (x == tw) extra.push_back({before + 1, coef});
          }
          cyc.insert(cyc.end(), extra.begin(), extra.end());
        }
      }
      fine.cone_face(0);
      std::vector<Mark> marks = s.marks();
      marks.resize(fine.vertex_count(), Mark::None);
      SuturedSurface t(fine, marks);
      REQUIRE(t.validate().empty());
      RelativeHomology hf = alpha_plus_homology(t, ring);
      REQUIRE(hf.rank() == h.rank());
      std::vector<Chain> images;
      for (auto& cyc : cycles) {
        Chain z = fine.zero_chain();
        for (auto& [x, coef] : cyc) fine.add_halfedge(z, x, coef);
        images.push_back(z);
      }
      Matrix M = hf.coordinate_matrix(images);
      CHECK(is_unit(ring, determinant(M)));
    }
  }
}

TEST_CASE("subsurfaces") {
  SuturedSurface d = standard_disk(3);
  Complex c = d.complex();
  c.cone_face(0);
  std::vector<int> all(c.face_count());
  for (int f = 0; f < c.face_count(); ++f) all[f] = f;
  Subsurface whole = subsurface(c, {}, all);
  CHECK(whole.complex.vertex_count() == c.vertex_count());
  CHECK(whole.complex.edge_count() == c.edge_count());
  CHECK(whole.complex.euler() == c.euler());
  Subsurface one = subsurface(c, {}, {2});
  CHECK(one.complex.face_count() == 1);
  CHECK(one.complex.vertex_count() == 3);
  CHECK(one.complex.edge_count() == 3);
  CHECK(one.complex.euler() == 1);
  CHECK(one.complex.boundary_circles().size() == 1);
}

TEST_CASE("identifying two sides of a square gives an annulus") {
  Complex sq = Complex::from_vertex_faces(4, {{0, 1, 2, 3}});
  Quotient q = identify_boundary(sq, {{1, 3}});
  CHECK(q.complex.vertex_count() == 2);
  CHECK(q.complex.euler() == 0);
  CHECK(q.complex.boundary_circles().size() == 2);
  CHECK(q.complex.local_violations().empty());
  CHECK_THROWS_AS(identify_boundary(sq, {{1, 1}}), StructuralError);
}

TEST_CASE("intersection form is well defined on homology and unimodular") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    SuturedSurface s = random_sutured_surface(rng);
    const Complex& c = s.complex();
    RelativeHomology hp = alpha_plus_homology(s, Ring::Integers);
    RelativeHomology hm = alpha_minus_homology(s, Ring::Integers);
    REQUIRE(hm.rank() == hp.rank());
    IntersectionForm form(c);
    std::vector<int> corner(c.vertex_count());
    for (int v = 0; v < c.vertex_count(); ++v) {
      int m = static_cast<int>(c.rotation(v).size()) - (c.is_boundary_vertex(v) ? 1 : 0);
      corner[v] = std::uniform_int_distribution<int>(0, m - 1)(rng);
    }
    for (const auto& x : hp.basis())
      for (const auto& y : hm.basis()) CHECK(form(x, y) == form(x, y, corner));
    for (int f = 0; f < c.face_count(); ++f) {
      Chain fb = c.face_boundary(f);
      for (const auto& y : hm.basis()) CHECK(form(fb, y, corner) == 0);
      for (const auto& x : hp.basis()) CHECK(form(x, fb, corner) == 0);
    }
    DualPresentation dual(c, hp, hm);
    CHECK(is_unit(Ring::Integers, determinant(dual.gram())));
  }
}

TEST_CASE("disk arcs intersect exactly when their endpoints interleave") {
  for (int N = 2; N <= 6; ++N) {
    SuturedSurface d = standard_disk(N);
    Complex c = d.complex();
    c.cone_face(0);
    IntersectionForm form(c);
    for (int i = 1; i <= 2 * N; i += 2)
      for (int j = 2; j <= 2 * N; j += 2) {
        // alpha_i .. alpha_{i+2} against alpha_j .. alpha_{j+2} on a circle of 2N points
        auto inside = [&](int p) { return ((p - i) % (2 * N) + 2 * N) % (2 * N) < 2; };
        bool interleave = inside(j) != inside(j + 2) && N > 1;
        Integer v = form(disk_beta(c, N, i), disk_beta(c, N, j));
        CHECK((v % 2 != 0) == interleave);
      }
  }
}
