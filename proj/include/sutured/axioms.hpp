#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sutured/decompose.hpp"
#include "sutured/disk.hpp"
#include "sutured/json_io.hpp"
#include "sutured/random_surface.hpp"

namespace sutured {

// ============================================================================
// Reports
// ============================================================================

/// Outcome of one check over a family of instances. `axiom` is 1..5 for the
/// five axioms and 0 for the decomposition machinery behind uniqueness.
struct AxiomReport {
  int axiom = 0;
  std::string check, instance;
  bool passed = true;
  std::uint64_t seed = 0;
  int cases = 0;
  Json detail = Json::object();
  Json witness = nullptr;  // reason and serialized inputs of the first failure

  void fail(const std::string& reason, Json inputs = nullptr) {
    if (!passed) return;
    passed = false;
    witness = {{"reason", reason}, {"inputs", std::move(inputs)}};
  }

  void absorb(const AxiomReport& o) {
    cases += o.cases;
    if (!o.passed && passed) {
      passed = false;
      witness = o.witness;
    }
  }

  Json to_json() const {
    return {{"axiom", axiom}, {"check", check},   {"instance", instance}, {"passed", passed},
            {"seed", seed},   {"cases", cases},   {"detail", detail},     {"witness", witness}};
  }
};

namespace detail {

/// Equality of algebra elements: exact over F2, up to a global sign over Z.
inline bool same_element(const Multivector& a, const Multivector& b) {
  return a.ring() == Ring::F2 ? a == b : a.equal_up_to_sign(b);
}

inline Matrix negated(const Matrix& m) {
  Matrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, -m(i, j));
  return out;
}

inline bool same_matrix(const Matrix& a, const Matrix& b) {
  return a.ring() == Ring::F2 ? a == b : (a == b || a == negated(b));
}

inline Integer binomial(int n, int k) {
  // Pascal's triangle, independent of the popcount enumeration it checks.
  std::vector<Integer> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) next[j] += row[j], next[j + 1] += row[j];
    row = std::move(next);
  }
  return k < 0 || k > n ? Integer(0) : row[k];
}

/// A cycle on `part` carried into a disjoint union whose halfedges are offset by `hoff`.
inline Chain shifted_chain(const Complex& part, const Complex& whole, const Chain& z, int hoff) {
  Chain out = whole.zero_chain();
  for (int e = 0; e < part.edge_count(); ++e)
    if (z[e] != 0) whole.add_halfedge(out, part.edge_rep(e) + hoff, z[e]);
  return out;
}

}  // namespace detail

/// Matrix of Lambda(m) on basis multivectors, indexed by subsets in mask order.
inline Matrix exterior_matrix(const Matrix& m) {
  const std::size_t rows = std::size_t(1) << m.rows(), cols = std::size_t(1) << m.cols();
  Matrix out(m.ring(), rows, cols);
  for (std::size_t a = 0; a < cols; ++a) {
    Multivector img = induced_map(m, Multivector::monomial(m.ring(), static_cast<int>(m.cols()), IndexSet(a), 1));
    for (const auto& [S, c] : img.terms()) out.set(static_cast<std::size_t>(S), a, c);
  }
  return out;
}

// ============================================================================
// Axiom (1): grading
// ============================================================================

/// H_1(S, alpha+) has rank L = n(F) - chi, and the monomials of degree i
/// (Spin^c grading L - 2i) number binomial(L, i), 2^L in all.
inline AxiomReport check_grading(const SuturedSurface& s, Ring ring, const std::string& instance = "") {
  AxiomReport r{1, "check_grading", instance};
  r.cases = 1;
  const int L = alpha_plus_homology(s, ring).rank();
  if (L != s.L()) {
    r.fail("rank of H_1(S, alpha+) is " + std::to_string(L) + ", expected n(F) - chi = " + std::to_string(s.L()),
           surface_to_json(s));
    return r;
  }
  if (L > 30) throw StructuralError("grading check enumerates 2^L monomials; L is too large");
  std::vector<Integer> count(L + 1, 0);
  for (std::uint64_t S = 0; S < (std::uint64_t(1) << L); ++S) ++count[grade_of(IndexSet(S))];
  Integer total = 0;
  Json ranks = Json::array();
  for (int i = 0; i <= L; ++i) {
    total += count[i];
    ranks.push_back({{"grading", L - 2 * i}, {"rank", count[i].str()}});
    if (count[i] != detail::binomial(L, i)) r.fail("degree " + std::to_string(i) + " rank differs from binomial", surface_to_json(s));
  }
  if (total != Integer(1) << L) r.fail("total rank differs from 2^L", surface_to_json(s));
  r.detail = {{"L", L}, {"ranks", ranks}, {"total", total.str()}};
  return r;
}

// ============================================================================
// Axiom (2): disjoint union
// ============================================================================

/// The block-basis identification H_1(S1) + H_1(S2) -> H_1(S1 u S2) is an
/// isomorphism carrying c(K1) (x) c(K2) to +-c(K1 u K2).
inline AxiomReport check_disjoint_union(const SuturedSurface& s1, const DividingSet& k1, const SuturedSurface& s2,
                                        const DividingSet& k2, Ring ring, const std::string& instance = "") {
  AxiomReport r{2, "check_disjoint_union", instance};
  r.cases = 1;
  auto [u, k] = disjoint_union(std::vector<std::pair<SuturedSurface, DividingSet>>{{s1, k1}, {s2, k2}});
  RelativeHomology h1 = alpha_plus_homology(s1, ring), h2 = alpha_plus_homology(s2, ring), hu = alpha_plus_homology(u, ring);
  std::vector<Chain> first, second;
  for (const auto& z : h1.basis()) first.push_back(detail::shifted_chain(s1.complex(), u.complex(), z, 0));
  for (const auto& z : h2.basis()) second.push_back(detail::shifted_chain(s2.complex(), u.complex(), z, s1.complex().halfedge_count()));
  std::vector<Chain> both = first;
  both.insert(both.end(), second.begin(), second.end());
  auto inputs = [&] { return Json{{"first", dividing_set_to_json(s1, k1)}, {"second", dividing_set_to_json(s2, k2)}}; };
  if (hu.rank() != h1.rank() + h2.rank() || !is_unit(ring, determinant(hu.coordinate_matrix(both)))) {
    r.fail("block basis does not identify the homology of the union", inputs());
    return r;
  }
  Multivector c1 = contact_element(s1, k1, h1), c2 = contact_element(s2, k2, h2);
  Multivector lhs = wedge(induced_map(hu.coordinate_matrix(first), c1), induced_map(hu.coordinate_matrix(second), c2));
  Multivector rhs = contact_element(u, k, hu);
  if (!detail::same_element(lhs, rhs)) r.fail("c(K1) (x) c(K2) = " + lhs.to_string() + " but c(K1 u K2) = " + rhs.to_string(), inputs());
  r.detail = {{"product", lhs.to_string()}, {"union", rhs.to_string()}};
  return r;
}

// ============================================================================
// Axiom (3): trivial closed components
// ============================================================================

/// Index of a region of R(K) that is a disk meeting no boundary, bounded by a
/// closed component of K; -1 if there is none.
inline int contractible_closed_region(const SuturedSurface& s, const DividingSet& k) {
  RegionDecomposition rd = regions(s, k);
  for (std::size_t i = 0; i < rd.component_sign.size(); ++i) {
    if (!rd.component_isolated[i]) continue;
    std::vector<int> faces;
    for (int f = 0; f < s.complex().face_count(); ++f)
      if (rd.component_of_face[f] == static_cast<int>(i)) faces.push_back(f);
    Subsurface sub = subsurface(s.complex(), s.marks(), faces);
    if (sub.complex.euler() == 1 && sub.complex.component_count() == 1) return static_cast<int>(i);
  }
  return -1;
}

/// K with a null-homotopic closed component has c(K) = 0.
inline AxiomReport check_trivial_closed(const SuturedSurface& s, const DividingSet& k, Ring ring, const std::string& instance = "") {
  AxiomReport r{3, "check_trivial_closed", instance};
  r.cases = 1;
  if (!validate_dividing_set(s, k).empty()) {
    r.fail("input is not a valid dividing set", dividing_set_to_json(s, k));
    return r;
  }
  if (contractible_closed_region(s, k) < 0) {
    r.fail("K has no contractible closed component", dividing_set_to_json(s, k));
    return r;
  }
  Multivector c = contact_element(s, k, alpha_plus_homology(s, ring));
  if (!c.is_zero()) r.fail("c(K) = " + c.to_string() + " is nonzero", dividing_set_to_json(s, k));
  return r;
}

// ============================================================================
// Axiom (4): gluing
// ============================================================================

inline AxiomReport check_gluing_axiom(const std::vector<GluingInstance>& corpus, Ring ring, std::uint64_t seed = 0,
                                      const std::string& instance = "") {
  AxiomReport r{4, "check_gluing_axiom", instance};
  r.seed = seed;
  for (const auto& g : corpus) {
    ++r.cases;
    GluedSurface glued = glue(g.host, g.tau);
    if (!check_respect(g.host, glued, alpha_plus_homology(g.host, ring), alpha_plus_homology(glued.result, ring), g.K))
      r.fail("Phi_tau(c(K)) differs from c(K_tau)",
             Json{{"surface", dividing_set_to_json(g.host, g.K)}, {"gluing", gluing_to_json(g.host.complex(), g.tau)}});
  }
  return r;
}

// ============================================================================
// Axiom (5): relabelings
// ============================================================================

/// A combinatorial isomorphism: vertex[v] and halfedge[h] are the images in the target.
struct Relabeling {
  std::vector<int> vertex, halfedge;
};

/// The orientation-preserving isomorphism of connected surfaces sending h to
/// `image`, if one exists; marks must be preserved.
inline std::optional<Relabeling> extend_isomorphism(const SuturedSurface& s, const SuturedSurface& t, int h, int image) {
  const Complex &a = s.complex(), &b = t.complex();
  if (a.vertex_count() != b.vertex_count() || a.halfedge_count() != b.halfedge_count() || a.face_count() != b.face_count())
    return std::nullopt;
  Relabeling r{std::vector<int>(a.vertex_count(), -1), std::vector<int>(a.halfedge_count(), -1)};
  std::vector<int> taken_v(b.vertex_count(), -1), taken_h(b.halfedge_count(), -1);
  std::vector<std::pair<int, int>> stack{{h, image}};
  auto put = [&](int x, int y) {
    if (r.halfedge[x] >= 0) return r.halfedge[x] == y;
    if (taken_h[y] >= 0) return false;
    if ((a.face_of(x) < 0) != (b.face_of(y) < 0)) return false;
    for (auto [v, w] : {std::pair{a.tail(x), b.tail(y)}, std::pair{a.head(x), b.head(y)}}) {
      if (r.vertex[v] >= 0 ? r.vertex[v] != w : taken_v[w] >= 0) return false;
      if (s.mark(v) != t.mark(w)) return false;
      r.vertex[v] = w;
      taken_v[w] = v;
    }
    r.halfedge[x] = y;
    taken_h[y] = x;
    stack.push_back({x, y});
    return true;
  };
  stack.clear();
  if (!put(h, image)) return std::nullopt;
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (!put(a.twin(x), b.twin(y))) return std::nullopt;
    if (a.face_of(x) >= 0 && !put(a.next(x), b.next(y))) return std::nullopt;
  }
  for (int x : r.halfedge)
    if (x < 0) return std::nullopt;
  for (int v : r.vertex)
    if (v < 0) return std::nullopt;
  return r;
}

/// Every mark-preserving orientation-preserving isomorphism between connected surfaces.
inline std::vector<Relabeling> isomorphisms(const SuturedSurface& s, const SuturedSurface& t) {
  std::vector<Relabeling> out;
  const int h = s.complex().face(0).front();
  for (int y = 0; y < t.complex().halfedge_count(); ++y)
    if (auto r = extend_isomorphism(s, t, h, y)) out.push_back(*r);
  return out;
}

inline bool is_isomorphism(const SuturedSurface& s, const SuturedSurface& t, const Relabeling& r) {
  if (static_cast<int>(r.halfedge.size()) != s.complex().halfedge_count() || s.complex().face_count() == 0) return false;
  const int h = s.complex().face(0).front();
  auto full = extend_isomorphism(s, t, h, r.halfedge[h]);
  return full && full->halfedge == r.halfedge && full->vertex == r.vertex;
}

inline DividingSet relabel(const SuturedSurface& s, const SuturedSurface& t, const Relabeling& r, const DividingSet& k) {
  DividingSet out;
  for (int h : k.K) out.K.push_back(r.halfedge[h]);
  out.sign.assign(t.complex().face_count(), 0);
  for (int f = 0; f < s.complex().face_count(); ++f) out.sign[t.complex().face_of(r.halfedge[s.complex().face(f).front()])] = k.sign[f];
  return out;
}

inline Gluing relabel(const Relabeling& r, const Gluing& g) {
  Gluing out;
  for (int h : g.gamma) out.gamma.push_back(r.halfedge[h]);
  for (int h : g.gamma_prime) out.gamma_prime.push_back(r.halfedge[h]);
  return out;
}

/// Matrix of the relabeling on H_1(., alpha+) in the given bases.
inline Matrix relabel_matrix(const SuturedSurface& s, const SuturedSurface& t, const Relabeling& r, const RelativeHomology& hs,
                             const RelativeHomology& ht) {
  std::vector<Chain> images;
  for (const auto& z : hs.basis()) {
    Chain y = t.complex().zero_chain();
    for (int e = 0; e < s.complex().edge_count(); ++e)
      if (z[e] != 0) t.complex().add_halfedge(y, r.halfedge[s.complex().edge_rep(e)], z[e]);
    images.push_back(y);
  }
  return ht.coordinate_matrix(images);
}

/// The relabeling induces an algebra isomorphism sending c(K) to +-c(r K) and
/// commuting up to sign with the gluing morphisms of the given gluings.
inline AxiomReport check_relabel_invariance(const SuturedSurface& s, const RelativeHomology& hs, const SuturedSurface& t,
                                            const RelativeHomology& ht, const Relabeling& r, const std::vector<DividingSet>& ks,
                                            const std::vector<Gluing>& gluings, const std::string& instance = "") {
  if (!is_isomorphism(s, t, r)) throw StructuralError("relabeling is not an isomorphism of sutured surfaces");
  const Ring ring = hs.ring();
  AxiomReport r5{5, "check_relabel_invariance", instance};
  Matrix M = relabel_matrix(s, t, r, hs, ht);
  auto inputs = [&] { return Json{{"source", surface_to_json(s)}, {"target", surface_to_json(t)}, {"halfedge_map", r.halfedge}}; };
  if (!is_unit(ring, determinant(M))) {
    r5.fail("relabeling is not invertible on homology", inputs());
    return r5;
  }
  for (const auto& k : ks) {
    ++r5.cases;
    Multivector lhs = induced_map(M, contact_element(s, k, hs));
    Multivector rhs = contact_element(t, relabel(s, t, r, k), ht);
    if (!detail::same_element(lhs, rhs)) r5.fail("relabeled contact element differs", Json{{"relabeling", inputs()}, {"K", k.K}});
  }
  const Matrix lam = exterior_matrix(M);
  for (const auto& g : gluings) {
    ++r5.cases;
    GluedSurface gs = glue(s, g), gt = glue(t, relabel(r, g));
    int x = -1;
    for (int h = 0; h < s.complex().halfedge_count() && x < 0; ++h)
      if (s.complex().face_of(h) >= 0 && gs.quotient.halfedge_map[h] >= 0) x = h;
    auto rg = extend_isomorphism(gs.result, gt.result, gs.quotient.halfedge_map[x], gt.quotient.halfedge_map[r.halfedge[x]]);
    if (!rg) {
      r5.fail("glued surfaces are not related by the induced relabeling", Json{{"relabeling", inputs()}, {"gluing", gluing_to_json(s.complex(), g)}});
      continue;
    }
    RelativeHomology hgs = alpha_plus_homology(gs.result, ring), hgt = alpha_plus_homology(gt.result, ring);
    Matrix phis = GluingMorphism(s, gs, hs, hgs).matrix(), phit = GluingMorphism(t, gt, ht, hgt).matrix();
    Matrix lhs = exterior_matrix(relabel_matrix(gs.result, gt.result, *rg, hgs, hgt)) * phis;
    if (!detail::same_matrix(lhs, phit * lam))
      r5.fail("relabeling does not commute with the gluing morphism", Json{{"relabeling", inputs()}, {"gluing", gluing_to_json(s.complex(), g)}});
  }
  return r5;
}

// ============================================================================
// Contact-element bases from quadrangulations
// ============================================================================

/// Over F2 the 2^L dividing sets obtained by gluing back the square pieces of a
/// quadrangulation with each choice of square dividing curves form a basis.
inline AxiomReport check_basis_of_contact_elements(const SuturedSurface& s, const std::string& instance = "") {
  AxiomReport r{0, "check_basis_of_contact_elements", instance};
  r.cases = 1;
  Quadrangulation q = quadrangulate(s);
  GluedSurface G = glue(q.pieces, q.tau0);
  const int L = q.squares();
  if (G.result.L() != s.L() || G.result.euler() != s.euler() || L != s.L()) {
    r.fail("quadrangulation does not glue back to a surface of the same type", surface_to_json(s));
    return r;
  }
  RelativeHomology target = alpha_plus_homology(G.result, Ring::F2);
  Matrix B(Ring::F2, std::size_t(1) << L, std::size_t(1) << L);
  for (std::uint64_t choice = 0; choice < (1ull << L); ++choice) {
    DividingSet k = push_dividing_set(G, q.dividing_set(choice));
    if (!validate_dividing_set(G.result, k).empty()) {
      r.fail("a glued square dividing set is invalid", surface_to_json(s));
      return r;
    }
    Multivector c = contact_element(G.result, k, target);
    for (const auto& [S, v] : c.terms()) B.set(static_cast<std::size_t>(S), choice, v);
  }
  const std::size_t rk = rank(B);
  if (rk != B.cols()) r.fail("contact elements span rank " + std::to_string(rk) + " of " + std::to_string(B.cols()), surface_to_json(s));
  r.detail = {{"L", L}, {"squares", L}, {"cut_arcs", q.arcs.size()}, {"rank", rk}};
  return r;
}

// ============================================================================
// Uniqueness hypotheses
// ============================================================================

/// Gluings of one arc alpha -> F -> alpha onto another arc of the same shape.
inline std::vector<Gluing> simple_gluings(const SuturedSurface& s) {
  std::vector<Gluing> out;
  const Complex& c = s.complex();
  for (int u = 0; u < c.vertex_count(); ++u) {
    if (!is_alpha(s.mark(u)) || !c.is_boundary_vertex(u)) continue;
    const int len = detail::marked_steps(s, u, 2);
    if (len <= 0) continue;
    for (int w = 0; w < c.vertex_count(); ++w) {
      if (!is_alpha(s.mark(w)) || !c.is_boundary_vertex(w)) continue;
      try {
        Gluing g = arc_gluing(c, u, w, len);
        if (gluing_violations(s, g).empty()) out.push_back(g);
      } catch (const StructuralError&) {
      }
    }
  }
  return out;
}

/// Simple gluings give invertible morphisms over Z, and the disks with one and
/// two sutures carry the contact elements {1} and {1, beta_1}.
inline AxiomReport check_uniqueness_hypotheses(const std::vector<SuturedSurface>& corpus) {
  AxiomReport r{0, "check_uniqueness_hypotheses"};
  int gluings = 0;
  for (const auto& s : corpus)
    for (const auto& g : simple_gluings(s)) {
      ++gluings, ++r.cases;
      GluedSurface G = glue(s, g);
      Matrix m = GluingMorphism(s, G, alpha_plus_homology(s, Ring::Integers), alpha_plus_homology(G.result, Ring::Integers)).matrix();
      if (m.rows() != m.cols() || !is_unit(Ring::Integers, determinant(m)))
        r.fail("simple gluing morphism is not invertible", Json{{"surface", surface_to_json(s)}, {"gluing", gluing_to_json(s.complex(), g)}});
    }
  for (int N : {1, 2}) {
    ++r.cases;
    std::vector<Multivector> found;
    for (const auto& cd : enumerate_chord_diagrams(N)) {
      ChordComplex cc = chord_to_dividing_set(cd);
      found.push_back(contact_element(cc.surface, cc.K, disk_homology(cc.surface.complex(), N, Ring::Integers)));
    }
    const Multivector one = Multivector::one(Ring::Integers, N - 1);
    std::vector<Multivector> expected{one};
    if (N == 2) expected.push_back(Multivector::monomial(Ring::Integers, 1, IndexSet(1), 1));
    bool ok = found.size() == expected.size() && alpha_plus_homology(standard_disk(N), Ring::Integers).rank() == N - 1;
    for (const auto& e : expected) {
      bool hit = false;
      for (const auto& f : found) hit = hit || f.equal_up_to_sign(e);
      ok = ok && hit;
    }
    if (!ok) r.fail("contact elements of (D^2, F(" + std::to_string(N) + ")) differ from the expected set", surface_to_json(standard_disk(N)));
  }
  r.detail = {{"simple_gluings", gluings}};
  return r;
}

// ============================================================================
// Excess intersections on disks
// ============================================================================

/// Excess of a chord diagram against the nested skeleton of (D^2, F(N)): arc k
/// (k = 1..N-2) runs from alpha_2N to alpha_{2k+1} and separates sutures
/// 1..2k+1 from the rest. Both sides are odd, so each arc meets K at least once.
inline int excess_intersections(const ChordDiagram& cd) {
  int e = 0;
  for (int k = 1; k <= cd.N - 2; ++k) {
    const int m = 2 * k + 1;
    int crossings = 0;
    for (auto [a, b] : cd.pairs()) crossings += (a <= m) != (b <= m);
    e += crossings - 1;
  }
  return e;
}

/// Every diagram with positive excess lies in a bypass triple whose other two
/// members have strictly smaller excess, and the 2^L diagrams of zero excess
/// have contact elements forming an F2 basis.
inline AxiomReport check_excess_reduction(int max_n) {
  AxiomReport r{0, "check_excess_reduction"};
  Json per_n = Json::array();
  for (int N = 1; N <= max_n; ++N) {
    std::vector<Multivector> minimal;
    int reduced = 0;
    for (const auto& cd : enumerate_chord_diagrams(N)) {
      ++r.cases;
      const int e = excess_intersections(cd);
      if (e == 0) {
        minimal.push_back(disk_contact_element(cd, Ring::F2));
        continue;
      }
      bool found = false;
      for (const auto& site : bypass_sites(cd)) {
        auto triple = bypass_triple_at(cd, site);
        if (excess_intersections(triple[1]) >= e || excess_intersections(triple[2]) >= e) continue;
        std::vector<Multivector> c;
        for (const auto& d : triple) c.push_back(disk_contact_element(d, Ring::F2));
        if (bypass_relation_holds(c)) {
          found = true;
          break;
        }
      }
      reduced += found;
      if (!found) r.fail("no excess-reducing bypass", Json{{"diagram", cd.to_string()}, {"excess", e}});
    }
    const std::size_t dim = std::size_t(1) << (N - 1);
    Matrix B(Ring::F2, dim, minimal.size());
    for (std::size_t j = 0; j < minimal.size(); ++j)
      for (const auto& [S, v] : minimal[j].terms()) B.set(static_cast<std::size_t>(S), j, v);
    if (minimal.size() != dim || rank(B) != dim)
      r.fail("zero-excess contact elements do not form a basis", Json{{"N", N}, {"count", minimal.size()}});
    per_n.push_back({{"N", N}, {"zero_excess", minimal.size()}, {"reduced", reduced}});
  }
  r.detail = {{"per_n", per_n}};
  return r;
}

// ============================================================================
// Corpus and suite
// ============================================================================

namespace detail {

/// Square grid disk with N = 2, cut by the chords 1-2 and 3-4, with a
/// counterclockwise loop around the center bounding a positive disk.
inline std::pair<SuturedSurface, DividingSet> grid_disk_with_loop() {
  const int W = 7;
  auto v = [&](int x, int y) { return y * W + x; };
  std::vector<std::vector<int>> faces;
  for (int y = 0; y + 1 < W; ++y)
    for (int x = 0; x + 1 < W; ++x) {
      faces.push_back({v(x, y), v(x + 1, y), v(x + 1, y + 1)});
      faces.push_back({v(x, y), v(x + 1, y + 1), v(x, y + 1)});
    }
  std::vector<Mark> marks(W * W, Mark::None);
  marks[v(1, 0)] = Mark::FPlus;
  marks[v(4, 0)] = Mark::AlphaPlus;
  marks[v(6, 1)] = Mark::FMinus;
  marks[v(6, 4)] = Mark::AlphaMinus;
  marks[v(5, 6)] = Mark::FPlus;
  marks[v(2, 6)] = Mark::AlphaPlus;
  marks[v(0, 5)] = Mark::FMinus;
  marks[v(0, 2)] = Mark::AlphaMinus;
  SuturedSurface s(Complex::from_vertex_faces(W * W, faces), marks);
  std::vector<std::vector<int>> paths{
      {v(6, 1), v(5, 1), v(4, 1), v(3, 1), v(2, 1), v(1, 1), v(1, 0)},
      {v(0, 5), v(1, 5), v(2, 5), v(3, 5), v(4, 5), v(5, 5), v(5, 6)},
      {v(2, 2), v(3, 2), v(4, 3), v(4, 4), v(3, 4), v(2, 3), v(2, 2)},
  };
  return {s, dividing_set_from_paths(s, paths)};
}

/// K+ with a loop around an interior vertex bounding a positive disk, or K-
/// with the reversed loop bounding a negative one.
inline std::pair<SuturedSurface, DividingSet> annulus_with_loop(bool plus) {
  SuturedSurface a = standard_annulus();
  std::vector<int> loop;
  for (auto [r, t] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {3, 2}, {2, 1}, {2, 0}, {3, 0}, {4, 1}})
    loop.push_back(annulus_vertex(r, t));
  if (!plus) std::reverse(loop.begin(), loop.end());
  for (auto [name, paths] : annulus_curve_paths())
    if (name == (plus ? "K+" : "K-")) {
      paths.push_back(loop);
      return {a, dividing_set_from_paths(a, paths)};
    }
  throw ConsistencyError("annulus dividing set missing");
}

inline SuturedSurface genus_one_surface(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_component(rng, 1, {1}, 4);
}

inline Relabeling disk_rotation(const ChordComplex& from, const ChordComplex& to) {
  // Boundary halfedge 2v runs v -> v+1; shifting v by 4 moves F_k to F_{k+2}.
  const int V = from.surface.complex().vertex_count();
  auto r = extend_isomorphism(from.surface, to.surface, 0, 2 * (4 % V));
  if (!r) throw ConsistencyError("rotated chord complexes are not isomorphic");
  return *r;
}

}  // namespace detail

struct AxiomSuiteOptions {
  std::uint64_t seed = 1;
  int max_n = 5;
  int random_gluings = 200;
};

inline AxiomReport grading_reports(const AxiomSuiteOptions& o) {
  AxiomReport r{1, "check_grading", "disks, annulus, genus one, disjoint union; both rings", true, o.seed};
  Json per = Json::array();
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    std::vector<std::pair<std::string, SuturedSurface>> corpus;
    for (int N = 1; N <= std::max(o.max_n, 6); ++N) corpus.push_back({"disk F(" + std::to_string(N) + ")", standard_disk(N)});
    corpus.push_back({"annulus", standard_annulus()});
    corpus.push_back({"genus one", detail::genus_one_surface(o.seed)});
    corpus.push_back({"disk F(2) + annulus", disjoint_union({standard_disk(2), standard_annulus()})});
    for (const auto& [name, s] : corpus) {
      AxiomReport one = check_grading(s, ring, name);
      r.absorb(one);
      if (ring == Ring::Integers) per.push_back({{"instance", name}, {"L", one.detail.value("L", -1)}, {"total", one.detail.value("total", "")}});
    }
  }
  r.detail = {{"instances", per}};
  return r;
}

inline AxiomReport disjoint_union_reports(const AxiomSuiteOptions& o) {
  AxiomReport r{2, "check_disjoint_union", "random disk pairs, annulus with disks, isolating factors; both rings", true, o.seed};
  std::mt19937_64 rng(o.seed ^ 0x2u);
  const int n = std::max(1, std::min(o.max_n, 4));
  auto pick = [&](int N) {
    auto ds = enumerate_chord_diagrams(N);
    return chord_to_dividing_set(ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)]);
  };
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    for (int i = 0; i < 40; ++i) {
      ChordComplex a = pick(std::uniform_int_distribution<int>(1, n)(rng)), b = pick(std::uniform_int_distribution<int>(1, n)(rng));
      r.absorb(check_disjoint_union(a.surface, a.K, b.surface, b.K, ring));
    }
    SuturedSurface ann = standard_annulus();
    for (const auto& [name, k] : annulus_dividing_sets(ann))
      for (const auto& cd : enumerate_chord_diagrams(2)) {
        ChordComplex d = chord_to_dividing_set(cd);
        r.absorb(check_disjoint_union(ann, k, d.surface, d.K, ring));
      }
    auto [la, lk] = detail::annulus_with_loop(true);
    ChordComplex d = chord_to_dividing_set(enumerate_chord_diagrams(3).front());
    AxiomReport iso = check_disjoint_union(la, lk, d.surface, d.K, ring);
    if (iso.passed && iso.detail.value("union", "") != "0") iso.fail("isolating factor should give 0 on both sides");
    r.absorb(iso);
  }
  return r;
}

inline AxiomReport trivial_closed_reports(const AxiomSuiteOptions& o) {
  AxiomReport r{3, "check_trivial_closed", "grid disk with a loop, annulus K+ and K- with loops; both rings", true, o.seed};
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    auto [gd, gk] = detail::grid_disk_with_loop();
    r.absorb(check_trivial_closed(gd, gk, ring, "grid disk"));
    for (bool plus : {true, false}) {
      auto [a, k] = detail::annulus_with_loop(plus);
      r.absorb(check_trivial_closed(a, k, ring, plus ? "annulus K+" : "annulus K-"));
    }
  }
  return r;
}

inline AxiomReport gluing_reports(const AxiomSuiteOptions& o) {
  AxiomReport r{4, "check_gluing_axiom", std::to_string(o.random_gluings) + " random gluings per ring", true, o.seed};
  std::mt19937_64 rng(o.seed ^ 0x4u);
  std::vector<GluingInstance> corpus;
  for (int i = 0; i < o.random_gluings; ++i) corpus.push_back(random_gluing_instance(rng, std::max(1, std::min(o.max_n, 4))));
  for (Ring ring : {Ring::F2, Ring::Integers}) r.absorb(check_gluing_axiom(corpus, ring, o.seed));
  return r;
}

inline AxiomReport relabel_reports(const AxiomSuiteOptions& o) {
  AxiomReport r{5, "check_relabel_invariance", "disk rotations, annulus identity and reflection", true, o.seed};
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    for (int N = 1; N <= o.max_n; ++N)
      for (const auto& cd : enumerate_chord_diagrams(N)) {
        ChordComplex s = chord_to_dividing_set(cd), t = chord_to_dividing_set(rotate(cd, 2));
        Relabeling rot = detail::disk_rotation(s, t);
        RelativeHomology hs = disk_homology(s.surface.complex(), N, ring), ht = disk_homology(t.surface.complex(), N, ring);
        AxiomReport one = check_relabel_invariance(s.surface, hs, t.surface, ht, rot, {s.K}, {}, cd.to_string());
        // Oracle: beta_i goes to beta_{i+2}, and the closed-form elements rotate.
        std::vector<Chain> shifted;
        for (int i = 1; i <= 2 * N - 3; i += 2) shifted.push_back(disk_beta(t.surface.complex(), N, i + 2));
        Matrix M = relabel_matrix(s.surface, t.surface, rot, hs, ht);
        if (!(M == ht.coordinate_matrix(shifted))) one.fail("rotation does not shift beta_i to beta_{i+2}", Json{{"diagram", cd.to_string()}});
        if (!detail::same_element(induced_map(M, disk_contact_element(cd, ring)), disk_contact_element(rotate(cd, 2), ring)))
          one.fail("contact table is not permuted by the rotation", Json{{"diagram", cd.to_string()}});
        std::vector<int> ks = relabel(s.surface, t.surface, rot, s.K).K, kt = t.K.K;
        std::sort(ks.begin(), ks.end());
        std::sort(kt.begin(), kt.end());
        if (ks != kt) one.fail("rotated chords differ from the chords of the rotated diagram", Json{{"diagram", cd.to_string()}});
        r.absorb(one);
      }
    SuturedSurface a = standard_annulus();
    RelativeHomology ha = annulus_homology(a, ring);
    std::vector<DividingSet> ks;
    for (const auto& nk : annulus_dividing_sets(a)) ks.push_back(nk.second);
    std::vector<Gluing> gl = simple_gluings(a);
    const Complex& c = a.complex();
    bool identity_seen = false, reflection_seen = false;
    for (const auto& rel : isomorphisms(a, a)) {
      bool identity = true;
      for (int h = 0; h < c.halfedge_count(); ++h) identity = identity && rel.halfedge[h] == h;
      bool swaps = c.circle_of(rel.halfedge[c.boundary_circles()[0].front()]) != 0;
      if (identity) {
        identity_seen = true;
        if (!(relabel_matrix(a, a, rel, ha, ha) == Matrix::identity(ring, ha.rank()))) r.fail("identity relabeling is not the identity map");
        r.absorb(check_relabel_invariance(a, ha, a, ha, rel, ks, gl, "annulus identity"));
      } else if (swaps && !reflection_seen) {
        reflection_seen = true;
        r.absorb(check_relabel_invariance(a, ha, a, ha, rel, ks, gl, "annulus reflection"));
      }
    }
    if (!identity_seen || !reflection_seen) r.fail("annulus lacks the identity or the circle-swapping symmetry");
  }
  return r;
}

inline AxiomReport basis_reports(const AxiomSuiteOptions& o) {
  AxiomReport r{0, "check_basis_of_contact_elements", "disks, annulus, genus one, disjoint union", true, o.seed};
  std::vector<std::pair<std::string, SuturedSurface>> corpus;
  for (int N = 2; N <= o.max_n; ++N) corpus.push_back({"disk F(" + std::to_string(N) + ")", standard_disk(N)});
  corpus.push_back({"annulus", standard_annulus()});
  corpus.push_back({"genus one", detail::genus_one_surface(o.seed)});
  corpus.push_back({"disk F(2) + disk F(3)", disjoint_union({standard_disk(2), standard_disk(3)})});
  Json per = Json::array();
  for (const auto& [name, s] : corpus) {
    AxiomReport one = check_basis_of_contact_elements(s, name);
    per.push_back({{"instance", name}, {"detail", one.detail}});
    r.absorb(one);
  }
  r.detail = {{"instances", per}};
  return r;
}

inline AxiomReport uniqueness_reports(const AxiomSuiteOptions& o) {
  std::vector<SuturedSurface> corpus;
  for (int N = 2; N <= std::min(o.max_n, 4); ++N) corpus.push_back(standard_disk(N));
  corpus.push_back(standard_annulus());
  AxiomReport r = check_uniqueness_hypotheses(corpus);
  r.instance = "simple gluings on disks and the annulus; disks with one and two sutures";
  r.seed = o.seed;
  return r;
}

inline AxiomReport excess_reports(const AxiomSuiteOptions& o) {
  AxiomReport r = check_excess_reduction(o.max_n);
  r.instance = "disks N <= " + std::to_string(o.max_n);
  r.seed = o.seed;
  return r;
}

/// Runs every check concurrently; reports come back in a fixed order.
inline std::vector<AxiomReport> run_axiom_suite(const AxiomSuiteOptions& o) {
  if (o.max_n < 1) throw StructuralError("max-n must be at least 1");
  using Job = AxiomReport (*)(const AxiomSuiteOptions&);
  const std::vector<Job> jobs{grading_reports,  disjoint_union_reports, trivial_closed_reports, gluing_reports,
                              relabel_reports, basis_reports,          uniqueness_reports,     excess_reports};
  std::vector<std::future<AxiomReport>> running;
  for (Job j : jobs) running.push_back(std::async(std::launch::async, j, std::cref(o)));
  std::vector<AxiomReport> out;
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace sutured
