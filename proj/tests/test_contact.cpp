#include <algorithm>
#include <map>

#include "doctest.h"
#include "sutured/disk.hpp"

using namespace sutured;

namespace {

const char* kFig3 = "1-2,3-12,4-5,6-7,8-11,9-10";

Integer gcd_of_coefficients(const Multivector& x) {
  Integer g = 0;
  for (const auto& [s, c] : x.terms()) g = boost::multiprecision::gcd(g, c < 0 ? Integer(-c) : c);
  return g;
}

std::vector<int> annulus_loop(bool ccw) {
  std::vector<int> out;
  for (auto [r, t] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {3, 2}, {2, 1}, {2, 0}, {3, 0}, {4, 1}})
    out.push_back(annulus_vertex(r, t));
  if (!ccw) std::reverse(out.begin(), out.end());
  return out;
}

DividingSet annulus_with_loop(const SuturedSurface& a, const std::string& base, bool ccw) {
  for (auto [name, paths] : annulus_curve_paths())
    if (name == base) {
      paths.push_back(annulus_loop(ccw));
      return dividing_set_from_paths(a, paths);
    }
  throw StructuralError("unknown annulus set");
}

}  // namespace

TEST_CASE("disk element of the six-chord example") {
  auto cd = ChordDiagram::parse(kFig3);
  auto cc = chord_to_dividing_set(cd);
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    RelativeHomology H = disk_homology(cc.surface.complex(), 6, ring);
    Multivector c = contact_element(cc.surface, cc.K, H);
    CHECK(c.degree() == 3);
    const std::string expected = "b3^b5^b7 + b3^b5^b9";
    if (ring == Ring::F2) {
      CHECK(beta_string(c) == expected);
    } else {
      const std::string s = beta_string(c);
      CHECK((s == expected || s == "-b3^b5^b7 - b3^b5^b9"));
    }
    // Independent product: beta_3 ^ beta_5 ^ (beta_7 + beta_9) built from generators.
    auto g = [&](int i) { return Multivector::generator(ring, 5, (i - 1) / 2); };
    Multivector direct = wedge(wedge(g(3), g(5)), g(7) + g(9));
    CHECK(c.equal_up_to_sign(direct));
  }
}

TEST_CASE("annulus contact elements") {
  SuturedSurface a = standard_annulus();
  const std::map<std::string, std::string> expected{{"K+", "1"},  {"K-", "b1^b2"}, {"K0", "b2"},
                                                    {"K1", "b2"}, {"L0", "b1"},    {"L1", "b1 + b2"}};
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    RelativeHomology H = annulus_homology(a, ring);
    for (auto& [name, k] : annulus_dividing_sets(a)) {
      CAPTURE(name);
      Multivector c = contact_element(a, k, H);
      if (ring == Ring::F2) {
        CHECK(beta_string(c, 1, 1) == expected.at(name));
      } else {
        const std::string s = beta_string(c, 1, 1), neg = beta_string(Multivector(-c), 1, 1);
        CHECK((s == expected.at(name) || neg == expected.at(name)));
      }
    }
  }
}

TEST_CASE("annulus twist family beta_1 + n beta_2") {
  CHECK(beta_string(dehn_twist_family(0), 1, 1) == "b1");
  CHECK(beta_string(dehn_twist_family(1), 1, 1) == "b1 + b2");
  CHECK(beta_string(dehn_twist_family(3), 1, 1) == "b1 + 3*b2");
  CHECK(beta_string(dehn_twist_family(-1), 1, 1) == "b1 - b2");
  // n = -1 agrees with the inverse twist applied to beta_1.
  Matrix T = Matrix::identity(Ring::Integers, 2);
  T.set(1, 0, 1);
  CHECK(induced_map(inverse(T), Multivector::generator(Ring::Integers, 2, 0)) == dehn_twist_family(-1));
}

TEST_CASE("isolating dividing sets have zero contact elements") {
  SuturedSurface a = standard_annulus();
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    RelativeHomology H = annulus_homology(a, ring);
    RelativeHomology Hm = alpha_minus_homology(a, ring);
    DualPresentation dual(a.complex(), H, Hm);
    for (auto [base, ccw] : std::vector<std::pair<std::string, bool>>{{"K+", true}, {"K-", false}}) {
      DividingSet k = annulus_with_loop(a, base, ccw);
      REQUIRE(validate_dividing_set(a, k).empty());
      REQUIRE(!is_non_isolating(a, k));
      CHECK(contact_element(a, k, H).is_zero());
      CHECK(negative_contact_element(a, k, dual).is_zero());
      CHECK(duality_check(contact_element(a, k, H), negative_contact_element(a, k, dual)).holds());
      if (ring == Ring::Integers) CHECK(contact_subset(a, k, H).size() == 1);
    }
  }
}

TEST_CASE("nonzero exactly when non-isolating, primitive over the integers") {
  SuturedSurface a = standard_annulus();
  std::vector<std::pair<SuturedSurface, DividingSet>> corpus;
  for (int N = 1; N <= 5; ++N)
    for (const auto& cd : enumerate_chord_diagrams(N)) {
      auto cc = chord_to_dividing_set(cd);
      corpus.push_back({cc.surface, cc.K});
    }
  for (auto& [name, k] : annulus_dividing_sets(a)) corpus.push_back({a, k});
  corpus.push_back({a, annulus_with_loop(a, "K+", true)});
  corpus.push_back({a, annulus_with_loop(a, "K-", false)});
  for (auto& [s, k] : corpus) {
    const bool iso = !is_non_isolating(s, k);
    RelativeHomology hf = alpha_plus_homology(s, Ring::F2);
    RelativeHomology hz = alpha_plus_homology(s, Ring::Integers);
    Multivector cf = contact_element(s, k, hf), cz = contact_element(s, k, hz);
    CHECK(cf.is_zero() == iso);
    CHECK(cz.is_zero() == iso);
    if (!iso) {
      CHECK(gcd_of_coefficients(cz) == 1);
      CHECK(cz.degree() == regions(s, k).L_K);
    }
  }
}

TEST_CASE("orientation choices") {
  auto cc = chord_to_dividing_set(ChordDiagram::parse(kFig3));
  RelativeHomology H = disk_homology(cc.surface.complex(), 6, Ring::Integers);
  Multivector omega = top_generator<PrimalSpace>(Ring::Integers, 3);
  Multivector c = contact_element(cc.surface, cc.K, H, omega);
  CHECK(contact_element(cc.surface, cc.K, H, Multivector(-omega)) == -c);
  auto subset = contact_subset(cc.surface, cc.K, H);
  REQUIRE(subset.size() == 2);
  CHECK(subset[1] == -subset[0]);
  CHECK_THROWS_AS(contact_element(cc.surface, cc.K, H, Integer(2) * omega), StructuralError);
  CHECK_THROWS_AS(contact_element(cc.surface, cc.K, H, top_generator<PrimalSpace>(Ring::Integers, 2)), StructuralError);

  auto k1 = chord_to_dividing_set(ChordDiagram::parse("1-2,3-4"));
  auto s1 = contact_subset(k1.surface, k1.K, disk_homology(k1.surface.complex(), 2, Ring::Integers));
  REQUIRE(s1.size() == 2);
  CHECK((s1[0] == Multivector::one(Ring::Integers, 1) || s1[1] == Multivector::one(Ring::Integers, 1)));
}

TEST_CASE("negative contact elements") {
  auto k1 = ChordDiagram::parse("1-2,3-4");
  auto cm = disk_negative_contact(k1, Ring::Integers);
  CHECK(cm.degree() == 1);
  CHECK(cm.equal_up_to_sign(DualMultivector::generator(Ring::Integers, 1, 0)));
  CHECK(disk_negative_contact(ChordDiagram::parse("1-4,2-3"), Ring::F2) == DualMultivector::one(Ring::F2, 1));

  SuturedSurface a = standard_annulus();
  for (Ring ring : {Ring::Integers, Ring::F2}) {
    RelativeHomology H = annulus_homology(a, ring);
    DualPresentation dual(a.complex(), H, alpha_minus_homology(a, ring));
    for (auto& [name, k] : annulus_dividing_sets(a)) {
      CAPTURE(name);
      DualMultivector c = negative_contact_element(a, k, dual);
      CHECK(c.degree() == regions(a, k).L_minus_K);
      if (name == "K-") CHECK(c.equal_up_to_sign(DualMultivector::one(ring, 2)));
    }
  }
}

TEST_CASE("duality on every disk diagram up to five chords and on the annulus") {
  for (Ring ring : {Ring::F2, Ring::Integers})
    for (int N = 1; N <= 5; ++N)
      for (const auto& cd : enumerate_chord_diagrams(N)) {
        CAPTURE(cd.to_string());
        auto v = duality_check(disk_contact_general(cd, ring), disk_negative_contact(cd, ring));
        CHECK(v.plus_side);
        CHECK(v.minus_side);
      }
  SuturedSurface a = standard_annulus();
  for (Ring ring : {Ring::F2, Ring::Integers}) {
    RelativeHomology H = annulus_homology(a, ring);
    DualPresentation dual(a.complex(), H, alpha_minus_homology(a, ring));
    for (auto& [name, k] : annulus_dividing_sets(a)) {
      CAPTURE(name);
      CHECK(duality_check(contact_element(a, k, H), negative_contact_element(a, k, dual)).holds());
    }
  }
}

TEST_CASE("region ranks complement each other") {
  SuturedSurface a = standard_annulus();
  RelativeHomology H = alpha_plus_homology(a, Ring::Integers);
  for (auto& [name, k] : annulus_dividing_sets(a)) {
    auto r = regions(a, k);
    int plus = region_homology(a, r.plus_faces, Mark::AlphaPlus, Ring::Integers).homology.rank();
    int minus = region_homology(a, r.minus_faces, Mark::AlphaMinus, Ring::Integers).homology.rank();
    CHECK(plus + minus == H.rank());
  }
}

TEST_CASE("general surfaces use the deterministic bases") {
  SuturedSurface a = standard_annulus();
  SurfaceAlgebra alg = SurfaceAlgebra::make(a, Ring::F2);
  CHECK(alg.rank() == 2);
  CHECK(alg.omega_plus().degree() == 2);
  for (auto& [name, k] : annulus_dividing_sets(a)) CHECK(duality_check(alg, k).holds());
  // beta_{2i+1} meets beta_{2i+2} positively and beta_{2i} negatively.
  for (int N = 2; N <= 6; ++N) {
    SurfaceAlgebra d = disk_algebra(N, Ring::Integers);
    Matrix expected = Matrix::identity(Ring::Integers, N - 1);
    for (int i = 0; i + 1 < N - 1; ++i) expected.set(i + 1, i, -1);
    CHECK(d.dual.gram() == expected);
  }
}
