// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "sutured/axioms.hpp"
#include "sutured/cli.hpp"

using namespace sutured;

namespace {

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<std::string()> run;  // empty string on success, else the first failure
};

std::string beta_text(const Multivector& x, const std::vector<std::string>& labels) { return cli::format_element(x, labels); }

/// Exact over F2, up to a global sign over Z.
bool matches_text(const Multivector& x, const std::vector<std::string>& labels, const std::string& expected) {
  if (x.ring() == Ring::F2) return beta_text(x, labels) == expected;
  return beta_text(x, labels) == expected || beta_text(-x, labels) == expected;
}

std::string worked_examples() {
  // (D^2, F(6)) with the six-chord diagram.
  const ChordDiagram six = ChordDiagram::parse("1-2,3-12,4-5,6-7,8-11,9-10");
  for (Ring ring : {Ring::F2, Ring::Integers}) {
    if (!matches_text(disk_contact_element(six, ring), cli::disk_labels(6), "b3^b5^b7 + b3^b5^b9"))
      return "closed-form disk element differs from b3^b5^(b7 + b9)";
    if (!matches_text(disk_contact_general(six, ring), cli::disk_labels(6), "b3^b5^b7 + b3^b5^b9"))
      return "region pipeline differs from b3^b5^(b7 + b9)";
  }
  // The annulus table.
  const std::map<std::string, std::string> table{{"K+", "1"},  {"K-", "b1^b2"}, {"K0", "b2"},
                                                 {"K1", "b2"}, {"L0", "b1"},    {"L1", "b1 + b2"}};
  SuturedSurface a = standard_annulus();
  for (Ring ring : {Ring::F2, Ring::Integers}) {
    RelativeHomology H = annulus_homology(a, ring);
    for (const auto& [name, k] : annulus_dividing_sets(a))
      if (!matches_text(contact_element(a, k, H), {"b1", "b2"}, table.at(name))) return "annulus element of " + name + " differs";
  }
  // iota_eta(g1 ^ g2 ^ g3) = b1 ^ b2 with eta = g2* + g3*, b1 = g1, b2 = g2 - g3.
  for (Ring ring : {Ring::F2, Ring::Integers}) {
    Multivector got = interior(DualMultivector::from_coordinates(ring, {0, 1, 1}), top_generator<PrimalSpace>(ring, 3));
    auto g = [&](int i) { return Multivector::generator(ring, 3, i); };
    if (!(got == wedge(g(0), g(1) - g(2)))) return "iota_eta(g1^g2^g3) is not g1^(g2 - g3)";
    // The same computation through the gluing of the disk 1-8,2-3,4-5,6-7 into the annulus.
    ChordComplex cc = chord_to_dividing_set(ChordDiagram::parse("1-8,2-3,4-5,6-7"));
    GluedSurface G = glue(cc.surface, arc_gluing(cc.surface.complex(), disk_alpha(4, 2), disk_alpha(4, 8), 4));
    RelativeHomology src = disk_homology(cc.surface.complex(), 4, ring), tgt = alpha_plus_homology(G.result, ring);
    GluingMorphism phi(cc.surface, G, src, tgt);
    if (phi.eta().degree() != 1) return "annulus gluing eta is not of degree one";
    if (!phi(top_generator<PrimalSpace>(ring, 3)).equal_up_to_sign(top_generator<PrimalSpace>(ring, 2)))
      return "gluing does not send g1^g2^g3 to +-b1^b2";
  }
  return "";
}

std::string rank_law() {
  std::mt19937_64 rng(20240101);
  for (int i = 0; i < 220; ++i) {
    SuturedSurface s = random_sutured_surface(rng);
    const Complex& c = s.complex();
    const int b = static_cast<int>(c.boundary_circles().size());
    const int genus2 = 2 * c.component_count() - s.euler() - b;  // twice the total genus
    if (genus2 > 4 || b > 3 || s.n_F() > 8) return "generator left its bounds at draw " + std::to_string(i);
    for (Ring ring : {Ring::Integers, Ring::F2}) {
      const int expected = s.n_F() - s.euler();
      if (alpha_plus_homology(s, ring).rank() != expected) return "rank differs from n(F) - chi at draw " + std::to_string(i);
      // Rank-nullity oracle: dim ker of d1 off alpha+, minus rank of d2.
      std::vector<int> rows;
      for (int v = 0; v < c.vertex_count(); ++v)
        if (s.mark(v) != Mark::AlphaPlus) rows.push_back(v);
      Matrix d1 = c.boundary1(ring), cut(ring, rows.size(), c.edge_count());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (int e = 0; e < c.edge_count(); ++e) cut.set(r, e, d1(rows[r], e));
      const int h1 = c.edge_count() - static_cast<int>(rank(cut)) - static_cast<int>(rank(c.boundary2(ring)));
      if (h1 != expected) return "rank-nullity count differs at draw " + std::to_string(i);
    }
  }
  return "";
}

std::string catalan() {
  const std::vector<int> listed{1, 2, 5, 14, 42, 132, 429, 1430};
  for (int N = 1; N <= 8; ++N) {
    Integer num = 1, den = 1;
    for (int i = 1; i <= N; ++i) num *= N + i, den *= i;
    const Integer formula = num / den / (N + 1);
    const auto size = enumerate_chord_diagrams(N).size();
    if (formula != listed[N - 1] || Integer(size) != formula) return "count differs at N = " + std::to_string(N);
  }
  return "";
}

std::string injectivity() {
  for (int N = 1; N <= 6; ++N) {
    std::set<std::string> seen;
    auto ds = enumerate_chord_diagrams(N);
    for (const auto& cd : ds) seen.insert(disk_contact_element(cd, Ring::F2).to_string());
    if (seen.size() != ds.size()) return "two diagrams share an element at N = " + std::to_string(N);
  }
  return "";
}

std::string bypass() {
  int triples = 0;
  for (int N = 1; N <= 5; ++N)
    for (const auto& cd : enumerate_chord_diagrams(N))
      for (const auto& site : bypass_sites(cd)) {
        auto t = bypass_triple_at(cd, site);
        ++triples;
        for (Ring ring : {Ring::F2, Ring::Integers}) {
          std::vector<Multivector> c;
          for (const auto& d : t) c.push_back(disk_contact_element(d, ring));
          if (ring == Ring::F2 && !(c[0] + c[1] + c[2]).is_zero()) return "F2 sum is nonzero at " + cd.to_string();
          bool some = false;
          for (int e1 : {1, -1})
            for (int e2 : {1, -1})
              for (int e3 : {1, -1}) some = some || (Integer(e1) * c[0] + Integer(e2) * c[1] + Integer(e3) * c[2]).is_zero();
          if (ring == Ring::Integers && !some) return "no signs annihilate the sum at " + cd.to_string();
        }
      }
  if (triples == 0) return "no bypass triples constructed";
  return "";
}

std::string gluing_respect() {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    GluingInstance g = random_gluing_instance(rng, 4);
    GluedSurface G = glue(g.host, g.tau);
    RelativeHomology src = alpha_plus_homology(g.host, Ring::F2), tgt = alpha_plus_homology(G.result, Ring::F2);
    Multivector lhs = GluingMorphism(g.host, G, src, tgt)(contact_element(g.host, g.K, src));
    Multivector rhs = contact_element(G.result, push_dividing_set(G, g.K), tgt);
    if (!(lhs == rhs)) return "instance " + std::to_string(i) + " of seed 20240601";
  }
  return "";
}

std::string matchability() {
  for (int N = 1; N <= 6; ++N) {
    auto ds = enumerate_chord_diagrams(N);
    std::vector<Multivector> c;
    for (const auto& d : ds) c.push_back(disk_contact_element(d, Ring::Integers));
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < ds.size(); ++j)
        if (matchable(ds[i], ds[j]) != matchable_via_wedge(c[i], c[j]))
          return "verdicts differ on " + ds[i].to_string() + " and " + ds[j].to_string();
  }
  return "";
}

std::string duality() {
  for (int N = 1; N <= 5; ++N)
    for (const auto& cd : enumerate_chord_diagrams(N))
      if (!duality_check(disk_contact_general(cd, Ring::F2), disk_negative_contact(cd, Ring::F2)).holds())
        return "disk diagram " + cd.to_string();
  SuturedSurface a = standard_annulus();
  RelativeHomology H = annulus_homology(a, Ring::F2);
  DualPresentation dual(a.complex(), H, alpha_minus_homology(a, Ring::F2));
  for (const auto& [name, k] : annulus_dividing_sets(a))
    if (!duality_check(contact_element(a, k, H), negative_contact_element(a, k, dual)).holds()) return "annulus set " + name;
  return "";
}

std::string solid_torus() {
  int checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (int q = 1; q <= 3; ++q) {
      if (n * q > 6) continue;
      SurfaceAlgebra disk = disk_algebra(n * q, Ring::F2);
      auto ds = enumerate_chord_diagrams(n * q);
      for (int p = -3; p <= 3; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const TorusParameters t{n, p, q};
        for (const auto& cd : ds) {
          ++checked;
          if (solid_torus_tight(cd, t, disk) != solid_torus_oracle(cd, t))
            return cd.to_string() + " with n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
        }
      }
    }
  if (checked == 0) return "no instances";
  return "";
}

std::string axiom_suite() {
  AxiomSuiteOptions o;
  o.seed = 20240815;
  o.max_n = 5;
  o.random_gluings = 200;
  std::set<std::string> required{"check_grading", "check_disjoint_union", "check_trivial_closed", "check_gluing_axiom",
                                 "check_relabel_invariance", "check_basis_of_contact_elements", "check_uniqueness_hypotheses",
                                 "check_excess_reduction"};
  for (const auto& r : run_axiom_suite(o)) {
    if (!r.passed) return r.check + ": " + r.witness.value("reason", std::string("failed"));
    if (r.cases == 0) return r.check + " ran no cases";
    required.erase(r.check);
  }
  if (!required.empty()) return "missing " + *required.begin();
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked examples in the beta basis", 1.0, worked_examples},
      {2, "rank law on 220 random surfaces, both rings", 10.0, rank_law},
      {3, "Catalan counts for N = 1..8", 5.0, catalan},
      {4, "injectivity over F2 for N <= 6", 30.0, injectivity},
      {5, "bypass relation for N <= 5", 60.0, bypass},
      {6, "gluing respects contact elements on 200 instances over F2", 120.0, gluing_respect},
      {7, "matchability oracle equals wedge criterion for N <= 6", 60.0, matchability},
      {8, "duality on disks N <= 5 and the annulus over F2", 30.0, duality},
      {9, "solid-torus pairing equals the connectedness oracle", 60.0, solid_torus},
      {10, "TQFT axiom suite on the seeded corpus", 120.0, axiom_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs >= c.limit_seconds) why = "over the time limit";
    const bool pass = why.empty();
    failures += !pass;
    std::printf("%s [%d] %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_seconds,
                pass ? "" : ": ", why.c_str());
  }
  return failures == 0 ? 0 : 1;
}
