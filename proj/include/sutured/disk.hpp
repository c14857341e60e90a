#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "contact.hpp"

namespace sutured {

// Disk basis conventions: degree-1 index k of V(D^2, F(N)) is beta_{2k+1}; index k of
// the dual side is the class dual to beta_{2k+1}, realized by the even arcs.

/// Class in H_1(D^2, alpha+) of an arc from alpha_a to alpha_m (a, m odd).
/// On a disk a relative class is determined by its boundary alpha_m - alpha_a.
inline Multivector disk_arc_class(int N, int a, int m, Ring ring) {
  Multivector x(ring, N - 1);
  if (a < m)
    for (int i = a; i < m; i += 2) x.add_term(IndexSet(1) << ((i - 1) / 2), 1);
  else
    for (int i = m; i < a; i += 2) x.add_term(IndexSet(1) << ((i - 1) / 2), -1);
  return x;
}

/// Sorted odd alpha indices of each positive region, regions ordered by smallest index.
inline std::vector<std::vector<int>> positive_regions(const ChordDiagram& cd) {
  const int N = cd.N;
  // Region of alpha_i: walk from alpha_i forward to F_{i+1}, cross its chord to F_m
  // and continue with alpha_m; the orbit lists the alphas of one region.
  std::vector<int> seen(2 * N + 1, 0);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= 2 * N; i += 2) {
    if (seen[i]) continue;
    std::vector<int> reg;
    for (int a = i; !seen[a];) {
      seen[a] = 1;
      reg.push_back(a);
      int f = a % (2 * N) + 1;  // F_{a+1}
      a = cd.partner[f];        // alpha_m sits just after F_m
    }
    std::sort(reg.begin(), reg.end());
    out.push_back(reg);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Contact element of a chord diagram: the wedge over positive regions of the
/// classes of consecutive arcs alpha_{a_j} -> alpha_{a_{j+1}}.
inline Multivector disk_contact_element(const ChordDiagram& cd, Ring ring) {
  Multivector c = Multivector::one(ring, cd.N - 1);
  for (const auto& reg : positive_regions(cd))
    for (std::size_t j = 0; j + 1 < reg.size(); ++j) c = wedge(c, disk_arc_class(cd.N, reg[j], reg[j + 1], ring));
  return c;
}

/// Same element through the general pipeline on the chord complex.
inline Multivector disk_contact_general(const ChordDiagram& cd, Ring ring) {
  ChordComplex cc = chord_to_dividing_set(cd);
  RelativeHomology H = disk_homology(cc.surface.complex(), cd.N, ring);
  return contact_element(cc.surface, cc.K, H);
}

/// Dual presentation of the standard disk with odd and even beta bases.
inline SurfaceAlgebra disk_algebra(int N, Ring ring) {
  SuturedSurface d = standard_disk(N);
  return SurfaceAlgebra::make(d, ring, disk_odd_betas(d.complex(), N), disk_even_betas(d.complex(), N));
}

/// Negative contact element of a chord diagram in the dual basis.
inline DualMultivector disk_negative_contact(const ChordDiagram& cd, Ring ring) {
  ChordComplex cc = chord_to_dividing_set(cd);
  const Complex& c = cc.surface.complex();
  RelativeHomology p = disk_homology(c, cd.N, ring), m = disk_minus_homology(c, cd.N, ring);
  DualPresentation dual(c, p, m);
  return negative_contact_element(cc.surface, cc.K, dual);
}

// ============================================================================
// Text forms
// ============================================================================

/// Expanded beta notation, e.g. "b3^b5^b7 + b3^b5^b9"; index k is printed as
/// b_{stride k + offset}. Disks use stride 2 offset 1 (even arcs: offset 2), the
/// annulus stride 1 offset 1.
template <class S>
std::string beta_string(const BasicMultivector<S>& x, int stride = 2, int offset = 1) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (IndexSet s : x.ordered_sets()) {
    Integer c = x.coefficient(s);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer a = c < 0 ? Integer(-c) : c;
    if (s == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    auto idx = indices_of(s);
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "^" : "") << "b" << (stride * idx[k] + offset);
  }
  return os.str();
}

// ============================================================================
// Matchability
// ============================================================================

/// Number of components of the closed curve formed by two chord diagrams on the
/// two hemispheres of S^2, suture i of one glued to suture i of the other.
inline int union_components(const ChordDiagram& a, const ChordDiagram& b) {
  if (a.N != b.N) throw StructuralError("chord diagrams differ in N");
  const int P = 2 * a.N;
  std::vector<char> seen(P + 1, 0);
  int comps = 0;
  for (int s = 1; s <= P; ++s) {
    if (seen[s]) continue;
    ++comps;
    for (int x = s; !seen[x];) {
      seen[x] = 1;
      int y = a.partner[x];
      seen[y] = 1;
      x = b.partner[y];
    }
  }
  return comps;
}

inline bool matchable(const ChordDiagram& a, const ChordDiagram& b) { return union_components(a, b) == 1; }

inline bool matchable_via_wedge(const Multivector& ca, const Multivector& cb) {
  auto w = wedge(ca, cb);
  auto top = top_generator<PrimalSpace>(ca.ring(), ca.rank());
  return ca.ring() == Ring::F2 ? w == top : w.equal_up_to_sign(top);
}

inline bool matchable_via_wedge(const ChordDiagram& a, const ChordDiagram& b, Ring ring) {
  if (a.N != b.N) throw StructuralError("chord diagrams differ in N");
  return matchable_via_wedge(disk_contact_element(a, ring), disk_contact_element(b, ring));
}

// ============================================================================
// Bypass triples
// ============================================================================

/// Three chords c1, c2, c3 with c2 separating c1 from c3 and consecutive chords
/// facing a common region. In the frame starting at `base` their endpoints read
/// a1 < a2 < a3 < b3 < b2 < b1.
struct BypassSite {
  int base = 0;  // rotation of labels: position p in the frame is suture ((p - 1 + base) mod 2N) + 1
  int a1 = 0, a2 = 0, a3 = 0, b3 = 0, b2 = 0, b1 = 0;  // frame positions

  friend bool operator<(const BypassSite& x, const BypassSite& y) {
    return std::tie(x.base, x.a1, x.a2, x.a3) < std::tie(y.base, y.a1, y.a2, y.a3);
  }
};

namespace detail {

inline int frame_to_label(int N, int base, int p) { return (p - 1 + base) % (2 * N) + 1; }
inline int label_to_frame(int N, int base, int x) { return ((x - 1 - base) % (2 * N) + 2 * N) % (2 * N) + 1; }

inline bool faces_common_region(const ChordDiagram& cd, int base, int outer_a, int inner_a, int inner_b, int outer_b) {
  // No chord runs from (outer_a, inner_a) to (inner_b, outer_b).
  const int N = cd.N;
  for (int p = outer_a + 1; p < inner_a; ++p) {
    int q = label_to_frame(N, base, cd.partner[frame_to_label(N, base, p)]);
    if (q > inner_b && q < outer_b) return false;
  }
  return true;
}

}  // namespace detail

/// Every bypass site of cd (one frame per site: the one where c1 is outermost and
/// the base is smallest).
inline std::vector<BypassSite> bypass_sites(const ChordDiagram& cd) {
  const int N = cd.N, P = 2 * N;
  std::set<std::vector<int>> seen;
  std::vector<BypassSite> out;
  for (int base = 0; base < P; ++base) {
    auto lab = [&](int p) { return detail::frame_to_label(N, base, p); };
    auto frm = [&](int x) { return detail::label_to_frame(N, base, x); };
    std::vector<std::pair<int, int>> ch;
    for (int p = 1; p <= P; ++p) {
      int q = frm(cd.partner[lab(p)]);
      if (p < q) ch.push_back({p, q});
    }
    for (auto [a1, b1] : ch)
      for (auto [a2, b2] : ch)
        for (auto [a3, b3] : ch) {
          if (!(a1 < a2 && a2 < a3 && b3 < b2 && b2 < b1)) continue;
          if (!detail::faces_common_region(cd, base, a1, a2, b2, b1)) continue;
          if (!detail::faces_common_region(cd, base, a2, a3, b3, b2)) continue;
          std::vector<int> key{lab(a1), lab(a2), lab(a3), lab(b3), lab(b2), lab(b1)};
          std::vector<int> chords{std::min(key[0], key[5]), std::min(key[1], key[4]), std::min(key[2], key[3])};
          // The same three chords seen from another frame (c1 and c3 swap roles).
          std::sort(chords.begin(), chords.end());
          if (!seen.insert(chords).second) continue;
          out.push_back({base, a1, a2, a3, b3, b2, b1});
        }
  }
  return out;
}

/// The triple at a site: the original diagram and its two rotations of the
/// three strands.
inline std::vector<ChordDiagram> bypass_triple_at(const ChordDiagram& cd, const BypassSite& s) {
  const int N = cd.N;
  auto lab = [&](int p) { return detail::frame_to_label(N, s.base, p); };
  for (auto [x, y] : std::vector<std::pair<int, int>>{{s.a1, s.b1}, {s.a2, s.b2}, {s.a3, s.b3}})
    if (cd.partner[lab(x)] != lab(y)) throw StructuralError("bypass site does not meet the diagram in three chords");
  auto with = [&](std::vector<std::pair<int, int>> repl) {
    std::vector<std::pair<int, int>> ps;
    std::set<int> touched{lab(s.a1), lab(s.a2), lab(s.a3), lab(s.b1), lab(s.b2), lab(s.b3)};
    for (auto [a, b] : cd.pairs())
      if (!touched.count(a)) ps.push_back({a, b});
    for (auto [x, y] : repl) ps.push_back({std::min(lab(x), lab(y)), std::max(lab(x), lab(y))});
    return ChordDiagram::from_pairs(N, ps);
  };
  return {cd, with({{s.a2, s.a3}, {s.a1, s.b3}, {s.b2, s.b1}}), with({{s.b3, s.b2}, {s.a3, s.b1}, {s.a1, s.a2}})};
}

/// Bypass relation: the three elements sum to 0 over F2; over Z some signs do.
inline bool bypass_relation_holds(const std::vector<Multivector>& c) {
  if (c.size() != 3) return false;
  if (c[0].ring() == Ring::F2) return (c[0] + c[1] + c[2]).is_zero();
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      if ((c[0] + Integer(s1) * c[1] + Integer(s2) * c[2]).is_zero()) return true;
  return false;
}

// ============================================================================
// Rotation maps and the solid torus
// ============================================================================

/// phi_j : H_1(D^2, alpha+) -> H_1(D^2, alpha-), beta_i -> beta_{i+j} (indices mod 2N),
/// written in dual coordinates: column k is the image of beta_{2k+1}.
inline Matrix rotation_map(const SurfaceAlgebra& disk, int N, int j) {
  if (j % 2 == 0) throw StructuralError("rotation maps need an odd shift");
  const Complex& c = disk.surface.complex();
  std::vector<std::vector<Integer>> cols;
  for (int i = 1; i <= 2 * N - 3; i += 2) cols.push_back(disk.dual.dual_coordinates(disk_beta(c, N, i + j)));
  return Matrix::from_columns(disk.ring, N - 1, cols);
}

/// Chord diagram rotated counterclockwise by `steps` suture positions.
inline ChordDiagram rotate(const ChordDiagram& cd, int steps) {
  const int P = 2 * cd.N;
  std::vector<std::pair<int, int>> ps;
  for (auto [a, b] : cd.pairs()) {
    int x = ((a - 1 + steps) % P + P) % P + 1, y = ((b - 1 + steps) % P + P) % P + 1;
    ps.push_back({std::min(x, y), std::max(x, y)});
  }
  ChordDiagram d;
  d.N = cd.N;
  d.partner.assign(P + 1, 0);
  for (auto [x, y] : ps) d.partner[x] = y, d.partner[y] = x;
  return d;
}

struct TorusParameters {
  int n = 1, p = 0, q = 1;
  void check() const {
    if (n < 1 || q < 1 || std::gcd(p, q) != 1) throw StructuralError("torus parameters need n >= 1, q >= 1, gcd(p, q) = 1");
  }
  int shift() const { return 2 * n * p + 1; }
};

/// <phi_{2np+1}(c(K)) | c(K)> over F2.
inline Integer solid_torus_pairing(const ChordDiagram& cd, const TorusParameters& t, const SurfaceAlgebra& disk) {
  t.check();
  if (cd.N != t.n * t.q) throw StructuralError("chord diagram must have N = n q");
  Multivector c = disk_contact_element(cd, Ring::F2);
  Matrix phi = rotation_map(disk, cd.N, t.shift());
  DualMultivector img = reinterpret<DualSpace>(induced_map(phi, c));
  return pair(img, c);
}

inline bool solid_torus_tight(const ChordDiagram& cd, const TorusParameters& t, const SurfaceAlgebra& disk) {
  return solid_torus_pairing(cd, t, disk) == 1;
}

/// Rounded-boundary oracle: K against its copy rotated by 2np+1 positions forms one curve.
inline bool solid_torus_oracle(const ChordDiagram& cd, const TorusParameters& t) {
  t.check();
  return union_components(cd, rotate(cd, t.shift())) == 1;
}

/// beta_1 + n beta_2 as the image of beta_1 under the n-th power of the twist.
inline Multivector dehn_twist_family(int n, Ring ring = Ring::Integers) {
  Matrix T = Matrix::identity(ring, 2);
  T.set(1, 0, n);
  return induced_map(T, Multivector::generator(ring, 2, 0));
}

}  // namespace sutured
