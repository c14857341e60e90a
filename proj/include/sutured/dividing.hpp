#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "surface.hpp"

namespace sutured {

/// Oriented edge set K with a sign per face. K runs from F- to F+ and the
/// positive side lies on its left.
struct DividingSet {
  std::vector<int> K;
  std::vector<int> sign;  // +1 or -1 per face

  friend bool operator==(const DividingSet&, const DividingSet&) = default;
};

inline std::vector<Violation> validate_dividing_set(const SuturedSurface& s, const DividingSet& k) {
  std::vector<Violation> out;
  const Complex& c = s.complex();
  if (static_cast<int>(k.sign.size()) != c.face_count()) {
    out.push_back({"signs", "one sign per face required", -1});
    return out;
  }
  for (int f = 0; f < c.face_count(); ++f)
    if (k.sign[f] != 1 && k.sign[f] != -1) out.push_back({"signs", "face sign must be +1 or -1", f});
  std::vector<char> inK(c.halfedge_count(), 0);
  for (int h : k.K) {
    if (h < 0 || h >= c.halfedge_count()) {
      out.push_back({"curve", "halfedge id out of range", h});
      return out;
    }
    if (inK[h] || inK[c.twin(h)]) out.push_back({"curve", "edge used twice by K", h});
    inK[h] = 1;
    if (c.face_of(h) < 0 || c.face_of(c.twin(h)) < 0) out.push_back({"curve", "K edge lies on the boundary", h});
  }
  std::vector<int> in(c.vertex_count(), 0), outd(c.vertex_count(), 0);
  for (int h : k.K) ++outd[c.tail(h)], ++in[c.head(h)];
  for (int v = 0; v < c.vertex_count(); ++v) {
    const Mark m = s.mark(v);
    bool ok;
    if (m == Mark::FPlus) ok = in[v] == 1 && outd[v] == 0;
    else if (m == Mark::FMinus) ok = in[v] == 0 && outd[v] == 1;
    else if (c.is_boundary_vertex(v)) ok = in[v] == 0 && outd[v] == 0;
    else ok = in[v] == outd[v] && in[v] <= 1;
    if (!ok) out.push_back({"curve_boundary", "boundary of K differs from F- to F+ or K branches", v});
  }
  if (!out.empty()) return out;
  for (int e = 0; e < c.edge_count(); ++e) {
    int h = c.edge_rep(e), t = c.twin(h);
    if (c.face_of(h) < 0 || c.face_of(t) < 0) continue;
    int a = k.sign[c.face_of(h)], b = k.sign[c.face_of(t)];
    if (inK[h] || inK[t]) {
      int left = inK[h] ? a : b;
      if (a == b) out.push_back({"adjacency", "faces on both sides of K share a sign", h});
      else if (left != 1) out.push_back({"orientation", "positive region is not on the left of K", h});
    } else if (a != b) {
      out.push_back({"adjacency", "faces across a non-K edge have different signs", h});
    }
  }
  auto arc = s.boundary_arc_signs();
  for (int h = 0; h < c.halfedge_count(); ++h)
    if (c.is_boundary(h) && arc[h] != 0 && k.sign[c.face_of(h)] != arc[h])
      out.push_back({"boundary_sign", "face along A+ must be positive and along A- negative", h});
  return out;
}

/// Components of R+ and R- by face adjacency across non-K edges.
struct RegionDecomposition {
  std::vector<int> plus_faces, minus_faces;
  std::vector<int> component_of_face;
  std::vector<int> component_sign;
  std::vector<char> component_isolated;
  int I_plus = 0, I_minus = 0;
  int chi_plus = 0, chi_minus = 0;
  int L_K = 0, L_minus_K = 0;
};

inline RegionDecomposition regions(const SuturedSurface& s, const DividingSet& k) {
  const Complex& c = s.complex();
  RegionDecomposition r;
  std::vector<char> inK(c.halfedge_count(), 0);
  for (int h : k.K) inK[h] = inK[c.twin(h)] = 1;
  r.component_of_face.assign(c.face_count(), -1);
  for (int f = 0; f < c.face_count(); ++f) {
    (k.sign[f] > 0 ? r.plus_faces : r.minus_faces).push_back(f);
    if (r.component_of_face[f] >= 0) continue;
    const int id = static_cast<int>(r.component_sign.size());
    r.component_sign.push_back(k.sign[f]);
    r.component_isolated.push_back(1);
    std::vector<int> stack{f};
    r.component_of_face[f] = id;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (int h : c.face(g)) {
        int nb = c.face_of(c.twin(h));
        if (nb < 0) {
          r.component_isolated[id] = 0;
          continue;
        }
        if (inK[h] || r.component_of_face[nb] >= 0) continue;
        r.component_of_face[nb] = id;
        stack.push_back(nb);
      }
    }
  }
  for (std::size_t i = 0; i < r.component_sign.size(); ++i)
    if (r.component_isolated[i]) ++(r.component_sign[i] > 0 ? r.I_plus : r.I_minus);
  r.chi_plus = r.plus_faces.empty() ? 0 : subsurface(c, s.marks(), r.plus_faces).complex.euler();
  r.chi_minus = r.minus_faces.empty() ? 0 : subsurface(c, s.marks(), r.minus_faces).complex.euler();
  r.L_K = s.n_F() - r.chi_plus;
  r.L_minus_K = s.n_F() - r.chi_minus;
  return r;
}

inline bool is_non_isolating(const SuturedSurface& s, const DividingSet& k) {
  auto r = regions(s, k);
  return r.I_plus == 0 && r.I_minus == 0;
}

/// Builds K from halfedges and infers face signs: left of K is positive, faces
/// along A+ positive, along A- negative, propagated across non-K edges.
/// Conflicts are left for validation.
inline DividingSet dividing_set_from_halfedges(const SuturedSurface& s, std::vector<int> halfedges) {
  const Complex& c = s.complex();
  DividingSet k;
  k.K = std::move(halfedges);
  std::vector<char> inK(c.halfedge_count(), 0);
  for (int h : k.K) inK[h] = inK[c.twin(h)] = 1;
  k.sign.assign(c.face_count(), 0);
  std::vector<int> stack;
  auto seed = [&](int f, int sg) {
    if (f >= 0 && k.sign[f] == 0) {
      k.sign[f] = sg;
      stack.push_back(f);
    }
  };
  for (int h : k.K) {
    seed(c.face_of(h), 1);
    seed(c.face_of(c.twin(h)), -1);
  }
  auto arc = s.boundary_arc_signs();
  for (int h = 0; h < c.halfedge_count(); ++h)
    if (c.is_boundary(h) && arc[h] != 0) seed(c.face_of(h), arc[h]);
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int h : c.face(f)) {
      if (inK[h]) continue;
      seed(c.face_of(c.twin(h)), k.sign[f]);
    }
  }
  for (int& x : k.sign)
    if (x == 0) throw StructuralError("face sign cannot be inferred from the curve");
  return k;
}

/// As dividing_set_from_halfedges, with K given as vertex paths (closed loops
/// repeat their first vertex at the end).
inline DividingSet dividing_set_from_paths(const SuturedSurface& s, const std::vector<std::vector<int>>& paths) {
  std::vector<int> hs;
  for (const auto& p : paths) {
    auto h = vertex_path(s.complex(), p);
    hs.insert(hs.end(), h.begin(), h.end());
  }
  return dividing_set_from_halfedges(s, std::move(hs));
}

// ============================================================================
// Chord diagrams
// ============================================================================

/// Noncrossing perfect matching of the sutures F_1 .. F_2N (1-indexed).
struct ChordDiagram {
  int N = 0;
  std::vector<int> partner;  // size 2N + 1; entry 0 unused

  /// Pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= 2 * N; ++a)
      if (a < partner[a]) out.push_back({a, partner[a]});
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto [a, b] : pairs()) {
      os << (first ? "" : ",") << a << "-" << b;
      first = false;
    }
    return os.str();
  }

  static ChordDiagram from_pairs(int N, const std::vector<std::pair<int, int>>& ps) {
    ChordDiagram d;
    d.N = N;
    d.partner.assign(2 * N + 1, 0);
    for (auto [a, b] : ps) {
      if (a < 1 || b < 1 || a > 2 * N || b > 2 * N || a == b) throw StructuralError("chord endpoint out of range");
      if (d.partner[a] || d.partner[b]) throw StructuralError("suture used by two chords");
      d.partner[a] = b;
      d.partner[b] = a;
    }
    for (int a = 1; a <= 2 * N; ++a)
      if (!d.partner[a]) throw StructuralError("suture without a chord");
    for (auto [a, b] : d.pairs())
      for (auto [c, e] : d.pairs())
        if (a < c && c < b && b < e) throw StructuralError("chords cross");
    for (auto [a, b] : d.pairs())
      if ((b - a) % 2 == 0) throw StructuralError("chord joins sutures of equal sign");
    return d;
  }

  /// Parses "1-4,2-3"; N is inferred from the number of chords.
  static ChordDiagram parse(const std::string& text) {
    std::vector<std::pair<int, int>> ps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto dash = item.find('-');
      if (dash == std::string::npos) throw StructuralError("chord must be written a-b");
      try {
        std::size_t p1 = 0, p2 = 0;
        std::string sa = item.substr(0, dash), sb = item.substr(dash + 1);
        int a = std::stoi(sa, &p1), b = std::stoi(sb, &p2);
        if (p1 != sa.size() || p2 != sb.size()) throw StructuralError("bad chord " + item);
        ps.push_back({std::min(a, b), std::max(a, b)});
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const StructuralError*>(&e)) throw;
        throw StructuralError("bad chord " + item);
      }
    }
    if (ps.empty()) throw StructuralError("empty chord diagram");
    return from_pairs(static_cast<int>(ps.size()), ps);
  }

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.N == b.N && a.partner == b.partner; }
  friend bool operator<(const ChordDiagram& a, const ChordDiagram& b) {
    return a.N != b.N ? a.N < b.N : a.pairs() < b.pairs();
  }
};

/// All noncrossing matchings on 2N sutures, sorted lexicographically by pairs().
inline std::vector<ChordDiagram> enumerate_chord_diagrams(int N) {
  if (N < 1) throw StructuralError("enumeration needs N >= 1");
  std::vector<ChordDiagram> out;
  std::vector<int> partner(2 * N + 1, 0);
  // Match the smallest free point a with b such that the enclosed stretch is even.
  auto rec = [&](auto&& self) -> void {
    int a = 1;
    while (a <= 2 * N && partner[a]) ++a;
    if (a > 2 * N) {
      ChordDiagram d;
      d.N = N;
      d.partner = partner;
      out.push_back(std::move(d));
      return;
    }
    for (int b = a + 1; b <= 2 * N; ++b) {
      if (partner[b]) break;  // a chord inside (a, b) would be crossed
      int free_between = 0;
      for (int x = a + 1; x < b; ++x) free_between += !partner[x];
      if (free_between % 2) continue;
      partner[a] = b, partner[b] = a;
      self(self);
      partner[a] = partner[b] = 0;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// Disk (D^2, F(N)) cut by the chords as straight edges between suture vertices.
/// Boundary halfedge 2v runs v -> v+1 with twin 2v+1; chord halfedges follow.
struct ChordComplex {
  SuturedSurface surface;
  DividingSet K;
};

inline ChordComplex chord_to_dividing_set(const ChordDiagram& cd) {
  const int N = cd.N, V = 4 * N;
  std::vector<int> head, twin;
  for (int v = 0; v < V; ++v) {
    head.push_back((v + 1) % V);
    head.push_back(v);
    twin.push_back(2 * v + 1);
    twin.push_back(2 * v);
  }
  for (auto [a, b] : cd.pairs()) {
    int h = static_cast<int>(head.size());
    head.push_back(disk_F(b));
    head.push_back(disk_F(a));
    twin.push_back(h + 1);
    twin.push_back(h);
  }
  const int H = static_cast<int>(head.size());
  auto tail = [&](int h) { return head[twin[h]]; };
  // Counterclockwise rotation at v on a convex polygon: by offset of the far end.
  std::vector<std::vector<int>> rot(V);
  for (int h = 0; h < H; ++h) rot[tail(h)].push_back(h);
  for (int v = 0; v < V; ++v)
    std::sort(rot[v].begin(), rot[v].end(),
              [&](int x, int y) { return (head[x] - v + V) % V < (head[y] - v + V) % V; });
  std::vector<int> pos(H);
  for (int v = 0; v < V; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);
  // Face on the left: leave head(h) along the ray just clockwise of twin(h).
  auto next = [&](int h) {
    int t = twin[h];
    const auto& r = rot[tail(t)];
    return r[(pos[t] + r.size() - 1) % r.size()];
  };
  std::vector<std::vector<int>> faces;
  std::vector<char> seen(H, 0);
  for (int v = 0; v < V; ++v) seen[2 * v + 1] = 1;  // exterior orbit
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    std::vector<int> f;
    for (int g = h; !seen[g]; g = next(g)) {
      seen[g] = 1;
      f.push_back(g);
    }
    faces.push_back(std::move(f));
  }
  ChordComplex out{SuturedSurface(Complex(V, head, twin, faces), disk_marks(N)), {}};
  const Complex& c = out.surface.complex();
  out.K.sign.assign(c.face_count(), 0);
  for (int f = 0; f < c.face_count(); ++f)
    for (int h : c.face(f))
      if (is_alpha(out.surface.mark(c.tail(h))))
        out.K.sign[f] = out.surface.mark(c.tail(h)) == Mark::AlphaPlus ? 1 : -1;
  for (int h = 2 * V; h < H; h += 2) out.K.K.push_back(out.K.sign[c.face_of(h)] > 0 ? h : h + 1);
  return out;
}

/// Catalan number by the recurrence C_n = sum C_i C_{n-1-i}.
inline Integer catalan_recurrence(int n) {
  std::vector<Integer> C(n + 1);
  C[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i) C[m] += C[i] * C[m - 1 - i];
  return C[n];
}

// ============================================================================
// Annulus dividing sets
// ============================================================================

/// The six non-isolating dividing sets K+, K-, K0, K1, L0, L1 on standard_annulus(),
/// as vertex paths on the grid. Arcs run from F- to F+.
inline std::vector<std::pair<std::string, std::vector<std::vector<int>>>> annulus_curve_paths() {
  auto P = [](std::vector<std::pair<int, int>> rt) {
    std::vector<int> out;
    for (auto [r, t] : rt) out.push_back(annulus_vertex(r, t));
    return out;
  };
  const int R = kAnnulusLevels, mid = kAnnulusLevels / 2;
  // Half-disk arcs cutting off the outer or inner alpha+ (angle 1) or alpha- (angle 3).
  auto outer_around = [&](int t) { return P({{R, 2}, {R - 1, 2}, {R - 1, t}, {R - 1, 0}, {R, 0}}); };
  auto inner_around = [&](int t) { return P({{0, 0}, {1, 0}, {1, t}, {1, 2}, {0, 2}}); };
  std::vector<int> core_ccw, core_cw;
  for (int t = 0; t <= kAnnulusColumns; ++t) core_ccw.push_back(annulus_vertex(mid, t));
  core_cw.assign(core_ccw.rbegin(), core_ccw.rend());
  std::vector<int> down, up;  // radial arcs of L0
  for (int r = R; r >= 0; --r) down.push_back(annulus_vertex(r, 2));
  for (int r = 0; r <= R; ++r) up.push_back(annulus_vertex(r, 0));
  // L1: the L0 arcs twisted once around the core along the diagonals.
  auto spiral_in = P({{R, 2}, {R - 1, 2}, {R - 2, 1}, {R - 3, 0}, {R - 4, 3}, {R - 5, 2}, {0, 2}});
  auto spiral_out = P({{0, 0}, {1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 0}, {R, 0}});
  return {
      {"K+", {outer_around(1), inner_around(1)}},
      {"K-", {outer_around(3), inner_around(3)}},
      {"K0", {outer_around(1), inner_around(3), core_ccw}},
      {"K1", {outer_around(3), inner_around(1), core_cw}},
      {"L0", {down, up}},
      {"L1", {spiral_in, spiral_out}},
  };
}

inline std::vector<std::pair<std::string, DividingSet>> annulus_dividing_sets(const SuturedSurface& annulus) {
  std::vector<std::pair<std::string, DividingSet>> out;
  for (auto& [name, paths] : annulus_curve_paths()) out.push_back({name, dividing_set_from_paths(annulus, paths)});
  return out;
}

}  // namespace sutured
