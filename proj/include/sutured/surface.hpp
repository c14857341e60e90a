#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace sutured {

enum class Mark : unsigned char { None, FPlus, FMinus, AlphaPlus, AlphaMinus };

inline const char* mark_name(Mark m) {
  switch (m) {
    case Mark::FPlus: return "F_plus";
    case Mark::FMinus: return "F_minus";
    case Mark::AlphaPlus: return "alpha_plus";
    case Mark::AlphaMinus: return "alpha_minus";
    default: return "none";
  }
}

inline bool is_suture(Mark m) { return m == Mark::FPlus || m == Mark::FMinus; }
inline bool is_alpha(Mark m) { return m == Mark::AlphaPlus || m == Mark::AlphaMinus; }

/// A failed invariant with the id of a vertex, halfedge or face that exhibits it.
struct Violation {
  std::string kind;
  std::string detail;
  int witness = -1;
};

/// 1-chain over edges; entry e is the coefficient of the representative halfedge of e.
using Chain = std::vector<Integer>;

// ============================================================================
// Combinatorial surface
// ============================================================================

/// Oriented 2-complex given by halfedges. tail(h) = head(twin(h)).
/// Faces are counterclockwise closed walks; a halfedge lies in at most one face.
/// A boundary halfedge lies in a face while its twin does not; it carries the
/// induced boundary orientation (surface on its left).
class Complex {
public:
  Complex() = default;

  /// Throws StructuralError when the data cannot describe a 2-complex at all
  /// (bad ids, broken twin involution, open face walks, a halfedge in two faces).
  /// Manifold and boundary defects are reported by local_violations().
  Complex(int vertex_count, std::vector<int> head, std::vector<int> twin, std::vector<std::vector<int>> faces)
      : vertex_count_(vertex_count), head_(std::move(head)), twin_(std::move(twin)), faces_(std::move(faces)) {
    init();
  }

  /// Faces given as counterclockwise vertex cycles. Halfedges are numbered in
  /// order of appearance; exterior twins follow in the same order.
  static Complex from_vertex_faces(int vertex_count, const std::vector<std::vector<int>>& vfaces) {
    std::map<std::pair<int, int>, int> id;
    std::vector<int> head, twin, tail;
    std::vector<std::vector<int>> faces;
    for (const auto& vf : vfaces) {
      std::vector<int> f;
      for (std::size_t i = 0; i < vf.size(); ++i) {
        int u = vf[i], v = vf[(i + 1) % vf.size()];
        if (!id.emplace(std::make_pair(u, v), static_cast<int>(head.size())).second)
          throw StructuralError("directed edge used by two faces");
        f.push_back(static_cast<int>(head.size()));
        head.push_back(v);
        tail.push_back(u);
        twin.push_back(-1);
      }
      faces.push_back(std::move(f));
    }
    const int face_halfedges = static_cast<int>(head.size());
    for (int h = 0; h < face_halfedges; ++h) {
      if (twin[h] >= 0) continue;
      int v = head[h], u = tail[h];
      auto it = id.find({v, u});
      if (it != id.end()) {
        twin[h] = it->second;
        twin[it->second] = h;
      } else {
        int t = static_cast<int>(head.size());
        head.push_back(u);
        twin.push_back(h);
        twin[h] = t;
      }
    }
    return Complex(vertex_count, std::move(head), std::move(twin), std::move(faces));
  }

  int vertex_count() const { return vertex_count_; }
  int halfedge_count() const { return static_cast<int>(head_.size()); }
  int edge_count() const { return static_cast<int>(edge_rep_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  int head(int h) const { return head_[h]; }
  int tail(int h) const { return head_[twin_[h]]; }
  int twin(int h) const { return twin_[h]; }
  int face_of(int h) const { return face_of_[h]; }
  int next(int h) const { return next_[h]; }
  int prev(int h) const { return prev_[h]; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& face(int f) const { return faces_[f]; }
  const std::vector<int>& heads() const { return head_; }
  const std::vector<int>& twins() const { return twin_; }

  int edge_of(int h) const { return edge_of_[h]; }
  int edge_rep(int e) const { return edge_rep_[e]; }
  /// +1 if h is the representative of its edge, -1 otherwise.
  int edge_sign(int h) const { return edge_rep_[edge_of_[h]] == h ? 1 : -1; }

  bool is_boundary(int h) const { return face_of_[h] >= 0 && face_of_[twin_[h]] < 0; }
  bool is_boundary_edge(int e) const {
    int h = edge_rep_[e];
    return face_of_[h] < 0 || face_of_[twin_[h]] < 0;
  }
  /// The halfedge of edge e lying in a face (the boundary halfedge for boundary edges).
  int inner_halfedge(int e) const {
    int h = edge_rep_[e];
    return face_of_[h] >= 0 ? h : twin_[h];
  }
  bool is_boundary_vertex(int v) const { return boundary_out_[v] >= 0; }
  /// Outgoing boundary halfedge at v, or -1.
  int boundary_out(int v) const { return boundary_out_[v]; }
  /// Boundary halfedge following b along the induced orientation.
  int next_boundary(int b) const { return boundary_out_[head_[b]]; }

  /// Outgoing halfedges of v in counterclockwise order. At a boundary vertex the
  /// list starts with the outgoing boundary halfedge and ends with the faceless
  /// twin of the incoming one.
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }

  int euler() const { return vertex_count_ - edge_count() + face_count(); }

  /// Boundary circles as cyclic lists of boundary halfedges, each starting at its
  /// smallest halfedge id; circles ordered by that id.
  const std::vector<std::vector<int>>& boundary_circles() const { return circles_; }
  /// Index of the boundary circle containing boundary halfedge h, or -1.
  int circle_of(int h) const { return circle_of_[h]; }

  /// Connected components of the 1-skeleton, as a component id per vertex.
  const std::vector<int>& vertex_component() const { return vcomp_; }
  int component_count() const { return ncomp_; }

  const std::vector<Violation>& local_violations() const { return violations_; }

  // --------------------------------------------------------------------------
  // Chains
  // --------------------------------------------------------------------------

  Chain zero_chain() const { return Chain(edge_count()); }
  void add_halfedge(Chain& c, int h, const Integer& k = 1) const { c[edge_of_[h]] += edge_sign(h) * k; }
  Chain path_chain(const std::vector<int>& halfedges) const {
    Chain c = zero_chain();
    for (int h : halfedges) add_halfedge(c, h);
    return c;
  }
  Chain face_boundary(int f) const { return path_chain(faces_[f]); }
  /// 0-chain boundary: head minus tail of each representative.
  std::vector<Integer> boundary(const Chain& c) const {
    std::vector<Integer> b(vertex_count_);
    for (int e = 0; e < edge_count(); ++e) {
      if (c[e] == 0) continue;
      int h = edge_rep_[e];
      b[head_[h]] += c[e];
      b[tail(h)] -= c[e];
    }
    return b;
  }

  /// Boundary matrix C1 -> C0 (vertices x edges).
  Matrix boundary1(Ring ring) const {
    Matrix m(ring, vertex_count_, edge_count());
    for (int e = 0; e < edge_count(); ++e) {
      int h = edge_rep_[e];
      m.add_to(head_[h], e, 1);
      m.add_to(tail(h), e, -1);
    }
    return m;
  }
  /// Boundary matrix C2 -> C1 (edges x faces).
  Matrix boundary2(Ring ring) const {
    Matrix m(ring, edge_count(), face_count());
    for (int f = 0; f < face_count(); ++f)
      for (int h : faces_[f]) m.add_to(edge_of_[h], f, edge_sign(h));
    return m;
  }

  // --------------------------------------------------------------------------
  // Refinement. Existing vertex, halfedge and face ids are preserved.
  // --------------------------------------------------------------------------

  /// Inserts a vertex in the middle of the edge of h; returns the new vertex.
  /// Afterwards h ends at the new vertex and a new halfedge continues to the old head.
  int split_edge(int h) {
    const int t = twin_[h];
    const int u = tail(h), v = head_[h];
    const int w = vertex_count_++;
    const int h2 = halfedge_count(), t2 = h2 + 1;
    head_.push_back(v);  // h2 : w -> v
    head_.push_back(u);  // t2 : w -> u
    twin_.push_back(t);
    twin_.push_back(h);
    head_[h] = w;
    head_[t] = w;
    twin_[h] = t2;
    twin_[t] = h2;
    auto insert_after = [&](int x, int y) {
      int f = face_of_[x];
      if (f < 0) return;
      auto& fc = faces_[f];
      fc.insert(std::find(fc.begin(), fc.end(), x) + 1, y);
    };
    insert_after(h, h2);
    insert_after(t, t2);
    init();
    return w;
  }

  /// Splits face f by a new edge between the tails of its halfedges at positions
  /// i and j (cyclically non-adjacent). f keeps the part starting at position i;
  /// the other part is appended. Returns the new halfedge from the i-vertex to the j-vertex.
  int split_face(int f, int i, int j) {
    auto fc = faces_[f];
    const int k = static_cast<int>(fc.size());
    if (i == j || (i + 1) % k == j || (j + 1) % k == i) throw StructuralError("split_face needs non-adjacent corners");
    const int vi = tail(fc[i]), vj = tail(fc[j]);
    const int d = halfedge_count(), dr = d + 1;
    head_.push_back(vj);
    head_.push_back(vi);
    twin_.push_back(dr);
    twin_.push_back(d);
    std::vector<int> a, b;
    for (int p = i; p != j; p = (p + 1) % k) a.push_back(fc[p]);
    a.push_back(dr);
    for (int p = j; p != i; p = (p + 1) % k) b.push_back(fc[p]);
    b.push_back(d);
    faces_[f] = a;
    faces_.push_back(b);
    init();
    return d;
  }

  /// Adds an interior vertex joined to every corner of f (a cone); returns it.
  int cone_face(int f) {
    auto fc = faces_[f];
    const int k = static_cast<int>(fc.size());
    const int c = vertex_count_++;
    // spoke s_p : c -> tail(fc[p]); r_p its twin
    std::vector<int> spoke(k), rev(k);
    for (int p = 0; p < k; ++p) {
      spoke[p] = halfedge_count();
      head_.push_back(tail(fc[p]));
      rev[p] = halfedge_count();
      head_.push_back(c);
      twin_.push_back(rev[p]);
      twin_.push_back(spoke[p]);
    }
    for (int p = 0; p < k; ++p) {
      std::vector<int> tri{fc[p], rev[(p + 1) % k], spoke[p]};
      if (p == 0)
        faces_[f] = tri;
      else
        faces_.push_back(tri);
    }
    init();
    return c;
  }

private:
  void init() {
    const int H = halfedge_count();
    if (static_cast<int>(twin_.size()) != H) throw StructuralError("head and twin arrays differ in length");
    for (int h = 0; h < H; ++h) {
      if (head_[h] < 0 || head_[h] >= vertex_count_) throw StructuralError("halfedge head out of range: " + std::to_string(h));
      if (twin_[h] < 0 || twin_[h] >= H || twin_[h] == h || twin_[twin_[h]] != h)
        throw StructuralError("twin is not a fixed-point-free involution at halfedge " + std::to_string(h));
    }
    face_of_.assign(H, -1);
    next_.assign(H, -1);
    prev_.assign(H, -1);
    for (int f = 0; f < face_count(); ++f) {
      const auto& fc = faces_[f];
      if (fc.empty()) throw StructuralError("empty face " + std::to_string(f));
      for (std::size_t i = 0; i < fc.size(); ++i) {
        int h = fc[i], g = fc[(i + 1) % fc.size()];
        if (h < 0 || h >= H) throw StructuralError("face halfedge out of range in face " + std::to_string(f));
        if (face_of_[h] >= 0) throw StructuralError("halfedge " + std::to_string(h) + " lies in two faces");
        face_of_[h] = f;
        if (head_[h] != tail(g)) throw StructuralError("face " + std::to_string(f) + " is not a closed walk");
        next_[h] = g;
        prev_[g] = h;
      }
    }
    edge_of_.assign(H, -1);
    edge_rep_.clear();
    for (int h = 0; h < H; ++h)
      if (h < twin_[h]) {
        edge_of_[h] = edge_of_[twin_[h]] = static_cast<int>(edge_rep_.size());
        edge_rep_.push_back(h);
      }

    violations_.clear();
    for (int e = 0; e < edge_count(); ++e) {
      int h = edge_rep_[e];
      if (face_of_[h] < 0 && face_of_[twin_[h]] < 0)
        violations_.push_back({"dangling_edge", "edge lies in no face", h});
    }

    std::vector<std::vector<int>> out(vertex_count_);
    for (int h = 0; h < H; ++h) out[tail(h)].push_back(h);
    boundary_out_.assign(vertex_count_, -1);
    rotation_.assign(vertex_count_, {});
    for (int v = 0; v < vertex_count_; ++v) {
      int faceless = 0, bout = 0;
      for (int h : out[v]) {
        if (face_of_[h] < 0) ++faceless;
        else if (face_of_[twin_[h]] < 0) ++bout, boundary_out_[v] = h;
      }
      if (out[v].empty()) {
        violations_.push_back({"isolated_vertex", "vertex has no edges", v});
        continue;
      }
      if (faceless > 1 || bout > 1 || faceless != bout) {
        violations_.push_back({"non_manifold_vertex", "link of vertex is not an arc or circle", v});
        boundary_out_[v] = -1;
        continue;
      }
      int start = boundary_out_[v] >= 0 ? boundary_out_[v] : out[v].front();
      std::vector<int> rot;
      int h = start;
      for (std::size_t steps = 0; steps <= out[v].size(); ++steps) {
        rot.push_back(h);
        if (face_of_[h] < 0) break;
        h = twin_[prev_[h]];
        if (h == start) break;
      }
      if (rot.size() != out[v].size()) {
        violations_.push_back({"non_manifold_vertex", "link of vertex is disconnected", v});
        boundary_out_[v] = -1;
        continue;
      }
      rotation_[v] = std::move(rot);
    }

    circles_.clear();
    circle_of_.assign(H, -1);
    for (int h = 0; h < H; ++h) {
      if (!is_boundary(h) || circle_of_[h] >= 0) continue;
      std::vector<int> circle;
      int b = h;
      const int id = static_cast<int>(circles_.size());
      while (b >= 0 && circle_of_[b] < 0) {
        circle_of_[b] = id;
        circle.push_back(b);
        b = next_boundary(b);
      }
      circles_.push_back(std::move(circle));
    }

    vcomp_.assign(vertex_count_, -1);
    ncomp_ = 0;
    for (int v = 0; v < vertex_count_; ++v) {
      if (vcomp_[v] >= 0) continue;
      std::vector<int> stack{v};
      vcomp_[v] = ncomp_;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int h : out[x])
          if (vcomp_[head_[h]] < 0) vcomp_[head_[h]] = ncomp_, stack.push_back(head_[h]);
      }
      ++ncomp_;
    }
  }

  int vertex_count_ = 0;
  std::vector<int> head_, twin_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_, next_, prev_, edge_of_, edge_rep_, boundary_out_, circle_of_, vcomp_;
  std::vector<std::vector<int>> rotation_, circles_;
  std::vector<Violation> violations_;
  int ncomp_ = 0;
};

// ============================================================================
// Sutured surface
// ============================================================================

/// Complex plus the four marked vertex sets F+, F-, alpha+, alpha-.
class SuturedSurface {
public:
  SuturedSurface() = default;
  SuturedSurface(Complex complex, std::vector<Mark> marks) : complex_(std::move(complex)), marks_(std::move(marks)) {
    if (static_cast<int>(marks_.size()) != complex_.vertex_count())
      throw StructuralError("one mark per vertex required");
  }

  const Complex& complex() const { return complex_; }
  Complex& mutable_complex() { return complex_; }
  const std::vector<Mark>& marks() const { return marks_; }
  Mark mark(int v) const { return marks_[v]; }
  void set_mark(int v, Mark m) {
    if (static_cast<int>(marks_.size()) < complex_.vertex_count()) marks_.resize(complex_.vertex_count(), Mark::None);
    marks_[v] = m;
  }
  /// Extends the mark table after refinement added vertices.
  void sync_marks() { marks_.resize(complex_.vertex_count(), Mark::None); }

  std::vector<int> vertices_with(Mark m) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(marks_.size()); ++v)
      if (marks_[v] == m) out.push_back(v);
    return out;
  }
  std::vector<char> mask(Mark m) const {
    std::vector<char> out(marks_.size());
    for (std::size_t v = 0; v < marks_.size(); ++v) out[v] = marks_[v] == m;
    return out;
  }

  int n_F() const { return static_cast<int>(vertices_with(Mark::FPlus).size()); }
  int euler() const { return complex_.euler(); }
  int L() const { return n_F() - euler(); }

  /// For each halfedge: +1 on boundary halfedges of A+ (the arcs from F+ to F-
  /// that contain alpha+), -1 on A-, 0 elsewhere. Requires a valid marking.
  std::vector<int> boundary_arc_signs() const {
    const Complex& c = complex_;
    std::vector<int> sign(c.halfedge_count(), 0);
    for (const auto& circle : c.boundary_circles()) {
      // Find a suture to start from; the sign flips after every suture.
      std::size_t start = circle.size();
      for (std::size_t i = 0; i < circle.size(); ++i)
        if (is_suture(marks_[c.tail(circle[i])])) {
          start = i;
          break;
        }
      if (start == circle.size()) continue;
      int s = 0;
      for (std::size_t k = 0; k < circle.size(); ++k) {
        int b = circle[(start + k) % circle.size()];
        Mark m = marks_[c.tail(b)];
        if (m == Mark::FPlus) s = 1;
        else if (m == Mark::FMinus) s = -1;
        sign[b] = s;
      }
    }
    return sign;
  }

  /// Every violated invariant of a sutured surface, with witnesses.
  std::vector<Violation> validate() const {
    std::vector<Violation> out = complex_.local_violations();
    const Complex& c = complex_;
    if (static_cast<int>(marks_.size()) != c.vertex_count()) {
      out.push_back({"marks", "mark table size differs from vertex count", -1});
      return out;
    }
    // Every connected component needs a boundary halfedge.
    std::vector<char> has_boundary(c.component_count(), 0);
    for (int h = 0; h < c.halfedge_count(); ++h)
      if (c.is_boundary(h)) has_boundary[c.vertex_component()[c.tail(h)]] = 1;
    for (int v = 0; v < c.vertex_count(); ++v)
      if (!has_boundary[c.vertex_component()[v]]) {
        out.push_back({"closed_component", "component has no boundary", v});
        has_boundary[c.vertex_component()[v]] = 1;
      }
    for (int v = 0; v < c.vertex_count(); ++v)
      if (marks_[v] != Mark::None && !c.is_boundary_vertex(v))
        out.push_back({"interior_mark", "marked vertex is not on the boundary", v});
    static const Mark pattern[4] = {Mark::FPlus, Mark::AlphaPlus, Mark::FMinus, Mark::AlphaMinus};
    for (const auto& circle : c.boundary_circles()) {
      std::vector<std::pair<Mark, int>> seq;
      for (int b : circle)
        if (marks_[c.tail(b)] != Mark::None) seq.push_back({marks_[c.tail(b)], c.tail(b)});
      int count[5] = {0, 0, 0, 0, 0};
      for (auto& [m, v] : seq) ++count[static_cast<int>(m)];
      if (count[1] == 0 || count[1] != count[2] || count[1] != count[3] || count[1] != count[4]) {
        out.push_back({"mark_counts", "boundary circle needs equal positive counts of all four marks",
                       c.tail(circle.front())});
        continue;
      }
      std::size_t s = 0;
      while (seq[s].first != Mark::FPlus) ++s;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        const auto& [m, v] = seq[(s + k) % seq.size()];
        if (m != pattern[k % 4]) {
          out.push_back({"mark_pattern", "boundary marks break the cyclic order F+, alpha+, F-, alpha-", v});
          break;
        }
      }
    }
    return out;
  }

  bool is_valid() const { return validate().empty(); }

private:
  Complex complex_;
  std::vector<Mark> marks_;
};

// ============================================================================
// Subsurfaces
// ============================================================================

/// Closed union of a face subset, with id maps back to the host.
struct Subsurface {
  Complex complex;
  std::vector<Mark> marks;
  std::vector<int> vertex_to_host, halfedge_to_host, face_to_host;

  /// Host chain of a subsurface chain (inclusion on chains).
  Chain lift(const Complex& host, const Chain& c) const {
    Chain out = host.zero_chain();
    for (int e = 0; e < complex.edge_count(); ++e)
      if (c[e] != 0) host.add_halfedge(out, halfedge_to_host[complex.edge_rep(e)], c[e]);
    return out;
  }
  std::vector<char> mask(Mark m) const {
    std::vector<char> out(marks.size());
    for (std::size_t v = 0; v < marks.size(); ++v) out[v] = marks[v] == m;
    return out;
  }
};

inline Subsurface subsurface(const Complex& host, const std::vector<Mark>& marks, const std::vector<int>& faces) {
  Subsurface s;
  std::vector<int> vmap(host.vertex_count(), -1), hmap(host.halfedge_count(), -1);
  std::vector<int> head, twin;
  std::vector<std::vector<int>> nf;
  auto vertex = [&](int v) {
    if (vmap[v] < 0) {
      vmap[v] = static_cast<int>(s.vertex_to_host.size());
      s.vertex_to_host.push_back(v);
      s.marks.push_back(marks.empty() ? Mark::None : marks[v]);
    }
    return vmap[v];
  };
  auto halfedge = [&](int h) {
    if (hmap[h] < 0) {
      hmap[h] = static_cast<int>(s.halfedge_to_host.size());
      s.halfedge_to_host.push_back(h);
      head.push_back(-1);
      twin.push_back(-1);
    }
    return hmap[h];
  };
  std::vector<int> sorted = faces;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int f : sorted) {
    std::vector<int> fc;
    for (int h : host.face(f)) {
      vertex(host.tail(h));
      fc.push_back(halfedge(h));
    }
    nf.push_back(std::move(fc));
    s.face_to_host.push_back(f);
  }
  const int face_side = static_cast<int>(s.halfedge_to_host.size());
  for (int i = 0; i < face_side; ++i) halfedge(host.twin(s.halfedge_to_host[i]));
  for (std::size_t i = 0; i < s.halfedge_to_host.size(); ++i) {
    int h = s.halfedge_to_host[i];
    head[i] = vertex(host.head(h));
    twin[i] = hmap[host.twin(h)];
  }
  s.complex = Complex(static_cast<int>(s.vertex_to_host.size()), std::move(head), std::move(twin), std::move(nf));
  return s;
}

// ============================================================================
// Quotients and unions
// ============================================================================

/// Result of identifying boundary halfedges in pairs. Maps send old ids to new
/// ids; removed exterior halfedges map to -1.
struct Quotient {
  Complex complex;
  std::vector<int> vertex_map, halfedge_map;
};

/// Identifies each pair (b, b') of boundary halfedges so that b and b' become
/// twins: tail(b) ~ head(b') and head(b) ~ tail(b'). Their faceless twins are
/// removed. New vertices are ordered by their smallest old representative.
inline Quotient identify_boundary(const Complex& c, const std::vector<std::pair<int, int>>& pairs) {
  const int V = c.vertex_count(), H = c.halfedge_count();
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  std::vector<int> partner(H, -1);
  for (auto [b, bp] : pairs) {
    if (b < 0 || b >= H || bp < 0 || bp >= H) throw StructuralError("glued halfedge out of range");
    if (!c.is_boundary(b) || !c.is_boundary(bp)) throw StructuralError("glued halfedge is not a boundary halfedge");
    if (b == bp || partner[b] >= 0 || partner[bp] >= 0) throw StructuralError("boundary halfedge glued twice");
    partner[b] = bp;
    partner[bp] = b;
    unite(c.tail(b), c.head(bp));
    unite(c.head(b), c.tail(bp));
  }
  Quotient q;
  q.vertex_map.assign(V, -1);
  int nv = 0;
  for (int v = 0; v < V; ++v)
    if (find(v) == v) q.vertex_map[v] = nv++;
  for (int v = 0; v < V; ++v) q.vertex_map[v] = q.vertex_map[find(v)];
  q.halfedge_map.assign(H, -1);
  int nh = 0;
  for (int h = 0; h < H; ++h) {
    bool removed = c.face_of(h) < 0 && partner[c.twin(h)] >= 0;
    if (!removed) q.halfedge_map[h] = nh++;
  }
  std::vector<int> head(nh), twin(nh);
  for (int h = 0; h < H; ++h) {
    int n = q.halfedge_map[h];
    if (n < 0) continue;
    head[n] = q.vertex_map[c.head(h)];
    int t = partner[h] >= 0 ? partner[h] : c.twin(h);
    twin[n] = q.halfedge_map[t];
  }
  std::vector<std::vector<int>> faces;
  for (const auto& f : c.faces()) {
    std::vector<int> nf;
    for (int h : f) nf.push_back(q.halfedge_map[h]);
    faces.push_back(std::move(nf));
  }
  q.complex = Complex(nv, std::move(head), std::move(twin), std::move(faces));
  return q;
}

/// Disjoint union; ids of later pieces are shifted past earlier ones.
inline SuturedSurface disjoint_union(const std::vector<SuturedSurface>& parts) {
  int nv = 0;
  std::vector<int> head, twin;
  std::vector<std::vector<int>> faces;
  std::vector<Mark> marks;
  for (const auto& p : parts) {
    const Complex& c = p.complex();
    const int hoff = static_cast<int>(head.size());
    for (int h = 0; h < c.halfedge_count(); ++h) {
      head.push_back(c.head(h) + nv);
      twin.push_back(c.twin(h) + hoff);
    }
    for (const auto& f : c.faces()) {
      std::vector<int> nf;
      for (int h : f) nf.push_back(h + hoff);
      faces.push_back(std::move(nf));
    }
    marks.insert(marks.end(), p.marks().begin(), p.marks().end());
    nv += c.vertex_count();
  }
  return SuturedSurface(Complex(nv, std::move(head), std::move(twin), std::move(faces)), std::move(marks));
}

// ============================================================================
// Standard models
// ============================================================================

/// Index of F_k (k = 1..2N) on the standard disk boundary.
inline int disk_F(int k) { return 2 * (k - 1); }
/// Index of alpha_k (k = 1..2N), with wraparound modulo 2N.
inline int disk_alpha(int N, int k) {
  k = ((k - 1) % (2 * N) + 2 * N) % (2 * N) + 1;
  return 2 * k - 1;
}

/// Marks of the 4N boundary points F_1, alpha_1, ..., F_2N, alpha_2N; odd indices positive.
inline std::vector<Mark> disk_marks(int N) {
  std::vector<Mark> m(4 * N);
  for (int k = 1; k <= 2 * N; ++k) {
    m[disk_F(k)] = k % 2 ? Mark::FPlus : Mark::FMinus;
    m[disk_alpha(N, k)] = k % 2 ? Mark::AlphaPlus : Mark::AlphaMinus;
  }
  return m;
}

/// The disk (D^2, F(N)) as one 4N-gon with counterclockwise boundary labels.
inline SuturedSurface standard_disk(int N) {
  if (N < 1) throw StructuralError("standard disk needs N >= 1");
  std::vector<int> cyc(4 * N);
  std::iota(cyc.begin(), cyc.end(), 0);
  return SuturedSurface(Complex::from_vertex_faces(4 * N, {cyc}), disk_marks(N));
}

/// Boundary halfedges of a disk-shaped complex whose boundary vertices are 0..4N-1
/// in counterclockwise order; out[v] runs from v to v+1.
inline std::vector<int> disk_boundary_halfedges(const Complex& c, int N) {
  std::vector<int> out(4 * N, -1);
  for (int v = 0; v < 4 * N; ++v) out[v] = c.boundary_out(v);
  for (int v = 0; v < 4 * N; ++v)
    if (out[v] < 0 || c.head(out[v]) != (v + 1) % (4 * N)) throw StructuralError("complex is not a standard disk model");
  return out;
}

/// The boundary arc beta_i from alpha_i to alpha_{i+2} (indices mod 2N).
inline Chain disk_beta(const Complex& c, int N, int i) {
  auto bd = disk_boundary_halfedges(c, N);
  int v = disk_alpha(N, i);
  Chain ch = c.zero_chain();
  for (int step = 0; step < 4; ++step) {
    c.add_halfedge(ch, bd[v]);
    v = (v + 1) % (4 * N);
  }
  return ch;
}

/// Annulus grid: levels r = 0..kAnnulusLevels, angular positions 0..3.
constexpr int kAnnulusLevels = 6;
constexpr int kAnnulusColumns = 4;
inline int annulus_vertex(int r, int theta) {
  return r * kAnnulusColumns + ((theta % kAnnulusColumns) + kAnnulusColumns) % kAnnulusColumns;
}

/// Annulus with one positive suture on each boundary circle. Each grid quad is
/// split by the diagonal from (r, t) to (r + 1, t + 1).
/// Outer circle (r = 6): F+ at 0, alpha+ at 1, F- at 2, alpha- at 3.
/// Inner circle (r = 0): F- at 0, alpha+ at 1, F+ at 2, alpha- at 3.
inline SuturedSurface standard_annulus() {
  const int R = kAnnulusLevels, M = kAnnulusColumns;
  std::vector<std::vector<int>> faces;
  for (int r = 0; r < R; ++r)
    for (int t = 0; t < M; ++t) {
      int a = annulus_vertex(r, t), b = annulus_vertex(r + 1, t), c = annulus_vertex(r + 1, t + 1),
          d = annulus_vertex(r, t + 1);
      faces.push_back({a, b, c});
      faces.push_back({a, c, d});
    }
  std::vector<Mark> marks((R + 1) * M, Mark::None);
  marks[annulus_vertex(R, 0)] = Mark::FPlus;
  marks[annulus_vertex(R, 1)] = Mark::AlphaPlus;
  marks[annulus_vertex(R, 2)] = Mark::FMinus;
  marks[annulus_vertex(R, 3)] = Mark::AlphaMinus;
  marks[annulus_vertex(0, 0)] = Mark::FMinus;
  marks[annulus_vertex(0, 1)] = Mark::AlphaPlus;
  marks[annulus_vertex(0, 2)] = Mark::FPlus;
  marks[annulus_vertex(0, 3)] = Mark::AlphaMinus;
  return SuturedSurface(Complex::from_vertex_faces((R + 1) * M, faces), marks);
}

/// The halfedge from vertex u to vertex v, or -1.
inline int find_halfedge(const Complex& c, int u, int v) {
  for (int h = 0; h < c.halfedge_count(); ++h)
    if (c.tail(h) == u && c.head(h) == v) return h;
  return -1;
}

/// Halfedges along a vertex path; throws if two consecutive vertices are not adjacent.
inline std::vector<int> vertex_path(const Complex& c, const std::vector<int>& verts) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    int h = find_halfedge(c, verts[i], verts[i + 1]);
    if (h < 0) throw StructuralError("vertex path uses a missing edge");
    out.push_back(h);
  }
  return out;
}

/// Spanning arc beta_1: radial path at angle 1 from the inner to the outer alpha+.
inline Chain annulus_beta1(const Complex& c) {
  std::vector<int> vs;
  for (int r = 0; r <= kAnnulusLevels; ++r) vs.push_back(annulus_vertex(r, 1));
  return c.path_chain(vertex_path(c, vs));
}

/// Core circle beta_2 at the middle level, counterclockwise.
inline Chain annulus_beta2(const Complex& c) {
  const int r = kAnnulusLevels / 2;
  std::vector<int> vs;
  for (int t = 0; t <= kAnnulusColumns; ++t) vs.push_back(annulus_vertex(r, t));
  return c.path_chain(vertex_path(c, vs));
}

}  // namespace sutured
