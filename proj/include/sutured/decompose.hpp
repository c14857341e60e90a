#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <vector>

#include "gluing.hpp"

namespace sutured {

// ============================================================================
// Arcs through the interior
// ============================================================================

/// Faces crossed by an arc, and the halfedges it crosses: crossings[i] lies in
/// faces[i] and its twin in faces[i + 1].
struct DualRoute {
  std::vector<int> faces, crossings;
};

namespace detail {

/// Shortest face walk from `sources` to a face accepted by `done`, crossing only
/// interior non-wall edges and avoiding `forbidden` faces.
template <class Done>
std::optional<DualRoute> face_walk(const Complex& c, const std::vector<int>& sources, Done done,
                                   const std::vector<char>& wall, const std::vector<char>& forbidden) {
  const int F = c.face_count();
  std::vector<int> via(F, -2);
  std::deque<int> queue;
  for (int f : sources)
    if (!forbidden[f] && via[f] == -2) {
      via[f] = -1;
      queue.push_back(f);
    }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    if (done(f)) {
      DualRoute r;
      for (int g = f; g >= 0; g = via[g] < 0 ? -1 : c.face_of(via[g])) {
        r.faces.push_back(g);
        if (via[g] >= 0) r.crossings.push_back(via[g]);
      }
      std::reverse(r.faces.begin(), r.faces.end());
      std::reverse(r.crossings.begin(), r.crossings.end());
      return r;
    }
    for (int h : c.face(f)) {
      const int g = c.face_of(c.twin(h));
      if (g < 0 || wall[h] || forbidden[g] || via[g] != -2) continue;
      via[g] = h;
      queue.push_back(g);
    }
  }
  return std::nullopt;
}

inline std::vector<int> faces_at(const Complex& c, int v) {
  std::vector<int> out;
  for (int h : c.rotation(v))
    if (c.face_of(h) >= 0) out.push_back(c.face_of(h));
  return out;
}

}  // namespace detail

/// Route for an arc from boundary vertex a to boundary vertex b. Walls are
/// halfedges the arc may not cross.
inline std::optional<DualRoute> dual_route(const Complex& c, int a, int b, std::vector<char> wall) {
  wall.resize(c.halfedge_count(), 0);
  std::vector<char> forbidden(c.face_count(), 0);
  auto at_b = [&](int f) {
    for (int h : c.face(f))
      if (c.tail(h) == b) return true;
    return false;
  };
  return detail::face_walk(c, detail::faces_at(c, a), at_b, wall, forbidden);
}

/// Realizes a route in the 1-skeleton: splits every crossed edge, splits every
/// routed face from entry to exit and returns the halfedge path from a to b. A
/// one-edge path is subdivided so that it has an inner vertex. Halfedges not
/// crossed keep their ids.
inline std::vector<int> insert_arc(Complex& c, int a, int b, const DualRoute& route) {
  std::vector<int> mids;
  for (int x : route.crossings) mids.push_back(c.split_edge(x));
  std::vector<int> path;
  int entry = a;
  for (std::size_t i = 0; i < route.faces.size(); ++i) {
    const int exit = i + 1 < route.faces.size() ? mids[i] : b;
    const auto fc = c.face(route.faces[i]);
    const int k = static_cast<int>(fc.size());
    auto corner = [&](int v) {
      for (int p = 0; p < k; ++p)
        if (c.tail(fc[p]) == v) return p;
      throw ConsistencyError("route face misses its entry or exit");
    };
    const int in = corner(entry), out = corner(exit);
    if ((in + 1) % k == out)
      path.push_back(fc[in]);
    else if ((out + 1) % k == in)
      path.push_back(c.twin(fc[out]));
    else
      path.push_back(c.split_face(route.faces[i], in, out));
    entry = exit;
  }
  if (path.size() == 1) {
    const int h = path[0];
    c.split_edge(h);
    path.push_back(c.halfedge_count() - 2);  // second half, see split_edge
  }
  return path;
}

/// Euler characteristic, boundary circle count and n(F) of one component.
struct ComponentShape {
  int euler = 0, circles = 0, n_F = 0;
  bool is_disk() const { return euler == 1 && circles == 1; }
};

inline std::vector<ComponentShape> component_shapes(const SuturedSurface& s) {
  const Complex& c = s.complex();
  const auto& comp = c.vertex_component();
  std::vector<ComponentShape> out(c.component_count());
  for (int v = 0; v < c.vertex_count(); ++v) {
    ++out[comp[v]].euler;
    if (s.mark(v) == Mark::FPlus) ++out[comp[v]].n_F;
  }
  for (int e = 0; e < c.edge_count(); ++e) --out[comp[c.tail(c.edge_rep(e))]].euler;
  for (const auto& f : c.faces()) ++out[comp[c.tail(f[0])]].euler;
  for (const auto& circle : c.boundary_circles()) ++out[comp[c.tail(circle[0])]].circles;
  return out;
}

// ============================================================================
// Cutting
// ============================================================================

/// Sigma cut along one arc, with the gluing that undoes the cut.
struct CutOpen {
  SuturedSurface surface;
  Gluing reverse;
  std::vector<int> copy_of;  // new vertex -> vertex it was split from (identity on old vertices)
};

/// Cuts along a path of interior edges from an alpha+ to an alpha- vertex (or the
/// reverse) whose inner vertices are interior and distinct. Old ids are kept;
/// each path vertex gets a copy on the right of the arc. The new sutures sit at
/// the first inner vertex: F- on the left copy, F+ on the right one.
inline CutOpen cut_open(const SuturedSurface& s, std::vector<int> path) {
  const Complex& c = s.complex();
  auto bad = [](const char* why) { return StructuralError(std::string("cut arc is not properly embedded: ") + why); };
  if (path.size() < 2) throw bad("it needs an inner vertex");
  for (int h : path)
    if (h < 0 || h >= c.halfedge_count() || c.face_of(h) < 0 || c.face_of(c.twin(h)) < 0) throw bad("edge on the boundary");
  if (s.mark(c.tail(path.front())) == Mark::AlphaMinus) {
    std::reverse(path.begin(), path.end());
    for (int& h : path) h = c.twin(h);
  }
  const int k = static_cast<int>(path.size());
  std::vector<int> p{c.tail(path[0])};
  for (int i = 0; i < k; ++i) {
    if (i > 0 && c.tail(path[i]) != p.back()) throw bad("halfedges are not consecutive");
    p.push_back(c.head(path[i]));
  }
  if (s.mark(p.front()) != Mark::AlphaPlus || s.mark(p.back()) != Mark::AlphaMinus) throw bad("ends must be alpha+ and alpha-");
  for (int i = 1; i < k; ++i)
    if (c.is_boundary_vertex(p[i])) throw bad("inner vertex on the boundary");
  {
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw bad("path is not simple");
  }

  std::vector<int> head = c.heads(), twin = c.twins();
  int V = c.vertex_count();
  std::vector<int> right(k + 1);
  CutOpen out;
  out.copy_of.resize(V);
  std::iota(out.copy_of.begin(), out.copy_of.end(), 0);
  for (int i = 0; i <= k; ++i) {
    right[i] = V++;
    out.copy_of.push_back(p[i]);
  }
  // Halfedges ending at a path vertex follow the side of their reversed ray.
  for (int i = 0; i <= k; ++i) {
    const auto& rot = c.rotation(p[i]);
    const int m = static_cast<int>(rot.size());
    auto pos = [&](int h) { return static_cast<int>(std::find(rot.begin(), rot.end(), h) - rot.begin()); };
    const int out_ray = i < k ? pos(path[i]) : -1, in_ray = i > 0 ? pos(c.twin(path[i - 1])) : -1;
    for (int j = 0; j < m; ++j) {
      if (j == out_ray || j == in_ray) continue;
      bool left;
      if (i == 0)
        left = j > out_ray;
      else if (i == k)
        left = j < in_ray;
      else
        left = (j - out_ray + m) % m < (in_ray - out_ray + m) % m;
      if (!left) head[c.twin(rot[j])] = right[i];
    }
  }
  // Path edges: h keeps its face on the left, its twin t the face on the right.
  for (int i = 0; i < k; ++i) {
    const int h = path[i], t = c.twin(h);
    const int hn = static_cast<int>(head.size()), tn = hn + 1;
    head[t] = right[i];
    head.push_back(p[i]);          // new twin of h, ends at the left copy of p_i
    head.push_back(right[i + 1]);  // new twin of t, ends at the right copy of p_{i+1}
    twin[h] = hn;
    twin.push_back(h);
    twin[t] = tn;
    twin.push_back(t);
    out.reverse.gamma.push_back(h);
    out.reverse.gamma_prime.push_back(t);
  }
  std::vector<Mark> marks = s.marks();
  marks.resize(V, Mark::None);
  marks[right[0]] = Mark::AlphaPlus;
  marks[right[k]] = Mark::AlphaMinus;
  marks[p[1]] = Mark::FMinus;
  marks[right[1]] = Mark::FPlus;
  out.surface = SuturedSurface(Complex(V, std::move(head), std::move(twin), c.faces()), std::move(marks));
  return out;
}

// ============================================================================
// Quadrangulation
// ============================================================================

/// Total decomposition into squares (D^2, F(2)), with (D^2, F(1)) components
/// carried as atomic pieces. glue(pieces, tau0) is a subdivision of the input.
struct Quadrangulation {
  std::vector<std::vector<int>> arcs;  // per cut, its left copy as halfedges of `pieces`
  SuturedSurface pieces;               // all pieces in one complex
  Gluing tau0;                         // re-glues the pieces
  std::vector<int> piece_sutures;      // n(F) per piece: 2 for squares, 1 otherwise
  std::vector<std::vector<int>> piece_faces;
  /// Per piece, the halfedges of each of its dividing sets. A square has two:
  /// sutures 1-2 and 3-4 joined, then 4-1 and 2-3, numbered from its first F+.
  std::vector<std::vector<std::vector<int>>> piece_curves;

  int squares() const { return static_cast<int>(std::count(piece_sutures.begin(), piece_sutures.end(), 2)); }

  /// Dividing set on `pieces`: bit i of `choice` picks the curve of the i-th square.
  DividingSet dividing_set(std::uint64_t choice) const {
    std::vector<int> hs;
    int square = 0;
    for (std::size_t i = 0; i < piece_curves.size(); ++i) {
      int option = 0;
      if (piece_sutures[i] == 2) option = (choice >> square++) & 1;
      hs.insert(hs.end(), piece_curves[i][option].begin(), piece_curves[i][option].end());
    }
    return dividing_set_from_halfedges(pieces, hs);
  }
};

namespace detail {

/// Marked vertices of a circle in boundary order, starting at its first F+.
inline std::vector<int> marked_from_first_positive(const SuturedSurface& s, const std::vector<int>& circle) {
  std::vector<int> marked;
  for (int b : circle)
    if (s.mark(s.complex().tail(b)) != Mark::None) marked.push_back(s.complex().tail(b));
  auto it = std::find_if(marked.begin(), marked.end(), [&](int v) { return s.mark(v) == Mark::FPlus; });
  std::rotate(marked.begin(), it, marked.end());
  return marked;
}

/// Inserts arcs joining each (from, to) pair; each later arc treats the earlier
/// ones and `wall` as walls. Returns all halfedges, or empty if a route is missing.
inline std::vector<int> insert_disjoint_arcs(Complex& c, const std::vector<std::pair<int, int>>& ends,
                                             std::vector<char> wall) {
  std::vector<int> all;
  for (auto [u, w] : ends) {
    auto route = dual_route(c, u, w, wall);
    if (!route) return {};
    auto path = insert_arc(c, u, w, *route);
    wall.resize(c.halfedge_count(), 0);
    for (int h : path) wall[h] = wall[c.twin(h)] = 1;
    all.insert(all.end(), path.begin(), path.end());
  }
  return all;
}

/// Stable order putting endpoint pairs untouched by earlier cuts first, so that
/// tau0 stays injective on vertices where possible.
inline std::vector<std::pair<int, int>> fresh_first(std::vector<std::pair<int, int>> ends, const std::vector<char>& used) {
  auto weight = [&](std::pair<int, int> e) { return used[e.first] + used[e.second]; };
  std::stable_sort(ends.begin(), ends.end(), [&](auto x, auto y) { return weight(x) < weight(y); });
  return ends;
}

/// Old to new ids after a collapse; -1 for removed cells.
struct Renumbering {
  std::vector<int> vertex, halfedge;
};

/// Rebuilds one component as a single polygon: faces are merged across a dual
/// spanning tree, then dangling interior edges are pruned. What is left is the
/// boundary plus a spine that carries the topology. Other components and all
/// boundary halfedges survive with renumbered ids.
inline Renumbering collapse_component(SuturedSurface& s, int component) {
  const Complex& c = s.complex();
  const auto& comp = c.vertex_component();
  const int H = c.halfedge_count();
  auto mine = [&](int h) { return comp[c.tail(h)] == component; };
  auto interior = [&](int h) { return c.face_of(h) >= 0 && c.face_of(c.twin(h)) >= 0; };
  std::vector<int> parent(c.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> removed(H, 0);
  for (int e = 0; e < c.edge_count(); ++e) {
    const int h = c.edge_rep(e);
    if (!mine(h) || !interior(h)) continue;
    const int f = find(c.face_of(h)), g = find(c.face_of(c.twin(h)));
    if (f == g) continue;
    parent[std::max(f, g)] = std::min(f, g);
    removed[h] = removed[c.twin(h)] = 1;
  }
  std::vector<int> degree(c.vertex_count(), 0);
  for (int h = 0; h < H; ++h)
    if (!removed[h]) ++degree[c.tail(h)];
  std::deque<int> leaves;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (comp[v] == component && !c.is_boundary_vertex(v) && degree[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    const int v = leaves.front();
    leaves.pop_front();
    if (degree[v] != 1) continue;
    for (int h : c.rotation(v))
      if (!removed[h]) {
        removed[h] = removed[c.twin(h)] = 1;
        --degree[v];
        const int w = c.head(h);
        if (--degree[w] == 1 && !c.is_boundary_vertex(w)) leaves.push_back(w);
        break;
      }
  }
  Renumbering r;
  r.vertex.assign(c.vertex_count(), -1);
  r.halfedge.assign(H, -1);
  int nv = 0, nh = 0;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (comp[v] != component || degree[v] > 0) r.vertex[v] = nv++;
  for (int h = 0; h < H; ++h)
    if (!removed[h]) r.halfedge[h] = nh++;
  std::vector<int> head(nh), twin(nh);
  for (int h = 0; h < H; ++h) {
    if (removed[h]) continue;
    head[r.halfedge[h]] = r.vertex[c.head(h)];
    twin[r.halfedge[h]] = r.halfedge[c.twin(h)];
  }
  std::vector<std::vector<int>> faces;
  bool polygon_done = false;
  for (int f = 0; f < c.face_count(); ++f) {
    if (!mine(c.face(f)[0])) {
      std::vector<int> nf;
      for (int h : c.face(f)) nf.push_back(r.halfedge[h]);
      faces.push_back(std::move(nf));
      continue;
    }
    if (polygon_done) continue;
    polygon_done = true;
    // Walk the merged face: after h, turn to the next surviving halfedge at its head.
    int start = -1, faced = 0;
    for (int h = 0; h < H; ++h)
      if (mine(h) && !removed[h] && c.face_of(h) >= 0) {
        ++faced;
        if (start < 0) start = h;
      }
    std::vector<int> nf;
    for (int h = start;;) {
      nf.push_back(r.halfedge[h]);
      int g = c.next(h);
      while (removed[g]) g = c.next(c.twin(g));
      h = g;
      if (h == start) break;
      if (static_cast<int>(nf.size()) > faced) throw ConsistencyError("collapsed face does not close up");
    }
    if (static_cast<int>(nf.size()) != faced) throw ConsistencyError("component did not collapse to one face");
    faces.push_back(std::move(nf));
  }
  std::vector<Mark> marks(nv, Mark::None);
  for (int v = 0; v < c.vertex_count(); ++v)
    if (r.vertex[v] >= 0) marks[r.vertex[v]] = s.mark(v);
  s = SuturedSurface(Complex(nv, std::move(head), std::move(twin), std::move(faces)), std::move(marks));
  return r;
}

/// Joins corner halfedges x and y of one face (tails u and w) by an interior
/// edge from u to w, reusing a face edge when the corners are adjacent. Returns
/// -1 if the only such edge lies on the boundary.
inline int join_corners(Complex& c, int x, int y) {
  const int f = c.face_of(x);
  const auto& fc = c.face(f);
  const int k = static_cast<int>(fc.size());
  const int i = static_cast<int>(std::find(fc.begin(), fc.end(), x) - fc.begin());
  const int j = static_cast<int>(std::find(fc.begin(), fc.end(), y) - fc.begin());
  auto inner = [&](int h) { return c.face_of(c.twin(h)) >= 0 ? h : -1; };
  if ((i + 1) % k == j) return inner(fc[i]);
  if ((j + 1) % k == i) return inner(c.twin(fc[j]));
  return c.split_face(f, i, j);
}

/// Non-separating arc a -> s -> b in a one-circle component of positive genus
/// that has been collapsed to one polygon: two chords meeting at an interior
/// spine vertex s. Candidates are tried in order and the first arc whose cut leaves the
/// component connected wins. On success `s` carries the inserted arc.
inline std::vector<int> genus_cut(SuturedSurface& surface, int component, const std::vector<std::pair<int, int>>& ends) {
  {
    // Midpoints on the spine: passing through one crosses that spine edge.
    Complex& m = surface.mutable_complex();
    std::vector<int> spine;
    for (int e = 0; e < m.edge_count(); ++e) {
      const int h = m.edge_rep(e);
      if (m.vertex_component()[m.tail(h)] == component && m.face_of(h) >= 0 && m.face_of(m.twin(h)) >= 0) spine.push_back(h);
    }
    for (int h : spine) m.split_edge(h);
    surface.sync_marks();
  }
  const Complex& c = surface.complex();
  const int components = c.component_count();
  int f = -1;
  for (int g = 0; g < c.face_count() && f < 0; ++g)
    if (c.vertex_component()[c.tail(c.face(g)[0])] == component) f = g;
  const std::vector<int> fc = c.face(f);
  auto corners_of = [&](const Complex& cx, int face, int v) {
    std::vector<int> out;
    for (int h : cx.face(face))
      if (cx.tail(h) == v) out.push_back(h);
    return out;
  };
  for (auto [a, b] : ends)
    for (int xa : corners_of(c, f, a))
      for (int xs : fc) {
        const int v = c.tail(xs);
        if (c.is_boundary_vertex(v)) continue;
        SuturedSurface trial = surface;
        Complex& t = trial.mutable_complex();
        const int h1 = join_corners(t, xa, xs);
        if (h1 < 0) continue;
        // The second chord leaves v from any corner sharing a face with b.
        for (int g : {t.face_of(h1), t.face_of(t.twin(h1))})
          for (int ys : corners_of(t, g, v))
            for (int yb : corners_of(t, g, b)) {
              SuturedSurface again = trial;
              const int h2 = join_corners(again.mutable_complex(), ys, yb);
              if (h2 < 0 || h2 == again.complex().twin(h1)) continue;
              std::vector<int> path{h1, h2};
              if (cut_open(again, path).surface.complex().component_count() != components) continue;
              again.sync_marks();
              surface = std::move(again);
              return path;
            }
      }
  return {};
}

/// Inserts the next cut arc into a component that is not yet a piece and returns
/// it, or empty if none is found. The component must have been collapsed.
inline std::vector<int> next_cut(SuturedSurface& s, int component, const ComponentShape& shape,
                                 const std::vector<char>& used) {
  Complex& c = s.mutable_complex();
  const auto comp = c.vertex_component();
  std::vector<std::vector<int>> circles;
  for (const auto& circle : c.boundary_circles())
    if (comp[c.tail(circle[0])] == component) circles.push_back(marked_from_first_positive(s, circle));
  std::vector<std::pair<int, int>> ends;
  if (shape.is_disk()) {
    // From the alpha+ after an F+ to the second alpha- after it: one side keeps
    // three old sutures and becomes a square, the other keeps N - 1 >= 2.
    const auto& m = circles[0];
    const int P = static_cast<int>(m.size());
    for (int r = 0; r < P; r += 4) ends.push_back({m[(r + 1) % P], m[(r + 7) % P]});
  } else {
    // Spokes between two circles never separate. With one circle the arc must
    // not separate either; genus_cut checks that.
    const auto& from = circles[0];
    const auto& to = circles.size() > 1 ? circles[1] : circles[0];
    for (int a : from)
      if (s.mark(a) == Mark::AlphaPlus)
        for (int b : to)
          if (s.mark(b) == Mark::AlphaMinus) ends.push_back({a, b});
  }
  ends = fresh_first(ends, used);
  if (shape.is_disk() || circles.size() > 1) {
    const std::vector<char> no_wall;
    for (auto [a, b] : ends)
      if (auto route = dual_route(c, a, b, no_wall)) {
        auto path = insert_arc(c, a, b, *route);
        s.sync_marks();
        return path;
      }
    return {};
  }
  return genus_cut(s, component, ends);
}

}  // namespace detail

/// Cuts along alpha+ to alpha- arcs until every component is a square or a
/// (D^2, F(1)): disks are split off one square at a time, spokes join boundary
/// circles, and a non-separating arc lowers the genus of a one-circle component.
inline Quadrangulation quadrangulate(const SuturedSurface& s) {
  auto problems = s.validate();
  if (!problems.empty()) throw StructuralError("quadrangulate needs a valid sutured surface: " + problems.front().detail);
  Quadrangulation q;
  SuturedSurface work = s;
  std::vector<char> used(work.complex().vertex_count(), 0);
  auto collapse = [&](int component) {
    auto r = detail::collapse_component(work, component);
    auto remap = [&](std::vector<int>& hs) {
      for (int& h : hs) h = r.halfedge[h];
    };
    for (auto& arc : q.arcs) remap(arc);
    remap(q.tau0.gamma);
    remap(q.tau0.gamma_prime);
    std::vector<char> kept(work.complex().vertex_count(), 0);
    for (std::size_t v = 0; v < r.vertex.size(); ++v)
      if (r.vertex[v] >= 0) kept[r.vertex[v]] = used[v];
    used = std::move(kept);
    return r;
  };
  // Collapses the component holding boundary vertex v; returns v's new id.
  auto collapse_at = [&](int v) { return collapse(work.complex().vertex_component()[v]).vertex[v]; };
  auto boundary_rep = [&](int component) {
    for (const auto& circle : work.complex().boundary_circles())
      if (work.complex().vertex_component()[work.complex().tail(circle[0])] == component) return work.complex().tail(circle[0]);
    throw ConsistencyError("component without boundary");
  };
  for (;;) {
    auto shapes = component_shapes(work);
    int target = -1;
    for (int i = 0; i < static_cast<int>(shapes.size()) && target < 0; ++i)
      if (!(shapes[i].is_disk() && shapes[i].n_F <= 2)) target = i;
    if (target < 0) break;
    {
      const int v = collapse_at(boundary_rep(target));
      target = work.complex().vertex_component()[v];
      shapes = component_shapes(work);
    }
    auto path = detail::next_cut(work, target, shapes[target], used);
    if (path.empty()) throw ConsistencyError("no cut arc found in a component that is not a square");
    const int first = work.complex().tail(path.front()), last = work.complex().head(path.back());
    CutOpen cut = cut_open(work, path);
    used.resize(cut.copy_of.size(), 0);
    for (std::size_t v = 0; v < cut.copy_of.size(); ++v)
      if (cut.copy_of[v] == first || cut.copy_of[v] == last) used[v] = 1;
    q.arcs.push_back(cut.reverse.gamma);
    q.tau0.gamma.insert(q.tau0.gamma.end(), cut.reverse.gamma.begin(), cut.reverse.gamma.end());
    q.tau0.gamma_prime.insert(q.tau0.gamma_prime.end(), cut.reverse.gamma_prime.begin(), cut.reverse.gamma_prime.end());
    work = std::move(cut.surface);
  }
  // Pieces become single polygons.
  std::vector<int> reps;
  for (const auto& circle : work.complex().boundary_circles()) reps.push_back(work.complex().tail(circle[0]));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto r = collapse(work.complex().vertex_component()[reps[i]]);
    for (int& v : reps) v = r.vertex[v];
  }
  // Dividing curves on each piece. Curves of one dividing set are walls for each
  // other, and all curves of the first set are walls for the second, so inserting
  // later curves never splits an edge of an earlier one.
  Complex& c = work.mutable_complex();
  const auto comp = c.vertex_component();
  q.piece_sutures.assign(c.component_count(), 0);
  q.piece_curves.assign(c.component_count(), {});
  std::vector<char> wall;
  for (const auto& circle : std::vector<std::vector<int>>(c.boundary_circles())) {
    const int piece = comp[c.tail(circle[0])];
    auto m = detail::marked_from_first_positive(work, circle);
    const int P = static_cast<int>(m.size());
    q.piece_sutures[piece] = P / 4;
    // Sutures sit at even positions; curves run from F- to F+.
    std::vector<std::vector<std::pair<int, int>>> options;
    if (P == 4)
      options = {{{m[2], m[0]}}};
    else
      options = {{{m[2], m[0]}, {m[6], m[4]}}, {{m[6], m[0]}, {m[2], m[4]}}};
    for (const auto& ends : options) {
      auto hs = detail::insert_disjoint_arcs(c, ends, wall);
      if (hs.empty()) throw ConsistencyError("no room for a dividing curve in a piece");
      wall.resize(c.halfedge_count(), 0);
      for (int h : hs) wall[h] = wall[c.twin(h)] = 1;
      q.piece_curves[piece].push_back(hs);
    }
  }
  work.sync_marks();
  q.piece_faces.assign(c.component_count(), {});
  for (int f = 0; f < c.face_count(); ++f) q.piece_faces[c.vertex_component()[c.tail(c.face(f)[0])]].push_back(f);
  q.pieces = std::move(work);
  return q;
}

}  // namespace sutured
