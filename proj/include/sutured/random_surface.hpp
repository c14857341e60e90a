#pragma once

#include <random>
#include <vector>

#include "surface.hpp"

namespace sutured {

struct RandomSurfaceOptions {
  int max_genus = 2;          // total over components
  int max_circles = 3;        // total boundary circles
  int max_sutures = 8;        // total n(F)
  int max_refinements = 10;
};

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// One polygon with word a1 b1 a1^-1 b1^-1 ... followed by c_i d_i c_i^-1 per boundary
/// circle; the d_i stay free and become the boundary loops.
inline Complex polygon_surface(int genus, int circles) {
  if (genus == 0 && circles == 1) {
    // The folded word c d c^-1 is a disk; use a plain triangle instead.
    return Complex::from_vertex_faces(3, {{0, 1, 2}});
  }
  std::vector<std::pair<int, int>> glue_sides;  // side i glued reversed to side j
  int S = 0;
  for (int g = 0; g < genus; ++g) {
    glue_sides.push_back({S, S + 2});
    glue_sides.push_back({S + 1, S + 3});
    S += 4;
  }
  for (int b = 0; b < circles; ++b) {
    glue_sides.push_back({S, S + 2});
    S += 3;
  }
  std::vector<int> cyc(S);
  for (int i = 0; i < S; ++i) cyc[i] = i;
  Complex poly = Complex::from_vertex_faces(S, {cyc});
  // Face halfedge i runs from corner i to corner i + 1.
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : glue_sides) pairs.push_back({i, j});
  return identify_boundary(poly, pairs).complex;
}

inline void random_refine(Complex& c, std::mt19937_64& rng, int steps) {
  for (int s = 0; s < steps; ++s) {
    int op = uniform(rng, 0, 2);
    if (op == 0) {
      c.split_edge(uniform(rng, 0, c.halfedge_count() - 1));
    } else if (op == 1) {
      int f = uniform(rng, 0, c.face_count() - 1);
      int k = static_cast<int>(c.face(f).size());
      if (k < 4) {
        c.cone_face(f);
        continue;
      }
      int i = uniform(rng, 0, k - 1);
      int j = (i + uniform(rng, 2, k - 2)) % k;
      c.split_face(f, i, j);
    } else {
      c.cone_face(uniform(rng, 0, c.face_count() - 1));
    }
  }
}

}  // namespace detail

/// Connected sutured surface of the given genus with one entry of `sutures` per
/// boundary circle (the count of F+ points on it). Refinement and mark placement
/// are drawn from rng.
inline SuturedSurface random_component(std::mt19937_64& rng, int genus, const std::vector<int>& sutures,
                                       int refinements) {
  Complex c = detail::polygon_surface(genus, static_cast<int>(sutures.size()));
  detail::random_refine(c, rng, refinements);
  // Lengthen every boundary circle to at least 4n + slack vertices.
  for (std::size_t i = 0; i < sutures.size(); ++i) {
    const int need = 4 * sutures[i] + detail::uniform(rng, 0, 3);
    while (static_cast<int>(c.boundary_circles()[i].size()) < need) {
      const auto& circle = c.boundary_circles()[i];
      c.split_edge(circle[detail::uniform(rng, 0, static_cast<int>(circle.size()) - 1)]);
    }
  }
  std::vector<Mark> marks(c.vertex_count(), Mark::None);
  static const Mark pattern[4] = {Mark::FPlus, Mark::AlphaPlus, Mark::FMinus, Mark::AlphaMinus};
  for (std::size_t i = 0; i < sutures.size(); ++i) {
    const auto& circle = c.boundary_circles()[i];
    const int len = static_cast<int>(circle.size()), m = 4 * sutures[i];
    std::vector<int> pos(len);
    for (int k = 0; k < len; ++k) pos[k] = k;
    std::shuffle(pos.begin(), pos.end(), rng);
    pos.resize(m);
    std::sort(pos.begin(), pos.end());
    const int shift = detail::uniform(rng, 0, 3);
    for (int k = 0; k < m; ++k) marks[c.tail(circle[pos[k]])] = pattern[(k + shift) % 4];
  }
  return SuturedSurface(std::move(c), std::move(marks));
}

/// Random valid sutured surface within the option bounds; one or two components.
inline SuturedSurface random_sutured_surface(std::mt19937_64& rng, const RandomSurfaceOptions& opt = {}) {
  const int circles = detail::uniform(rng, 1, opt.max_circles);
  const int sutures = detail::uniform(rng, circles, std::max(circles, opt.max_sutures));
  // Distribute sutures over circles, at least one each.
  std::vector<int> per(circles, 1);
  for (int k = circles; k < sutures; ++k) ++per[detail::uniform(rng, 0, circles - 1)];
  const int components = circles >= 2 && detail::uniform(rng, 0, 3) == 0 ? 2 : 1;
  int genus_left = detail::uniform(rng, 0, opt.max_genus);
  std::vector<SuturedSurface> parts;
  std::size_t next = 0;
  for (int comp = 0; comp < components; ++comp) {
    const std::size_t take = comp + 1 == components ? per.size() - next : 1;
    std::vector<int> mine(per.begin() + next, per.begin() + next + take);
    next += take;
    const int g = comp + 1 == components ? genus_left : detail::uniform(rng, 0, genus_left);
    genus_left -= g;
    parts.push_back(random_component(rng, g, mine, detail::uniform(rng, 0, opt.max_refinements)));
  }
  SuturedSurface s = parts.size() == 1 ? parts.front() : disjoint_union(parts);
  auto bad = s.validate();
  if (!bad.empty()) throw ConsistencyError("random surface generator produced an invalid surface: " + bad.front().kind);
  return s;
}

}  // namespace sutured
