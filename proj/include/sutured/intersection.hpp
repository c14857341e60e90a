#pragma once

#include <vector>

#include "homology.hpp"

namespace sutured {

/// Algebraic intersection x . y of a relative cycle x and a relative cycle y whose
/// boundaries lie on disjoint vertex sets (x rel alpha+, y rel alpha- in practice).
///
/// y is pushed off the 1-skeleton: near a vertex v it sits at a point of sector
/// corner[v]; along an edge it runs parallel inside an adjacent face; where y ends
/// on the boundary a short radial segment joins that point to the vertex. x stays
/// on the edges, so crossings happen only inside vertex links. Sector k of v lies
/// between rays k and k + 1 of rotation(v). Crossing the ray o counterclockwise
/// adds the outward coefficient of x on o. Around interior vertices the pushoff
/// always turns counterclockwise; a full turn adds the boundary of x at v, which is
/// zero there. Over F2 the chains need only be cycles mod 2; corner changes then
/// shift the count by even amounts.
class IntersectionForm {
public:
  explicit IntersectionForm(const Complex& c, Ring ring = Ring::Integers)
      : c_(c), ring_(ring), pos_(c.halfedge_count(), -1) {
    for (int v = 0; v < c.vertex_count(); ++v) {
      const auto& rot = c.rotation(v);
      for (int k = 0; k < static_cast<int>(rot.size()); ++k) pos_[rot[k]] = k;
    }
  }

  Integer operator()(const Chain& x, const Chain& y, const std::vector<int>& corner = {}) const {
    const Complex& c = c_;
    auto sector = [&](int v) { return corner.empty() ? 0 : corner[v]; };
    auto flux = [&](int h) { return x[c.edge_of(h)] * c.edge_sign(h); };
    // Signed sum of x-flux crossed when moving from sector s to sector t at v.
    auto turn = [&](int v, int s, int t) -> Integer {
      const auto& rot = c.rotation(v);
      const int m = static_cast<int>(rot.size());
      Integer sum = 0;
      if (c.is_boundary_vertex(v)) {
        for (int k = s + 1; k <= t; ++k) sum += flux(rot[k]);
        for (int k = t + 1; k <= s; ++k) sum -= flux(rot[k]);
      } else {
        for (int k = s; k != t;) {
          k = (k + 1) % m;
          sum += flux(rot[k]);
        }
      }
      return sum;
    };
    auto sector_count = [&](int v) {
      const int m = static_cast<int>(c.rotation(v).size());
      return c.is_boundary_vertex(v) ? m - 1 : m;
    };
    Integer total = 0;
    for (int e = 0; e < c.edge_count(); ++e) {
      if (y[e] == 0) continue;
      const int g = c.edge_rep(e), u = c.tail(g), v = c.head(g);
      const bool left = c.face_of(g) >= 0;  // parallel run inside face(g), else inside face(twin g)
      const int ju = pos_[g], jv = pos_[c.twin(g)];
      const int mu = sector_count(u), mv = sector_count(v);
      int su = left ? ju : ju - 1;
      int sv = left ? jv - 1 : jv;
      if (su < 0) su += mu;
      if (sv < 0) sv += mv;
      total += y[e] * (turn(u, sector(u), su) + turn(v, sv, sector(v)));
    }
    auto dy = c.boundary(y);
    auto dx = c.boundary(x);
    for (int w = 0; w < c.vertex_count(); ++w) {
      dy[w] = reduce(ring_, dy[w]);
      if (dy[w] == 0) continue;
      if (!c.is_boundary_vertex(w)) throw StructuralError("pushed-off cycle ends at an interior vertex");
      if (reduce(ring_, dx[w]) != 0) throw StructuralError("intersection of chains ending at a common vertex");
      const auto& rot = c.rotation(w);
      Integer tail_flux = 0;
      for (int k = sector(w) + 1; k < static_cast<int>(rot.size()); ++k) tail_flux += flux(rot[k]);
      total += dy[w] * tail_flux;
    }
    return reduce(ring_, total);
  }

private:
  Complex c_;
  Ring ring_;
  std::vector<int> pos_;
};

/// H_1(Sigma, alpha-) presented as the dual of H_1(Sigma, alpha+) through the
/// intersection form: dual coordinates of an alpha- class z are (x_j . z)_j for
/// the alpha+ basis x_j. The Gram matrix against the alpha- basis must be
/// invertible over the ring.
class DualPresentation {
public:
  DualPresentation(const Complex& c, const RelativeHomology& plus, const RelativeHomology& minus)
      : form_(c, plus.ring()), ring_(plus.ring()), minus_(minus) {
    const int L = plus.rank();
    if (minus.rank() != L) throw ConsistencyError("alpha+ and alpha- homology ranks differ");
    gram_ = Matrix(plus.ring(), L, L);
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) gram_.set(i, j, form_(plus.basis()[i], minus.basis()[j]));
    gram_inverse_ = inverse(gram_);
  }

  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inverse_; }
  const IntersectionForm& form() const { return form_; }

  /// Dual coordinates of an alpha- relative cycle.
  std::vector<Integer> dual_coordinates(const Chain& z) const { return gram_.apply(minus_.coordinates(z)); }
  DualMultivector express_dual(const Chain& z) const {
    return DualMultivector::from_coordinates(ring_, dual_coordinates(z));
  }
  const RelativeHomology& minus() const { return minus_; }
  /// alpha- basis coordinates from dual coordinates.
  std::vector<Integer> minus_coordinates(const std::vector<Integer>& dual) const { return gram_inverse_.apply(dual); }

private:
  IntersectionForm form_;
  Ring ring_;
  RelativeHomology minus_;
  Matrix gram_, gram_inverse_;
};

}  // namespace sutured
