#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "contact.hpp"

namespace sutured {

/// Orientation-reversing identification of boundary paths: gamma[i] is glued to
/// gamma_prime[i] so that tail(gamma[i]) ~ head(gamma_prime[i]).
struct Gluing {
  std::vector<int> gamma, gamma_prime;

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < gamma.size(); ++i) out.push_back({gamma[i], gamma_prime[i]});
    return out;
  }
};

namespace detail {

inline Mark glued_mark(Mark m) {
  switch (m) {
    case Mark::FPlus: return Mark::FMinus;
    case Mark::FMinus: return Mark::FPlus;
    default: return m;
  }
}

/// Vertices where a set of boundary halfedges starts or stops.
inline std::vector<int> path_endpoints(const Complex& c, const std::vector<int>& hs) {
  std::vector<int> in(c.vertex_count(), 0), out(c.vertex_count(), 0);
  for (int h : hs) ++out[c.tail(h)], ++in[c.head(h)];
  std::vector<int> ends;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (in[v] != out[v]) ends.push_back(v);
  return ends;
}

}  // namespace detail

/// The vertex map of tau on gamma, or nullopt when it is not a function.
inline std::optional<std::map<int, int>> gluing_vertex_map(const Complex& c, const Gluing& g) {
  std::map<int, int> tau;
  auto put = [&](int v, int w) {
    auto [it, fresh] = tau.insert({v, w});
    return fresh || it->second == w;
  };
  for (auto [b, bp] : g.pairs())
    if (!put(c.tail(b), c.head(bp)) || !put(c.head(b), c.tail(bp))) return std::nullopt;
  return tau;
}

/// Conditions on tau itself; the quotient is checked by glue().
inline std::vector<Violation> validate_gluing(const SuturedSurface& s, const Gluing& g) {
  std::vector<Violation> out;
  const Complex& c = s.complex();
  if (g.gamma.size() != g.gamma_prime.size()) {
    out.push_back({"gluing_size", "gamma and gamma' have different lengths", -1});
    return out;
  }
  if (g.gamma.empty()) return out;
  std::vector<int> used(c.halfedge_count(), 0);
  for (int h : g.gamma) {
    if (h < 0 || h >= c.halfedge_count() || !c.is_boundary(h)) {
      out.push_back({"gluing_halfedge", "gamma uses a halfedge that is not on the boundary", h});
      return out;
    }
    ++used[h];
  }
  for (int h : g.gamma_prime) {
    if (h < 0 || h >= c.halfedge_count() || !c.is_boundary(h)) {
      out.push_back({"gluing_halfedge", "gamma' uses a halfedge that is not on the boundary", h});
      return out;
    }
    ++used[h];
  }
  for (int h = 0; h < c.halfedge_count(); ++h)
    if (used[h] > 1) out.push_back({"gluing_overlap", "halfedge used twice by gamma and gamma'", h});
  for (const auto* side : {&g.gamma, &g.gamma_prime})
    for (int v : detail::path_endpoints(c, *side))
      if (!is_alpha(s.mark(v))) out.push_back({"gluing_endpoint", "gamma or gamma' ends away from alpha", v});
  auto tau = gluing_vertex_map(c, g);
  if (!tau) {
    out.push_back({"gluing_map", "tau is not a function on vertices", -1});
    return out;
  }
  std::map<int, int> preimage;
  for (auto [v, w] : *tau) {
    if (v == w) out.push_back({"gluing_fixed_point", "tau fixes a vertex", v});
    if (detail::glued_mark(s.mark(v)) != s.mark(w))
      out.push_back({"gluing_marks", "tau must send alpha+ to alpha+, alpha- to alpha-, F+ to F- and F- to F+", v});
    if (!preimage.insert({w, v}).second) out.push_back({"gluing_map", "tau is not injective on vertices", w});
  }
  return out;
}

/// (Sigma_tau, F_tau) with the quotient maps.
struct GluedSurface {
  SuturedSurface result;
  Quotient quotient;
  std::vector<char> image_alpha_plus;  // phi_tau(alpha+) as a vertex mask on the result
  std::vector<int> swallowed;          // phi_tau(alpha+) minus alpha+_tau, ascending

  std::vector<char> swallowed_mask() const {
    std::vector<char> m(image_alpha_plus.size(), 0);
    for (int v : swallowed) m[v] = 1;
    return m;
  }
};

/// All violations of the gluing and its quotient.
inline std::vector<Violation> gluing_violations(const SuturedSurface& s, const Gluing& g,
                                                GluedSurface* result = nullptr) {
  auto out = validate_gluing(s, g);
  if (!out.empty()) return out;
  Quotient q;
  try {
    q = identify_boundary(s.complex(), g.pairs());
  } catch (const StructuralError& e) {
    out.push_back({"quotient", e.what(), -1});
    return out;
  }
  const Complex& qc = q.complex;
  std::vector<Mark> marks(qc.vertex_count(), Mark::None);
  std::vector<char> image(qc.vertex_count(), 0);
  for (int v = 0; v < s.complex().vertex_count(); ++v) {
    const int w = q.vertex_map[v];
    if (s.mark(v) == Mark::AlphaPlus) image[w] = 1;
    if (!qc.is_boundary_vertex(w) || s.mark(v) == Mark::None) continue;
    if (marks[w] != Mark::None && marks[w] != s.mark(v))
      out.push_back({"quotient_marks", "identified boundary vertices carry different marks", v});
    marks[w] = s.mark(v);
  }
  SuturedSurface glued(qc, marks);
  for (auto& v : glued.validate()) out.push_back(v);
  if (result && out.empty()) {
    result->result = glued;
    result->image_alpha_plus = image;
    result->swallowed.clear();
    for (int w = 0; w < qc.vertex_count(); ++w)
      if (image[w] && marks[w] != Mark::AlphaPlus) result->swallowed.push_back(w);
    result->quotient = std::move(q);
  }
  return out;
}

/// Glues and validates; throws StructuralError naming the first violation.
inline GluedSurface glue(const SuturedSurface& s, const Gluing& g) {
  GluedSurface out;
  auto v = gluing_violations(s, g, &out);
  if (!v.empty()) throw StructuralError("invalid gluing (" + v.front().kind + "): " + v.front().detail);
  return out;
}

/// Image of a host chain under the quotient map.
inline Chain pushforward_chain(const GluedSurface& g, const Complex& host, const Chain& x) {
  const Complex& qc = g.result.complex();
  Chain y = qc.zero_chain();
  for (int e = 0; e < host.edge_count(); ++e) {
    if (x[e] == 0) continue;
    int h = host.edge_rep(e);
    Integer k = x[e];
    if (g.quotient.halfedge_map[h] < 0) {  // faceless twin of a glued halfedge
      h = host.twin(h);
      k = -k;
    }
    qc.add_halfedge(y, g.quotient.halfedge_map[h], k);
  }
  return y;
}

/// Image of a dividing set; faces keep their ids under the quotient.
inline DividingSet push_dividing_set(const GluedSurface& g, const DividingSet& k) {
  DividingSet out;
  out.sign = k.sign;
  for (int h : k.K) {
    int n = g.quotient.halfedge_map[h];
    if (n < 0) throw StructuralError("dividing set runs along the glued boundary");
    out.K.push_back(n);
  }
  return out;
}

/// Phi_tau = iota_eta o phi_tau*, from Lambda(H_1(Sigma, alpha+)) in the source basis
/// to Lambda(H_1(Sigma_tau, alpha+_tau)) in the target basis.
///
/// Intermediate group P = H_1(Sigma_tau, phi_tau(alpha+)). eta is the wedge of the
/// boundary-coefficient functionals eps_v of the swallowed vertices in ascending
/// order. The result is read back through a left inverse of j : target -> P and
/// checked to lie in Lambda(Im j).
class GluingMorphism {
public:
  /// `intermediate_basis` optionally fixes the basis of P; the result does not depend on it.
  GluingMorphism(const SuturedSurface& host, const GluedSurface& glued, const RelativeHomology& source,
                 const RelativeHomology& target, const std::vector<Chain>& intermediate_basis = {})
      : ring_(source.ring()),
        P_(glued.result.complex(), glued.image_alpha_plus, source.ring()),
        source_rank_(source.rank()),
        target_rank_(target.rank()) {
    const Complex& qc = glued.result.complex();
    if (!intermediate_basis.empty()) P_.rebase(intermediate_basis);
    std::vector<std::vector<Integer>> cols;
    for (const auto& z : source.basis()) cols.push_back(P_.coordinates(pushforward_chain(glued, host.complex(), z)));
    push_ = Matrix::from_columns(ring_, P_.rank(), cols);
    eta_ = DualMultivector::one(ring_, P_.rank());
    for (int v : glued.swallowed) {
      std::vector<Integer> eps;
      for (const auto& b : P_.basis()) eps.push_back(reduce(ring_, qc.boundary(b)[v]));
      eta_ = wedge(eta_, DualMultivector::from_coordinates(ring_, eps));
    }
    cols.clear();
    for (const auto& z : target.basis()) cols.push_back(P_.coordinates(z));
    j_ = Matrix::from_columns(ring_, P_.rank(), cols);
    j_left_ = left_inverse(j_);
  }

  const RelativeHomology& intermediate() const { return P_; }
  const Matrix& pushforward() const { return push_; }
  const Matrix& inclusion() const { return j_; }
  const DualMultivector& eta() const { return eta_; }

  /// iota_eta phi_*(x) in P coordinates.
  Multivector in_intermediate(const Multivector& x) const {
    if (x.rank() != source_rank_ || x.ring() != ring_) throw StructuralError("element is not in the source algebra");
    return interior(eta_, induced_map(push_, x));
  }

  /// Reads an element of Lambda(Im j) in target coordinates.
  Multivector to_target(const Multivector& y) const {
    Multivector z = induced_map(j_left_, y);
    if (!(induced_map(j_, z) == y)) throw ConsistencyError("gluing morphism left the subalgebra of classes with boundary in alpha+");
    return z;
  }

  Multivector operator()(const Multivector& x) const { return to_target(in_intermediate(x)); }

  /// Matrix on basis multivectors: column A is the image of e_A, rows indexed by
  /// target subsets in ascending mask order.
  Matrix matrix() const {
    const std::size_t rows = std::size_t(1) << target_rank_, cols = std::size_t(1) << source_rank_;
    Matrix m(ring_, rows, cols);
    for (std::size_t a = 0; a < cols; ++a) {
      Multivector img = (*this)(Multivector::monomial(ring_, source_rank_, IndexSet(a), 1));
      for (const auto& [s, c] : img.terms()) m.set(static_cast<std::size_t>(s), a, c);
    }
    return m;
  }

private:
  Ring ring_;
  RelativeHomology P_;
  int source_rank_, target_rank_;
  Matrix push_, j_, j_left_;
  DualMultivector eta_;
};

/// Disjoint union of surfaces with dividing sets; ids shift as in disjoint_union.
inline std::pair<SuturedSurface, DividingSet> disjoint_union(const std::vector<std::pair<SuturedSurface, DividingSet>>& parts) {
  std::vector<SuturedSurface> surfaces;
  DividingSet k;
  int hoff = 0;
  for (const auto& [s, d] : parts) {
    surfaces.push_back(s);
    for (int h : d.K) k.K.push_back(h + hoff);
    k.sign.insert(k.sign.end(), d.sign.begin(), d.sign.end());
    hoff += s.complex().halfedge_count();
  }
  return {disjoint_union(surfaces), k};
}

/// Phi_tau(c(K)) = +-c(K_tau); exact over F2.
inline bool check_respect(const SuturedSurface& host, const GluedSurface& glued, const RelativeHomology& source,
                          const RelativeHomology& target, const DividingSet& k) {
  GluingMorphism phi(host, glued, source, target);
  Multivector lhs = phi(contact_element(host, k, source));
  Multivector rhs = contact_element(glued.result, push_dividing_set(glued, k), target);
  return source.ring() == Ring::F2 ? lhs == rhs : lhs.equal_up_to_sign(rhs);
}

// ============================================================================
// Boundary arcs and random gluings
// ============================================================================

/// Boundary halfedges from vertex v forward along its circle for `length` steps.
inline std::vector<int> boundary_arc(const Complex& c, int v, int length) {
  std::vector<int> out;
  int b = c.boundary_out(v);
  if (b < 0) throw StructuralError("arc start is not a boundary vertex");
  for (int i = 0; i < length; ++i, b = c.next_boundary(b)) out.push_back(b);
  return out;
}

/// Gluing of the arc of `length` halfedges starting at u to the arc of the same
/// length ending at w, traversed backwards.
inline Gluing arc_gluing(const Complex& c, int u, int w, int length) {
  Gluing g;
  g.gamma = boundary_arc(c, u, length);
  // The arc ending at w: walk back `length` steps from w.
  std::vector<int> back;
  int b = c.boundary_out(w);
  if (b < 0) throw StructuralError("arc end is not a boundary vertex");
  for (int i = 0; i < length; ++i) {
    // Predecessor of b on its circle.
    const auto& circle = c.boundary_circles()[c.circle_of(b)];
    auto it = std::find(circle.begin(), circle.end(), b);
    b = it == circle.begin() ? circle.back() : *std::prev(it);
    back.push_back(b);
  }
  g.gamma_prime = back;  // back[i] pairs with gamma[i]: tail(gamma[i]) ~ head(back[i])
  return g;
}

namespace detail {

/// Alpha vertices on boundary circles, in circle order with their positions.
inline std::vector<int> boundary_alphas(const SuturedSurface& s) {
  std::vector<int> out;
  for (const auto& circle : s.complex().boundary_circles())
    for (int b : circle)
      if (is_alpha(s.mark(s.complex().tail(b)))) out.push_back(s.complex().tail(b));
  return out;
}

/// Halfedges from u forward until `marked_points` marked vertices are passed, -1 if the circle is shorter.
inline int marked_steps(const SuturedSurface& s, int u, int marked_points) {
  const Complex& c = s.complex();
  int b = c.boundary_out(u), steps = 0, seen = 0;
  const int limit = static_cast<int>(c.boundary_circles()[c.circle_of(b)].size());
  while (steps < limit) {
    ++steps;
    int v = c.head(b);
    if (s.mark(v) != Mark::None && ++seen == marked_points) return steps;
    b = c.next_boundary(b);
  }
  return -1;
}

}  // namespace detail

/// A random valid gluing of one arc onto another; nullopt if none found in `tries`.
/// Arcs run between alpha vertices and cover `2 m` marked intervals (m >= 1).
template <class Rng>
std::optional<Gluing> random_gluing(Rng& rng, const SuturedSurface& s, int tries = 200) {
  auto alphas = detail::boundary_alphas(s);
  if (alphas.size() < 2) return std::nullopt;
  const Complex& c = s.complex();
  std::uniform_int_distribution<std::size_t> pick(0, alphas.size() - 1);
  for (int t = 0; t < tries; ++t) {
    int u = alphas[pick(rng)];
    int m = std::uniform_int_distribution<int>(1, 3)(rng);
    int len = detail::marked_steps(s, u, 2 * m);
    if (len <= 0) continue;
    // gamma' has the same length in halfedges; validation checks its marks.
    int w = alphas[pick(rng)];
    Gluing g;
    try {
      g = arc_gluing(c, u, w, len);
    } catch (const StructuralError&) {
      continue;
    }
    if (gluing_violations(s, g).empty()) return g;
  }
  return std::nullopt;
}

/// A surface with a dividing set and a gluing on it.
struct GluingInstance {
  SuturedSurface host;
  DividingSet K;
  Gluing tau;
};

/// Random instance: one to three chord-diagram disks (N <= max_n), up to two
/// preliminary gluings to reach annuli and higher genus, then the gluing under test.
template <class Rng>
GluingInstance random_gluing_instance(Rng& rng, int max_n = 4) {
  for (;;) {
    const int pieces = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::pair<SuturedSurface, DividingSet>> parts;
    for (int i = 0; i < pieces; ++i) {
      const int N = std::uniform_int_distribution<int>(1, max_n)(rng);
      auto ds = enumerate_chord_diagrams(N);
      auto cc = chord_to_dividing_set(ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)]);
      parts.push_back({cc.surface, cc.K});
    }
    auto [host, k] = disjoint_union(parts);
    const int pre = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < pre; ++i) {
      auto g = random_gluing(rng, host);
      if (!g) break;
      GluedSurface glued = glue(host, *g);
      k = push_dividing_set(glued, k);
      host = glued.result;
    }
    auto tau = random_gluing(rng, host);
    if (tau) return GluingInstance{host, k, *tau};
  }
}

}  // namespace sutured
