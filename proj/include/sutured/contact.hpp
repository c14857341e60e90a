#pragma once

#include <optional>
#include <vector>

#include "dividing.hpp"
#include "intersection.hpp"

namespace sutured {

/// V(Sigma, F) = Lambda(H_1(Sigma, alpha+)) together with its dual presentation
/// Lambda(H_1(Sigma, alpha-)).
struct SurfaceAlgebra {
  SuturedSurface surface;
  Ring ring;
  RelativeHomology plus, minus;
  DualPresentation dual;

  int rank() const { return plus.rank(); }
  Multivector omega_plus() const { return top_generator<PrimalSpace>(ring, rank()); }
  DualMultivector omega_minus() const { return top_generator<DualSpace>(ring, rank()); }

  /// Deterministic bases on both sides.
  static SurfaceAlgebra make(const SuturedSurface& s, Ring ring) {
    RelativeHomology p = alpha_plus_homology(s, ring), m = alpha_minus_homology(s, ring);
    return SurfaceAlgebra{s, ring, p, m, DualPresentation(s.complex(), p, m)};
  }
  /// Supplied designated bases (beta classes on disks and annuli).
  static SurfaceAlgebra make(const SuturedSurface& s, Ring ring, const std::vector<Chain>& plus_basis,
                             const std::vector<Chain>& minus_basis) {
    RelativeHomology p = alpha_plus_homology(s, ring), m = alpha_minus_homology(s, ring);
    p.rebase(plus_basis);
    m.rebase(minus_basis);
    return SurfaceAlgebra{s, ring, p, m, DualPresentation(s.complex(), p, m)};
  }
};

/// Homology of a region R^+(K) or R^-(K) relative to its alpha points, with the
/// map of its basis into the host.
struct RegionHomology {
  Subsurface region;
  RelativeHomology homology;
  std::vector<Chain> host_basis;  // basis cycles lifted to the host complex
};

inline RegionHomology region_homology(const SuturedSurface& s, const std::vector<int>& faces, Mark alpha, Ring ring) {
  Subsurface sub = subsurface(s.complex(), s.marks(), faces);
  RelativeHomology h(sub.complex, sub.mask(alpha), ring);
  std::vector<Chain> lifted;
  for (const auto& z : h.basis()) lifted.push_back(sub.lift(s.complex(), z));
  return RegionHomology{std::move(sub), std::move(h), std::move(lifted)};
}

/// Checks that omega generates the top exterior power of a rank-m module.
inline void check_orientation(const Multivector& omega, int m, Ring ring) {
  if (omega.rank() != m || omega.ring() != ring) throw StructuralError("homology orientation has the wrong rank or ring");
  auto top = top_generator<PrimalSpace>(ring, m);
  if (omega.terms().size() != 1 || omega.terms().begin()->first != top.terms().begin()->first ||
      !is_unit(ring, omega.terms().begin()->second))
    throw StructuralError("homology orientation is not a unimodular top-degree generator");
}

/// c(K) = pi_{L(K)} i_*(omega), with omega the ascending wedge of the region basis
/// unless supplied.
inline Multivector contact_element(const SuturedSurface& s, const DividingSet& k, const RelativeHomology& H,
                                   const std::optional<Multivector>& omega = std::nullopt) {
  const Ring ring = H.ring();
  RegionDecomposition r = regions(s, k);
  RegionHomology rh = region_homology(s, r.plus_faces, Mark::AlphaPlus, ring);
  const int m = rh.homology.rank();
  Multivector w = omega ? *omega : top_generator<PrimalSpace>(ring, m);
  check_orientation(w, m, ring);
  std::vector<std::vector<Integer>> cols;
  for (const auto& z : rh.host_basis) cols.push_back(H.coordinates(z));
  Matrix inc = Matrix::from_columns(ring, H.rank(), cols);
  return induced_map(inc, w).grade_project(r.L_K);
}

/// The pair {c(K, omega), c(K, -omega)} over Z.
inline std::vector<Multivector> contact_subset(const SuturedSurface& s, const DividingSet& k, const RelativeHomology& H) {
  Multivector x = contact_element(s, k, H);
  if (x.is_zero()) return {x};
  return {x, -x};
}

/// c^-(K) = pi_{L^-(K)} i^-_*(omega^-) in Lambda(H_1(Sigma, alpha-)), written in
/// the basis dual to the alpha+ basis.
inline DualMultivector negative_contact_element(const SuturedSurface& s, const DividingSet& k,
                                                const DualPresentation& dual,
                                                const std::optional<Multivector>& omega = std::nullopt) {
  const Ring ring = dual.minus().ring();
  RegionDecomposition r = regions(s, k);
  RegionHomology rh = region_homology(s, r.minus_faces, Mark::AlphaMinus, ring);
  const int m = rh.homology.rank();
  Multivector w = omega ? *omega : top_generator<PrimalSpace>(ring, m);
  check_orientation(w, m, ring);
  std::vector<std::vector<Integer>> cols;
  for (const auto& z : rh.host_basis) cols.push_back(dual.dual_coordinates(z));
  Matrix inc = Matrix::from_columns(ring, dual.minus().rank(), cols);
  return reinterpret<DualSpace>(induced_map(inc, w)).grade_project(r.L_minus_K);
}

struct DualityVerdict {
  bool plus_side = false;   // c+ = iota_{c-} Omega+
  bool minus_side = false;  // c- = iota_{c+} Omega-
  bool holds() const { return plus_side && minus_side; }
};

/// Exact over F2, up to sign over Z.
inline DualityVerdict duality_check(const Multivector& cplus, const DualMultivector& cminus) {
  const Ring ring = cplus.ring();
  const int L = cplus.rank();
  auto a = interior(cminus, top_generator<PrimalSpace>(ring, L));
  auto b = interior(cplus, top_generator<DualSpace>(ring, L));
  DualityVerdict v;
  v.plus_side = ring == Ring::F2 ? a == cplus : a.equal_up_to_sign(cplus);
  v.minus_side = ring == Ring::F2 ? b == cminus : b.equal_up_to_sign(cminus);
  return v;
}

inline DualityVerdict duality_check(const SurfaceAlgebra& alg, const DividingSet& k) {
  return duality_check(contact_element(alg.surface, k, alg.plus), negative_contact_element(alg.surface, k, alg.dual));
}

}  // namespace sutured
