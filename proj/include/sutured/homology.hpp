#pragma once

#include <vector>

#include "exterior.hpp"
#include "surface.hpp"

namespace sutured {

/// H_1(X, S) of a cellular complex X relative to a vertex set S, with a basis of
/// relative cycles and a coordinate projector P (coords = P * chain on cycles).
///
/// With U A W = D the diagonal form of the reduced boundary map C_1 -> C_0 / S,
/// the cycles are spanned by columns rank.. of W and W^-1 gives their coordinates.
/// The face boundaries, written in those coordinates, are diagonalized again; unit
/// invariant factors mean the quotient is free and the trailing coordinates are
/// homology coordinates.
class RelativeHomology {
public:
  RelativeHomology() = default;

  RelativeHomology(const Complex& c, const std::vector<char>& relative, Ring ring)
      : ring_(ring), relative_(relative), d1_(c.boundary1(ring)) {
    if (static_cast<int>(relative_.size()) != c.vertex_count())
      throw StructuralError("relative vertex mask has the wrong size");
    const int E = c.edge_count();
    std::vector<int> rows;
    for (int v = 0; v < c.vertex_count(); ++v)
      if (!relative_[v]) rows.push_back(v);
    Matrix A(ring, rows.size(), E);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int e = 0; e < E; ++e) A.set(i, e, d1_(rows[i], e));
    SmithForm s1 = smith(A);
    const std::size_t r = s1.rank;
    const std::size_t k = E - r;
    Matrix winv_tail = s1.Winv.row_block(r, E);  // cycle coordinates
    Matrix D2 = winv_tail * c.boundary2(ring);
    SmithForm s2 = smith(D2);
    if (!s2.torsion_free()) throw ConsistencyError("relative homology has torsion; complex is malformed");
    const std::size_t sr = s2.rank;
    projector_ = (s2.U * winv_tail).row_block(sr, k);
    Matrix kernel = s1.W.col_block(r, E);
    Matrix gens = kernel * s2.Uinv;
    for (std::size_t j = sr; j < k; ++j) basis_.push_back(gens.column(j));
  }

  Ring ring() const { return ring_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Chain>& basis() const { return basis_; }
  const Matrix& projector() const { return projector_; }
  const std::vector<char>& relative() const { return relative_; }

  bool is_relative_cycle(const Chain& c) const {
    auto b = d1_.apply(c);
    for (std::size_t v = 0; v < b.size(); ++v)
      if (b[v] != 0 && !relative_[v]) return false;
    return true;
  }

  /// Coordinates of the class of a relative cycle.
  std::vector<Integer> coordinates(const Chain& c) const {
    if (static_cast<int>(c.size()) != static_cast<int>(d1_.cols())) throw StructuralError("chain length differs from edge count");
    if (!is_relative_cycle(c)) throw StructuralError("chain boundary is not supported on the relative set");
    return projector_.apply(c);
  }

  Multivector express(const Chain& c) const { return Multivector::from_coordinates(ring_, coordinates(c)); }

  /// Coordinate matrix (rank x count) of the given relative cycles.
  Matrix coordinate_matrix(const std::vector<Chain>& cycles) const {
    std::vector<std::vector<Integer>> cols;
    for (const auto& z : cycles) cols.push_back(coordinates(z));
    return Matrix::from_columns(ring_, rank(), cols);
  }

  /// Replaces the basis by the given cycles; throws ConsistencyError if they are not a basis.
  void rebase(const std::vector<Chain>& cycles) {
    if (static_cast<int>(cycles.size()) != rank()) throw ConsistencyError("designated cycles do not match the rank");
    Matrix M = coordinate_matrix(cycles);
    projector_ = inverse(M) * projector_;
    basis_ = cycles;
  }

private:
  Ring ring_ = Ring::Integers;
  std::vector<char> relative_;
  Matrix d1_;
  Matrix projector_;
  std::vector<Chain> basis_;
};

/// H_1(Sigma, alpha+) with the deterministic basis.
inline RelativeHomology alpha_plus_homology(const SuturedSurface& s, Ring ring) {
  return RelativeHomology(s.complex(), s.mask(Mark::AlphaPlus), ring);
}
inline RelativeHomology alpha_minus_homology(const SuturedSurface& s, Ring ring) {
  return RelativeHomology(s.complex(), s.mask(Mark::AlphaMinus), ring);
}

/// Designated basis beta_1, beta_3, ..., beta_{2N-3} for a disk-shaped complex
/// whose boundary vertices are the standard 0..4N-1.
inline std::vector<Chain> disk_odd_betas(const Complex& c, int N) {
  std::vector<Chain> out;
  for (int i = 1; i <= 2 * N - 3; i += 2) out.push_back(disk_beta(c, N, i));
  return out;
}
/// Designated basis beta_2, beta_4, ..., beta_{2N-2} of H_1(D^2, alpha-).
inline std::vector<Chain> disk_even_betas(const Complex& c, int N) {
  std::vector<Chain> out;
  for (int i = 2; i <= 2 * N - 2; i += 2) out.push_back(disk_beta(c, N, i));
  return out;
}

inline RelativeHomology disk_homology(const Complex& c, int N, Ring ring) {
  std::vector<char> rel(c.vertex_count(), 0);
  for (int k = 1; k <= 2 * N; k += 2) rel[disk_alpha(N, k)] = 1;
  RelativeHomology h(c, rel, ring);
  h.rebase(disk_odd_betas(c, N));
  return h;
}
inline RelativeHomology disk_minus_homology(const Complex& c, int N, Ring ring) {
  std::vector<char> rel(c.vertex_count(), 0);
  for (int k = 2; k <= 2 * N; k += 2) rel[disk_alpha(N, k)] = 1;
  RelativeHomology h(c, rel, ring);
  h.rebase(disk_even_betas(c, N));
  return h;
}

inline RelativeHomology annulus_homology(const SuturedSurface& a, Ring ring) {
  RelativeHomology h = alpha_plus_homology(a, ring);
  h.rebase({annulus_beta1(a.complex()), annulus_beta2(a.complex())});
  return h;
}

}  // namespace sutured
