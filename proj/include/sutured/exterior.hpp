#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace sutured {

/// Index subset I of [0, 64) encoded as a bit pattern.
using IndexSet = std::uint64_t;

constexpr int kMaxRank = 64;

inline int grade_of(IndexSet s) { return std::popcount(s); }

inline std::vector<int> indices_of(IndexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline IndexSet index_set(const std::vector<int>& idx) {
  IndexSet s = 0;
  for (int i : idx) {
    if (i < 0 || i >= kMaxRank) throw StructuralError("index out of range for an index set");
    s |= IndexSet(1) << i;
  }
  return s;
}

/// (-1)^{#{(i, j) in I x J : i > j}}; the sign of merging I before J.
inline int shuffle_sign(IndexSet I, IndexSet J) {
  int count = 0;
  while (J) {
    int j = std::countr_zero(J);
    J &= J - 1;
    IndexSet above = j >= 63 ? 0 : (~IndexSet(0) << (j + 1));
    count += std::popcount(I & above);
  }
  return (count & 1) ? -1 : 1;
}

struct PrimalSpace {};
struct DualSpace {};

// ============================================================================
// Multivectors
// ============================================================================

/// Element of the exterior algebra on `rank` generators over Z or F2.
/// Stored coefficients are nonzero and already reduced into the ring.
template <class Space>
class BasicMultivector {
public:
  using Terms = std::map<IndexSet, Integer>;

  BasicMultivector() = default;
  BasicMultivector(Ring ring, int rank) : ring_(ring), rank_(rank) {
    if (rank < 0 || rank > kMaxRank) throw StructuralError("multivector rank must lie in [0, 64]");
  }

  static BasicMultivector zero(Ring ring, int rank) { return BasicMultivector(ring, rank); }
  static BasicMultivector one(Ring ring, int rank) { return monomial(ring, rank, 0, 1); }
  static BasicMultivector generator(Ring ring, int rank, int i) {
    return monomial(ring, rank, index_set({i}), 1);
  }
  static BasicMultivector monomial(Ring ring, int rank, IndexSet s, const Integer& c) {
    BasicMultivector m(ring, rank);
    m.add_term(s, c);
    return m;
  }
  /// Degree-1 element with the given coordinates.
  static BasicMultivector from_coordinates(Ring ring, const std::vector<Integer>& coords) {
    BasicMultivector m(ring, static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) m.add_term(IndexSet(1) << i, coords[i]);
    return m;
  }

  Ring ring() const { return ring_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(IndexSet s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(IndexSet s, const Integer& c) {
    if (rank_ < 64 && (s >> rank_) != 0) throw StructuralError("index set exceeds multivector rank");
    Integer v = reduce(ring_, coefficient(s) + c);
    if (v == 0)
      terms_.erase(s);
    else
      terms_[s] = v;
  }

  /// Exterior degree of a homogeneous element; -1 for zero or mixed degree.
  int degree() const {
    int d = -1;
    for (const auto& [s, c] : terms_) {
      int g = grade_of(s);
      if (d == -1) d = g;
      else if (d != g) return -1;
    }
    return d;
  }
  bool is_homogeneous() const { return is_zero() || degree() >= 0; }

  BasicMultivector grade_project(int i) const {
    BasicMultivector out(ring_, rank_);
    for (const auto& [s, c] : terms_)
      if (grade_of(s) == i) out.terms_.emplace(s, c);
    return out;
  }

  BasicMultivector in_ring(Ring target) const {
    BasicMultivector out(target, rank_);
    for (const auto& [s, c] : terms_) out.add_term(s, c);
    return out;
  }

  /// gcd of all coefficients (0 for the zero element).
  Integer content() const {
    Integer g = 0;
    for (const auto& [s, c] : terms_) g = gcd(g, abs(c));
    return g;
  }

  BasicMultivector operator-() const {
    BasicMultivector out = *this;
    if (ring_ == Ring::Integers)
      for (auto& [s, c] : out.terms_) c = -c;
    return out;
  }
  BasicMultivector& operator+=(const BasicMultivector& o) {
    check_compatible(o);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& o) { return *this += -o; }
  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator*(const Integer& k, const BasicMultivector& a) {
    BasicMultivector out(a.ring_, a.rank_);
    for (const auto& [s, c] : a.terms_) out.add_term(s, k * c);
    return out;
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  bool equal_up_to_sign(const BasicMultivector& o) const { return *this == o || *this == -o; }

  void check_compatible(const BasicMultivector& o) const {
    if (ring_ != o.ring_) throw StructuralError("ring mismatch between multivectors");
    if (rank_ != o.rank_) throw StructuralError("rank mismatch between multivectors");
  }

  /// Canonical text: `k·[i1,i2,...]` terms joined by ` + `, `1` for the empty wedge.
  /// Terms are ordered by degree, then lexicographically by index sequence.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (IndexSet s : ordered_sets()) {
      const Integer& c = terms_.at(s);
      if (!first) os << " + ";
      first = false;
      if (s == 0) {
        os << c;
        continue;
      }
      os << c << "·[";
      auto idx = indices_of(s);
      for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
      os << "]";
    }
    return os.str();
  }

  std::vector<IndexSet> ordered_sets() const {
    std::vector<IndexSet> sets;
    for (const auto& [s, c] : terms_) sets.push_back(s);
    std::sort(sets.begin(), sets.end(), [](IndexSet a, IndexSet b) {
      if (grade_of(a) != grade_of(b)) return grade_of(a) < grade_of(b);
      return indices_of(a) < indices_of(b);
    });
    return sets;
  }

private:
  Ring ring_ = Ring::Integers;
  int rank_ = 0;
  Terms terms_;
};

using Multivector = BasicMultivector<PrimalSpace>;
using DualMultivector = BasicMultivector<DualSpace>;

template <class S>
BasicMultivector<S> wedge(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  a.check_compatible(b);
  BasicMultivector<S> out(a.ring(), a.rank());
  for (const auto& [I, x] : a.terms())
    for (const auto& [J, y] : b.terms()) {
      if (I & J) continue;
      Integer c = x * y;
      if (shuffle_sign(I, J) < 0) c = -c;
      out.add_term(I | J, c);
    }
  return out;
}

template <class S>
BasicMultivector<S> wedge_all(Ring ring, int rank, const std::vector<BasicMultivector<S>>& factors) {
  BasicMultivector<S> acc = BasicMultivector<S>::one(ring, rank);
  for (const auto& f : factors) acc = wedge(acc, f);
  return acc;
}

/// <F | E>; the standard bases are dual, so this is the coefficientwise dot product.
inline Integer pair(const DualMultivector& F, const Multivector& E) {
  if (F.ring() != E.ring()) throw StructuralError("ring mismatch in pairing");
  if (F.rank() != E.rank()) throw StructuralError("rank mismatch in pairing");
  Integer s = 0;
  for (const auto& [I, c] : F.terms()) s += c * E.coefficient(I);
  return reduce(F.ring(), s);
}

namespace detail {

template <class Out, class A, class B>
Out contract(const A& a, const B& b) {
  if (a.ring() != b.ring()) throw StructuralError("ring mismatch in interior product");
  if (a.rank() != b.rank()) throw StructuralError("rank mismatch in interior product");
  Out out(a.ring(), a.rank());
  for (const auto& [A_, x] : a.terms())
    for (const auto& [B_, y] : b.terms()) {
      if ((A_ & B_) != A_) continue;
      IndexSet rest = B_ & ~A_;
      Integer c = x * y;
      if (shuffle_sign(A_, rest) < 0) c = -c;
      out.add_term(rest, c);
    }
  return out;
}

}  // namespace detail

/// iota_E F, defined by <iota_E F | G> = <F | E ^ G>.
inline DualMultivector interior(const Multivector& E, const DualMultivector& F) {
  return detail::contract<DualMultivector>(E, F);
}

/// iota_F E, defined by <G | iota_F E> = <F ^ G | E>.
inline Multivector interior(const DualMultivector& F, const Multivector& E) {
  return detail::contract<Multivector>(F, E);
}

/// Algebra map induced by the linear map with matrix m (columns = images of generators).
template <class S>
BasicMultivector<S> induced_map(const Matrix& m, const BasicMultivector<S>& x) {
  if (static_cast<int>(m.cols()) != x.rank()) throw StructuralError("induced map: column count differs from rank");
  if (m.ring() != x.ring()) throw StructuralError("induced map: ring mismatch");
  const int target = static_cast<int>(m.rows());
  std::vector<BasicMultivector<S>> images;
  images.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) images.push_back(BasicMultivector<S>::from_coordinates(m.ring(), m.column(j)));
  BasicMultivector<S> out(x.ring(), target);
  for (const auto& [I, c] : x.terms()) {
    BasicMultivector<S> t = BasicMultivector<S>::one(x.ring(), target);
    for (int i : indices_of(I)) {
      t = wedge(t, images[i]);
      if (t.is_zero()) break;
    }
    out += c * t;
  }
  return out;
}

/// Top generator b_{[0, rank)}.
template <class S>
BasicMultivector<S> top_generator(Ring ring, int rank) {
  IndexSet all = rank >= 64 ? ~IndexSet(0) : ((IndexSet(1) << rank) - 1);
  return BasicMultivector<S>::monomial(ring, rank, all, 1);
}

/// Reinterpret coefficients in the other space (same index sets).
template <class To, class From>
BasicMultivector<To> reinterpret(const BasicMultivector<From>& x) {
  BasicMultivector<To> out(x.ring(), x.rank());
  for (const auto& [s, c] : x.terms()) out.add_term(s, c);
  return out;
}

}  // namespace sutured
