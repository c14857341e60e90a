#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sutured {

using Integer = boost::multiprecision::cpp_int;

enum class Ring { Integers, F2 };

inline const char* ring_name(Ring r) { return r == Ring::F2 ? "f2" : "z"; }

/// Raised when operands disagree in rank, ring or shape.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails; signals a bug or malformed complex.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Integer reduce(Ring r, Integer x) {
  if (r == Ring::F2) {
    x %= 2;
    if (x < 0) x += 2;
  }
  return x;
}

inline bool is_unit(Ring r, const Integer& x) {
  return r == Ring::F2 ? reduce(r, x) == 1 : (x == 1 || x == -1);
}

// ============================================================================
// Dense matrix over Z or F2
// ============================================================================

class Matrix {
public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  /// Columns are the given vectors; all must share one length.
  static Matrix from_columns(Ring ring, std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
    Matrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw StructuralError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
  }

  Ring ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Integer v) { data_[i * cols_ + j] = reduce(ring_, std::move(v)); }
  void add_to(std::size_t i, std::size_t j, const Integer& v) {
    auto& x = data_[i * cols_ + j];
    x += v;
    if (ring_ == Ring::F2) x = reduce(ring_, x);
  }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<Integer> row(std::size_t i) const {
    return std::vector<Integer>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r1) as a new matrix.
  Matrix row_block(std::size_t r0, std::size_t r1) const {
    Matrix b(ring_, r1 - r0, cols_);
    std::copy(data_.begin() + r0 * cols_, data_.begin() + r1 * cols_, b.data_.begin());
    return b;
  }
  Matrix col_block(std::size_t c0, std::size_t c1) const {
    Matrix b(ring_, rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = c0; j < c1; ++j) b.data_[i * (c1 - c0) + (j - c0)] = (*this)(i, j);
    return b;
  }

  Matrix reduced(Ring target) const {
    Matrix m(target, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = reduce(target, data_[k]);
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.ring_ != b.ring_) throw StructuralError("matrix product shape or ring mismatch");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Integer& y = b(k, j);
          if (y != 0) c.data_[i * c.cols_ + j] += x * y;
        }
      }
    if (c.ring_ == Ring::F2)
      for (auto& x : c.data_) x = reduce(Ring::F2, x);
    return c;
  }

  std::vector<Integer> apply(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw StructuralError("matrix-vector shape mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0 && (*this)(i, j) != 0) s += (*this)(i, j) * v[j];
      out[i] = reduce(ring_, s);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Elementary operations; used by the eliminations below.
  void row_add(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& y = data_[j * cols_ + c];
      if (y != 0) add_to(i, c, q * y);
    }
  }
  void col_add(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Integer& y = data_[r * cols_ + j];
      if (y != 0) add_to(r, i, q * y);
    }
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + i], data_[r * cols_ + j]);
  }
  void row_neg(std::size_t i) {
    if (ring_ == Ring::F2) return;
    for (std::size_t c = 0; c < cols_; ++c) data_[i * cols_ + c] = -data_[i * cols_ + c];
  }
  void col_neg(std::size_t j) {
    if (ring_ == Ring::F2) return;
    for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + j] = -data_[r * cols_ + j];
  }

private:
  Ring ring_ = Ring::Integers;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// ============================================================================
// Diagonalization with unimodular transforms
// ============================================================================

/// U * A * W = D with U, W invertible over the ring and D diagonal.
/// Nonzero diagonal entries are positive and occupy the first `rank` slots.
/// The divisibility chain of a true Smith form is not enforced; torsion
/// detection only needs a diagonal form.
struct SmithForm {
  Matrix U, Uinv, W, Winv, D;
  std::size_t rank = 0;

  bool torsion_free() const {
    for (std::size_t i = 0; i < rank; ++i)
      if (!is_unit(D.ring(), D(i, i))) return false;
    return true;
  }
};

namespace detail {

// Integer floor-free quotient toward zero keeps remainders small in magnitude.
inline Integer quotient(Ring r, const Integer& a, const Integer& b) {
  if (r == Ring::F2) return a;  // b == 1 in F2
  return a / b;
}

}  // namespace detail

inline SmithForm smith(const Matrix& A) {
  const Ring ring = A.ring();
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm s{Matrix::identity(ring, m), Matrix::identity(ring, m), Matrix::identity(ring, n),
              Matrix::identity(ring, n), A, 0};
  Matrix& D = s.D;

  auto row_add = [&](std::size_t i, std::size_t j, const Integer& q) {
    D.row_add(i, j, q);
    s.U.row_add(i, j, q);
    s.Uinv.col_add(j, i, -q);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    D.row_swap(i, j);
    s.U.row_swap(i, j);
    s.Uinv.col_swap(i, j);
  };
  auto row_neg = [&](std::size_t i) {
    D.row_neg(i);
    s.U.row_neg(i);
    s.Uinv.col_neg(i);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Integer& q) {
    D.col_add(i, j, q);
    s.W.col_add(i, j, q);
    s.Winv.row_add(j, i, -q);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    D.col_swap(i, j);
    s.W.col_swap(i, j);
    s.Winv.row_swap(i, j);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // Pivot: smallest magnitude, lowest column then lowest row.
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Integer best;
    for (std::size_t j = t; j < n; ++j)
      for (std::size_t i = t; i < m; ++i) {
        const Integer& x = D(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!found || ax < best) {
          found = true, best = ax, pi = i, pj = j;
          if (best == 1) goto chosen;
        }
      }
  chosen:
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = detail::quotient(ring, D(i, t), D(t, t));
        row_add(i, t, -q);
        if (D(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = detail::quotient(ring, D(t, j), D(t, t));
        col_add(j, t, -q);
        if (D(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (D(t, t) < 0) row_neg(t);
    ++t;
  }
  s.rank = t;
  return s;
}

inline std::size_t rank(const Matrix& A) {
  // Row echelon without transform tracking.
  Matrix M = A;
  const Ring ring = M.ring();
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    for (;;) {
      std::size_t piv = M.rows();
      for (std::size_t i = r; i < M.rows(); ++i)
        if (M(i, c) != 0 && (piv == M.rows() || abs(M(i, c)) < abs(M(piv, c)))) piv = i;
      if (piv == M.rows()) break;
      M.row_swap(r, piv);
      bool done = true;
      for (std::size_t i = r + 1; i < M.rows(); ++i) {
        if (M(i, c) == 0) continue;
        M.row_add(i, r, -detail::quotient(ring, M(i, c), M(r, c)));
        if (M(i, c) != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  return r;
}

inline Integer determinant(const Matrix& A) {
  if (A.rows() != A.cols()) throw StructuralError("determinant of a non-square matrix");
  SmithForm s = smith(A);
  if (s.rank < A.rows()) return 0;
  // det(U) det(A) det(W) = prod(D); det(U), det(W) are units.
  auto unit_det = [](const Matrix& M) {
    // Bareiss on a unimodular matrix.
    const std::size_t n = M.rows();
    if (n == 0) return Integer(1);
    if (M.ring() == Ring::F2) return Integer(1);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = M(i, j);
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Integer(0);
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      prev = a[k][k];
    }
    return Integer(sign * a[n - 1][n - 1]);
  };
  Integer prod = 1;
  for (std::size_t i = 0; i < A.rows(); ++i) prod *= s.D(i, i);
  Integer d = prod * unit_det(s.U) * unit_det(s.W);  // inverse of a unit is itself
  return reduce(A.ring(), d);
}

/// Inverse over the ring; throws ConsistencyError when not invertible.
inline Matrix inverse(const Matrix& A) {
  if (A.rows() != A.cols()) throw StructuralError("inverse of a non-square matrix");
  SmithForm s = smith(A);
  if (s.rank < A.rows() || !s.torsion_free())
    throw ConsistencyError("matrix is not invertible over " + std::string(ring_name(A.ring())));
  // A = Uinv D Winv with D = I, so A^{-1} = W U.
  return s.W * s.U;
}

/// Left inverse of an injective matrix with saturated image (L * A = I).
inline Matrix left_inverse(const Matrix& A) {
  SmithForm s = smith(A);
  if (s.rank < A.cols() || !s.torsion_free())
    throw ConsistencyError("matrix has no left inverse over " + std::string(ring_name(A.ring())));
  // A = Uinv [I;0] Winv  =>  L = W [I 0] U.
  return s.W * s.U.row_block(0, A.cols());
}

}  // namespace sutured
