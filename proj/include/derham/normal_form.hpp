#pragma once

// Hermite and Smith normal forms over the integers, templated on the scalar.
// Both kernels are plain elimination with minimal-absolute-value pivoting;
// they are exact for any scalar with exact division (Integer, or std::int64_t
// while entries stay small).

#include "derham/integer.hpp"

#include <utility>
#include <vector>

namespace derham {

template <typename Scalar>
struct HermiteResult {
  /// Column Hermite form: columns [0, rank) are echelon, the rest are zero.
  Matrix<Scalar> H;
  /// Unimodular, M * U == H.
  Matrix<Scalar> U;
  /// pivot_rows[k] is the leading row of column k of H.
  std::vector<Index> pivot_rows;

  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

template <typename Scalar>
struct SmithResult {
  /// Diagonal, nonnegative, each nonzero entry divides the next.
  Matrix<Scalar> S;
  /// U * M * V == S. Either may be left empty if not requested.
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  /// Inverse of U, tracked alongside it on request.
  Matrix<Scalar> U_inverse;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    const Index k = std::min(S.rows(), S.cols());
    out.reserve(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) out.push_back(S(i, i));
    return out;
  }
};

namespace detail {

// col_dst -= q * col_src, skipping zeros of the source column.
template <typename Scalar>
void axpy_col(Matrix<Scalar>& m, Index dst, Index src, const Scalar& q) {
  for (Index i = 0; i < m.rows(); ++i) {
    const Scalar& s = m(i, src);
    if (!is_zero(s)) m(i, dst) -= q * s;
  }
}

template <typename Scalar>
void axpy_row(Matrix<Scalar>& m, Index dst, Index src, const Scalar& q) {
  for (Index j = 0; j < m.cols(); ++j) {
    const Scalar& s = m(src, j);
    if (!is_zero(s)) m(dst, j) -= q * s;
  }
}

}  // namespace detail

/// Column-style Hermite normal form: M * U = H with U unimodular.
template <typename Derived>
HermiteResult<typename Derived::Scalar> hnf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  HermiteResult<Scalar> res;
  res.H = m;
  res.U = Matrix<Scalar>::Identity(m.cols(), m.cols());
  Matrix<Scalar>& H = res.H;
  Matrix<Scalar>& U = res.U;
  const Index rows = H.rows();
  const Index cols = H.cols();

  Index k = 0;
  for (Index row = 0; row < rows && k < cols; ++row) {
    bool have_pivot = false;
    for (;;) {
      Index best = -1;
      Scalar best_abs = 0;
      for (Index c = k; c < cols; ++c) {
        if (is_zero(H(row, c))) continue;
        Scalar a = abs_value(H(row, c));
        if (best < 0 || a < best_abs) {
          best = c;
          best_abs = a;
        }
      }
      if (best < 0) break;
      have_pivot = true;
      if (best != k) {
        H.col(best).swap(H.col(k));
        U.col(best).swap(U.col(k));
      }
      bool done = true;
      for (Index c = k + 1; c < cols; ++c) {
        if (is_zero(H(row, c))) continue;
        Scalar q = floor_div<Scalar>(H(row, c), H(row, k));
        detail::axpy_col(H, c, k, q);
        detail::axpy_col(U, c, k, q);
        if (!is_zero(H(row, c))) done = false;
      }
      if (done) break;
    }
    if (!have_pivot) continue;
    if (H(row, k) < 0) {
      H.col(k) = -H.col(k);
      U.col(k) = -U.col(k);
    }
    for (Index j = 0; j < k; ++j) {
      if (is_zero(H(row, j))) continue;
      Scalar q = floor_div<Scalar>(H(row, j), H(row, k));
      if (is_zero(q)) continue;
      detail::axpy_col(H, j, k, q);
      detail::axpy_col(U, j, k, q);
    }
    res.pivot_rows.push_back(row);
    ++k;
  }
  return res;
}

/// Which transforms snf() should accumulate. V is often large and unused.
struct SmithRequest {
  bool left = true;
  bool right = true;
  bool left_inverse = false;
};

/// Smith normal form U * M * V = S with the divisibility chain on the
/// diagonal.
template <typename Derived>
SmithResult<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& m,
                                          SmithRequest request = {}) {
  using Scalar = typename Derived::Scalar;
  SmithResult<Scalar> res;
  res.S = m;
  Matrix<Scalar>& S = res.S;
  const Index rows = S.rows();
  const Index cols = S.cols();
  const bool want_left = request.left;
  const bool want_right = request.right;
  const bool want_inverse = request.left_inverse;
  if (want_left) res.U = Matrix<Scalar>::Identity(rows, rows);
  if (want_right) res.V = Matrix<Scalar>::Identity(cols, cols);
  if (want_inverse) res.U_inverse = Matrix<Scalar>::Identity(rows, rows);

  auto swap_rows = [&](Index a, Index b) {
    if (a == b) return;
    S.row(a).swap(S.row(b));
    if (want_left) res.U.row(a).swap(res.U.row(b));
    if (want_inverse) res.U_inverse.col(a).swap(res.U_inverse.col(b));
  };
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    S.col(a).swap(S.col(b));
    if (want_right) res.V.col(a).swap(res.V.col(b));
  };
  // row_dst -= q * row_src; the inverse picks up col_src += q * col_dst.
  auto row_op = [&](Index dst, Index src, const Scalar& q) {
    detail::axpy_row(S, dst, src, q);
    if (want_left) detail::axpy_row(res.U, dst, src, q);
    if (want_inverse) detail::axpy_col(res.U_inverse, src, dst, Scalar(-q));
  };
  auto col_op = [&](Index dst, Index src, const Scalar& q) {
    detail::axpy_col(S, dst, src, q);
    if (want_right) detail::axpy_col(res.V, dst, src, q);
  };

  const Index diag = std::min(rows, cols);
  for (Index t = 0; t < diag; ++t) {
    Index bi = -1, bj = -1;
    Scalar best_abs = 0;
    for (Index j = t; j < cols; ++j)
      for (Index i = t; i < rows; ++i) {
        if (is_zero(S(i, j))) continue;
        Scalar a = abs_value(S(i, j));
        if (bi < 0 || a < best_abs) {
          bi = i;
          bj = j;
          best_abs = a;
        }
      }
    if (bi < 0) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (is_zero(S(i, t))) continue;
        Scalar q = S(i, t) / S(t, t);
        if (!is_zero(q)) row_op(i, t, q);
        if (!is_zero(S(i, t))) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (is_zero(S(t, j))) continue;
        Scalar q = S(t, j) / S(t, t);
        if (!is_zero(q)) col_op(j, t, q);
        if (!is_zero(S(t, j))) clean = false;
      }
      if (!clean) {
        // Bring the smallest leftover in row t / column t to the pivot.
        Index mi = t, mj = t;
        Scalar m_abs = abs_value(S(t, t));
        for (Index i = t + 1; i < rows; ++i)
          if (!is_zero(S(i, t)) && abs_value(S(i, t)) < m_abs) {
            m_abs = abs_value(S(i, t));
            mi = i;
            mj = t;
          }
        for (Index j = t + 1; j < cols; ++j)
          if (!is_zero(S(t, j)) && abs_value(S(t, j)) < m_abs) {
            m_abs = abs_value(S(t, j));
            mi = t;
            mj = j;
          }
        swap_rows(t, mi);
        swap_cols(t, mj);
        continue;
      }
      Index bad = -1;
      for (Index j = t + 1; j < cols && bad < 0; ++j)
        for (Index i = t + 1; i < rows; ++i)
          if (!is_zero(S(i, j)) && !is_zero(S(i, j) % S(t, t))) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, Scalar(-1));
    }
    if (S(t, t) < 0) {
      S.row(t) = -S.row(t);
      if (want_left) res.U.row(t) = -res.U.row(t);
      if (want_inverse) res.U_inverse.col(t) = -res.U_inverse.col(t);
    }
  }
  return res;
}

}  // namespace derham
