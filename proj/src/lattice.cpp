#include "derham/lattice.hpp"

#include <stdexcept>

namespace derham {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index nrows = static_cast<Index>(rows.size());
  const Index ncols = nrows == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(nrows, ncols);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != ncols)
      throw std::invalid_argument("int_matrix: ragged rows");
    Index j = 0;
    for (long long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

IntVector int_vector(std::initializer_list<long long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long long e : entries) v(i++) = Integer(e);
  return v;
}

LatticeSolver::LatticeSolver(IntMatrix m)
    : rows_(m.rows()), cols_(m.cols()), herm_(hnf(m)) {}

std::optional<IntVector> LatticeSolver::solve(const IntVector& b) const {
  if (b.size() != rows_)
    throw std::invalid_argument("lattice_solve: right-hand side has length " +
                                std::to_string(b.size()) + ", expected " +
                                std::to_string(rows_));
  const IntMatrix& H = herm_.H;
  const Index rank = herm_.rank();
  IntVector residual = b;
  IntVector y = IntVector::Zero(rank);
  for (Index k = 0; k < rank; ++k) {
    const Index row = herm_.pivot_rows[static_cast<std::size_t>(k)];
    // Rows above this pivot are already final; they must match exactly.
    const Index prev = k == 0 ? 0 : herm_.pivot_rows[static_cast<std::size_t>(k - 1)] + 1;
    for (Index r = prev; r < row; ++r)
      if (!is_zero(residual(r))) return std::nullopt;
    const Integer& piv = H(row, k);
    if (!is_zero(residual(row) % piv)) return std::nullopt;
    y(k) = residual(row) / piv;
    if (is_zero(y(k))) continue;
    for (Index r = row; r < rows_; ++r)
      if (!is_zero(H(r, k))) residual(r) -= y(k) * H(r, k);
  }
  for (Index r = 0; r < rows_; ++r)
    if (!is_zero(residual(r))) return std::nullopt;

  IntVector x = IntVector::Zero(cols_);
  for (Index k = 0; k < rank; ++k) {
    if (is_zero(y(k))) continue;
    for (Index c = 0; c < cols_; ++c)
      if (!is_zero(herm_.U(c, k))) x(c) += herm_.U(c, k) * y(k);
  }
  return x;
}

IntMatrix LatticeSolver::kernel() const {
  return herm_.U.rightCols(cols_ - herm_.rank());
}

IntMatrix LatticeSolver::hermite_basis() const { return herm_.H.leftCols(herm_.rank()); }

std::optional<IntVector> lattice_solve(const IntMatrix& m, const IntVector& b) {
  return LatticeSolver(m).solve(b);
}

IntMatrix kernel_basis(const IntMatrix& m) { return LatticeSolver(m).kernel(); }

IntMatrix hstack(std::initializer_list<const IntMatrix*> blocks, Index rows) {
  Index cols = 0;
  for (const IntMatrix* b : blocks) {
    if (b->cols() > 0 && b->rows() != rows)
      throw std::invalid_argument("hstack: row count mismatch");
    cols += b->cols();
  }
  IntMatrix out(rows, cols);
  Index at = 0;
  for (const IntMatrix* b : blocks) {
    if (b->cols() == 0) continue;
    out.middleCols(at, b->cols()) = *b;
    at += b->cols();
  }
  return out;
}

}  // namespace derham
