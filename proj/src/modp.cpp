#include "derham/modp.hpp"

#include <stdexcept>
#include <string>

namespace derham {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void require_small_prime(Prime p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw std::invalid_argument("expected a prime at most " + std::to_string(kMaxPrime) +
                                ", got " + std::to_string(p));
}

ModMatrix reduce_mod_p(const IntMatrix& m, Prime p) {
  ModMatrix out(m.rows(), m.cols());
  const Integer P = p;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      out(i, j) = is_zero(m(i, j)) ? 0 : static_cast<std::int64_t>(mod_floor(m(i, j), P));
  return out;
}

ModVector reduce_mod_p(const IntVector& v, Prime p) {
  ModVector out(v.size());
  const Integer P = p;
  for (Index i = 0; i < v.size(); ++i)
    out(i) = is_zero(v(i)) ? 0 : static_cast<std::int64_t>(mod_floor(v(i), P));
  return out;
}

std::int64_t inverse_mod(std::int64_t a, Prime p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("inverse_mod: zero has no inverse");
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

ColumnEchelon column_echelon(const ModMatrix& m, Prime p) {
  ColumnEchelon res;
  res.E = m;
  for (Index j = 0; j < res.E.cols(); ++j)
    for (Index i = 0; i < res.E.rows(); ++i) res.E(i, j) = ((res.E(i, j) % p) + p) % p;
  res.U = ModMatrix::Identity(m.cols(), m.cols());
  ModMatrix& E = res.E;
  ModMatrix& U = res.U;
  const Index cols = E.cols();
  Index k = 0;
  for (Index row = 0; row < E.rows() && k < cols; ++row) {
    Index piv = -1;
    for (Index c = k; c < cols; ++c)
      if (E(row, c) != 0) {
        piv = c;
        break;
      }
    if (piv < 0) continue;
    if (piv != k) {
      E.col(piv).swap(E.col(k));
      U.col(piv).swap(U.col(k));
    }
    const std::int64_t inv = inverse_mod(E(row, k), p);
    E.col(k) = (E.col(k) * inv).unaryExpr([p](std::int64_t v) { return v % p; });
    U.col(k) = (U.col(k) * inv).unaryExpr([p](std::int64_t v) { return v % p; });
    for (Index c = 0; c < cols; ++c) {
      if (c == k || E(row, c) == 0) continue;
      const std::int64_t f = E(row, c);
      E.col(c) = (E.col(c) - f * E.col(k)).unaryExpr([p](std::int64_t v) { return ((v % p) + p) % p; });
      U.col(c) = (U.col(c) - f * U.col(k)).unaryExpr([p](std::int64_t v) { return ((v % p) + p) % p; });
    }
    res.pivot_rows.push_back(row);
    ++k;
  }
  return res;
}

Index rank_mod_p(const ModMatrix& m, Prime p) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return column_echelon(m, p).rank();
}

ModMatrix kernel_mod_p(const ModMatrix& m, Prime p) {
  ColumnEchelon ce = column_echelon(m, p);
  return ce.U.rightCols(m.cols() - ce.rank());
}

ModMatrix multiply_mod_p(const ModMatrix& a, const ModMatrix& b, Prime p) {
  ModMatrix out = ModMatrix::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k)
    for (Index i = 0; i < a.rows(); ++i) {
      const std::int64_t aik = a(i, k) % p;
      if (aik == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) out(i, j) = (out(i, j) + aik * (b(k, j) % p)) % p;
    }
  for (Index j = 0; j < out.cols(); ++j)
    for (Index i = 0; i < out.rows(); ++i) out(i, j) = (out(i, j) + p) % p;
  return out;
}

bool is_zero_mod_p(const ModMatrix& m, Prime p) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) % p != 0) return false;
  return true;
}

ModMatrix inverse_mod_p(const ModMatrix& m, Prime p) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse_mod_p: matrix is not square");
  ColumnEchelon ce = column_echelon(m, p);
  if (ce.rank() != m.rows()) throw std::domain_error("inverse_mod_p: matrix is singular");
  // A square full-rank reduced column echelon form is the identity.
  return ce.U;
}

ModpHomology::ModpHomology(const ModMatrix& d_in, const ModMatrix& d_out, Prime p) : p_(p) {
  const Index n = d_in.rows();
  if (d_out.cols() != n)
    throw std::invalid_argument("ModpHomology: d_out and d_in are not composable");
  if (!is_zero_mod_p(multiply_mod_p(d_out, d_in, p), p))
    throw std::invalid_argument("ModpHomology: d_out * d_in is not zero mod p");

  ModMatrix cycles = d_out.rows() == 0 ? ModMatrix(ModMatrix::Identity(n, n)) : kernel_mod_p(d_out, p);
  ColumnEchelon bce = column_echelon(d_in, p);
  ModMatrix boundaries = bce.E.leftCols(bce.rank());
  cycle_dim_ = cycles.cols();
  boundary_dim_ = boundaries.cols();

  // Greedily extend the boundaries by cycles, then by standard vectors, to a
  // basis of 𝔽_p^n. The cycles picked up are the homology lifts.
  ModMatrix basis(n, n);
  Index filled = 0;
  auto try_add = [&](const ModVector& v) {
    if (filled == n) return false;
    basis.col(filled) = v;
    if (rank_mod_p(basis.leftCols(filled + 1), p) == filled + 1) {
      ++filled;
      return true;
    }
    return false;
  };
  for (Index j = 0; j < boundaries.cols(); ++j) try_add(boundaries.col(j));
  std::vector<Index> lift_cols;
  for (Index j = 0; j < cycles.cols(); ++j)
    if (try_add(cycles.col(j))) lift_cols.push_back(filled - 1);
  const Index after_cycles = filled;
  for (Index e = 0; e < n && filled < n; ++e) {
    ModVector unit = ModVector::Zero(n);
    unit(e) = 1;
    try_add(unit);
  }
  if (after_cycles != cycle_dim_)
    throw std::logic_error("ModpHomology: boundaries are not contained in the cycles");
  lifts_.resize(n, static_cast<Index>(lift_cols.size()));
  for (std::size_t k = 0; k < lift_cols.size(); ++k)
    lifts_.col(static_cast<Index>(k)) = basis.col(lift_cols[k]);
  coords_ = n == 0 ? ModMatrix(0, 0) : inverse_mod_p(basis, p);
}

std::optional<ModVector> ModpHomology::express(const ModVector& z) const {
  const Index n = cochain_dim();
  if (z.size() != n) throw std::invalid_argument("ModpHomology::express: wrong length");
  ModVector out(dim());
  for (Index row = 0; row < n; ++row) {
    std::int64_t v = 0;
    for (Index c = 0; c < n; ++c) v = (v + coords_(row, c) * (((z(c) % p_) + p_) % p_)) % p_;
    if (row < boundary_dim_) continue;
    if (row < boundary_dim_ + dim())
      out(row - boundary_dim_) = v;
    else if (v != 0)
      return std::nullopt;
  }
  return out;
}

}  // namespace derham
