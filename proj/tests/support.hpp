#pragma once

// Shared test helpers: seeded generators and small brute-force oracles that do
// not go through the library's elimination code.

#include "derham/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using derham::Index;
using derham::Integer;
using derham::IntMatrix;
using derham::IntVector;

inline IntMatrix random_matrix(std::mt19937& rng, Index rows, Index cols, int lo, int hi, int zero_pct = 30) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::uniform_int_distribution<int> pct(0, 99);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = pct(rng) < zero_pct ? 0 : entry(rng);
  return m;
}

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntVector vec(std::initializer_list<long> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

// Cofactor expansion; fine for the ≤ 5×5 matrices used here.
inline Integer det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Index a = 1; a < n; ++a)
      for (Index b = 0, c = 0; b < n; ++b)
        if (b != j) minor(a - 1, c++) = m(a, b);
    const Integer term = m(0, j) * det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(Index n, Index k, Index start, std::vector<Index>& cur, std::vector<std::vector<Index>>& out) {
  if (static_cast<Index>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (Index s = start; s < n; ++s) {
    cur.push_back(s);
    subsets(n, k, s + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors via determinantal divisors: d_k = g_k / g_{k-1} with g_k
// the gcd of all k×k minors. Returns every nonzero diagonal entry of the SNF.
inline std::vector<Integer> determinantal_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (Index k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<Index>> rs, cs;
    std::vector<Index> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& R : rs)
      for (const auto& C : cs) {
        IntMatrix sub(k, k);
        for (Index a = 0; a < k; ++a)
          for (Index b = 0; b < k; ++b) sub(a, b) = m(R[static_cast<std::size_t>(a)], C[static_cast<std::size_t>(b)]);
        g = derham::gcd(g, derham::abs_value(det(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline std::vector<Integer> nontrivial(const std::vector<Integer>& xs) {
  std::vector<Integer> out;
  for (const Integer& x : xs)
    if (x != 1) out.push_back(x);
  return out;
}

inline std::vector<Integer> ints(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

}  // namespace testing_support
