#pragma once

// Graded pieces Ω^i_n = S^{n-i} ⊗ Λ^i of the de Rham complex of ℤ[x_1..x_r]
// and the structural integer matrices acting on them.
//
// Basis order of Ω^i_n: the index set T first, in colexicographic order
// (equivalently, increasing bitmask value), then the exponent vector α in
// decreasing lexicographic order. Every matrix below uses this order, columns
// indexed by the source basis.

#include "derham/integer.hpp"
#include "derham/modp.hpp"

#include <map>
#include <string>
#include <vector>

namespace derham {

/// x^alpha dx_{forms[0]} ∧ … ∧ dx_{forms[i-1]}; forms strictly increasing,
/// variables numbered from 0.
struct BasisElement {
  std::vector<int> alpha;
  std::vector<int> forms;

  int poly_degree() const;
  int form_degree() const { return static_cast<int>(forms.size()); }
  /// alpha + 1_T, preserved by d and κ.
  std::vector<int> multidegree() const;

  auto operator<=>(const BasisElement&) const = default;
};

std::string variable_name(int var, int r);
/// Human-readable form, e.g. "x^3 dx" or "x y dx dy"; "1" for the unit.
std::string to_string(const BasisElement& e, int r);

class GradedPiece {
 public:
  GradedPiece(int r, int n, int i);

  int r() const { return r_; }
  int n() const { return n_; }
  int i() const { return i_; }
  Index dim() const { return static_cast<Index>(elements_.size()); }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const BasisElement& operator[](Index k) const { return elements_[static_cast<std::size_t>(k)]; }
  /// -1 when absent.
  Index index_of(const BasisElement& e) const;

 private:
  int r_, n_, i_;
  std::vector<BasisElement> elements_;
  std::map<BasisElement, Index> index_;
};

/// Out-of-range form degrees (i < 0, i > r or i > n) give the zero piece.
GradedPiece basis(int r, int n, int i);
/// C(n-i+r-1, r-1) · C(r, i) inside the valid range, else 0.
Index piece_dim(int r, int n, int i);

struct Term {
  BasisElement element;
  Integer coeff;
};

std::vector<Term> d_terms(const BasisElement& e);
std::vector<Term> koszul_terms(const BasisElement& e);
/// x ↦ x^p, dx ↦ p·x^{p-1}dx.
Term frobenius_term(const BasisElement& e, int p);
/// x ↦ x^p, dx ↦ x^{p-1}dx; the integral representative of C^{-1}, and also
/// F / p^i on Ω^i.
Term cartier_term(const BasisElement& e, int p);

namespace detail {

template <typename Scalar, typename TermFn>
Matrix<Scalar> assemble(const GradedPiece& src, const GradedPiece& tgt, TermFn&& terms) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(tgt.dim(), src.dim());
  for (Index c = 0; c < src.dim(); ++c)
    for (const Term& t : terms(src[c])) {
      const Index row = tgt.index_of(t.element);
      if (row < 0) throw std::logic_error("structural map leaves the target piece");
      m(row, c) += static_cast<Scalar>(t.coeff);
    }
  return m;
}

}  // namespace detail

/// d : Ω^i_n → Ω^{i+1}_n.
template <typename Scalar = Integer>
Matrix<Scalar> d_matrix(int r, int n, int i) {
  return detail::assemble<Scalar>(basis(r, n, i), basis(r, n, i + 1), d_terms);
}

/// κ : Ω^i_n → Ω^{i-1}_n.
template <typename Scalar = Integer>
Matrix<Scalar> koszul_matrix(int r, int n, int i) {
  return detail::assemble<Scalar>(basis(r, n, i), basis(r, n, i - 1), koszul_terms);
}

/// F : Ω^i_n → Ω^i_{pn}.
template <typename Scalar = Integer>
Matrix<Scalar> frobenius_matrix(int r, int n, int i, int p) {
  return detail::assemble<Scalar>(basis(r, n, i), basis(r, p * n, i), [p](const BasisElement& e) {
    return std::vector<Term>{frobenius_term(e, p)};
  });
}

/// Integral Cartier representative Ω^i_n → Ω^i_{pn} (F / p^i).
template <typename Scalar = Integer>
Matrix<Scalar> cartier_lift_matrix(int r, int n, int i, int p) {
  return detail::assemble<Scalar>(basis(r, n, i), basis(r, p * n, i), [p](const BasisElement& e) {
    return std::vector<Term>{cartier_term(e, p)};
  });
}

/// The Cartier representative read mod p; its columns are mod-p cocycles.
ModMatrix cartier_rep_matrix(int r, int n, int i, Prime p);

/// Functoriality in ℤ^r → ℤ^s: x_j ↦ Σ_k f(k,j) y_k, dx_j ↦ Σ_k f(k,j) dy_k.
/// Returns the matrix Ω^i_n(r) → Ω^i_n(s) with r = f.cols(), s = f.rows().
IntMatrix substitution_map(const IntMatrix& f, int n, int i);

/// The complex Ω_n in r variables: differentials d^0 … d^r (d^i has
/// Ω^i_n as source; trailing ones may be empty).
struct ComplexZ {
  int r = 0;
  int n = 0;
  std::vector<IntMatrix> differentials;

  IntMatrix d(int i) const;
};

ComplexZ derham_complex(int r, int n);

/// One summand of Ω_n for the multigrading by multidegree. For each form
/// degree i, `indices[i]` lists the global basis indices of the summand and
/// `d[i]` is the restriction of d^i to it.
struct MultidegreeBlock {
  std::vector<int> beta;
  std::vector<std::vector<Index>> indices;
  std::vector<IntMatrix> d;

  IntMatrix d_in(int i) const;
  IntMatrix d_out(int i) const;
};

/// All multidegrees β with |β| = n, in decreasing lexicographic order.
std::vector<std::vector<int>> multidegrees(int r, int n);
std::vector<MultidegreeBlock> multidegree_blocks(int r, int n);

}  // namespace derham
