#pragma once

#include "derham/integer.hpp"
#include "derham/normal_form.hpp"

#include <optional>

namespace derham {

/// Solves M x = b over the integers against a fixed M. The Hermite form of M
/// is computed once; each solve is a forward substitution.
class LatticeSolver {
 public:
  LatticeSolver() = default;
  explicit LatticeSolver(IntMatrix m);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index rank() const { return herm_.rank(); }

  /// Some x with M x = b, or nullopt when b is not in the column lattice.
  /// Throws std::invalid_argument on a length mismatch.
  std::optional<IntVector> solve(const IntVector& b) const;
  bool contains(const IntVector& b) const { return solve(b).has_value(); }

  /// Basis of {x : M x = 0}; saturated since the transform is unimodular.
  IntMatrix kernel() const;
  /// Column Hermite form, restricted to its nonzero columns.
  IntMatrix hermite_basis() const;
  const HermiteResult<Integer>& hermite() const { return herm_; }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  HermiteResult<Integer> herm_;
};

std::optional<IntVector> lattice_solve(const IntMatrix& m, const IntVector& b);

IntMatrix kernel_basis(const IntMatrix& m);

/// Horizontal concatenation; row counts must agree (empty blocks allowed).
IntMatrix hstack(std::initializer_list<const IntMatrix*> blocks, Index rows);

}  // namespace derham
