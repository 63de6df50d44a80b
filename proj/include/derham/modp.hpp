#pragma once

// Linear algebra over the prime field 𝔽_p for small p, on int64 residues.

#include "derham/integer.hpp"

#include <cstdint>
#include <optional>

namespace derham {

using Prime = std::int64_t;

/// Largest prime accepted by the mod-p routines.
inline constexpr Prime kMaxPrime = 13;

bool is_prime(std::int64_t p);
/// Throws std::invalid_argument unless p is a prime ≤ kMaxPrime.
void require_small_prime(Prime p);

ModMatrix reduce_mod_p(const IntMatrix& m, Prime p);
ModVector reduce_mod_p(const IntVector& v, Prime p);

std::int64_t inverse_mod(std::int64_t a, Prime p);

/// Column echelon form over 𝔽_p: M * U = E with U invertible.
struct ColumnEchelon {
  ModMatrix E;
  ModMatrix U;
  std::vector<Index> pivot_rows;
  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

ColumnEchelon column_echelon(const ModMatrix& m, Prime p);
Index rank_mod_p(const ModMatrix& m, Prime p);
/// Basis of the null space, one column per vector.
ModMatrix kernel_mod_p(const ModMatrix& m, Prime p);
/// Throws std::domain_error when singular.
ModMatrix inverse_mod_p(const ModMatrix& m, Prime p);
ModMatrix multiply_mod_p(const ModMatrix& a, const ModMatrix& b, Prime p);
bool is_zero_mod_p(const ModMatrix& m, Prime p);

/// ker(d_out)/im(d_in) over 𝔽_p with cochain-level lifts of a basis and a
/// coordinate map for cocycles.
class ModpHomology {
 public:
  ModpHomology() = default;
  ModpHomology(const ModMatrix& d_in, const ModMatrix& d_out, Prime p);

  Prime prime() const { return p_; }
  Index dim() const { return lifts_.cols(); }
  Index cycle_dim() const { return cycle_dim_; }
  Index boundary_dim() const { return boundary_dim_; }
  Index cochain_dim() const { return lifts_.rows(); }
  /// cochain_dim × dim.
  const ModMatrix& lifts() const { return lifts_; }
  /// Coordinates of the class of a cocycle; nullopt for non-cocycles.
  std::optional<ModVector> express(const ModVector& z) const;

 private:
  Prime p_ = 2;
  Index cycle_dim_ = 0;
  Index boundary_dim_ = 0;
  ModMatrix lifts_;
  // Inverse of [boundaries | lifts | complement]; rows select coordinates.
  ModMatrix coords_;
};

}  // namespace derham
