#pragma once

// Integral and mod-p cohomology of Ω_n in r variables.
//
// Ω_n is the direct sum of its multidegree summands and d respects the
// splitting, so both cohomologies are computed summand by summand and then
// assembled on the global basis. Generator lifts are kept so that induced
// maps can be computed later on the same generators.

#include "derham/abelian_group.hpp"
#include "derham/complex.hpp"
#include "derham/modp.hpp"

#include <optional>
#include <vector>

namespace derham {

/// Classes of a cochain space that splits as a direct sum of coordinate
/// blocks, each handled by its own Section over ℤ^{block}.
class BlockClasses {
 public:
  struct Part {
    std::vector<Index> coords;
    Section section;
  };

  BlockClasses() = default;
  BlockClasses(Index cochain_dim, std::vector<Part> parts);

  const FgAbGroup& group() const { return group_; }
  Index cochain_dim() const { return cochain_dim_; }
  /// cochain_dim × group.ngens, dense.
  IntMatrix representatives() const;
  IntVector representative(Index generator) const;
  /// Class of a cocycle; nullopt if `z` is not a cocycle.
  std::optional<IntVector> express(const IntVector& z) const;

 private:
  Index cochain_dim_ = 0;
  std::vector<Part> parts_;
  std::vector<Index> offsets_;
  FgAbGroup group_;
};

struct CohomologyResult {
  int r = 0;
  int n = 0;
  /// Degree i = 0..r.
  std::vector<BlockClasses> degrees;

  const BlockClasses& at(int i) const { return degrees.at(static_cast<std::size_t>(i)); }
  const FgAbGroup& group(int i) const { return at(i).group(); }
  /// Zero group for degrees outside 0..r.
  FgAbGroup group_or_zero(int i) const;
};

CohomologyResult integral_cohomology(int r, int n);

/// Mod-p counterpart of BlockClasses. Classes are vectors over 𝔽_p.
class ModpBlockClasses {
 public:
  struct Part {
    std::vector<Index> coords;
    ModpHomology homology;
  };

  ModpBlockClasses() = default;
  ModpBlockClasses(Index cochain_dim, std::vector<Part> parts, Prime p);

  Prime prime() const { return p_; }
  Index dim() const { return dim_; }
  Index cycle_dim() const;
  Index boundary_dim() const;
  Index cochain_dim() const { return cochain_dim_; }
  ModMatrix representatives() const;
  std::optional<ModVector> express(const ModVector& z) const;
  /// The group (ℤ/p)^dim.
  FgAbGroup group() const;

 private:
  Prime p_ = 2;
  Index cochain_dim_ = 0;
  Index dim_ = 0;
  std::vector<Part> parts_;
  std::vector<Index> offsets_;
};

struct ModpCohomologyResult {
  int r = 0;
  int n = 0;
  Prime p = 2;
  std::vector<ModpBlockClasses> degrees;

  const ModpBlockClasses& at(int i) const { return degrees.at(static_cast<std::size_t>(i)); }
  Index dim(int i) const;
};

ModpCohomologyResult modp_cohomology(int r, int n, Prime p);

/// dim over 𝔽_p of the mod-p cocycles in Ω^i_n: dim Ω^i_n − rank_p d^i.
Index cocycle_dim(int r, int n, int i, Prime p);

/// Matrix of the map Ω^i_n ⊗ 𝔽_p → H^i(Ω_{pn} ⊗ 𝔽_p) induced by the Cartier
/// representative, in the basis of Ω^i_n and the generators of `target`.
ModMatrix cartier_matrix(int r, int n, int i, Prime p, const ModpCohomologyResult& target);

/// The Cartier map as a homomorphism of elementary abelian groups. Throws
/// std::logic_error if it is not bijective.
Homomorphism cartier_iso(int r, int n, int i, Prime p);

}  // namespace derham
