#pragma once

// Finitely generated abelian groups given by generators and relations, with
// homomorphisms, subquotients and homology of integer cochain complexes.

#include "derham/integer.hpp"
#include "derham/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace derham {

/// ℤ^ngens modulo the column lattice of `relations`. Immutable; the Smith
/// data is computed once at construction and shared between copies.
class FgAbGroup {
 public:
  /// The zero group.
  FgAbGroup();
  FgAbGroup(Index ngens, IntMatrix relations);

  static FgAbGroup free_abelian(Index rank);
  /// ⊕ ℤ/orders[j] on one generator each; an order of 0 means ℤ.
  static FgAbGroup from_orders(const std::vector<Integer>& orders);

  Index ngens() const;
  const IntMatrix& relations() const;

  Index free_rank() const;
  /// d₁ | d₂ | …, each > 1.
  const std::vector<Integer>& invariant_factors() const;
  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const { return free_rank() == 0 && invariant_factors().empty(); }
  /// Throws std::domain_error for infinite groups.
  Integer order() const;

  /// Number of cyclic summands in the internal Smith decomposition.
  Index summand_count() const;
  /// Order of each summand (0 for ℤ); none equals 1.
  const std::vector<Integer>& summand_orders() const;
  /// Coordinates along the summands, reduced into [0, order).
  IntVector normal_form(const IntVector& x) const;
  /// Generator of each summand, in the original coordinates.
  IntMatrix summand_generators() const;
  bool is_zero_element(const IntVector& x) const;

  /// e.g. "Z^2 + Z/2 + Z/4", or "0".
  std::string to_string() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b);

/// Matrix-on-generators map. Construction checks well-definedness: the image
/// of every source relation must vanish in the target.
class Homomorphism {
 public:
  Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static Homomorphism identity(const FgAbGroup& g);
  static Homomorphism zero(const FgAbGroup& source, const FgAbGroup& target);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector operator()(const IntVector& x) const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// g ∘ f.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
/// Equality as maps, i.e. modulo the target relations.
bool equal(const Homomorphism& a, const Homomorphism& b);

/// ⟨numerator⟩ / ⟨denominator⟩ inside an ambient group, presented on its own
/// Smith generators. Elements of the numerator can be written in terms of
/// those generators; `representatives` maps back to the ambient group.
class Section {
 public:
  Section() = default;
  Section(const FgAbGroup& ambient, const IntMatrix& numerator,
          const IntMatrix& denominator);

  const FgAbGroup& group() const { return group_; }
  const FgAbGroup& ambient() const { return ambient_; }
  /// ambient.ngens × group.ngens.
  const IntMatrix& representatives() const { return reps_; }
  /// numerator.cols × group.ngens: each generator as a combination of the
  /// numerator columns, i.e. representatives = numerator * this.
  const IntMatrix& numerator_coordinates() const { return raw_coords_; }
  /// Coordinates of an ambient element in `group`; nullopt when the element
  /// does not lie in numerator + denominator.
  std::optional<IntVector> express(const IntVector& x) const;
  /// Like express() but throws std::logic_error on failure.
  IntVector express_or_throw(const IntVector& x, const char* what) const;

  /// Map group → ambient; only meaningful for subgroups (empty denominator).
  Homomorphism inclusion() const;

 private:
  FgAbGroup ambient_;
  FgAbGroup group_;
  IntMatrix reps_;
  IntMatrix raw_coords_;
  IntMatrix to_summands_;
  Index raw_gens_ = 0;
  LatticeSolver solver_;
};

Section subgroup(const FgAbGroup& g, const IntMatrix& generators);
Section quotient(const FgAbGroup& g, const IntMatrix& killed);
Section kernel(const Homomorphism& f);
Section image(const Homomorphism& f);
Section cokernel(const Homomorphism& f);

/// ker(d_out) / im(d_in) for a three-term complex of free modules. The
/// representatives are cochain-level lifts of the generators. Throws
/// std::invalid_argument on shape mismatch or when d_out·d_in ≠ 0.
Section homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Map on classes induced by a cochain map. Works for any pair of class
/// spaces exposing group(), representatives() and express(); the image of
/// each source generator must be a cocycle of the target.
template <typename Src, typename Tgt>
Homomorphism induced_map(const IntMatrix& f_cochain, const Src& src, const Tgt& tgt) {
  const IntMatrix reps = src.representatives();
  if (f_cochain.cols() != reps.rows())
    throw std::invalid_argument("induced_map: cochain map has wrong source dimension");
  IntMatrix m(tgt.group().ngens(), src.group().ngens());
  for (Index j = 0; j < reps.cols(); ++j) {
    IntVector image = sparse_apply(f_cochain, reps.col(j));
    auto coords = tgt.express(image);
    if (!coords) throw std::logic_error("induced_map: image of a generator is not a cocycle");
    m.col(j) = *coords;
  }
  return Homomorphism(src.group(), tgt.group(), std::move(m));
}

/// p^k · G with its inclusion.
Section subgroup_pk(const FgAbGroup& g, const Integer& p, int k);
/// dim over 𝔽_p of p^{k-1}G / p^k G; k ≥ 1.
Index graded_piece_dim(const FgAbGroup& g, const Integer& p, int k);
/// Abstract p-primary part: ⊕ ℤ/p^{ν_p(d)} over the invariant factors d.
FgAbGroup primary_part(const FgAbGroup& g, const Integer& p);
/// The p-primary torsion as an explicit subgroup of g.
Section primary_subgroup(const FgAbGroup& g, const Integer& p);

int valuation(Integer n, const Integer& p);
Integer power(const Integer& base, int exp);

}  // namespace derham
