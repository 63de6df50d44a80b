#pragma once

// Bockstein exact couple of Ω_n at a prime p, its derived couples and pages,
// and an independent closed-form computation of the same pages.

#include "derham/abelian_group.hpp"
#include "derham/cohomology.hpp"
#include "derham/complex.hpp"
#include "derham/modp.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace derham {

/// Cohomology data shared by a couple and all couples derived from it.
struct CoupleBase {
  int r = 0;
  int n = 0;
  Prime p = 2;
  ComplexZ complex;
  CohomologyResult integral;
  ModpCohomologyResult modp;
};

/// D^i → D^i → E^i → D^{i+1} for i = 0..r, with D^{r+1} = 0.
///
/// Every group is kept on explicit generators: `d_gens[i]` writes the
/// generators of D^i as classes of H^i(Ω_n) (stage 1 coordinates), and
/// `e_gens[i]` writes those of E^i as classes of H^i(Ω_n ⊗ 𝔽_p).
struct ExactCouple {
  std::shared_ptr<const CoupleBase> base;
  int stage = 1;
  std::vector<FgAbGroup> D;
  std::vector<FgAbGroup> E;
  std::vector<Homomorphism> i_map;  ///< D^i → D^i
  std::vector<Homomorphism> j_map;  ///< D^i → E^i
  std::vector<Homomorphism> k_map;  ///< E^i → D^{i+1}
  std::vector<IntMatrix> d_gens;
  std::vector<IntMatrix> e_gens;
  /// steps[i][s]: presentation of the stage s+2 group inside the stage s+1 one.
  std::vector<std::vector<Section>> d_steps;
  std::vector<std::vector<Section>> e_steps;

  int r() const { return base->r; }
  int n() const { return base->n; }
  Prime p() const { return base->p; }

  /// Coordinates in D^i of a class of H^i(Ω_n); nullopt if it does not lie
  /// in D^i.
  std::optional<IntVector> express_d(int i, const IntVector& h) const;
  /// Coordinates in E^i of a class of H^i(Ω_n ⊗ 𝔽_p); nullopt if the class
  /// does not survive to this stage.
  std::optional<IntVector> express_e(int i, const IntVector& e1) const;
};

std::shared_ptr<const CoupleBase> couple_base(int r, int n, Prime p);

ExactCouple initial_couple(int r, int n, Prime p);
ExactCouple initial_couple(std::shared_ptr<const CoupleBase> base);

/// Throws std::logic_error when a j' preimage choice is not class-independent
/// or the result fails the exactness check.
ExactCouple derive(const ExactCouple& c);

/// Description of the first node where ker ≠ im, or nullopt.
std::optional<std::string> exactness_defect(const ExactCouple& c);

struct SpectralPage {
  int k = 1;
  std::vector<Index> dims;
  /// d[i] : E^i → E^{i+1}, dims[i+1] × dims[i] over 𝔽_p (0 × dims[r] for i = r).
  std::vector<ModMatrix> d;
  /// Cochain-level mod-p lifts of the generators, one column each.
  std::vector<ModMatrix> lifts;

  bool is_zero() const;
};

/// Page of a couple: E with d = j ∘ k. Throws std::logic_error if some E^i is
/// not elementary abelian.
SpectralPage page_of(const ExactCouple& c);

/// Stages 1..kmax; kmax defaults to ν_p(n) + 1 (or 1 when n = 0).
std::vector<ExactCouple> couples(int r, int n, Prime p, int kmax = 0);
std::vector<SpectralPage> pages(int r, int n, Prime p, int kmax = 0);

/// E_k^i = Z_k^i / (p Z_{k-1}^i + p^{1-k} d Z_{k-1}^{i-1}) with
/// Z_k = {x : dx ∈ p^k Ω}, d_k[x] = [dx / p^k]; computed per multidegree.
class ClosedFormPage {
 public:
  ClosedFormPage(int r, int n, Prime p, int k);

  const SpectralPage& page() const { return page_; }
  int k() const { return page_.k; }

  /// Class of a cochain lying in Z_k^i; nullopt otherwise.
  std::optional<IntVector> express(int i, const IntVector& x) const;
  /// x + p y ∈ Z_k^i for some y, or nullopt when x is not the reduction of
  /// such an element.
  std::optional<IntVector> lift_to_cycles(int i, const IntVector& x) const;

 private:
  struct Part {
    std::vector<Index> coords;
    IntMatrix d_out;
    Section classes;
  };
  int r_, n_;
  Prime p_;
  std::vector<std::vector<Part>> parts_;
  std::vector<std::vector<Index>> offsets_;
  std::vector<Index> cochain_dims_;
  SpectralPage page_;
};

/// φ^i : E_k^i(derived) → E_k^i(closed form), by lifting each generator's
/// E_1 representative into Z_k. Throws std::logic_error if a lift fails.
std::vector<ModMatrix> derived_to_closed_form(const ExactCouple& c, const ClosedFormPage& cf);

/// Basis of Ω^i_m ⊗ 𝔽_p, m = n / p^k, sent by the k-fold Cartier
/// representative into E_k^i of the stage k couple. Throws std::logic_error
/// if an image does not survive to E_k.
std::vector<ModMatrix> cartier_composite_to_page(const ExactCouple& c);
/// Same map into a closed-form page.
std::vector<ModMatrix> cartier_composite_to_closed_form(int r, int n, Prime p,
                                                        const ClosedFormPage& cf);

/// F_* : H^i(Ω_n) → H^i(Ω_{pn}), in generator coordinates.
std::vector<Homomorphism> frobenius_induced(const CoupleBase& src, const CoupleBase& tgt);

/// The couple morphism from the Ω_n couple to the derived Ω_{pn} couple:
/// on D it is [ω] ↦ p[c(ω)] = F_*/p^{i-1}, on E it is ē ↦ [c(ẽ)], with c
/// the integral Cartier representative.
struct CoupleMorphism {
  std::vector<Homomorphism> on_d;
  std::vector<Homomorphism> on_e;
};

/// `tgt` must be the stage 2 couple of Ω_{pn}. Throws std::domain_error if
/// a component is not well defined and std::logic_error if an image falls
/// outside the target groups.
CoupleMorphism frobenius_morphism(const ExactCouple& src, const ExactCouple& tgt);

}  // namespace derham
