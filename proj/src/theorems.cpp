#include "derham/theorems.hpp"

#include "derham/abelian_group.hpp"
#include "derham/bockstein.hpp"
#include "derham/cohomology.hpp"
#include "derham/complex.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace derham {

long long VerificationReport::parameter(const std::string& key, long long fallback) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return v;
  return fallback;
}

bool operator==(const Check& a, const Check& b) {
  return a.name == b.name && a.passed == b.passed && a.detail == b.detail;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  return a.statement == b.statement && a.parameters == b.parameters && a.passed == b.passed &&
         a.checks == b.checks && a.witness == b.witness && a.notes == b.notes;
}

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {
      "annihilation", "cartier", "couple_morphism", "frobenius_iso",
      "page_identification", "filtration", "example_deg4"};
  return ids;
}

std::optional<std::string> canonical_statement(const std::string& name) {
  if (name == "euler") return std::string("annihilation");
  for (const auto& id : statement_ids())
    if (id == name) return id;
  return std::nullopt;
}

std::vector<Prime> primes_up_to(long long bound) {
  std::vector<Prime> out;
  for (long long q = 2; q <= bound; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

namespace {

using Params = std::vector<std::pair<std::string, long long>>;

template <typename V>
std::vector<std::string> entries(const V& v) {
  std::vector<std::string> out;
  for (Index k = 0; k < v.size(); ++k) out.push_back(to_string(Integer(v(k))));
  return out;
}

std::string join(const std::vector<Index>& xs) {
  std::string s = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s + ")";
}

class Recorder {
 public:
  Recorder(std::string statement, Params params) {
    report_.statement = std::move(statement);
    report_.parameters = std::move(params);
  }

  void check(std::string name, bool ok, std::string detail = {}, std::optional<Witness> w = {}) {
    if (!ok && !report_.witness) {
      Witness fallback{name, -1, detail, {}};
      report_.witness = w ? *w : fallback;
      if (report_.witness->check.empty()) report_.witness->check = name;
    }
    report_.passed = report_.passed && ok;
    report_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  template <typename F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(what, false, e.what());
    }
  }

  VerificationReport finish() { return std::move(report_); }

 private:
  VerificationReport report_;
};

// Running verdict for a check evaluated over several degrees; keeps the
// first offending degree and vector.
struct Tally {
  bool ok = true;
  std::optional<Witness> witness;

  void fail(int degree, std::string description, std::vector<std::string> vec = {}) {
    if (ok) witness = Witness{{}, degree, std::move(description), std::move(vec)};
    ok = false;
  }
  void commit(Recorder& rec, std::string name, std::string detail = {}) {
    rec.check(std::move(name), ok, std::move(detail), witness);
  }
};

std::string range_detail(int r) { return "degrees 0.." + std::to_string(r); }

bool invertible_mod_p(const ModMatrix& m, Prime p) {
  return m.rows() == m.cols() && rank_mod_p(m, p) == m.cols();
}

// Column in which a·x and b·y differ mod p, if any.
std::optional<Index> differing_column(const ModMatrix& a, const ModMatrix& b, Prime p) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (((a(i, j) - b(i, j)) % p + p) % p != 0) return j;
  return std::nullopt;
}

// Generator on which two maps into the same group disagree.
std::optional<Index> differing_generator(const Homomorphism& a, const Homomorphism& b) {
  for (Index j = 0; j < a.matrix().cols(); ++j)
    if (!a.target().is_zero_element(a.matrix().col(j) - b.matrix().col(j))) return j;
  return std::nullopt;
}

ModMatrix zero_mod(Index rows, Index cols) { return ModMatrix::Zero(rows, cols); }

ModMatrix mul(const ModMatrix& a, const ModMatrix& b, Prime p) {
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return zero_mod(a.rows(), b.cols());
  return multiply_mod_p(a, b, p);
}

}  // namespace

VerificationReport verify_annihilation(int r, int n) {
  Recorder rec("annihilation", {{"r", r}, {"n", n}});
  rec.guarded("computation", [&] {
    using M = Matrix<std::int64_t>;
    Tally euler;
    for (int i = 0; i <= r; ++i) {
      const Index dim = piece_dim(r, n, i);
      M lhs = M::Zero(dim, dim);
      if (i > 0 && dim > 0 && piece_dim(r, n, i - 1) > 0)
        lhs += d_matrix<std::int64_t>(r, n, i - 1) * koszul_matrix<std::int64_t>(r, n, i);
      if (i < r && dim > 0 && piece_dim(r, n, i + 1) > 0)
        lhs += koszul_matrix<std::int64_t>(r, n, i + 1) * d_matrix<std::int64_t>(r, n, i);
      const M diff = lhs - M::Identity(dim, dim) * static_cast<std::int64_t>(n);
      for (Index c = 0; c < dim && euler.ok; ++c)
        if (!diff.col(c).isZero())
          euler.fail(i, "column " + std::to_string(c) + " of d k + k d - n differs from zero",
                     entries(diff.col(c)));
    }
    euler.commit(rec, "euler identity d k + k d = n", range_detail(r));

    const CohomologyResult H = integral_cohomology(r, n);
    if (n == 0) {
      const bool h0 = H.group(0).free_rank() == 1 && H.group(0).invariant_factors().empty();
      bool rest = true;
      for (int i = 1; i <= r; ++i) rest = rest && H.group(i).is_trivial();
      rec.check("H^0 = Z and higher degrees vanish", h0 && rest);
      rec.note("n = 0: the annihilation statement is vacuous");
      return;
    }
    Tally finite, killed;
    for (int i = 0; i <= r; ++i) {
      const FgAbGroup& g = H.group(i);
      if (g.free_rank() != 0) finite.fail(i, "free rank " + std::to_string(g.free_rank()));
      for (Index k = 0; k < g.ngens(); ++k) {
        IntVector e = IntVector::Zero(g.ngens());
        e(k) = n;
        if (!g.is_zero_element(e)) {
          killed.fail(i, "n times generator " + std::to_string(k) + " is nonzero",
                      entries(H.at(i).representative(k)));
          break;
        }
      }
    }
    finite.commit(rec, "every H^i is finite", range_detail(r));
    killed.commit(rec, "n H^i = 0", range_detail(r));
  });
  return rec.finish();
}

VerificationReport verify_cartier(int r, int n, Prime p) {
  Recorder rec("cartier", {{"r", r}, {"n", n}, {"p", p}});
  rec.guarded("computation", [&] {
    require_small_prime(p);
    const int pn = static_cast<int>(p) * n;
    const ModpCohomologyResult M = modp_cohomology(r, pn, p);

    Tally bijective;
    for (int i = 0; i <= r; ++i) {
      const ModMatrix m = cartier_matrix(r, n, i, p, M);
      if (m.rows() != m.cols()) {
        bijective.fail(i, "dim Omega^i_n = " + std::to_string(m.cols()) + " but dim H^i = " +
                              std::to_string(m.rows()));
      } else if (rank_mod_p(m, p) != m.cols()) {
        bijective.fail(i, "nonzero form with vanishing image", entries(kernel_mod_p(m, p).col(0)));
      }
    }
    bijective.commit(rec, "Omega_n (x) F_p -> H(Omega_pn (x) F_p) is bijective", range_detail(r));

    Tally vanish;
    const int first = std::max(1, static_cast<int>(p) * (n - 1) + 1);
    for (int m = first; m < pn; ++m) {
      const ModpCohomologyResult V = modp_cohomology(r, m, p);
      for (int i = 0; i <= r; ++i)
        if (V.dim(i) != 0)
          vanish.fail(i, "H(Omega_" + std::to_string(m) + " (x) F_p) has dimension " +
                             std::to_string(V.dim(i)));
    }
    vanish.commit(rec, "mod-p cohomology vanishes in degrees prime to p",
                  first < pn ? "m = " + std::to_string(first) + ".." + std::to_string(pn - 1) : "no such m");

    // Naturality in linear substitutions, at the level of mod-p classes.
    std::mt19937 rng(static_cast<std::uint32_t>(1000003 * r + 1009 * n + static_cast<int>(p)));
    std::uniform_int_distribution<int> coeff(-2, 2);
    Tally natural;
    for (int sample = 0; sample < 2; ++sample) {
      IntMatrix f(r, r);
      for (Index a = 0; a < r; ++a)
        for (Index b = 0; b < r; ++b) f(a, b) = coeff(rng);
      for (int i = 0; i <= r && natural.ok; ++i) {
        const IntMatrix c = cartier_lift_matrix(r, n, i, static_cast<int>(p));
        if (c.cols() == 0) continue;
        const IntMatrix lhs = sparse_product(substitution_map(f, pn, i), c);
        const IntMatrix rhs = sparse_product(c, substitution_map(f, n, i));
        for (Index col = 0; col < c.cols(); ++col) {
          auto cls = M.at(i).express(reduce_mod_p(IntVector(lhs.col(col) - rhs.col(col)), p));
          if (!cls || !cls->isZero()) {
            natural.fail(i, "substitution sample " + std::to_string(sample) + ", basis form " +
                                std::to_string(col));
            break;
          }
        }
      }
    }
    natural.commit(rec, "Cartier map commutes with linear substitutions", "2 seeded samples");
  });
  return rec.finish();
}

VerificationReport verify_couple_morphism(int r, int n, Prime p) {
  Recorder rec("couple_morphism", {{"r", r}, {"n", n}, {"p", p}});
  rec.guarded("computation", [&] {
    if (n < 1) throw std::invalid_argument("couple_morphism: n must be at least 1");
    const ExactCouple a = initial_couple(r, n, p);
    const ExactCouple b = derive(initial_couple(r, static_cast<int>(p) * n, p));
    const auto F = frobenius_induced(*a.base, *b.base);

    Tally divisible;
    for (int i = 0; i <= r; ++i) {
      const IntMatrix& m = F[static_cast<std::size_t>(i)].matrix();
      for (Index g = 0; g < m.cols(); ++g)
        if (!b.express_d(i, m.col(g))) {
          divisible.fail(i, "F_* of generator " + std::to_string(g) + " is not in p H",
                         entries(a.base->integral.at(i).representative(g)));
          break;
        }
    }
    divisible.commit(rec, "F_* H^i(Omega_n) lies in p H^i(Omega_pn)", range_detail(r));

    std::optional<CoupleMorphism> phi;
    try {
      phi = frobenius_morphism(a, b);
      rec.check("couple map is well defined", true);
    } catch (const std::exception& e) {
      rec.check("couple map is well defined", false, e.what());
      return;
    }

    Tally scaled;
    for (int i = 1; i <= r; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const IntMatrix lifted = sparse_product(b.d_gens[u], phi->on_d[u].matrix());
      const Integer scale = power(Integer(p), i - 1);
      for (Index g = 0; g < lifted.cols(); ++g)
        if (!b.base->integral.group(i).is_zero_element(F[u].matrix().col(g) - lifted.col(g) * scale)) {
          scaled.fail(i, "generator " + std::to_string(g), entries(a.base->integral.at(i).representative(g)));
          break;
        }
    }
    scaled.commit(rec, "F_* = p^(i-1) times the couple map on D", "degrees 1.." + std::to_string(r));

    Tally sq_i, sq_j, sq_k, iso_e;
    std::vector<int> literal_k_fails;
    for (int i = 0; i <= r; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const Homomorphism& pd = phi->on_d[u];
      const Homomorphism& pe = phi->on_e[u];
      if (auto g = differing_generator(compose(pd, a.i_map[u]), compose(b.i_map[u], pd)))
        sq_i.fail(i, "D generator " + std::to_string(*g), entries(a.base->integral.at(i).representative(*g)));
      if (auto g = differing_generator(compose(pe, a.j_map[u]), compose(b.j_map[u], pd)))
        sq_j.fail(i, "D generator " + std::to_string(*g), entries(a.base->integral.at(i).representative(*g)));
      if (i < r) {
        const Homomorphism& pd1 = phi->on_d[u + 1];
        const Homomorphism right = compose(b.k_map[u], pe);
        if (auto g = differing_generator(compose(pd1, a.k_map[u]), right))
          sq_k.fail(i, "E generator " + std::to_string(*g),
                    entries(a.base->modp.at(i).representatives().col(*g)));
        const Homomorphism literal(pd1.source(), pd1.target(), pd1.matrix() * power(Integer(p), i));
        if (differing_generator(compose(literal, a.k_map[u]), right)) literal_k_fails.push_back(i);
      }
      if (!pe.is_isomorphism()) iso_e.fail(i, "E_1(Omega_n) -> E_2(Omega_pn) is not bijective");
    }
    sq_i.commit(rec, "square with i commutes", range_detail(r));
    sq_j.commit(rec, "square with j commutes", range_detail(r));
    sq_k.commit(rec, "square with k commutes", range_detail(r));
    iso_e.commit(rec, "E_1 -> E_2 induced by the Cartier map is bijective", range_detail(r));
    rec.note("on D the couple map is [w] -> p[c(w)] with c the integral Cartier lift, i.e. F_*/p^(i-1)");
    if (!literal_k_fails.empty()) {
      std::string s = "unnormalized F_* breaks the square with k from degree";
      for (int i : literal_k_fails) s += " " + std::to_string(i);
      rec.note(s);
    }
  });
  return rec.finish();
}

VerificationReport verify_frobenius_iso(int r, int n, Prime p) {
  Recorder rec("frobenius_iso", {{"r", r}, {"n", n}, {"p", p}});
  rec.guarded("computation", [&] {
    if (n < 1) throw std::invalid_argument("frobenius_iso: n must be at least 1");
    const ExactCouple a = initial_couple(r, n, p);
    const ExactCouple b = derive(initial_couple(r, static_cast<int>(p) * n, p));
    const CoupleMorphism phi = frobenius_morphism(a, b);
    const auto F = frobenius_induced(*a.base, *b.base);

    Tally into, injective, orders, surjective;
    std::vector<int> literal_fails;
    for (int i = 0; i <= r; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const Section P = primary_subgroup(a.D[u], Integer(p));
      const Section Q = primary_subgroup(b.D[u], Integer(p));
      const IntMatrix& reps = P.representatives();

      auto restricted = [&](auto&& image_of) -> std::optional<Homomorphism> {
        IntMatrix m(Q.group().ngens(), P.group().ngens());
        for (Index g = 0; g < P.group().ngens(); ++g) {
          auto y = image_of(IntVector(reps.col(g)));
          if (!y) return std::nullopt;
          auto q = Q.express(*y);
          if (!q) return std::nullopt;
          m.col(g) = *q;
        }
        return Homomorphism(P.group(), Q.group(), std::move(m));
      };

      auto h = restricted([&](const IntVector& x) -> std::optional<IntVector> { return phi.on_d[u](x); });
      if (!h) {
        into.fail(i, "image of the p-primary part leaves the p-primary part of p H");
        continue;
      }
      if (!h->is_injective()) {
        const IntMatrix k = kernel(*h).representatives();
        injective.fail(i, "nonzero kernel element", entries(IntVector(sparse_product(reps, k).col(0))));
      }
      if (P.group().order() != Q.group().order())
        orders.fail(i, "|P| = " + to_string(P.group().order()) + ", |Q| = " + to_string(Q.group().order()));
      if (!h->is_surjective()) surjective.fail(i, "restricted map is not onto");
      rec.note("degree " + std::to_string(i) + ": " + P.group().to_string() + " -> " + Q.group().to_string());

      auto lit = restricted([&](const IntVector& x) { return b.express_d(i, F[u](x)); });
      if (!lit || !lit->is_isomorphism()) literal_fails.push_back(i);
    }
    into.commit(rec, "p-primary part maps into the p-primary part of p H^i(Omega_pn)", range_detail(r));
    injective.commit(rec, "restricted map is injective", range_detail(r));
    orders.commit(rec, "orders agree", range_detail(r));
    surjective.commit(rec, "restricted map is surjective", range_detail(r));
    rec.note("the map is the couple map [w] -> p[c(w)], which equals F_* in degree 1");
    if (!literal_fails.empty()) {
      std::string s = "unnormalized F_* is not an isomorphism in degree";
      for (int i : literal_fails) s += " " + std::to_string(i);
      rec.note(s);
    }
  });
  return rec.finish();
}

VerificationReport verify_page_identification(int r, int n, Prime p) {
  Recorder rec("page_identification", {{"r", r}, {"n", n}, {"p", p}});
  rec.guarded("computation", [&] {
    require_small_prime(p);
    const int nu = n > 0 ? valuation(Integer(n), Integer(p)) : 0;
    const int kmax = n > 0 ? nu + 1 : 1;
    if (n == 0) rec.note("n = 0: H^0 = Z is free, every page equals E_1; only k = 1 is computed");
    const auto cs = couples(r, n, p, kmax);
    const CohomologyResult& H = cs.front().base->integral;

    for (const ExactCouple& c : cs) {
      const int k = c.stage;
      const std::string tag = "E_" + std::to_string(k) + ": ";
      auto defect = exactness_defect(c);
      rec.check(tag + "couple is exact", !defect, defect.value_or(""));

      const SpectralPage pg = page_of(c);
      Tally dd;
      for (int i = 0; i + 1 < r; ++i) {
        const auto u = static_cast<std::size_t>(i);
        const ModMatrix sq = mul(pg.d[u + 1], pg.d[u], p);
        if (!is_zero_mod_p(sq, p)) dd.fail(i, "d_k d_k is nonzero");
      }
      dd.commit(rec, tag + "d_k d_k = 0");

      Tally book;
      for (int i = 0; i <= r; ++i) {
        const Index expect = graded_piece_dim(H.group(i), Integer(p), k) +
                             graded_piece_dim(H.group_or_zero(i + 1), Integer(p), k);
        if (pg.dims[static_cast<std::size_t>(i)] != expect)
          book.fail(i, "dim " + std::to_string(pg.dims[static_cast<std::size_t>(i)]) + ", expected " +
                           std::to_string(expect));
      }
      book.commit(rec, tag + "dims match the p^k torsion of H", "dims " + join(pg.dims));

      const ClosedFormPage cf(r, n, p, k);
      const auto phi = derived_to_closed_form(c, cf);
      Tally agree;
      for (int i = 0; i <= r; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (!invertible_mod_p(phi[u], p)) {
          agree.fail(i, "comparison map is not bijective");
          continue;
        }
        if (i < r)
          if (auto col = differing_column(mul(phi[u + 1], pg.d[u], p), mul(cf.page().d[u], phi[u], p), p))
            agree.fail(i, "comparison does not commute with d_k", entries(pg.lifts[u].col(*col)));
      }
      agree.commit(rec, tag + "agrees with the closed-form page", "closed-form dims " + join(cf.page().dims));

      if (n == 0 || k <= nu) {
        const int m = n == 0 ? 0 : static_cast<int>(n / power(Integer(p), k));
        const auto psi = cartier_composite_to_page(c);
        const auto psi_cf = cartier_composite_to_closed_form(r, n, p, cf);
        Tally ident, ident_cf;
        for (int i = 0; i <= r; ++i) {
          const auto u = static_cast<std::size_t>(i);
          const ModMatrix dm = i < r ? reduce_mod_p(d_matrix(r, m, i), p) : zero_mod(0, piece_dim(r, m, i));
          if (!invertible_mod_p(psi[u], p)) {
            ident.fail(i, "Cartier composite is not bijective");
          } else if (i < r) {
            if (auto col = differing_column(mul(pg.d[u], psi[u], p), mul(psi[u + 1], dm, p), p)) {
              ModVector unit = ModVector::Zero(piece_dim(r, m, i));
              unit(*col) = 1;
              ident.fail(i, "d_k does not match d on basis form " + to_string(basis(r, m, i)[*col], r),
                         entries(unit));
            }
          }
          if (!invertible_mod_p(psi_cf[u], p)) {
            ident_cf.fail(i, "Cartier composite is not bijective onto the closed-form page");
          } else if (i < r && differing_column(mul(cf.page().d[u], psi_cf[u], p),
                                               mul(psi_cf[u + 1], dm, p), p)) {
            ident_cf.fail(i, "closed-form d_k does not match d");
          }
        }
        const std::string target = "Omega_" + std::to_string(m) + " (x) F_" + std::to_string(p);
        ident.commit(rec, tag + "isomorphic to " + target + " via the Cartier composite");
        ident_cf.commit(rec, tag + "closed-form page isomorphic to " + target);
      } else {
        rec.check(tag + "vanishes beyond the p-adic valuation", pg.is_zero() && cf.page().is_zero(),
                  "dims " + join(pg.dims));
      }
    }
  });
  return rec.finish();
}

VerificationReport verify_filtration(int r, int n) {
  Recorder rec("filtration", {{"r", r}, {"n", n}});
  rec.guarded("computation", [&] {
    if (n < 1) throw std::invalid_argument("filtration: n must be at least 1");
    const CohomologyResult H = integral_cohomology(r, n);
    Tally graded, outside, boundaries, rebuilt, rebuilt_b;
    const auto R = static_cast<std::size_t>(r + 1);
    std::vector<std::vector<Integer>> from_cocycles(R), from_boundaries(R);
    for (Prime p : primes_up_to(n)) {
      if (n % p != 0) continue;
      const int nu = valuation(Integer(n), Integer(p));
      for (int i = 0; i <= r; ++i) {
        const auto u = static_cast<std::size_t>(i);
        std::vector<Index> cocycles, got;
        for (int k = 1; k <= nu + 1; ++k) {
          const int m = static_cast<int>(n / power(Integer(p), std::min(k, nu)));
          const bool in_range = i > 0 && k <= nu;
          cocycles.push_back(in_range ? cocycle_dim(r, m, i, p) : 0);
          got.push_back(graded_piece_dim(H.group(i), Integer(p), k));
          const std::string at = "p = " + std::to_string(p) + ", k = " + std::to_string(k) + ": ";
          if (!in_range && got.back() != 0)
            outside.fail(i, at + "graded dim " + std::to_string(got.back()));
          if (in_range && got.back() != cocycles.back())
            graded.fail(i, at + "graded dim " + std::to_string(got.back()) + ", cocycle dim " +
                               std::to_string(cocycles.back()));
          // Summands of order exactly p^k against mod-p boundaries in Ω^i_m.
          if (k <= nu) {
            const Index rank = i > 0 ? piece_dim(r, m, i - 1) - cocycle_dim(r, m, i - 1, p) : 0;
            from_boundaries[u].insert(from_boundaries[u].end(), static_cast<std::size_t>(rank),
                                      power(Integer(p), k));
            const Index exact = graded_piece_dim(H.group(i), Integer(p), k) -
                                graded_piece_dim(H.group(i), Integer(p), k + 1);
            if (exact != rank)
              boundaries.fail(i, at + std::to_string(exact) + " summands of order p^k, boundary rank " +
                                     std::to_string(rank));
          }
        }
        for (int k = 1; k <= nu; ++k) {
          const Index count = cocycles[static_cast<std::size_t>(k - 1)] - cocycles[static_cast<std::size_t>(k)];
          for (Index c = 0; c < count; ++c) from_cocycles[u].push_back(power(Integer(p), k));
        }
      }
    }
    for (int i = 0; i <= r; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const FgAbGroup a = FgAbGroup::from_orders(from_cocycles[u]);
      if (!is_isomorphic(a, H.group(i)))
        rebuilt.fail(i, "rebuilt " + a.to_string() + ", computed " + H.group(i).to_string());
      const FgAbGroup b = FgAbGroup::from_orders(from_boundaries[u]);
      if (!is_isomorphic(b, H.group(i)))
        rebuilt_b.fail(i, "rebuilt " + b.to_string() + ", computed " + H.group(i).to_string());
    }
    graded.commit(rec, "graded pieces match cocycle dimensions", "every p | n, 0 < k <= nu, i > 0");
    outside.commit(rec, "graded pieces vanish outside the range", "i = 0 or k = nu+1");
    rebuilt.commit(rec, "H^i rebuilt from the cocycle dimensions", range_detail(r));
    boundaries.commit(rec, "Z/p^k summand counts match boundary ranks in Omega_(n/p^k) (x) F_p",
                      "every p | n, 0 < k <= nu");
    rebuilt_b.commit(rec, "H^i rebuilt from the boundary ranks", range_detail(r));
    rec.note("graded dims are non-increasing in k, so vanishing at k = nu+1 covers all larger k");
    rec.note("the natural map to the cocycle functor is not constructed; dimensions and the rebuilt groups are checked");
  });
  return rec.finish();
}

VerificationReport verify_example_deg4(int r) {
  Recorder rec("example_deg4", {{"r", r}, {"n", 4}});
  rec.guarded("computation", [&] {
    const CohomologyResult H = integral_cohomology(r, 4);
    const auto pairs = static_cast<std::size_t>(r * (r - 1) / 2);
    std::vector<Integer> h1(static_cast<std::size_t>(r), Integer(4));
    h1.insert(h1.end(), pairs, Integer(2));
    const FgAbGroup e1 = FgAbGroup::from_orders(h1);
    const FgAbGroup e2 = FgAbGroup::from_orders(std::vector<Integer>(pairs, Integer(2)));
    rec.check("H^1 = (Z/4)^r + (Z/2)^(r(r-1)/2)", is_isomorphic(H.group(1), e1), H.group(1).to_string());
    if (r >= 2)
      rec.check("H^2 = Lambda^2 (x) Z/2", is_isomorphic(H.group(2), e2), H.group(2).to_string());
    Tally others;
    for (int i = 0; i <= r; ++i)
      if (i != 1 && i != 2 && !H.group(i).is_trivial()) others.fail(i, H.group(i).to_string());
    others.commit(rec, "other degrees vanish", range_detail(r));
    const Index sub = graded_piece_dim(H.group(1), Integer(2), 2);
    const Index quo = graded_piece_dim(H.group(1), Integer(2), 1);
    rec.check("2 H^1 has dimension r (S^1/2)", sub == r, std::to_string(sub));
    rec.check("H^1 / 2 H^1 matches the cocycles of Omega^1_2 (x) F_2", quo == cocycle_dim(r, 2, 1, 2),
              std::to_string(quo));
    rec.note("non-splitness is checked only as groups: Z/4 summands are present");
  });
  return rec.finish();
}

VerificationReport verify_single(const std::string& statement, int r, int n, Prime p) {
  const auto id = canonical_statement(statement);
  if (!id) throw std::invalid_argument("unknown statement: " + statement);
  if (*id == "annihilation") return verify_annihilation(r, n);
  if (*id == "cartier") return verify_cartier(r, n, p);
  if (*id == "couple_morphism") return verify_couple_morphism(r, n, p);
  if (*id == "frobenius_iso") return verify_frobenius_iso(r, n, p);
  if (*id == "page_identification") return verify_page_identification(r, n, p);
  if (*id == "filtration") return verify_filtration(r, n);
  return verify_example_deg4(r);
}

std::vector<VerificationReport> sweep(const SweepOptions& options) {
  struct Job {
    std::string id;
    int r, n;
    Prime p;
  };
  std::vector<std::string> ids;
  for (const auto& s : options.statements) {
    auto id = canonical_statement(s);
    if (!id) throw std::invalid_argument("unknown statement: " + s);
    if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
  }
  if (ids.empty()) ids = statement_ids();
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
    const auto& all = statement_ids();
    return std::find(all.begin(), all.end(), a) < std::find(all.begin(), all.end(), b);
  });

  auto wanted = [&](Prime p) { return options.prime == 0 || options.prime == p; };
  const auto primes = primes_up_to(std::min<long long>(options.nmax, kMaxPrime));
  std::vector<Job> jobs;
  for (const auto& id : ids)
    for (int r = 1; r <= options.rmax; ++r) {
      if (id == "example_deg4") {
        if (r <= 3 && options.nmax >= 4) jobs.push_back({id, r, 4, 0});
        continue;
      }
      for (int n = 1; n <= options.nmax; ++n) {
        if (id == "annihilation" || id == "filtration") {
          jobs.push_back({id, r, n, 0});
          continue;
        }
        for (Prime p : primes) {
          if (!wanted(p)) continue;
          const bool frob = id == "cartier" || id == "couple_morphism" || id == "frobenius_iso";
          if (frob ? p * n <= options.nmax : n % p == 0) jobs.push_back({id, r, n, p});
        }
      }
    }

  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++)
      out[k] = verify_single(jobs[k].id, jobs[k].r, jobs[k].n, jobs[k].p);
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::vector<VerificationReport> sweep(int rmax, int nmax) {
  SweepOptions o;
  o.rmax = rmax;
  o.nmax = nmax;
  return sweep(o);
}

}  // namespace derham
