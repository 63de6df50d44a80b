#include "derham/bockstein.hpp"

#include <stdexcept>

namespace derham {

namespace {

IntVector to_int_vector(const ModVector& v) {
  IntVector out(v.size());
  for (Index k = 0; k < v.size(); ++k) out(k) = Integer(v(k));
  return out;
}

ModVector reduce_column(const IntVector& v, Prime p) { return reduce_mod_p(v, p); }

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("product: shape mismatch");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return IntMatrix::Zero(a.rows(), b.cols());
  return sparse_product(a, b);
}

IntMatrix identity(Index n) { return IntMatrix::Identity(n, n); }

std::string degree_label(const char* node, int i) {
  return std::string(node) + "^" + std::to_string(i);
}

// Every column of `a` lies in the subgroup of g generated by `b`.
bool contained(const FgAbGroup& g, const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() == 0) return true;
  const Section s = subgroup(g, b.cols() == 0 ? IntMatrix(g.ngens(), 0) : b);
  for (Index j = 0; j < a.cols(); ++j)
    if (!s.express(a.col(j))) return false;
  return true;
}

// ker(out) = im(in) inside Y, where `in` has columns in Y coordinates.
bool exact_at(const FgAbGroup& y, const IntMatrix& in, const Homomorphism& out) {
  for (Index j = 0; j < in.cols(); ++j)
    if (!out.target().is_zero_element(out(in.col(j)))) return false;
  return contained(y, kernel(out).representatives(), in);
}

int default_kmax(int n, Prime p) { return n > 0 ? valuation(Integer(n), Integer(p)) + 1 : 1; }

Integer power_of(Prime p, int k) { return power(Integer(p), k); }

// Basis element reached by the k-fold Cartier representative.
BasisElement cartier_power(const BasisElement& e, Prime p, int k) {
  BasisElement out = e;
  for (int s = 0; s < k; ++s) out = cartier_term(out, static_cast<int>(p)).element;
  return out;
}

}  // namespace

std::optional<IntVector> ExactCouple::express_d(int i, const IntVector& h) const {
  IntVector v = h;
  for (const Section& s : d_steps.at(static_cast<std::size_t>(i))) {
    auto y = s.express(v);
    if (!y) return std::nullopt;
    v = std::move(*y);
  }
  return v;
}

std::optional<IntVector> ExactCouple::express_e(int i, const IntVector& e1) const {
  IntVector v = e1;
  for (const Section& s : e_steps.at(static_cast<std::size_t>(i))) {
    auto y = s.express(v);
    if (!y) return std::nullopt;
    v = std::move(*y);
  }
  return v;
}

std::shared_ptr<const CoupleBase> couple_base(int r, int n, Prime p) {
  require_small_prime(p);
  auto b = std::make_shared<CoupleBase>();
  b->r = r;
  b->n = n;
  b->p = p;
  b->complex = derham_complex(r, n);
  b->integral = integral_cohomology(r, n);
  b->modp = modp_cohomology(r, n, p);
  return b;
}

ExactCouple initial_couple(int r, int n, Prime p) { return initial_couple(couple_base(r, n, p)); }

ExactCouple initial_couple(std::shared_ptr<const CoupleBase> base) {
  const int r = base->r;
  const Prime p = base->p;
  const auto& H = base->integral;
  const auto& M = base->modp;
  ExactCouple c;
  c.base = base;
  for (int i = 0; i <= r; ++i) {
    c.D.push_back(H.group(i));
    c.E.push_back(M.at(i).group());
  }
  for (int i = 0; i <= r; ++i) {
    const FgAbGroup& d = c.D[static_cast<std::size_t>(i)];
    const FgAbGroup& e = c.E[static_cast<std::size_t>(i)];
    c.i_map.emplace_back(d, d, identity(d.ngens()) * Integer(p));

    const IntMatrix reps = H.at(i).representatives();
    IntMatrix jm(e.ngens(), d.ngens());
    for (Index g = 0; g < reps.cols(); ++g) {
      auto coords = M.at(i).express(reduce_column(reps.col(g), p));
      if (!coords) throw std::logic_error("initial_couple: integral cocycle is not a mod-p cocycle");
      jm.col(g) = to_int_vector(*coords);
    }
    c.j_map.emplace_back(d, e, std::move(jm));

    const FgAbGroup next = i < r ? H.group(i + 1) : FgAbGroup();
    IntMatrix km = IntMatrix::Zero(next.ngens(), e.ngens());
    if (i < r) {
      const ModMatrix lifts = M.at(i).representatives();
      const IntMatrix di = base->complex.d(i);
      for (Index g = 0; g < lifts.cols(); ++g) {
        IntVector y = sparse_apply(di, to_int_vector(lifts.col(g)));
        for (Index k = 0; k < y.size(); ++k) {
          if (!is_zero(mod_floor(y(k), Integer(p))))
            throw std::logic_error("initial_couple: lift of a mod-p cocycle has d not divisible by p");
          y(k) /= Integer(p);
        }
        auto coords = H.at(i + 1).express(y);
        if (!coords) throw std::logic_error("initial_couple: connecting map hit a non-cocycle");
        km.col(g) = *coords;
      }
    }
    c.k_map.emplace_back(e, next, std::move(km));
    c.d_gens.push_back(identity(d.ngens()));
    c.e_gens.push_back(identity(e.ngens()));
  }
  c.d_steps.resize(static_cast<std::size_t>(r + 1));
  c.e_steps.resize(static_cast<std::size_t>(r + 1));
  return c;
}

std::optional<std::string> exactness_defect(const ExactCouple& c) {
  const int r = c.r();
  for (int i = 0; i <= r; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const IntMatrix incoming = i > 0 ? c.k_map[u - 1].matrix() : IntMatrix(c.D[u].ngens(), 0);
    if (!exact_at(c.D[u], incoming, c.i_map[u]))
      return "ker i != im k at " + degree_label("D", i);
    if (!exact_at(c.D[u], c.i_map[u].matrix(), c.j_map[u]))
      return "ker j != im i at " + degree_label("D", i);
    if (!exact_at(c.E[u], c.j_map[u].matrix(), c.k_map[u]))
      return "ker k != im j at " + degree_label("E", i);
  }
  return std::nullopt;
}

ExactCouple derive(const ExactCouple& c) {
  const int r = c.r();
  const auto R = static_cast<std::size_t>(r + 1);
  ExactCouple out;
  out.base = c.base;
  out.stage = c.stage + 1;

  std::vector<Section> dsub(R), esq(R);
  std::vector<IntMatrix> dk(R);
  for (std::size_t i = 0; i < R; ++i) {
    dsub[i] = image(c.i_map[i]);
    out.D.push_back(dsub[i].group());
    dk[i] = i + 1 < R ? product(c.j_map[i + 1].matrix(), c.k_map[i].matrix())
                      : IntMatrix(0, c.E[i].ngens());
  }
  for (std::size_t i = 0; i < R; ++i) {
    const FgAbGroup next = i + 1 < R ? c.E[i + 1] : FgAbGroup();
    const Homomorphism dki(c.E[i], next, dk[i]);
    const IntMatrix boundaries = i > 0 ? dk[i - 1] : IntMatrix(c.E[i].ngens(), 0);
    for (Index j = 0; j < boundaries.cols(); ++j)
      if (!next.is_zero_element(dki(boundaries.col(j))))
        throw std::logic_error("derive: j k j k is not zero at " + degree_label("E", static_cast<int>(i)));
    esq[i] = Section(c.E[i], kernel(dki).representatives(), boundaries);
    out.E.push_back(esq[i].group());
  }

  for (std::size_t i = 0; i < R; ++i) {
    const FgAbGroup& dp = out.D[i];
    const FgAbGroup& ep = out.E[i];

    const IntMatrix& drep = dsub[i].representatives();
    IntMatrix im(dp.ngens(), dp.ngens());
    for (Index g = 0; g < dp.ngens(); ++g)
      im.col(g) = dsub[i].express_or_throw(c.i_map[i](drep.col(g)), "i restricted to i(D)");
    out.i_map.emplace_back(dp, dp, std::move(im));

    // j'(i(x)) = [j(x)]: x is read off the numerator coordinates of the
    // image section. Any other preimage differs by ker i, whose image under j
    // must vanish in E'.
    const IntMatrix& pre = dsub[i].numerator_coordinates();
    IntMatrix jm(ep.ngens(), dp.ngens());
    for (Index g = 0; g < dp.ngens(); ++g)
      jm.col(g) = esq[i].express_or_throw(c.j_map[i](pre.col(g)), "j of a preimage under i");
    const IntMatrix ker_i = kernel(c.i_map[i]).representatives();
    for (Index z = 0; z < ker_i.cols(); ++z) {
      auto y = esq[i].express(c.j_map[i](ker_i.col(z)));
      if (!y || !ep.is_zero_element(*y))
        throw std::logic_error("derive: j' depends on the preimage choice at " +
                               degree_label("D", static_cast<int>(i)));
    }
    out.j_map.emplace_back(dp, ep, std::move(jm));

    const FgAbGroup next = i + 1 < R ? out.D[i + 1] : FgAbGroup();
    IntMatrix km = IntMatrix::Zero(next.ngens(), ep.ngens());
    if (i + 1 < R) {
      const IntMatrix& erep = esq[i].representatives();
      for (Index g = 0; g < ep.ngens(); ++g)
        km.col(g) = dsub[i + 1].express_or_throw(c.k_map[i](erep.col(g)), "k lands in i(D)");
    }
    out.k_map.emplace_back(ep, next, std::move(km));

    out.d_gens.push_back(product(c.d_gens[i], dsub[i].representatives()));
    out.e_gens.push_back(product(c.e_gens[i], esq[i].representatives()));
    out.d_steps.push_back(c.d_steps[i]);
    out.d_steps.back().push_back(dsub[i]);
    out.e_steps.push_back(c.e_steps[i]);
    out.e_steps.back().push_back(esq[i]);
  }
  if (auto defect = exactness_defect(out))
    throw std::logic_error("derive: derived couple is not exact: " + *defect);
  return out;
}

bool SpectralPage::is_zero() const {
  for (Index d : dims)
    if (d != 0) return false;
  return true;
}

SpectralPage page_of(const ExactCouple& c) {
  const int r = c.r();
  const Prime p = c.p();
  SpectralPage page;
  page.k = c.stage;
  for (int i = 0; i <= r; ++i) {
    const FgAbGroup& e = c.E[static_cast<std::size_t>(i)];
    for (const Integer& o : e.summand_orders())
      if (o != p) throw std::logic_error("page_of: " + degree_label("E", i) + " is not elementary abelian");
    page.dims.push_back(e.ngens());
  }
  for (int i = 0; i <= r; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (i < r)
      page.d.push_back(reduce_mod_p(product(c.j_map[u + 1].matrix(), c.k_map[u].matrix()), p));
    else
      page.d.push_back(ModMatrix(0, page.dims[u]));
    const ModMatrix base_lifts = c.base->modp.at(i).representatives();
    page.lifts.push_back(
        page.dims[u] == 0 || base_lifts.cols() == 0
            ? ModMatrix(ModMatrix::Zero(base_lifts.rows(), page.dims[u]))
            : multiply_mod_p(base_lifts, reduce_mod_p(c.e_gens[u], p), p));
  }
  return page;
}

std::vector<ExactCouple> couples(int r, int n, Prime p, int kmax) {
  if (kmax <= 0) kmax = default_kmax(n, p);
  std::vector<ExactCouple> out;
  out.push_back(initial_couple(r, n, p));
  if (auto defect = exactness_defect(out.back()))
    throw std::logic_error("initial couple is not exact: " + *defect);
  for (int k = 2; k <= kmax; ++k) out.push_back(derive(out.back()));
  return out;
}

std::vector<SpectralPage> pages(int r, int n, Prime p, int kmax) {
  std::vector<SpectralPage> out;
  for (const ExactCouple& c : couples(r, n, p, kmax)) out.push_back(page_of(c));
  return out;
}

ClosedFormPage::ClosedFormPage(int r, int n, Prime p, int k) : r_(r), n_(n), p_(p) {
  require_small_prime(p);
  if (k < 1) throw std::invalid_argument("ClosedFormPage: k must be at least 1");
  const auto R = static_cast<std::size_t>(r + 1);
  const auto blocks = multidegree_blocks(r, n);
  parts_.assign(R, {});
  offsets_.assign(R, {});
  for (int i = 0; i <= r; ++i) cochain_dims_.push_back(piece_dim(r, n, i));
  page_.k = k;
  page_.dims.assign(R, 0);

  for (const MultidegreeBlock& b : blocks) {
    // z[j][i]: generators of Z_j^i, j = 0..k.
    std::vector<std::vector<IntMatrix>> z(static_cast<std::size_t>(k + 1), std::vector<IntMatrix>(R));
    for (std::size_t i = 0; i < R; ++i) {
      const Index N = static_cast<Index>(b.indices[i].size());
      const IntMatrix dout = b.d_out(static_cast<int>(i));
      z[0][i] = identity(N);
      for (int j = 1; j <= k; ++j) {
        if (N == 0 || dout.rows() == 0) {
          z[static_cast<std::size_t>(j)][i] = identity(N);
          continue;
        }
        const IntMatrix scaled = identity(dout.rows()) * power_of(p, j);
        const IntMatrix ker = kernel_basis(hstack({&dout, &scaled}, dout.rows())).topRows(N);
        z[static_cast<std::size_t>(j)][i] = LatticeSolver(ker).hermite_basis();
      }
    }
    const Integer pk1 = power_of(p, k - 1);
    for (std::size_t i = 0; i < R; ++i) {
      Part part;
      part.coords = b.indices[i];
      part.d_out = b.d_out(static_cast<int>(i));
      const Index N = static_cast<Index>(part.coords.size());
      if (N > 0) {
        const IntMatrix& zk1 = z[static_cast<std::size_t>(k - 1)][i];
        IntMatrix lower = zk1 * Integer(p);
        IntMatrix upper(N, 0);
        if (i > 0 && b.indices[i - 1].size() > 0) {
          upper = product(b.d_in(static_cast<int>(i)), z[static_cast<std::size_t>(k - 1)][i - 1]);
          for (Index c = 0; c < upper.cols(); ++c)
            for (Index rr = 0; rr < N; ++rr) {
              if (!is_zero(mod_floor(upper(rr, c), pk1)))
                throw std::logic_error("ClosedFormPage: d Z_{k-1} is not divisible by p^{k-1}");
              upper(rr, c) /= pk1;
            }
        }
        part.classes = Section(FgAbGroup::free_abelian(N), z[static_cast<std::size_t>(k)][i],
                               hstack({&lower, &upper}, N));
        for (const Integer& o : part.classes.group().summand_orders())
          if (o != p) throw std::logic_error("ClosedFormPage: page is not elementary abelian");
      }
      offsets_[i].push_back(page_.dims[i]);
      page_.dims[i] += N > 0 ? part.classes.group().ngens() : 0;
      parts_[i].push_back(std::move(part));
    }
  }

  const Integer pk = power_of(p, k);
  for (std::size_t i = 0; i < R; ++i) {
    const Index rows = i + 1 < R ? page_.dims[i + 1] : 0;
    ModMatrix d = ModMatrix::Zero(rows, page_.dims[i]);
    ModMatrix lifts = ModMatrix::Zero(cochain_dims_[i], page_.dims[i]);
    for (std::size_t bi = 0; bi < parts_[i].size(); ++bi) {
      const Part& part = parts_[i][bi];
      if (part.coords.empty()) continue;
      const IntMatrix& reps = part.classes.representatives();
      for (Index g = 0; g < reps.cols(); ++g) {
        const Index col = offsets_[i][bi] + g;
        for (std::size_t c = 0; c < part.coords.size(); ++c)
          lifts(part.coords[c], col) =
              static_cast<std::int64_t>(mod_floor(reps(static_cast<Index>(c), g), Integer(p)).convert_to<long long>());
        if (i + 1 >= R || part.d_out.rows() == 0) continue;
        IntVector y = sparse_apply(part.d_out, reps.col(g));
        for (Index t = 0; t < y.size(); ++t) {
          if (!is_zero(mod_floor(y(t), pk)))
            throw std::logic_error("ClosedFormPage: representative is not in Z_k");
          y(t) /= pk;
        }
        const Part& next = parts_[i + 1][bi];
        const IntVector coords = next.classes.express_or_throw(y, "d_k lands in Z_k");
        for (Index t = 0; t < coords.size(); ++t)
          d(offsets_[i + 1][bi] + t, col) =
              static_cast<std::int64_t>(mod_floor(coords(t), Integer(p)).convert_to<long long>());
      }
    }
    page_.d.push_back(std::move(d));
    page_.lifts.push_back(std::move(lifts));
  }
}

std::optional<IntVector> ClosedFormPage::express(int i, const IntVector& x) const {
  const auto u = static_cast<std::size_t>(i);
  if (x.size() != cochain_dims_.at(u)) throw std::invalid_argument("ClosedFormPage::express: wrong length");
  IntVector out(page_.dims[u]);
  for (std::size_t bi = 0; bi < parts_[u].size(); ++bi) {
    const Part& part = parts_[u][bi];
    if (part.coords.empty()) continue;
    IntVector local(static_cast<Index>(part.coords.size()));
    for (std::size_t c = 0; c < part.coords.size(); ++c) local(static_cast<Index>(c)) = x(part.coords[c]);
    auto y = part.classes.express(local);
    if (!y) return std::nullopt;
    out.segment(offsets_[u][bi], y->size()) = *y;
  }
  return out;
}

std::optional<IntVector> ClosedFormPage::lift_to_cycles(int i, const IntVector& x) const {
  const auto u = static_cast<std::size_t>(i);
  if (x.size() != cochain_dims_.at(u))
    throw std::invalid_argument("ClosedFormPage::lift_to_cycles: wrong length");
  const Integer pk = power_of(p_, page_.k);
  IntVector out = x;
  for (const Part& part : parts_[u]) {
    if (part.coords.empty() || part.d_out.rows() == 0) continue;
    const Index N = static_cast<Index>(part.coords.size());
    IntVector local(N);
    for (Index c = 0; c < N; ++c) local(c) = x(part.coords[static_cast<std::size_t>(c)]);
    // d(x + p y) + p^k w = 0.
    const IntMatrix pd = part.d_out * Integer(p_);
    const IntMatrix scaled = identity(part.d_out.rows()) * pk;
    IntVector rhs = sparse_apply(part.d_out, local);
    for (Index t = 0; t < rhs.size(); ++t) rhs(t) = -rhs(t);
    auto sol = lattice_solve(hstack({&pd, &scaled}, part.d_out.rows()), rhs);
    if (!sol) return std::nullopt;
    for (Index c = 0; c < N; ++c) out(part.coords[static_cast<std::size_t>(c)]) += Integer(p_) * (*sol)(c);
  }
  return out;
}

std::vector<ModMatrix> derived_to_closed_form(const ExactCouple& c, const ClosedFormPage& cf) {
  if (c.stage != cf.k()) throw std::invalid_argument("derived_to_closed_form: page indices differ");
  const Prime p = c.p();
  const SpectralPage derived = page_of(c);
  std::vector<ModMatrix> out;
  for (int i = 0; i <= c.r(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    ModMatrix phi(cf.page().dims[u], derived.dims[u]);
    for (Index g = 0; g < derived.dims[u]; ++g) {
      auto lifted = cf.lift_to_cycles(i, to_int_vector(derived.lifts[u].col(g)));
      if (!lifted) throw std::logic_error("derived_to_closed_form: representative does not lift to Z_k");
      auto coords = cf.express(i, *lifted);
      if (!coords) throw std::logic_error("derived_to_closed_form: lift is not in Z_k");
      phi.col(g) = reduce_mod_p(*coords, p);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

namespace {

// Global index in Ω^i_n of c^k(e) for each basis element e of Ω^i_{n/p^k}.
std::vector<Index> cartier_composite_indices(int r, int n, Prime p, int k, int i) {
  const Integer pk = power_of(p, k);
  if (n % pk != 0)
    throw std::invalid_argument("cartier composite: p^k does not divide n");
  const int m = static_cast<int>(n / pk);
  const GradedPiece src = basis(r, m, i);
  const GradedPiece tgt = basis(r, n, i);
  std::vector<Index> out;
  for (Index c = 0; c < src.dim(); ++c) {
    const Index row = tgt.index_of(cartier_power(src[c], p, k));
    if (row < 0) throw std::logic_error("cartier composite leaves Ω^i_n");
    out.push_back(row);
  }
  return out;
}

}  // namespace

std::vector<ModMatrix> cartier_composite_to_page(const ExactCouple& c) {
  const Prime p = c.p();
  std::vector<ModMatrix> out;
  for (int i = 0; i <= c.r(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    const auto idx = cartier_composite_indices(c.r(), c.n(), p, c.stage, i);
    ModMatrix psi(c.E[u].ngens(), static_cast<Index>(idx.size()));
    const Index dim = piece_dim(c.r(), c.n(), i);
    for (std::size_t col = 0; col < idx.size(); ++col) {
      ModVector unit = ModVector::Zero(dim);
      unit(idx[col]) = 1;
      auto e1 = c.base->modp.at(i).express(unit);
      if (!e1) throw std::logic_error("cartier composite: image is not a mod-p cocycle");
      auto ek = c.express_e(i, to_int_vector(*e1));
      if (!ek) throw std::logic_error("cartier composite: class does not survive to E_k");
      psi.col(static_cast<Index>(col)) = reduce_mod_p(*ek, p);
    }
    out.push_back(std::move(psi));
  }
  return out;
}

std::vector<ModMatrix> cartier_composite_to_closed_form(int r, int n, Prime p, const ClosedFormPage& cf) {
  std::vector<ModMatrix> out;
  for (int i = 0; i <= r; ++i) {
    const auto idx = cartier_composite_indices(r, n, p, cf.k(), i);
    const Index dim = piece_dim(r, n, i);
    ModMatrix psi(cf.page().dims[static_cast<std::size_t>(i)], static_cast<Index>(idx.size()));
    for (std::size_t col = 0; col < idx.size(); ++col) {
      IntVector unit = IntVector::Zero(dim);
      unit(idx[col]) = 1;
      auto coords = cf.express(i, unit);
      if (!coords) throw std::logic_error("cartier composite: image is not in Z_k");
      psi.col(static_cast<Index>(col)) = reduce_mod_p(*coords, p);
    }
    out.push_back(std::move(psi));
  }
  return out;
}

std::vector<Homomorphism> frobenius_induced(const CoupleBase& src, const CoupleBase& tgt) {
  if (tgt.r != src.r || tgt.n != static_cast<int>(src.p) * src.n)
    throw std::invalid_argument("frobenius_induced: target is not Ω_{pn}");
  std::vector<Homomorphism> out;
  for (int i = 0; i <= src.r; ++i)
    out.push_back(induced_map(frobenius_matrix(src.r, src.n, i, static_cast<int>(src.p)),
                              src.integral.at(i), tgt.integral.at(i)));
  return out;
}

CoupleMorphism frobenius_morphism(const ExactCouple& src, const ExactCouple& tgt) {
  const int r = src.r();
  const Prime p = src.p();
  if (src.stage != 1 || tgt.stage != 2 || tgt.r() != r || tgt.p() != p ||
      tgt.n() != static_cast<int>(p) * src.n())
    throw std::invalid_argument("frobenius_morphism: expects the Ω_n couple and the derived Ω_{pn} couple");
  CoupleMorphism out;
  for (int i = 0; i <= r; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const IntMatrix lift = cartier_lift_matrix(r, src.n(), i, static_cast<int>(p));

    const IntMatrix reps = src.base->integral.at(i).representatives();
    IntMatrix dm(tgt.D[u].ngens(), src.D[u].ngens());
    for (Index g = 0; g < reps.cols(); ++g) {
      IntVector v = sparse_apply(lift, reps.col(g)) * Integer(p);
      auto h = tgt.base->integral.at(i).express(v);
      if (!h) throw std::logic_error("frobenius_morphism: p c(ω) is not a cocycle");
      auto coords = tgt.express_d(i, *h);
      if (!coords) throw std::logic_error("frobenius_morphism: p c(ω) is not in p H");
      dm.col(g) = *coords;
    }
    out.on_d.emplace_back(src.D[u], tgt.D[u], std::move(dm));

    const ModMatrix rep = cartier_rep_matrix(r, src.n(), i, p);
    const ModMatrix lifts = src.base->modp.at(i).representatives();
    IntMatrix em(tgt.E[u].ngens(), src.E[u].ngens());
    for (Index g = 0; g < lifts.cols(); ++g) {
      const ModVector image = multiply_mod_p(rep, lifts.col(g), p);
      auto e1 = tgt.base->modp.at(i).express(image);
      if (!e1) throw std::logic_error("frobenius_morphism: c(ẽ) is not a mod-p cocycle");
      auto coords = tgt.express_e(i, to_int_vector(*e1));
      if (!coords) throw std::logic_error("frobenius_morphism: c(ẽ) does not survive to E_2");
      em.col(g) = *coords;
    }
    out.on_e.emplace_back(src.E[u], tgt.E[u], std::move(em));
  }
  return out;
}

}  // namespace derham
