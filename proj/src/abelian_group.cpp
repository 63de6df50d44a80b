#include "derham/abelian_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace derham {

struct FgAbGroup::Data {
  Index ngens = 0;
  IntMatrix relations;
  // Summand j is generated by generators.col(j) and has order orders[j];
  // coordinates.row(j) reads off its coefficient.
  std::vector<Integer> orders;
  IntMatrix generators;
  IntMatrix coordinates;
  // When every relation touches a single generator the Smith basis is the
  // standard one and `diag_index[j]` names the generator of summand j.
  bool diagonal = false;
  std::vector<Index> diag_index;
  std::vector<Integer> invariants;
  Index free_rank = 0;
};

namespace {

// Invariant factors of ⊕ ℤ/orders by pairwise gcd/lcm exchanges.
void chain_from_orders(const std::vector<Integer>& orders, std::vector<Integer>& invariants,
                       Index& free_rank) {
  std::vector<Integer> finite;
  free_rank = 0;
  for (const Integer& o : orders) {
    if (is_zero(o))
      ++free_rank;
    else if (o != 1)
      finite.push_back(o);
  }
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      if (finite[j] % finite[i] == 0) continue;
      Integer g = gcd(finite[i], finite[j]);
      Integer l = finite[i] / g * finite[j];
      finite[i] = g;
      finite[j] = l;
    }
  invariants.clear();
  for (const Integer& d : finite)
    if (d != 1) invariants.push_back(d);
  std::sort(invariants.begin(), invariants.end());
}

bool single_entry_columns(const IntMatrix& rel) {
  for (Index j = 0; j < rel.cols(); ++j) {
    int count = 0;
    for (Index i = 0; i < rel.rows(); ++i)
      if (!is_zero(rel(i, j)) && ++count > 1) return false;
  }
  return true;
}

}  // namespace

FgAbGroup::FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}

FgAbGroup::FgAbGroup(Index ngens, IntMatrix relations) {
  if (relations.cols() > 0 && relations.rows() != ngens)
    throw std::invalid_argument("FgAbGroup: relation matrix must have one row per generator");
  if (relations.cols() == 0) relations.resize(ngens, 0);
  auto d = std::make_shared<Data>();
  d->ngens = ngens;
  d->relations = std::move(relations);
  const IntMatrix& rel = d->relations;

  if (single_entry_columns(rel)) {
    d->diagonal = true;
    std::vector<Integer> per_gen(static_cast<std::size_t>(ngens), Integer(0));
    for (Index j = 0; j < rel.cols(); ++j)
      for (Index i = 0; i < ngens; ++i)
        if (!is_zero(rel(i, j))) per_gen[i] = gcd(per_gen[i], abs_value(rel(i, j)));
    for (Index i = 0; i < ngens; ++i)
      if (per_gen[i] != 1) {
        d->orders.push_back(per_gen[i]);
        d->diag_index.push_back(i);
      }
    chain_from_orders(per_gen, d->invariants, d->free_rank);
  } else {
    auto s = snf(rel, SmithRequest{.left = true, .right = false, .left_inverse = true});
    std::vector<Index> keep;
    const Index diag = std::min(rel.rows(), rel.cols());
    for (Index i = 0; i < ngens; ++i) {
      Integer si = i < diag ? s.S(i, i) : Integer(0);
      if (si == 1) continue;
      keep.push_back(i);
      d->orders.push_back(si);
      if (is_zero(si))
        ++d->free_rank;
      else
        d->invariants.push_back(si);
    }
    d->generators.resize(ngens, static_cast<Index>(keep.size()));
    d->coordinates.resize(static_cast<Index>(keep.size()), ngens);
    for (std::size_t k = 0; k < keep.size(); ++k) {
      d->generators.col(static_cast<Index>(k)) = s.U_inverse.col(keep[k]);
      d->coordinates.row(static_cast<Index>(k)) = s.U.row(keep[k]);
    }
  }
  data_ = std::move(d);
}

FgAbGroup FgAbGroup::free_abelian(Index rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }

FgAbGroup FgAbGroup::from_orders(const std::vector<Integer>& orders) {
  const Index n = static_cast<Index>(orders.size());
  IntMatrix rel = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) rel(i, i) = orders[static_cast<std::size_t>(i)];
  return FgAbGroup(n, std::move(rel));
}

Index FgAbGroup::ngens() const { return data_->ngens; }
const IntMatrix& FgAbGroup::relations() const { return data_->relations; }
Index FgAbGroup::free_rank() const { return data_->free_rank; }
const std::vector<Integer>& FgAbGroup::invariant_factors() const { return data_->invariants; }
Index FgAbGroup::summand_count() const { return static_cast<Index>(data_->orders.size()); }
const std::vector<Integer>& FgAbGroup::summand_orders() const { return data_->orders; }

Integer FgAbGroup::order() const {
  if (!is_finite()) throw std::domain_error("FgAbGroup::order: group is infinite");
  Integer o = 1;
  for (const Integer& d : data_->invariants) o *= d;
  return o;
}

IntVector FgAbGroup::normal_form(const IntVector& x) const {
  if (x.size() != data_->ngens)
    throw std::invalid_argument("FgAbGroup: element has wrong length");
  const Index m = summand_count();
  IntVector y(m);
  for (Index k = 0; k < m; ++k) {
    Integer v;
    if (data_->diagonal) {
      v = x(data_->diag_index[static_cast<std::size_t>(k)]);
    } else {
      v = 0;
      for (Index i = 0; i < data_->ngens; ++i)
        if (!is_zero(x(i)) && !is_zero(data_->coordinates(k, i)))
          v += data_->coordinates(k, i) * x(i);
    }
    const Integer& o = data_->orders[static_cast<std::size_t>(k)];
    y(k) = is_zero(o) ? v : mod_floor(v, o);
  }
  return y;
}

IntMatrix FgAbGroup::summand_generators() const {
  if (!data_->diagonal) return data_->generators;
  IntMatrix g = IntMatrix::Zero(data_->ngens, summand_count());
  for (Index k = 0; k < summand_count(); ++k) g(data_->diag_index[static_cast<std::size_t>(k)], k) = 1;
  return g;
}

bool FgAbGroup::is_zero_element(const IntVector& x) const {
  IntVector y = normal_form(x);
  for (Index k = 0; k < y.size(); ++k)
    if (!is_zero(y(k))) return false;
  return true;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank() > 0) {
    out << "Z";
    if (free_rank() > 1) out << "^" << free_rank();
    first = false;
  }
  for (const Integer& d : invariant_factors()) {
    if (!first) out << " + ";
    out << "Z/" << d.str();
    first = false;
  }
  return out.str();
}

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) {
  return a.free_rank() == b.free_rank() && a.invariant_factors() == b.invariant_factors();
}

Homomorphism::Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 && matrix_.cols() == 0)
    matrix_ = IntMatrix::Zero(target_.ngens(), source_.ngens());
  if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
    throw std::invalid_argument("Homomorphism: matrix shape does not match the groups");
  const IntMatrix& rel = source_.relations();
  for (Index j = 0; j < rel.cols(); ++j) {
    IntVector image = sparse_apply(matrix_, rel.col(j));
    if (!target_.is_zero_element(image))
      throw std::domain_error("Homomorphism: relation " + std::to_string(j) +
                              " of the source does not map to zero");
  }
}

Homomorphism Homomorphism::identity(const FgAbGroup& g) {
  return Homomorphism(g, g, IntMatrix::Identity(g.ngens(), g.ngens()));
}

Homomorphism Homomorphism::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return Homomorphism(source, target, IntMatrix::Zero(target.ngens(), source.ngens()));
}

IntVector Homomorphism::operator()(const IntVector& x) const {
  if (x.size() != source_.ngens())
    throw std::invalid_argument("Homomorphism: argument has wrong length");
  return sparse_apply(matrix_, x);
}

bool Homomorphism::is_zero() const {
  for (Index j = 0; j < matrix_.cols(); ++j)
    if (!target_.is_zero_element(matrix_.col(j))) return false;
  return true;
}

bool Homomorphism::is_injective() const { return kernel(*this).group().is_trivial(); }
bool Homomorphism::is_surjective() const { return cokernel(*this).group().is_trivial(); }

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.target().ngens() != g.source().ngens())
    throw std::invalid_argument("compose: target of f is not the source of g");
  return Homomorphism(f.source(), g.target(), sparse_product(g.matrix(), f.matrix()));
}

bool equal(const Homomorphism& a, const Homomorphism& b) {
  if (a.matrix().rows() != b.matrix().rows() || a.matrix().cols() != b.matrix().cols())
    return false;
  for (Index j = 0; j < a.matrix().cols(); ++j)
    if (!a.target().is_zero_element(a.matrix().col(j) - b.matrix().col(j))) return false;
  return true;
}

Section::Section(const FgAbGroup& ambient, const IntMatrix& numerator,
                 const IntMatrix& denominator)
    : ambient_(ambient), raw_gens_(numerator.cols()) {
  const Index a = ambient.ngens();
  if ((numerator.cols() > 0 && numerator.rows() != a) ||
      (denominator.cols() > 0 && denominator.rows() != a))
    throw std::invalid_argument("Section: generators live in the wrong ambient group");
  IntMatrix stacked = hstack({&numerator, &denominator, &ambient.relations()}, a);
  solver_ = LatticeSolver(stacked);
  IntMatrix raw_rel = solver_.kernel().topRows(raw_gens_);
  auto s = snf(raw_rel, SmithRequest{.left = true, .right = false, .left_inverse = true});
  const Index diag = std::min(raw_rel.rows(), raw_rel.cols());
  std::vector<Integer> orders;
  std::vector<Index> keep;
  for (Index i = 0; i < raw_gens_; ++i) {
    Integer si = i < diag ? s.S(i, i) : Integer(0);
    if (si == 1) continue;
    keep.push_back(i);
    orders.push_back(si);
  }
  group_ = FgAbGroup::from_orders(orders);
  const Index m = static_cast<Index>(keep.size());
  to_summands_.resize(m, raw_gens_);
  IntMatrix raw_gens_matrix(raw_gens_, m);
  for (Index k = 0; k < m; ++k) {
    to_summands_.row(k) = s.U.row(keep[static_cast<std::size_t>(k)]);
    raw_gens_matrix.col(k) = s.U_inverse.col(keep[static_cast<std::size_t>(k)]);
  }
  reps_ = m == 0 || raw_gens_ == 0 ? IntMatrix(IntMatrix::Zero(a, m))
                                   : sparse_product<Integer>(numerator, raw_gens_matrix);
  raw_coords_ = std::move(raw_gens_matrix);
}

std::optional<IntVector> Section::express(const IntVector& x) const {
  auto c = solver_.solve(x);
  if (!c) return std::nullopt;
  const Index m = group_.ngens();
  IntVector y(m);
  for (Index k = 0; k < m; ++k) {
    Integer v = 0;
    for (Index i = 0; i < raw_gens_; ++i)
      if (!is_zero((*c)(i)) && !is_zero(to_summands_(k, i))) v += to_summands_(k, i) * (*c)(i);
    const Integer& o = group_.summand_orders()[static_cast<std::size_t>(k)];
    y(k) = is_zero(o) ? v : mod_floor(v, o);
  }
  return y;
}

IntVector Section::express_or_throw(const IntVector& x, const char* what) const {
  auto y = express(x);
  if (!y) throw std::logic_error(std::string("element is not in the expected subgroup: ") + what);
  return *y;
}

Homomorphism Section::inclusion() const { return Homomorphism(group_, ambient_, reps_); }

Section subgroup(const FgAbGroup& g, const IntMatrix& generators) {
  return Section(g, generators, IntMatrix(g.ngens(), 0));
}

Section quotient(const FgAbGroup& g, const IntMatrix& killed) {
  return Section(g, IntMatrix::Identity(g.ngens(), g.ngens()), killed);
}

Section kernel(const Homomorphism& f) {
  const IntMatrix& m = f.matrix();
  IntMatrix stacked = hstack({&m, &f.target().relations()}, f.target().ngens());
  IntMatrix k = kernel_basis(stacked).topRows(f.source().ngens());
  return subgroup(f.source(), k);
}

Section image(const Homomorphism& f) { return subgroup(f.target(), f.matrix()); }

Section cokernel(const Homomorphism& f) { return quotient(f.target(), f.matrix()); }

Section homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  const Index n = d_in.rows();
  if (d_out.cols() != n)
    throw std::invalid_argument("homology_at: d_out has " + std::to_string(d_out.cols()) +
                                " columns but d_in has " + std::to_string(n) + " rows");
  if (!is_zero_matrix(sparse_product(d_out, d_in)))
    throw std::invalid_argument("homology_at: d_out * d_in is not zero");
  IntMatrix cycles = d_out.rows() == 0 ? IntMatrix(IntMatrix::Identity(n, n)) : kernel_basis(d_out);
  return Section(FgAbGroup::free_abelian(n), cycles, d_in);
}

Integer power(const Integer& base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

int valuation(Integer n, const Integer& p) {
  if (is_zero(n)) throw std::domain_error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Section subgroup_pk(const FgAbGroup& g, const Integer& p, int k) {
  if (k < 0) throw std::invalid_argument("subgroup_pk: k must be nonnegative");
  IntMatrix gens = IntMatrix::Identity(g.ngens(), g.ngens()) * power(p, k);
  return subgroup(g, gens);
}

Index graded_piece_dim(const FgAbGroup& g, const Integer& p, int k) {
  if (k < 1) throw std::invalid_argument("graded_piece_dim: k must be at least 1");
  const Integer pk = power(p, k);
  Index dim = g.free_rank();
  for (const Integer& d : g.invariant_factors())
    if (d % pk == 0) ++dim;
  return dim;
}

FgAbGroup primary_part(const FgAbGroup& g, const Integer& p) {
  std::vector<Integer> orders;
  for (const Integer& d : g.invariant_factors()) {
    Integer q = power(p, valuation(d, p));
    if (q != 1) orders.push_back(q);
  }
  return FgAbGroup::from_orders(orders);
}

Section primary_subgroup(const FgAbGroup& g, const Integer& p) {
  const IntMatrix basis = g.summand_generators();
  const auto& orders = g.summand_orders();
  std::vector<IntVector> cols;
  for (Index k = 0; k < g.summand_count(); ++k) {
    const Integer& o = orders[static_cast<std::size_t>(k)];
    if (is_zero(o)) continue;
    Integer cofactor = o / power(p, valuation(o, p));
    if (cofactor == o) continue;
    cols.push_back(basis.col(k) * cofactor);
  }
  IntMatrix gens(g.ngens(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) gens.col(static_cast<Index>(j)) = cols[j];
  return subgroup(g, gens);
}

}  // namespace derham
