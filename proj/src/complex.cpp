#include "derham/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace derham {

namespace {

// Compositions of `total` into `parts` nonnegative parts, lex decreasing.
void compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> prefix;
  compositions(total, parts, prefix, out);
  return out;
}

// Size-k subsets of {0..r-1} in colex order, i.e. by increasing bitmask.
std::vector<std::vector<int>> colex_subsets(int r, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > r) return out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> s;
    for (int t = 0; t < r; ++t)
      if (mask & (1u << t)) s.push_back(t);
    out.push_back(std::move(s));
  }
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

}  // namespace

int BasisElement::poly_degree() const { return std::accumulate(alpha.begin(), alpha.end(), 0); }

std::vector<int> BasisElement::multidegree() const {
  std::vector<int> beta = alpha;
  for (int t : forms) ++beta[static_cast<std::size_t>(t)];
  return beta;
}

std::string variable_name(int var, int r) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (r <= 4) return names[var];
  return "x" + std::to_string(var + 1);
}

std::string to_string(const BasisElement& e, int r) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < e.alpha.size(); ++j) {
    if (e.alpha[j] == 0) continue;
    if (!first) out << ' ';
    out << variable_name(static_cast<int>(j), r);
    if (e.alpha[j] > 1) out << '^' << e.alpha[j];
    first = false;
  }
  for (int t : e.forms) {
    if (!first) out << ' ';
    out << 'd' << variable_name(t, r);
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

GradedPiece::GradedPiece(int r, int n, int i) : r_(r), n_(n), i_(i) {
  if (r < 0 || n < 0) throw std::invalid_argument("GradedPiece: r and n must be nonnegative");
  if (i < 0 || i > r || i > n) return;
  for (auto& forms : colex_subsets(r, i))
    for (auto& alpha : compositions(n - i, r)) elements_.push_back(BasisElement{alpha, forms});
  for (std::size_t k = 0; k < elements_.size(); ++k)
    index_.emplace(elements_[k], static_cast<Index>(k));
}

Index GradedPiece::index_of(const BasisElement& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

GradedPiece basis(int r, int n, int i) { return GradedPiece(r, n, i); }

Index piece_dim(int r, int n, int i) {
  if (r < 0 || n < 0 || i < 0 || i > r || i > n) return 0;
  if (r == 0) return n == 0 ? 1 : 0;
  return static_cast<Index>(binomial(n - i + r - 1, r - 1) * binomial(r, i));
}

std::vector<Term> d_terms(const BasisElement& e) {
  std::vector<Term> out;
  const int r = static_cast<int>(e.alpha.size());
  for (int j = 0; j < r; ++j) {
    if (e.alpha[static_cast<std::size_t>(j)] == 0) continue;
    if (std::binary_search(e.forms.begin(), e.forms.end(), j)) continue;
    // Moving dx_j past the forms smaller than j.
    const auto pos = std::lower_bound(e.forms.begin(), e.forms.end(), j) - e.forms.begin();
    BasisElement t = e;
    --t.alpha[static_cast<std::size_t>(j)];
    t.forms.insert(t.forms.begin() + pos, j);
    Integer c = e.alpha[static_cast<std::size_t>(j)];
    if (pos % 2 == 1) c = -c;
    out.push_back({std::move(t), std::move(c)});
  }
  return out;
}

std::vector<Term> koszul_terms(const BasisElement& e) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < e.forms.size(); ++k) {
    BasisElement t = e;
    ++t.alpha[static_cast<std::size_t>(e.forms[k])];
    t.forms.erase(t.forms.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back({std::move(t), Integer(k % 2 == 0 ? 1 : -1)});
  }
  return out;
}

Term cartier_term(const BasisElement& e, int p) {
  BasisElement t = e;
  for (int& a : t.alpha) a *= p;
  for (int f : t.forms) t.alpha[static_cast<std::size_t>(f)] += p - 1;
  return {std::move(t), Integer(1)};
}

Term frobenius_term(const BasisElement& e, int p) {
  Term t = cartier_term(e, p);
  t.coeff = 1;
  for (std::size_t k = 0; k < e.forms.size(); ++k) t.coeff *= p;
  return t;
}

ModMatrix cartier_rep_matrix(int r, int n, int i, Prime p) {
  require_small_prime(p);
  return cartier_lift_matrix<std::int64_t>(r, n, i, static_cast<int>(p));
}

namespace {

using Polynomial = std::map<std::vector<int>, Integer>;

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

Integer determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const Index n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (is_zero(m(k, k))) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (!is_zero(m(i, k))) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace

IntMatrix substitution_map(const IntMatrix& f, int n, int i) {
  const int s = static_cast<int>(f.rows());
  const int r = static_cast<int>(f.cols());
  const GradedPiece src(r, n, i);
  const GradedPiece tgt(s, n, i);
  IntMatrix out = IntMatrix::Zero(tgt.dim(), src.dim());
  if (src.dim() == 0 || tgt.dim() == 0) return out;

  std::vector<Polynomial> images(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < s; ++k)
      if (!is_zero(f(k, j))) {
        std::vector<int> e(static_cast<std::size_t>(s), 0);
        e[static_cast<std::size_t>(k)] = 1;
        images[static_cast<std::size_t>(j)][e] = f(k, j);
      }
  const auto target_forms = colex_subsets(s, i);

  for (Index c = 0; c < src.dim(); ++c) {
    const BasisElement& e = src[c];
    Polynomial poly{{std::vector<int>(static_cast<std::size_t>(s), 0), Integer(1)}};
    for (int j = 0; j < r; ++j)
      for (int a = 0; a < e.alpha[static_cast<std::size_t>(j)]; ++a)
        poly = multiply(poly, images[static_cast<std::size_t>(j)]);
    for (const auto& u : target_forms) {
      IntMatrix minor(i, i);
      for (int a = 0; a < i; ++a)
        for (int b = 0; b < i; ++b)
          minor(a, b) = f(u[static_cast<std::size_t>(a)], e.forms[static_cast<std::size_t>(b)]);
      const Integer det = determinant(minor);
      if (is_zero(det)) continue;
      for (const auto& [gamma, coeff] : poly) {
        const Index row = tgt.index_of(BasisElement{gamma, u});
        out(row, c) += coeff * det;
      }
    }
  }
  return out;
}

IntMatrix ComplexZ::d(int i) const {
  if (i >= 0 && i < static_cast<int>(differentials.size()))
    return differentials[static_cast<std::size_t>(i)];
  return IntMatrix::Zero(piece_dim(r, n, i + 1), piece_dim(r, n, i));
}

ComplexZ derham_complex(int r, int n) {
  ComplexZ c{r, n, {}};
  for (int i = 0; i <= r; ++i) c.differentials.push_back(d_matrix(r, n, i));
  return c;
}

IntMatrix MultidegreeBlock::d_in(int i) const {
  const Index rows = i >= 0 && i < static_cast<int>(indices.size())
                         ? static_cast<Index>(indices[static_cast<std::size_t>(i)].size())
                         : 0;
  if (i >= 1 && i - 1 < static_cast<int>(d.size())) return d[static_cast<std::size_t>(i - 1)];
  return IntMatrix::Zero(rows, 0);
}

IntMatrix MultidegreeBlock::d_out(int i) const {
  const Index cols = i >= 0 && i < static_cast<int>(indices.size())
                         ? static_cast<Index>(indices[static_cast<std::size_t>(i)].size())
                         : 0;
  if (i >= 0 && i < static_cast<int>(d.size())) return d[static_cast<std::size_t>(i)];
  return IntMatrix::Zero(0, cols);
}

std::vector<std::vector<int>> multidegrees(int r, int n) { return compositions(n, r); }

std::vector<MultidegreeBlock> multidegree_blocks(int r, int n) {
  std::vector<GradedPiece> pieces;
  for (int i = 0; i <= r; ++i) pieces.emplace_back(r, n, i);
  std::vector<MultidegreeBlock> blocks;
  for (auto& beta : multidegrees(r, n)) {
    MultidegreeBlock b;
    b.beta = beta;
    std::vector<int> support;
    for (int j = 0; j < r; ++j)
      if (beta[static_cast<std::size_t>(j)] > 0) support.push_back(j);
    for (int i = 0; i <= r; ++i) {
      std::vector<Index> idx;
      for (auto& forms : colex_subsets(static_cast<int>(support.size()), i)) {
        BasisElement e{beta, {}};
        for (int t : forms) {
          const int var = support[static_cast<std::size_t>(t)];
          e.forms.push_back(var);
          --e.alpha[static_cast<std::size_t>(var)];
        }
        idx.push_back(pieces[static_cast<std::size_t>(i)].index_of(e));
      }
      std::sort(idx.begin(), idx.end());
      b.indices.push_back(std::move(idx));
    }
    for (int i = 0; i < r; ++i) {
      const auto& src = b.indices[static_cast<std::size_t>(i)];
      const auto& tgt = b.indices[static_cast<std::size_t>(i + 1)];
      IntMatrix m = IntMatrix::Zero(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()));
      for (std::size_t c = 0; c < src.size(); ++c)
        for (const Term& t : d_terms(pieces[static_cast<std::size_t>(i)][src[c]])) {
          const Index g = pieces[static_cast<std::size_t>(i + 1)].index_of(t.element);
          const auto row = std::lower_bound(tgt.begin(), tgt.end(), g) - tgt.begin();
          m(row, static_cast<Index>(c)) += t.coeff;
        }
      b.d.push_back(std::move(m));
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace derham
