#include "doctest.h"

#include "derham/abelian_group.hpp"
#include "derham/complex.hpp"
#include "support.hpp"

#include <random>

using namespace derham;
using namespace testing_support;

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (long j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("basis order and names") {
  std::vector<std::string> names;
  const GradedPiece one = basis(2, 2, 1);
  for (const BasisElement& e : one.elements()) names.push_back(to_string(e, 2));
  CHECK(names == std::vector<std::string>{"x dx", "y dx", "x dy", "y dy"});

  names.clear();
  const GradedPiece zero = basis(2, 2, 0);
  for (const BasisElement& e : zero.elements()) names.push_back(to_string(e, 2));
  CHECK(names == std::vector<std::string>{"x^2", "x y", "y^2"});

  CHECK(to_string(basis(3, 3, 3)[0], 3) == "dx dy dz");
  CHECK(to_string(basis(1, 0, 0)[0], 1) == "1");
}

TEST_CASE("basis indexing round trips") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 6; ++n)
      for (int i = 0; i <= r; ++i) {
        const GradedPiece piece = basis(r, n, i);
        for (Index k = 0; k < piece.dim(); ++k) {
          CHECK(piece.index_of(piece[k]) == k);
          CHECK(piece[k].poly_degree() + piece[k].form_degree() == n);
        }
      }
}

TEST_CASE("piece dimensions") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= 8; ++n)
      for (int i = -1; i <= r + 1; ++i) {
        const long expect = (i < 0 || i > r || i > n) ? 0 : binom(n - i + r - 1, r - 1) * binom(r, i);
        CHECK(piece_dim(r, n, i) == expect);
        CHECK(basis(r, n, i).dim() == expect);
      }
}

TEST_CASE("differential examples") {
  CHECK(d_matrix(1, 3, 0) == mat({{3}}));
  CHECK(d_matrix(2, 2, 1) == mat({{0, -1, 1, 0}}));
  // d(x^2) = 2x dx, d(xy) = y dx + x dy, d(y^2) = 2y dy.
  CHECK(d_matrix(2, 2, 0) == mat({{2, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 2}}));
}

TEST_CASE("d squared vanishes") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= 7; ++n)
      for (int i = 0; i + 1 <= r; ++i) CHECK((d_matrix(r, n, i + 1) * d_matrix(r, n, i)).isZero());
}

TEST_CASE("Euler identity d k + k d = n") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 8; ++n)
      for (int i = 0; i <= r; ++i) {
        const Index dim = piece_dim(r, n, i);
        IntMatrix sum = IntMatrix::Zero(dim, dim);
        if (i > 0) sum += d_matrix(r, n, i - 1) * koszul_matrix(r, n, i);
        if (i < r) sum += koszul_matrix(r, n, i + 1) * d_matrix(r, n, i);
        CHECK(sum == IntMatrix::Identity(dim, dim) * Integer(n));
      }
}

TEST_CASE("Frobenius is a chain map and c d = d c / p") {
  for (int p : {2, 3, 5})
    for (int r = 1; r <= 3; ++r)
      for (int n = 0; p * n <= 9; ++n)
        for (int i = 0; i < r; ++i) {
          const IntMatrix f0 = frobenius_matrix(r, n, i, p);
          const IntMatrix f1 = frobenius_matrix(r, n, i + 1, p);
          CHECK(d_matrix(r, p * n, i) * f0 == f1 * d_matrix(r, n, i));
          const IntMatrix c0 = cartier_lift_matrix(r, n, i, p);
          const IntMatrix c1 = cartier_lift_matrix(r, n, i + 1, p);
          CHECK(d_matrix(r, p * n, i) * c0 == c1 * d_matrix(r, n, i) * Integer(p));
          CHECK(f0 == c0 * power(Integer(p), i));
        }
}

TEST_CASE("Cartier and Frobenius terms") {
  const BasisElement e{{1, 0}, {1}};  // x dy
  const Term f = frobenius_term(e, 3);
  CHECK(f.element.alpha == std::vector<int>{3, 2});
  CHECK(f.coeff == 3);
  const Term c = cartier_term(e, 3);
  CHECK(c.element == f.element);
  CHECK(c.coeff == 1);
  CHECK(e.multidegree() == std::vector<int>{1, 1});
}

TEST_CASE("substitution is functorial and commutes with d") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 3);
    const int s = 1 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 3);
    const IntMatrix f = random_matrix(rng, s, r, -2, 2, 20);
    const IntMatrix g = random_matrix(rng, t, s, -2, 2, 20);
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i <= std::min({r, s, t}); ++i) {
      const IntMatrix sf = substitution_map(f, n, i);
      CHECK(substitution_map(g * f, n, i) == substitution_map(g, n, i) * sf);
      if (i + 1 <= std::min(r, s))
        CHECK(d_matrix(s, n, i) * sf == substitution_map(f, n, i + 1) * d_matrix(r, n, i));
    }
  }
  CHECK(substitution_map(IntMatrix::Identity(2, 2), 3, 1) == IntMatrix::Identity(piece_dim(2, 3, 1), piece_dim(2, 3, 1)));
}

TEST_CASE("complex and multidegree blocks") {
  const ComplexZ c = derham_complex(2, 3);
  CHECK(c.d(0) == d_matrix(2, 3, 0));
  CHECK(c.d(2).rows() == 0);
  CHECK(multidegrees(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      const auto blocks = multidegree_blocks(r, n);
      for (int i = 0; i <= r; ++i) {
        Index total = 0;
        for (const auto& b : blocks) {
          total += static_cast<Index>(b.indices[static_cast<std::size_t>(i)].size());
          // The block differential is the restriction of the global one.
          if (i < r) {
            const IntMatrix global = d_matrix(r, n, i);
            const auto& src = b.indices[static_cast<std::size_t>(i)];
            const auto& tgt = b.indices[static_cast<std::size_t>(i + 1)];
            const IntMatrix& local = b.d_out(i);
            for (std::size_t a = 0; a < tgt.size(); ++a)
              for (std::size_t c2 = 0; c2 < src.size(); ++c2)
                CHECK(local(static_cast<Index>(a), static_cast<Index>(c2)) == global(tgt[a], src[c2]));
          }
        }
        CHECK(total == piece_dim(r, n, i));
      }
    }
}

}  // TEST_SUITE
