#include "doctest.h"

#include "derham/cohomology.hpp"
#include "support.hpp"

#include <vector>

using namespace derham;
using namespace testing_support;

namespace {

struct IntegralCase {
  int r, n, i;
  std::vector<long> factors;
};

struct ModpCase {
  int r, n;
  Prime p;
  std::vector<Index> dims;
};

// Produced by an independent script (SNF over sympy, ranks over GF(p)) on
// the same basis conventions. Degrees not listed are zero.
const std::vector<IntegralCase> kIntegral = {
    {1, 2, 1, {2}},
    {1, 3, 1, {3}},
    {1, 4, 1, {4}},
    {1, 5, 1, {5}},
    {1, 6, 1, {6}},
    {1, 7, 1, {7}},
    {1, 8, 1, {8}},
    {1, 9, 1, {9}},
    {1, 10, 1, {10}},
    {2, 2, 1, {2, 2}},
    {2, 3, 1, {3, 3}},
    {2, 4, 1, {2, 4, 4}},
    {2, 4, 2, {2}},
    {2, 5, 1, {5, 5}},
    {2, 6, 1, {2, 6, 6, 6}},
    {2, 6, 2, {2, 6}},
    {2, 7, 1, {7, 7}},
    {2, 8, 1, {2, 2, 4, 8, 8}},
    {2, 8, 2, {2, 2, 4}},
    {2, 9, 1, {3, 3, 9, 9}},
    {2, 9, 2, {3, 3}},
    {2, 10, 1, {2, 2, 2, 10, 10, 10}},
    {2, 10, 2, {2, 2, 2, 10}},
    {3, 2, 1, {2, 2, 2}},
    {3, 3, 1, {3, 3, 3}},
    {3, 4, 1, {2, 2, 2, 4, 4, 4}},
    {3, 4, 2, {2, 2, 2}},
    {3, 5, 1, {5, 5, 5}},
    {3, 6, 1, {2, 2, 2, 2, 6, 6, 6, 6, 6, 6}},
    {3, 6, 2, {2, 2, 2, 2, 2, 6, 6, 6}},
    {3, 6, 3, {2}},
    {3, 7, 1, {7, 7, 7}},
    {3, 8, 1, {2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 4, 8, 8, 8}},
    {3, 8, 2, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 4}},
    {3, 8, 3, {2, 2, 2}},
};

const std::vector<ModpCase> kModp = {
    {1, 1, 2, {0, 0}},
    {1, 1, 3, {0, 0}},
    {1, 2, 2, {1, 1}},
    {1, 2, 3, {0, 0}},
    {1, 3, 2, {0, 0}},
    {1, 3, 3, {1, 1}},
    {1, 4, 2, {1, 1}},
    {1, 4, 3, {0, 0}},
    {1, 5, 2, {0, 0}},
    {1, 5, 3, {0, 0}},
    {1, 6, 2, {1, 1}},
    {1, 6, 3, {1, 1}},
    {1, 7, 2, {0, 0}},
    {1, 7, 3, {0, 0}},
    {1, 8, 2, {1, 1}},
    {1, 8, 3, {0, 0}},
    {2, 1, 2, {0, 0, 0}},
    {2, 1, 3, {0, 0, 0}},
    {2, 2, 2, {2, 2, 0}},
    {2, 2, 3, {0, 0, 0}},
    {2, 3, 2, {0, 0, 0}},
    {2, 3, 3, {2, 2, 0}},
    {2, 4, 2, {3, 4, 1}},
    {2, 4, 3, {0, 0, 0}},
    {2, 5, 2, {0, 0, 0}},
    {2, 5, 3, {0, 0, 0}},
    {2, 6, 2, {4, 6, 2}},
    {2, 6, 3, {3, 4, 1}},
    {2, 7, 2, {0, 0, 0}},
    {2, 7, 3, {0, 0, 0}},
    {2, 8, 2, {5, 8, 3}},
    {2, 8, 3, {0, 0, 0}},
    {3, 1, 2, {0, 0, 0, 0}},
    {3, 1, 3, {0, 0, 0, 0}},
    {3, 2, 2, {3, 3, 0, 0}},
    {3, 2, 3, {0, 0, 0, 0}},
    {3, 3, 2, {0, 0, 0, 0}},
    {3, 3, 3, {3, 3, 0, 0}},
    {3, 4, 2, {6, 9, 3, 0}},
    {3, 4, 3, {0, 0, 0, 0}},
    {3, 5, 2, {0, 0, 0, 0}},
    {3, 5, 3, {0, 0, 0, 0}},
    {3, 6, 2, {10, 18, 9, 1}},
    {3, 6, 3, {6, 9, 3, 0}},
    {3, 7, 2, {0, 0, 0, 0}},
    {3, 7, 3, {0, 0, 0, 0}},
    {3, 8, 2, {15, 30, 18, 3}},
    {3, 8, 3, {0, 0, 0, 0}},
};

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("integral cohomology matches the frozen table") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= (r < 3 ? 10 : 8); ++n) {
      const CohomologyResult h = integral_cohomology(r, n);
      for (int i = 0; i <= r; ++i) {
        std::vector<Integer> expect;
        for (const auto& c : kIntegral)
          if (c.r == r && c.n == n && c.i == i) expect.assign(c.factors.begin(), c.factors.end());
        CAPTURE(r);
        CAPTURE(n);
        CAPTURE(i);
        CHECK(h.group(i).free_rank() == 0);
        CHECK(h.group(i).invariant_factors() == expect);
      }
    }
}

TEST_CASE("degree zero") {
  const CohomologyResult h = integral_cohomology(3, 0);
  CHECK(h.group(0).free_rank() == 1);
  CHECK(h.group(0).invariant_factors().empty());
  for (int i = 1; i <= 3; ++i) CHECK(h.group(i).is_trivial());
  CHECK(h.group_or_zero(-1).is_trivial());
  CHECK(h.group_or_zero(7).is_trivial());
}

TEST_CASE("mod-p cohomology matches the frozen table") {
  for (const auto& c : kModp) {
    const ModpCohomologyResult h = modp_cohomology(c.r, c.n, c.p);
    CAPTURE(c.r);
    CAPTURE(c.n);
    CAPTURE(c.p);
    for (int i = 0; i <= c.r; ++i) CHECK(h.dim(i) == c.dims[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("representatives are cocycles and express inverts them") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 6; ++n) {
      const CohomologyResult h = integral_cohomology(r, n);
      for (int i = 0; i <= r; ++i) {
        const BlockClasses& b = h.at(i);
        const IntMatrix reps = b.representatives();
        if (i < r) CHECK((d_matrix(r, n, i) * reps).isZero());
        for (Index g = 0; g < reps.cols(); ++g) {
          CHECK(b.representative(g) == reps.col(g));
          const auto y = b.express(reps.col(g));
          REQUIRE(y);
          IntVector unit = IntVector::Zero(reps.cols());
          unit(g) = 1;
          CHECK(b.group().is_zero_element(*y - unit));
        }
        // Coboundaries are zero.
        if (i > 0) {
          const IntMatrix dprev = d_matrix(r, n, i - 1);
          for (Index j = 0; j < dprev.cols(); ++j) {
            const auto y = b.express(dprev.col(j));
            REQUIRE(y);
            CHECK(b.group().is_zero_element(*y));
          }
        }
        if (reps.rows() > 0 && i < r && d_matrix(r, n, i).cols() > 0) {
          // A non-cocycle is rejected.
          const IntMatrix d = d_matrix(r, n, i);
          for (Index j = 0; j < d.cols(); ++j)
            if (!d.col(j).isZero()) {
              IntVector e = IntVector::Zero(d.cols());
              e(j) = 1;
              CHECK_FALSE(b.express(e));
              break;
            }
        }
      }
    }
}

TEST_CASE("mod-p representatives and cocycle dimensions") {
  for (Prime p : {2, 3})
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= 6; ++n) {
        const ModpCohomologyResult h = modp_cohomology(r, n, p);
        for (int i = 0; i <= r; ++i) {
          const auto& b = h.at(i);
          CHECK(b.cycle_dim() == cocycle_dim(r, n, i, p));
          CHECK(b.cycle_dim() - b.boundary_dim() == b.dim());
          const ModMatrix reps = b.representatives();
          if (i < r) CHECK(is_zero_mod_p(multiply_mod_p(reduce_mod_p(d_matrix(r, n, i), p), reps, p), p));
          for (Index g = 0; g < reps.cols(); ++g) {
            const auto y = b.express(reps.col(g));
            REQUIRE(y);
            for (Index k = 0; k < y->size(); ++k) CHECK((*y)(k) == (k == g ? 1 : 0));
          }
          CHECK(b.group().order() == power(Integer(p), static_cast<int>(b.dim())));
        }
      }
}

TEST_CASE("Cartier map is an isomorphism onto mod-p cohomology") {
  for (Prime p : {2, 3})
    for (int r = 1; r <= 2; ++r)
      for (int n = 0; p * n <= 8; ++n)
        for (int i = 0; i <= r; ++i) {
          const Homomorphism c = cartier_iso(r, n, i, p);
          CHECK(c.is_isomorphism());
          CHECK(c.source().order() == power(Integer(p), static_cast<int>(piece_dim(r, n, i))));
        }
}

}  // TEST_SUITE
