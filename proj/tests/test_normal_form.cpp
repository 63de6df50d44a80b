#include "doctest.h"

#include "derham/lattice.hpp"
#include "derham/normal_form.hpp"
#include "support.hpp"

using namespace derham;
using namespace testing_support;

TEST_SUITE("normal_form") {

TEST_CASE("hnf of a fixed matrix") {
  const IntMatrix m = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto h = hnf(m);
  CHECK(m * h.U == h.H);
  CHECK(abs_value(det(h.U)) == 1);
  CHECK(h.rank() == 3);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    const IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    const auto h = hnf(m);
    REQUIRE(m * h.U == h.H);
    CHECK(abs_value(det(h.U)) == 1);
    // Echelon: pivots strictly increase, columns past the rank vanish.
    Index last = -1;
    for (Index k = 0; k < h.rank(); ++k) {
      const Index row = h.pivot_rows[static_cast<std::size_t>(k)];
      CHECK(row > last);
      CHECK(h.H(row, k) > 0);
      for (Index i = 0; i < row; ++i) CHECK(h.H(i, k) == 0);
      last = row;
    }
    for (Index k = h.rank(); k < cols; ++k) CHECK(h.H.col(k).isZero());
    const auto factors = determinantal_factors(m);
    CHECK(h.rank() == static_cast<Index>(factors.size()));
  }
}

TEST_CASE("snf of a fixed matrix") {
  const IntMatrix m = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto s = snf(m);
  CHECK(s.diagonal() == ints({2, 6, 12}));
  CHECK(s.U * m * s.V == s.S);
}

TEST_CASE("snf against determinantal divisors") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    const IntMatrix m = random_matrix(rng, rows, cols, -12, 12);
    const auto s = snf(m, SmithRequest{true, true, true});
    REQUIRE(s.U * m * s.V == s.S);
    CHECK(abs_value(det(s.U)) == 1);
    CHECK(abs_value(det(s.V)) == 1);
    CHECK(s.U * s.U_inverse == IntMatrix::Identity(rows, rows));
    std::vector<Integer> diag;
    for (const Integer& d : s.diagonal()) {
      CHECK(d >= 0);
      if (d != 0) diag.push_back(d);
    }
    for (std::size_t k = 1; k < diag.size(); ++k) CHECK(diag[k] % diag[k - 1] == 0);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j)
        if (i != j) CHECK(s.S(i, j) == 0);
    CHECK(diag == determinantal_factors(m));
  }
}

TEST_CASE("snf skips unrequested transforms") {
  const IntMatrix m = mat({{4, 6}, {6, 9}});
  const auto s = snf(m, SmithRequest{false, false, false});
  CHECK(s.U.size() == 0);
  CHECK(s.V.size() == 0);
  CHECK(s.diagonal() == ints({1, 0}));
}

TEST_CASE("int64 scalar agrees with big integers") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    Matrix<std::int64_t> small(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) small(i, j) = static_cast<std::int64_t>(m(i, j));
    const auto a = snf(m).diagonal();
    const auto b = snf(small).diagonal();
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == Integer(b[k]));
  }
}

TEST_CASE("empty matrices") {
  const IntMatrix m(0, 3);
  const auto h = hnf(m);
  CHECK(h.rank() == 0);
  CHECK(h.U.rows() == 3);
  CHECK(snf(IntMatrix(2, 0)).diagonal().empty());
}

TEST_CASE("entries beyond 64 bits") {
  IntMatrix m = mat({{1, 0}, {0, 1}});
  m(0, 0) = Integer(1) << 80;
  m(1, 1) = Integer(1) << 90;
  m(0, 1) = Integer(3);
  const auto s = snf(m);
  CHECK(s.U * m * s.V == s.S);
  CHECK(s.diagonal()[0] * s.diagonal()[1] == abs_value(det(m)));
}

}  // TEST_SUITE

TEST_SUITE("lattice") {

TEST_CASE("solve finds integer solutions only") {
  const IntMatrix m = mat({{2, 0}, {0, 3}});
  const LatticeSolver s(m);
  const auto x = s.solve(vec({4, 9}));
  REQUIRE(x);
  CHECK(m * *x == vec({4, 9}));
  CHECK_FALSE(s.solve(vec({1, 0})));
  CHECK_FALSE(s.contains(vec({0, 2})));
}

TEST_CASE("kernel basis is saturated and spans") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 4);
    const Index cols = 1 + static_cast<Index>(rng() % 6);
    const IntMatrix m = random_matrix(rng, rows, cols, -6, 6);
    const LatticeSolver s(m);
    const IntMatrix k = s.kernel();
    CHECK(k.cols() == cols - s.rank());
    if (k.cols() == 0) continue;
    CHECK((m * k).isZero());
    // Saturated: every SNF factor of the kernel basis is 1.
    for (const Integer& d : determinantal_factors(k)) CHECK(d == 1);
  }
}

TEST_CASE("solve round trips random right-hand sides") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 3, -7, 7);
    const IntVector x = random_matrix(rng, 3, 1, -5, 5).col(0);
    const IntVector b = m * x;
    const auto y = lattice_solve(m, b);
    REQUIRE(y);
    CHECK(m * *y == b);
  }
}

TEST_CASE("hstack") {
  const IntMatrix a = mat({{1}, {2}});
  const IntMatrix b = mat({{3, 4}, {5, 6}});
  const IntMatrix e(2, 0);
  CHECK(hstack({&a, &e, &b}, 2) == mat({{1, 3, 4}, {2, 5, 6}}));
}

}  // TEST_SUITE
