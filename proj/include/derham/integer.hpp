#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace derham {

/// Exact unbounded integer. Expression templates are disabled so that the
/// type behaves as a plain value inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// Residues mod a small prime, stored in [0, p).
using ModMatrix = Matrix<std::int64_t>;
using ModVector = Vector<std::int64_t>;

using Index = Eigen::Index;

inline bool is_zero(const Integer& x) { return x.is_zero(); }
inline bool is_zero(std::int64_t x) { return x == 0; }

inline Integer abs_value(const Integer& x) { return boost::multiprecision::abs(x); }
inline std::int64_t abs_value(std::int64_t x) { return x < 0 ? -x : x; }

/// Floor division; the divisor must be nonzero.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Nonnegative remainder modulo a positive modulus.
template <typename Scalar>
Scalar mod_floor(const Scalar& a, const Scalar& m) {
  Scalar r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline bool fits_int64(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  return x >= lo && x <= hi;
}

inline std::string to_string(const Integer& x) { return x.str(); }

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Product that skips zero entries of the left factor. The structural maps
/// of the de Rham complex are very sparse and Eigen's generic kernel does not
/// exploit that for non-native scalars.
template <typename Scalar>
Matrix<Scalar> sparse_product(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  eigen_assert(a.cols() == b.rows());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (!is_zero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

inline IntVector sparse_apply(const IntMatrix& a, const IntVector& x) {
  IntVector out = IntVector::Zero(a.rows());
  for (Index k = 0; k < a.cols(); ++k) {
    if (is_zero(x(k))) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, k))) out(i) += a(i, k) * x(k);
  }
  return out;
}

template <typename To, typename From>
Matrix<To> cast_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = To(m(i, j));
  return out;
}

inline IntMatrix to_int_matrix(const ModMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = Integer(m(i, j));
  return out;
}

/// Builds an integer matrix from nested initializer rows; handy in tests.
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntVector int_vector(std::initializer_list<long long> entries);

}  // namespace derham
