#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstar {

/// Arbitrary-precision integer. Expression templates are off so that the
/// type behaves as a plain value inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                         boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using RatVector = Vector<Rat>;
using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rat>;

/// A lattice point is an integer column vector of the ambient dimension.
using LatticePoint = IntVector;

/// Thrown when an operation receives vectors of the wrong length.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" exactly. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& value);
std::string to_string(const Integer& value);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n (n >= 0), and the
/// generalized value (-1)^k C(k-n-1, k) for negative n.
Integer binomial(long n, long k);

/// gcd of all entries (nonnegative; 0 for the zero vector).
template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    g = boost::multiprecision::gcd(g, Integer(abs(v(i))));
  }
  return g;
}

/// Divides by the content; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  }
  return v;
}

/// Lexicographic comparison on coordinate vectors of equal length.
template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

template <typename Scalar>
bool equal(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline IntVector int_vector(std::initializer_list<long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

inline RatVector to_rational(const IntVector& v) {
  return v.unaryExpr([](const Integer& x) { return Rat(x); });
}

std::string to_string(const IntVector& v);

/// Converts to int64 if representable, otherwise throws std::overflow_error.
std::int64_t to_int64(const Integer& value);

}  // namespace hstar
