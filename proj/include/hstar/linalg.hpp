#pragma once

// Exact linear algebra over Integer and Rat scalars. The templates accept any
// Eigen expression; elimination runs fraction-free (Bareiss), so integer
// inputs never leave the integers.

#include "hstar/numeric.hpp"

#include <utility>
#include <vector>

namespace hstar {

namespace detail {

// Brings `m` to row echelon form in place; returns the rank. `sign` tracks
// row swaps and `last_pivot` ends as the determinant for square full-rank
// inputs.
template <typename Scalar>
Eigen::Index bareiss_in_place(Matrix<Scalar>& m, int& sign, Scalar& last_pivot) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  Scalar prev = 1;
  sign = 1;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      m.row(pivot).swap(m.row(rank));
      sign = -sign;
    }
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace detail

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  int sign = 1;
  Scalar pivot;
  return detail::bareiss_in_place(m, sign, pivot);
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (input.rows() == 0) return Scalar(1);
  Matrix<Scalar> m = input;
  int sign = 1;
  Scalar pivot;
  const Eigen::Index rank = detail::bareiss_in_place(m, sign, pivot);
  if (rank < m.rows()) return Scalar(0);
  return sign > 0 ? pivot : Scalar(-pivot);
}

/// Dimension of the affine hull of the given points (one point per column).
template <typename Derived>
Eigen::Index affine_rank(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  if (points.cols() == 0) return -1;
  Matrix<Scalar> h(points.rows() + 1, points.cols());
  h.topRows(points.rows()) = points;
  h.row(points.rows()).setConstant(Scalar(1));
  return exact_rank(h) - 1;
}

/// Stacks lattice points as the columns of a matrix.
IntMatrix as_columns(const std::vector<IntVector>& points);

/// Lattice basis (as columns) of {x in Z^n : A x = 0}, computed by
/// unimodular column operations bringing A to Hermite form.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// gcd of all maximal (k x k) minors of a d x k integer matrix of full column
/// rank k. Equals the index of the column lattice inside its saturation.
Integer maximal_minor_gcd(const IntMatrix& m);

/// A facet of a full-dimensional polyhedral cone in V-representation:
/// `normal . g >= 0` holds for every generator g, with equality exactly on
/// the generators listed in `tight` (row indices into the input).
struct ConeFacet {
  IntVector normal;
  std::vector<int> tight;
};

/// Facets of the cone spanned by the rows of `generators` (double
/// description method, exact integer arithmetic, rows inserted in input
/// order). The rows must span R^D. Output normals are primitive and sorted
/// lexicographically.
std::vector<ConeFacet> cone_facets(const IntMatrix& generators);

/// Extended gcd: returns (g, s, t) with s a + t b = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b);

}  // namespace hstar
