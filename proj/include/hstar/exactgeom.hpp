#pragma once

// Exact polyhedral primitives: facets, point location, simplex volumes and
// lower hulls of lifted point sets.

#include "hstar/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace hstar {

struct NotFullDimensional : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// a . x <= b with primitive integer a.
struct FacetInequality {
  IntVector normal;
  Integer offset;

  /// a . x - b * scale; negative strictly inside the scaled half-space.
  template <typename Derived>
  auto slack(const Eigen::MatrixBase<Derived>& x, const Integer& scale = 1) const {
    using Scalar = typename Derived::Scalar;
    Scalar s = Scalar(0);
    for (Eigen::Index i = 0; i < normal.size(); ++i) s += Scalar(normal(i)) * x(i);
    return s - Scalar(offset * scale);
  }

  friend bool operator==(const FacetInequality& a, const FacetInequality& b) {
    return a.offset == b.offset && equal(a.normal, b.normal);
  }
};

/// Irredundant primitive facet inequalities of conv(vertices), sorted by
/// normal vector. Duplicate and non-extreme input points are tolerated.
/// Throws NotFullDimensional if the points do not span R^d affinely.
std::vector<FacetInequality> facet_enumeration(const std::vector<LatticePoint>& vertices);

/// A full-dimensional lattice polytope with its exact H-representation.
class LatticePolytope {
 public:
  /// Normalizes the input: duplicates and non-extreme points are dropped and
  /// vertices are stored in lexicographic order.
  explicit LatticePolytope(const std::vector<LatticePoint>& points);

  int dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }

 private:
  int dim_;
  std::vector<LatticePoint> vertices_;
  std::vector<FacetInequality> facets_;
};

enum class PointLocation { Interior, Boundary, Outside };

const char* to_string(PointLocation location);

/// Locates p relative to P (or to scale * P when scale > 1).
PointLocation classify_point(const LatticePolytope& polytope, const RatVector& p);
PointLocation classify_point(const LatticePolytope& polytope, const IntVector& p,
                             const Integer& scale = 1);

/// |det(p_1 - p_0, ..., p_d - p_0)| for d + 1 points in R^d; 0 iff the points
/// are affinely dependent.
Integer simplex_normalized_volume(const std::vector<LatticePoint>& points);

/// Normalized volume of a k-simplex measured in the lattice of its own affine
/// hull (k + 1 affinely independent points in R^d). Returns 0 for dependent
/// points.
Integer relative_normalized_volume(const std::vector<LatticePoint>& points);

/// Lower facets of the lifted configuration {(p_i, h_i)}, projected back as
/// sorted index sets. Every input point lying on a lower facet belongs to
/// the corresponding cell. Cells are sorted lexicographically. Heights that
/// are affine in p give the single trivial cell.
std::vector<std::vector<int>> lower_hull(const std::vector<LatticePoint>& points,
                                         const std::vector<Rat>& heights);

/// Vertices 0, e_1, ..., e_{d-1}, a of the one-row Hermite normal form
/// simplex with a = (N-1, ..., N-1, N). Requires d >= 2, k >= 1 and
/// N in {kd, kd + 1}.
std::vector<LatticePoint> hnfs_simplex(int d, long k, long n);

}  // namespace hstar
