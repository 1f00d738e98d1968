#include "hstar/exactgeom.hpp"

#include <algorithm>

namespace hstar {

namespace {

std::vector<LatticePoint> sorted_unique(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end(), lex_less<Integer>);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const LatticePoint& a, const LatticePoint& b) { return equal(a, b); }),
               points.end());
  return points;
}

void require_same_dimension(const std::vector<LatticePoint>& points) {
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw DimensionMismatch("points of different dimensions");
  }
}

}  // namespace

std::vector<FacetInequality> facet_enumeration(const std::vector<LatticePoint>& input) {
  if (input.empty()) throw NotFullDimensional("no points given");
  require_same_dimension(input);
  const auto points = sorted_unique(input);
  const Eigen::Index d = points.front().size();
  if (affine_rank(as_columns(points)) < d) {
    throw NotFullDimensional("points do not span R^" + std::to_string(d) + " affinely");
  }

  IntMatrix gens(static_cast<Eigen::Index>(points.size()), d + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    gens.row(static_cast<Eigen::Index>(i)).head(d) = points[i].transpose();
    gens(static_cast<Eigen::Index>(i), d) = 1;
  }

  std::vector<FacetInequality> facets;
  for (const ConeFacet& cf : cone_facets(gens)) {
    // cf.normal = (a', c) with a'.p + c >= 0, i.e. (-a').p <= c.
    IntVector a = -cf.normal.head(d);
    Integer b = cf.normal(d);
    const Integer g = content(a);
    for (Eigen::Index i = 0; i < d; ++i) a(i) /= g;
    b /= g;
    facets.push_back(FacetInequality{std::move(a), std::move(b)});
  }
  std::sort(facets.begin(), facets.end(), [](const FacetInequality& x, const FacetInequality& y) {
    return lex_less(x.normal, y.normal);
  });
  return facets;
}

LatticePolytope::LatticePolytope(const std::vector<LatticePoint>& points)
    : dim_(points.empty() ? 0 : static_cast<int>(points.front().size())),
      facets_(facet_enumeration(points)) {
  for (const auto& p : sorted_unique(points)) {
    IntMatrix tight(0, dim_);
    for (const auto& f : facets_) {
      if (f.slack(p) == 0) {
        tight.conservativeResize(tight.rows() + 1, Eigen::NoChange);
        tight.row(tight.rows() - 1) = f.normal.transpose();
      }
    }
    if (exact_rank(tight) == dim_) vertices_.push_back(p);
  }
}

const char* to_string(PointLocation location) {
  switch (location) {
    case PointLocation::Interior:
      return "Interior";
    case PointLocation::Boundary:
      return "Boundary";
    case PointLocation::Outside:
      return "Outside";
  }
  return "?";
}

namespace {

template <typename VectorType>
PointLocation classify(const LatticePolytope& polytope, const VectorType& p, const Integer& scale) {
  if (p.size() != polytope.dim()) throw DimensionMismatch("point has the wrong dimension");
  bool tight = false;
  for (const auto& f : polytope.facets()) {
    const auto s = f.slack(p, scale);
    if (s > 0) return PointLocation::Outside;
    if (s == 0) tight = true;
  }
  return tight ? PointLocation::Boundary : PointLocation::Interior;
}

}  // namespace

PointLocation classify_point(const LatticePolytope& polytope, const RatVector& p) {
  return classify(polytope, p, Integer(1));
}

PointLocation classify_point(const LatticePolytope& polytope, const IntVector& p, const Integer& scale) {
  return classify(polytope, p, scale);
}

Integer simplex_normalized_volume(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("simplex_normalized_volume: no points");
  require_same_dimension(points);
  const Eigen::Index d = points.front().size();
  if (static_cast<Eigen::Index>(points.size()) != d + 1) {
    throw std::invalid_argument("simplex_normalized_volume: expected d + 1 points");
  }
  IntMatrix edges(d, d);
  for (Eigen::Index j = 0; j < d; ++j) edges.col(j) = points[static_cast<std::size_t>(j + 1)] - points[0];
  return abs(exact_determinant(edges));
}

Integer relative_normalized_volume(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("relative_normalized_volume: no points");
  require_same_dimension(points);
  const Eigen::Index d = points.front().size();
  const Eigen::Index k = static_cast<Eigen::Index>(points.size()) - 1;
  if (k > d) return 0;
  IntMatrix edges(d, k);
  for (Eigen::Index j = 0; j < k; ++j) edges.col(j) = points[static_cast<std::size_t>(j + 1)] - points[0];
  if (exact_rank(edges) < k) return 0;
  return maximal_minor_gcd(edges);
}

std::vector<std::vector<int>> lower_hull(const std::vector<LatticePoint>& points,
                                         const std::vector<Rat>& heights) {
  if (points.empty()) throw NotFullDimensional("no points given");
  if (heights.size() != points.size()) throw DimensionMismatch("one height per point required");
  require_same_dimension(points);
  const Eigen::Index d = points.front().size();
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());

  Integer scale = 1;
  for (const Rat& h : heights) scale = boost::multiprecision::lcm(scale, denominator(h));

  IntMatrix lifted(n, d + 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Rat& h = heights[static_cast<std::size_t>(i)];
    lifted.row(i).head(d) = points[static_cast<std::size_t>(i)].transpose();
    lifted(i, d) = numerator(h) * (scale / denominator(h));
    lifted(i, d + 1) = 1;
  }

  if (exact_rank(lifted) < d + 2) {
    IntMatrix flat(n, d + 1);
    flat << lifted.leftCols(d), lifted.rightCols(1);
    if (exact_rank(flat) < d + 1) throw NotFullDimensional("points do not span R^d affinely");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<int>(i);
    return {all};
  }

  std::vector<std::vector<int>> cells;
  for (const ConeFacet& f : cone_facets(lifted)) {
    if (f.normal(d) > 0) cells.push_back(f.tight);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<LatticePoint> hnfs_simplex(int d, long k, long n) {
  if (d < 2 || k < 1 || (n != k * d && n != k * d + 1)) {
    throw std::invalid_argument("hnfs_simplex: need d >= 2, k >= 1 and N in {kd, kd+1}");
  }
  std::vector<LatticePoint> out;
  out.push_back(LatticePoint::Zero(d));
  for (int i = 0; i + 1 < d; ++i) {
    LatticePoint e = LatticePoint::Zero(d);
    e(i) = 1;
    out.push_back(e);
  }
  LatticePoint a = LatticePoint::Constant(d, Integer(n - 1));
  a(d - 1) = n;
  out.push_back(a);
  return out;
}

}  // namespace hstar
