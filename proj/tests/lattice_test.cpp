#include "hstar/lattice.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hstar;
using namespace hstar::testing;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

struct BrutePoint {
  std::vector<long> coords;
  bool boundary;
};

// Scans the bounding box of mP against the brute-force facet list.
std::vector<BrutePoint> brute_dilation(const std::vector<LatticePoint>& pts, long m) {
  const auto facets = brute_force_facets(pts);
  const int d = static_cast<int>(pts.front().size());
  std::vector<long> lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    lo[k] = hi[k] = pts.front()(k).convert_to<long>();
    for (const auto& p : pts) {
      lo[k] = std::min(lo[k], p(k).convert_to<long>());
      hi[k] = std::max(hi[k], p(k).convert_to<long>());
    }
    lo[k] *= m;
    hi[k] *= m;
  }
  std::vector<BrutePoint> out;
  std::vector<long> x = lo;
  while (true) {
    bool inside = true, tight = false;
    for (const auto& [normal, offset] : facets) {
      long s = 0;
      for (int k = 0; k < d; ++k) s += normal[k] * x[k];
      if (s > m * offset) inside = false;
      if (s == m * offset) tight = true;
    }
    if (inside) out.push_back({x, tight});
    int k = d - 1;
    while (k >= 0 && x[k] == hi[k]) x[k] = lo[k], --k;
    if (k < 0) break;
    ++x[k];
  }
  return out;
}

std::vector<long> as_longs(const LatticePoint& p) {
  std::vector<long> out;
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(p(i).convert_to<long>());
  return out;
}

// Twice the area of a polygon by the shoelace formula, walking the vertices
// by angle around their centroid.
Integer shoelace(std::vector<LatticePoint> vs) {
  Rat cx = 0, cy = 0;
  for (const auto& v : vs) cx += Rat(v(0)), cy += Rat(v(1));
  cx /= Rat(static_cast<long>(vs.size()));
  cy /= Rat(static_cast<long>(vs.size()));
  auto quadrant_less = [&](const LatticePoint& a, const LatticePoint& b) {
    const double ax = (Rat(a(0)) - cx).convert_to<double>(), ay = (Rat(a(1)) - cy).convert_to<double>();
    const double bx = (Rat(b(0)) - cx).convert_to<double>(), by = (Rat(b(1)) - cy).convert_to<double>();
    return std::atan2(ay, ax) < std::atan2(by, bx);
  };
  std::sort(vs.begin(), vs.end(), quadrant_less);
  Integer twice = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& a = vs[i];
    const auto& b = vs[(i + 1) % vs.size()];
    twice += a(0) * b(1) - a(1) * b(0);
  }
  return abs(twice);
}

std::vector<std::vector<LatticePoint>> random_polytopes(std::uint64_t seed, int d, int count, int r) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<LatticePoint>> out;
  while (static_cast<int>(out.size()) < count) {
    auto pts = random_points(rng, d, d + 3, r);
    if (affine_rank(as_columns(pts)) == d) out.push_back(pts);
  }
  return out;
}

}  // namespace

TEST(EnumerateDilation, Examples) {
  EXPECT_EQ(enumerate_dilation(LatticePolytope(octahedron()), 1).size(), 7u);
  EXPECT_EQ(enumerate_dilation(LatticePolytope(hexagon()), 1).size(), 16u);
  const auto zero = enumerate_dilation(LatticePolytope(hexagon()), 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.front().isZero());
}

TEST(EnumerateDilation, RejectsNegativeDilation) {
  EXPECT_THROW(enumerate_dilation(LatticePolytope(unit_square()), -1), std::invalid_argument);
}

TEST(EnumerateDilation, AgreesWithBoxScan) {
  for (int d : {2, 3}) {
    for (const auto& pts : random_polytopes(11 + d, d, 12, 3)) {
      const LatticePolytope p(pts);
      for (long m = 0; m <= 3; ++m) {
        const auto got = enumerate_dilation(p, m);
        const auto expected = brute_dilation(pts, m);
        ASSERT_EQ(got.size(), expected.size());
        long boundary = 0;
        for (std::size_t i = 0; i < got.size(); ++i) {
          EXPECT_EQ(as_longs(got[i]), expected[i].coords);
          boundary += expected[i].boundary;
        }
        const auto c = count_dilation(p, m);
        EXPECT_EQ(c.total, Integer(static_cast<long>(got.size())));
        if (m > 0) EXPECT_EQ(c.boundary, Integer(boundary));
      }
    }
  }
}

TEST(EnumerateDilation, FourDimensionalAgreesWithBoxScan) {
  for (const auto& pts : random_polytopes(404, 4, 4, 2)) {
    const LatticePolytope p(pts);
    for (long m = 1; m <= 2; ++m) {
      const auto expected = brute_dilation(pts, m);
      long boundary = 0;
      for (const auto& b : expected) boundary += b.boundary;
      const auto c = count_dilation(p, m);
      EXPECT_EQ(c.total, Integer(static_cast<long>(expected.size())));
      EXPECT_EQ(c.boundary, Integer(boundary));
    }
  }
}

TEST(EnumerateDilation, HugeCoordinatesUseExactArithmetic) {
  // A unimodular triangle translated far beyond the int64 range.
  const Integer t = Integer(1) << 80;
  auto pts = unit_triangle();
  for (auto& p : pts) p.array() += t;
  const LatticePolytope p(pts);
  for (long m = 1; m <= 4; ++m) {
    EXPECT_EQ(count_dilation(p, m).total, binomial(m + 2, 2));
    EXPECT_EQ(count_dilation(p, m).boundary, Integer(3 * m));
  }
  const auto pts1 = enumerate_dilation(p, 1);
  ASSERT_EQ(pts1.size(), 3u);
  EXPECT_EQ(pts1.front()(0), t);
}

TEST(EhrhartProfile, Examples) {
  EXPECT_EQ(ehrhart_profile(LatticePolytope(hexagon()), 2).counts_polytope, ints({1, 16, 53}));
  EXPECT_EQ(ehrhart_profile(LatticePolytope(boundary_quad()), 2).counts_boundary, ints({1, 6, 12}));
  EXPECT_EQ(ehrhart_profile(LatticePolytope(unit_square()), 2).counts_polytope, ints({1, 4, 9}));
}

TEST(EhrhartProfile, PolygonBoundaryMatchesEdgeGcdSum) {
  for (const auto& pts : random_polytopes(77, 2, 20, 5)) {
    // Each edge of mP carries m * gcd(edge) boundary points, shared corners counted once.
    Integer per_unit = 0;
    for (const auto& [normal, offset] : brute_force_facets(pts)) {
      std::vector<LatticePoint> on;
      for (const auto& v : pts)
        if (normal[0] * v(0).convert_to<long>() + normal[1] * v(1).convert_to<long>() == offset) on.push_back(v);
      std::sort(on.begin(), on.end(), lex_less<Integer>);
      const LatticePoint edge = on.back() - on.front();
      per_unit += content(edge);
    }
    const auto profile = ehrhart_profile(LatticePolytope(pts), 4);
    for (long m = 1; m <= 4; ++m) EXPECT_EQ(profile.counts_boundary[m], per_unit * m);
  }
}

TEST(EhrhartProfile, CountsPartitionAndGrow) {
  for (const auto& pts : random_polytopes(5, 3, 10, 3)) {
    const auto profile = ehrhart_profile(LatticePolytope(pts), 4);
    EXPECT_EQ(profile.counts_polytope[0], 1);
    EXPECT_EQ(profile.counts_boundary[0], 1);
    for (long m = 0; m <= 4; ++m) {
      if (m > 0) {
        EXPECT_EQ(profile.counts_polytope[m], profile.counts_boundary[m] + profile.counts_interior[m]);
        EXPECT_GE(profile.counts_polytope[m], profile.counts_polytope[m - 1]);
      }
      EXPECT_GE(profile.counts_interior[m], 0);
    }
  }
}

TEST(HStarFromCounts, Examples) {
  EXPECT_EQ(hstar_from_counts(ints({1, 16, 53}), 3).coeffs, ints({1, 13, 8}));
  EXPECT_EQ(hstar_from_counts(ints({1, 6, 12}), 2).coeffs, ints({1, 4, 1}));
  EXPECT_EQ(hstar_from_counts(ints({1, 4, 9}), 3).coeffs, ints({1, 1, 0}));
}

TEST(HStarFromCounts, SurplusCountsAreChecked) {
  // L_P(m) = 11m^2 + 4m + 1 for the six-vertex polygon.
  EXPECT_EQ(hstar_from_counts(ints({1, 16, 53, 112, 193}), 3, 2).coeffs, ints({1, 13, 8}));
  EXPECT_THROW(hstar_from_counts(ints({1, 16, 53, 113}), 3, 2), InconsistentCounts);
  EXPECT_THROW(hstar_from_counts(ints({1, 16, 53, 112}), 2, 2), InconsistentCounts);
}

TEST(HStar, PolytopeBoundaryAndInterior) {
  const auto poly = ehrhart_profile(LatticePolytope(hexagon()), 3);
  EXPECT_EQ(hstar_vector(poly, EhrhartPart::Polytope).coeffs, ints({1, 13, 8}));
  EXPECT_EQ(hstar_vector(poly, EhrhartPart::Interior).coeffs, ints({0, 8, 13, 1}));
  EXPECT_EQ(hstar_vector(ehrhart_profile(LatticePolytope(boundary_quad()), 2), EhrhartPart::Boundary).coeffs,
            ints({1, 4, 1}));
  EXPECT_EQ(hstar_vector(ehrhart_profile(LatticePolytope(octahedron()), 4), EhrhartPart::Polytope).coeffs,
            ints({1, 3, 3, 1}));
  EXPECT_EQ(hstar_vector(ehrhart_profile(LatticePolytope(unit_square()), 2), EhrhartPart::Polytope).coeffs,
            ints({1, 1, 0}));
  EXPECT_THROW(hstar_vector(ehrhart_profile(LatticePolytope(octahedron()), 2), EhrhartPart::Polytope),
               std::invalid_argument);
}

TEST(HStar, HermiteNormalFormSimplices) {
  struct Case {
    int d;
    long k, n;
    std::vector<Integer> expected;
  };
  const std::vector<Case> cases = {
      {2, 2, 5, ints({1, 2, 2})},
      {3, 1, 4, ints({1, 1, 1, 1})},
      {6, 2, 13, ints({1, 2, 2, 2, 2, 2, 2})},
      {4, 2, 8, ints({1, 2, 2, 2, 1})},
  };
  for (const auto& c : cases) {
    const LatticePolytope p(hnfs_simplex(c.d, c.k, c.n));
    EXPECT_EQ(simplex_normalized_volume(hnfs_simplex(c.d, c.k, c.n)), c.n);
    const auto h = hstar_vector(ehrhart_profile(p, c.d), EhrhartPart::Polytope);
    EXPECT_EQ(h.coeffs, c.expected) << c.d << "," << c.k << "," << c.n;
    EXPECT_EQ(h.sum(), c.n);
  }
  EXPECT_THROW(hnfs_simplex(3, 2, 5), std::invalid_argument);
}

TEST(Reciprocity, Examples) {
  for (const auto& pts : {hexagon(), unit_triangle(), octahedron(), boundary_quad(), unit_tetrahedron()}) {
    const auto profile = ehrhart_profile(LatticePolytope(pts), static_cast<long>(pts.front().size()) + 1);
    EXPECT_TRUE(reciprocity_check(profile).pass);
  }
  const auto tri = ehrhart_profile(LatticePolytope(unit_triangle()), 3);
  EXPECT_EQ(hstar_vector(tri, EhrhartPart::Polytope).coeffs, ints({1, 0, 0}));
  EXPECT_EQ(hstar_vector(tri, EhrhartPart::Interior).coeffs, ints({0, 0, 0, 1}));
}

TEST(Reciprocity, FailsOnCorruptedInteriorCounts) {
  auto profile = ehrhart_profile(LatticePolytope(hexagon()), 3);
  profile.counts_interior[1] += 1;
  const auto r = reciprocity_check(profile);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.residuals[1], 1);
}

TEST(Reflexive, Examples) {
  EXPECT_TRUE(is_reflexive(LatticePolytope(octahedron())));
  EXPECT_TRUE(is_reflexive(LatticePolytope(reflexive_square())));
  EXPECT_FALSE(is_reflexive(LatticePolytope(hexagon())));
  EXPECT_FALSE(is_reflexive(LatticePolytope(unit_square())));
}

TEST(HStarProperties, RandomPolytopes) {
  for (int d : {2, 3}) {
    for (const auto& pts : random_polytopes(900 + d, d, 15, 3)) {
      const LatticePolytope p(pts);
      const auto profile = ehrhart_profile(p, d + 2);
      const auto h = hstar_vector(profile, EhrhartPart::Polytope);
      EXPECT_EQ(h[0], 1);
      for (const auto& c : h.coeffs) EXPECT_GE(c, 0);
      EXPECT_EQ(h[1], profile.counts_polytope[1] - (d + 1));
      EXPECT_EQ(h[d], profile.counts_interior[1]);
      EXPECT_EQ(series_counts(h, profile.counts_polytope.size()), profile.counts_polytope);
      const auto hb = hstar_vector(profile, EhrhartPart::Boundary);
      EXPECT_EQ(hb[0], 1);
      EXPECT_EQ(series_counts(hb, profile.counts_boundary.size()), profile.counts_boundary);
      EXPECT_TRUE(reciprocity_check(profile).pass);
      if (d == 2) EXPECT_EQ(h.sum(), shoelace(p.vertices()));
      std::vector<LatticePoint> shifted = pts;
      for (auto& v : shifted) v.array() += Integer(7);
      EXPECT_EQ(ehrhart_profile(LatticePolytope(shifted), d + 2).counts_polytope, profile.counts_polytope);
    }
  }
}
