#pragma once

// Shared fixtures and brute-force oracles for the unit tests. The oracles
// here deliberately avoid the library's hull and elimination code paths.

#include "hstar/numeric.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace hstar::testing {

inline std::vector<LatticePoint> points(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<LatticePoint> out;
  for (auto r : rows) out.push_back(int_vector(r));
  return out;
}

inline std::vector<LatticePoint> hexagon() {
  return points({{0, 0}, {-1, 1}, {1, 3}, {4, 2}, {5, 1}, {2, 0}});
}
inline std::vector<LatticePoint> boundary_quad() { return points({{0, 0}, {0, 2}, {2, 0}, {3, 3}}); }
inline std::vector<LatticePoint> pentagon() {
  return points({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}});
}
inline std::vector<LatticePoint> octahedron() {
  return points({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}
inline std::vector<LatticePoint> unit_square() { return points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline std::vector<LatticePoint> unit_triangle() { return points({{0, 0}, {1, 0}, {0, 1}}); }
inline std::vector<LatticePoint> unit_tetrahedron() {
  return points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}
inline std::vector<LatticePoint> reflexive_square() {
  return points({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

/// Integer determinant by cofactor expansion (small matrices only).
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Integer term = m[0][c] * cofactor_det(minor);
    total += (c % 2) ? Integer(-term) : term;
  }
  return total;
}

/// Normal of the hyperplane through d points in R^d given as (normal, offset)
/// with normal . x = offset; normal is zero if the points are dependent.
inline std::pair<std::vector<Integer>, Integer> hyperplane_through(const std::vector<std::vector<Integer>>& pts) {
  const std::size_t d = pts.front().size();
  std::vector<Integer> normal(d);
  // Generalized cross product of the edge vectors.
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::vector<Integer>> m;
    for (std::size_t r = 1; r < pts.size(); ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < d; ++k)
        if (k != i) row.push_back(pts[r][k] - pts[0][k]);
      m.push_back(row);
    }
    normal[i] = cofactor_det(m) * ((i % 2) ? -1 : 1);
  }
  Integer g = 0;
  for (auto& x : normal) g = boost::multiprecision::gcd(g, Integer(abs(x)));
  if (g > 1)
    for (auto& x : normal) x /= g;
  Integer offset = 0;
  for (std::size_t k = 0; k < d; ++k) offset += normal[k] * pts[0][k];
  return {normal, offset};
}

/// Calls f on every k-subset of {0..n-1} as a sorted index vector.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

using Row = std::vector<long>;

inline std::vector<std::vector<Integer>> to_rows(const std::vector<LatticePoint>& pts) {
  std::vector<std::vector<Integer>> out;
  for (const auto& p : pts) out.emplace_back(p.data(), p.data() + p.size());
  return out;
}

// Brute-force hull: every hyperplane through d input points that has all
// points on one side is a facet.
inline std::set<std::pair<Row, long>> brute_force_facets(const std::vector<LatticePoint>& pts) {
  const auto rows = to_rows(pts);
  const int d = static_cast<int>(pts.front().size());
  std::set<std::pair<Row, long>> found;
  for_each_subset(static_cast<int>(pts.size()), d, [&](const std::vector<int>& idx) {
    std::vector<std::vector<Integer>> sel;
    for (int i : idx) sel.push_back(rows[static_cast<std::size_t>(i)]);
    auto [normal, offset] = hyperplane_through(sel);
    if (std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return x == 0; })) return;
    for (int sign : {1, -1}) {
      bool ok = true;
      for (const auto& p : rows) {
        Integer s = 0;
        for (int k = 0; k < d; ++k) s += normal[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
        if (sign * s > sign * offset) ok = false;
      }
      if (ok) {
        Row n;
        for (auto& x : normal) n.push_back(sign * x.convert_to<long>());
        found.emplace(n, sign * offset.convert_to<long>());
      }
    }
  });
  return found;
}

/// Random full-dimensional lattice polytope vertices in [-r, r]^d.
inline std::vector<LatticePoint> random_points(std::mt19937_64& rng, int d, int count, int r) {
  std::uniform_int_distribution<int> coord(-r, r);
  std::vector<LatticePoint> pts;
  for (int i = 0; i < count; ++i) {
    LatticePoint p(d);
    for (int k = 0; k < d; ++k) p(k) = coord(rng);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace hstar::testing
