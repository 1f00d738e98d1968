#include "hstar/simplicial.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hstar;
using namespace hstar::testing;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

// Octahedron boundary on ±e_i labelled 0..5 as (+e1,-e1,+e2,-e2,+e3,-e3).
SimplicialComplex octahedron_boundary() {
  std::vector<Face> tris;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) tris.push_back({a, b, c});
  return SimplicialComplex(tris);
}

SimplicialComplex coned_octahedron() {
  std::vector<Face> tets;
  const auto boundary = octahedron_boundary();
  for (auto f : boundary.facets()) {
    f.push_back(6);
    tets.push_back(f);
  }
  return SimplicialComplex(tets);
}

SimplicialComplex cycle(int n) {
  std::vector<Face> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_face({i, (i + 1) % n}));
  return SimplicialComplex(edges);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n, int max_size, int count) {
  std::uniform_int_distribution<int> vertex(0, n - 1), size(1, max_size);
  std::vector<Face> gens;
  for (int i = 0; i < count; ++i) {
    Face f;
    const int s = size(rng);
    for (int j = 0; j < s; ++j) f.push_back(vertex(rng));
    gens.push_back(make_face(f));
  }
  std::vector<int> ground(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ground[static_cast<std::size_t>(i)] = i;
  return SimplicialComplex(ground, gens);
}

std::vector<Face> all_subsets(const std::vector<int>& ground) {
  std::vector<Face> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ground.size()); ++mask) {
    Face f;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask >> i & 1) f.push_back(ground[i]);
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(Complex, KeepsOnlyMaximalFaces) {
  const SimplicialComplex k({{1, 2, 3}, {2, 3}, {3, 2, 1}, {4}});
  EXPECT_EQ(k.facets(), (std::vector<Face>{{1, 2, 3}, {4}}));
  EXPECT_EQ(k.dim(), 2);
  EXPECT_FALSE(k.is_pure());
  EXPECT_TRUE(k.contains({3, 1}));
  EXPECT_FALSE(k.contains({1, 4}));
  EXPECT_THROW(SimplicialComplex({1, 2}, {{1, 3}}), std::invalid_argument);
}

TEST(FVector, Examples) {
  EXPECT_EQ(f_vector(octahedron_boundary()), ints({1, 6, 12, 8}));
  EXPECT_EQ(f_vector(cycle(4)), ints({1, 4, 4}));
  for (int d = 0; d <= 5; ++d) {
    Face simplex;
    for (int i = 0; i <= d; ++i) simplex.push_back(i);
    const auto f = f_vector(SimplicialComplex({simplex}));
    for (int k = -1; k <= d; ++k) EXPECT_EQ(f[static_cast<std::size_t>(k + 1)], binomial(d + 1, k + 1));
  }
}

TEST(HVector, Examples) {
  // 22 triangles with 8 boundary points force (3 * 22 + 8) / 2 = 37 edges.
  EXPECT_EQ(h_from_f(ints({1, 16, 37, 22})), ints({1, 13, 8, 0}));
  EXPECT_EQ(h_vector(coned_octahedron()), ints({1, 3, 3, 1, 0}));
  EXPECT_EQ(h_vector(cycle(4)), ints({1, 2, 1}));
}

TEST(HVector, SumsToFacetCountAndKleeSymmetry) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = random_complex(rng, 7, 3, 6);
    if (!k.is_pure()) continue;
    const auto fh = fh_vector(k);
    Integer sum = 0;
    for (const auto& x : fh.h) sum += x;
    EXPECT_EQ(sum, fh.f.back());
  }
  for (const auto& sphere : {octahedron_boundary(), cycle(5), boundary_complex(coned_octahedron())}) {
    const auto h = h_vector(sphere);
    const std::vector<Integer> reversed(h.rbegin(), h.rend());
    EXPECT_EQ(h, reversed);
  }
}

TEST(BoundaryComplex, Examples) {
  const SimplicialComplex simplex({{0, 1, 2, 3}});
  EXPECT_EQ(boundary_complex(simplex).facets(), (std::vector<Face>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  EXPECT_EQ(boundary_complex(coned_octahedron()).facets(), octahedron_boundary().facets());
  EXPECT_EQ(boundary_complex(coned_octahedron()).vertex_ids(), (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
  const SimplicialComplex square({{0, 1, 3}, {0, 2, 3}});
  EXPECT_EQ(boundary_complex(square).facets(), (std::vector<Face>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_THROW(boundary_complex(SimplicialComplex({{0, 1, 2}, {3, 4}})), std::invalid_argument);
}

TEST(MinimalNonfaces, Examples) {
  const SimplicialComplex square_cycle({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_EQ(minimal_nonfaces(square_cycle), (std::vector<Face>{{1, 3}, {2, 4}}));

  const SimplicialComplex k({1, 2, 3, 4, 5, 6}, {{1, 2, 3}, {2, 4}, {3, 4}, {5, 6}});
  const std::vector<Face> expected = {{1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6},
                                      {3, 5}, {3, 6}, {4, 5}, {4, 6}, {2, 3, 4}};
  EXPECT_EQ(minimal_nonfaces(k), expected);

  EXPECT_TRUE(minimal_nonfaces(SimplicialComplex({{0, 1, 2, 3}})).empty());
  // Interior vertices of a ground set that are not faces are non-faces themselves.
  EXPECT_EQ(minimal_nonfaces(boundary_complex(coned_octahedron())),
            (std::vector<Face>{{6}, {0, 1}, {2, 3}, {4, 5}}));
}

TEST(MinimalNonfaces, RegenerateTheComplex) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = random_complex(rng, 8, 4, 5);
    const auto nonfaces = minimal_nonfaces(k);
    std::vector<Face> brute;
    for (const auto& s : all_subsets(k.vertex_ids())) {
      if (k.contains(s)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Face sub = s;
        sub.erase(sub.begin() + static_cast<long>(i));
        if (!k.contains(sub)) minimal = false;
      }
      if (minimal) brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end(),
              [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    EXPECT_EQ(nonfaces, brute);
    for (const auto& s : all_subsets(k.vertex_ids())) {
      const bool blocked = std::any_of(nonfaces.begin(), nonfaces.end(), [&](const Face& n) {
        return std::includes(s.begin(), s.end(), n.begin(), n.end());
      });
      EXPECT_EQ(k.contains(s), !blocked);
    }
  }
}

TEST(Balanced, Examples) {
  const auto coloring = balanced_coloring(octahedron_boundary());
  ASSERT_TRUE(coloring.has_value());
  // Antipodal vertices are the only non-adjacent pairs, so they share a color.
  EXPECT_EQ(coloring->at(0), coloring->at(1));
  EXPECT_EQ(coloring->at(2), coloring->at(3));
  EXPECT_EQ(coloring->at(4), coloring->at(5));
  EXPECT_TRUE(is_balanced(cycle(4)));
  EXPECT_FALSE(is_balanced(cycle(5)));
  EXPECT_TRUE(is_balanced(coned_octahedron()));
}

TEST(Balanced, AgreesWithExhaustiveColoring) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = random_complex(rng, 6, 3, 5);
    const auto vs = k.vertices();
    const auto edges = k.faces(1);
    const int colors = k.dim() + 1;
    bool exists = false;
    std::vector<int> c(vs.size(), 0);
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
    while (!exists) {
      exists = std::all_of(edges.begin(), edges.end(), [&](const Face& e) { return c[pos[e[0]]] != c[pos[e[1]]]; });
      std::size_t i = 0;
      while (i < c.size() && c[i] == colors - 1) c[i++] = 0;
      if (i == c.size()) break;
      ++c[i];
    }
    const auto found = balanced_coloring(k);
    EXPECT_EQ(found.has_value(), exists);
    if (found) {
      for (const auto& e : edges) EXPECT_NE(found->at(e[0]), found->at(e[1]));
      for (const auto& [v, color] : *found) EXPECT_LT(color, colors);
    }
  }
}

TEST(Link, Examples) {
  const auto oct = octahedron_boundary();
  EXPECT_EQ(link(oct, {0}).facets(), (std::vector<Face>{{2, 4}, {2, 5}, {3, 4}, {3, 5}}));
  EXPECT_EQ(link(oct, {0, 2}).facets(), (std::vector<Face>{{4}, {5}}));
  EXPECT_EQ(link(oct, {0, 2, 4}).dim(), -1);
  EXPECT_TRUE(link(oct, {0, 2, 4}).contains({}));
  EXPECT_TRUE(link(oct, {0, 1}).facets().empty());
  EXPECT_EQ(link(coned_octahedron(), {6}).facets(), oct.facets());
}
