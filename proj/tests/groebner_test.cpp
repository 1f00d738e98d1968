#include "hstar/groebner.hpp"

#include "hstar/lattice.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hstar;
using namespace hstar::testing;

namespace {

PointConfiguration config_of(const std::vector<LatticePoint>& pts) { return PointConfiguration(LatticePolytope(pts)); }

// Pentagon variables under the labelling a1..a8, mapped to lex indices.
constexpr int kPentagon[] = {0, 3, 6, 7, 5, 2, 1, 4};

Monomial pm(std::initializer_list<int> labels) {
  Exponents e = Exponents::Zero(8);
  for (int v : labels) ++e(kPentagon[v - 1]);
  return Monomial(e);
}

Binomial pb(std::initializer_list<int> lead, std::initializer_list<int> trail) { return Binomial{pm(lead), pm(trail)}; }

std::vector<Binomial> pentagon_reference_toric() {
  return {pb({1, 3}, {2, 2}), pb({1, 6}, {7, 7}), pb({1, 8}, {2, 7}), pb({2, 4}, {3, 8}),
          pb({5, 7}, {6, 8}), pb({2, 5}, {8, 8}), pb({3, 6}, {8, 8}), pb({4, 7}, {8, 8}),
          pb({1, 4}, {3, 7}), pb({2, 8}, {3, 7}), pb({3, 5}, {4, 8}), pb({4, 6}, {5, 8})};
}

// Brute-force count of degree-m monomials in n variables outside the ideal.
long brute_hilbert(const MonomialIdeal& ideal, int m) {
  const int n = ideal.nvars();
  long count = 0;
  std::vector<int> choice(static_cast<std::size_t>(m), 0);
  if (m == 0) return ideal.contains(Monomial(n)) ? 0 : 1;
  while (true) {
    Exponents e = Exponents::Zero(n);
    for (int c : choice) ++e(c);
    if (!ideal.contains(Monomial(e))) ++count;
    int k = m - 1;
    while (k >= 0 && choice[static_cast<std::size_t>(k)] == n - 1) --k;
    if (k < 0) break;
    ++choice[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < m; ++j) choice[static_cast<std::size_t>(j)] = choice[static_cast<std::size_t>(k)];
  }
  return count;
}

Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp) {
  std::uniform_int_distribution<int> dist(0, max_exp);
  Exponents e(n);
  for (int i = 0; i < n; ++i) e(i) = dist(rng);
  return Monomial(e);
}

bool in_some_facet(const PointConfiguration& config, const std::vector<int>& s) {
  for (const auto& f : config.polytope().facets()) {
    const auto pts = config.facet_points(f);
    if (std::includes(pts.begin(), pts.end(), s.begin(), s.end())) return true;
  }
  return false;
}

void expect_all_pass(const ReportList& reports) {
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.check;
}

}  // namespace

TEST(Groebner, MonomialArithmetic) {
  const Monomial a(Exponents((Exponents(3) << 2, 0, 1).finished()));
  const Monomial b(Exponents((Exponents(3) << 1, 1, 0).finished()));
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(to_string(a), "x1^2*x3");
  EXPECT_EQ(to_string(a.lcm(b)), "x1^2*x2*x3");
  EXPECT_EQ(to_string(a.gcd(b)), "x1");
  EXPECT_EQ(to_string(a.radical()), "x1*x3");
  EXPECT_FALSE(a.coprime(b));
  EXPECT_TRUE(Monomial::variable(3, 1).coprime(Monomial::variable(3, 2)));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_THROW(a / b, std::invalid_argument);
  EXPECT_EQ(to_string(Monomial(3)), "1");
}

TEST(Groebner, TermOrderAxiomsOnRandomTriples) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> wdist(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> w;
    for (int i = 0; i < 5; ++i) w.push_back(Rat(wdist(rng), 1 + trial % 3));
    const TermOrder orders[] = {TermOrder::grevlex(5), TermOrder::grevlex_last(5, trial % 5), TermOrder::weighted(w)};
    for (const auto& order : orders) {
      for (int k = 0; k < 30; ++k) {
        const Monomial a = random_monomial(rng, 5, 3), b = random_monomial(rng, 5, 3), c = random_monomial(rng, 5, 3);
        EXPECT_EQ(order.compare(a, b), -order.compare(b, a));
        EXPECT_EQ(order.compare(a, b) == 0, a == b);
        EXPECT_EQ(order.compare(a * c, b * c), order.compare(a, b));
        if (order.greater(a, b) && order.greater(b, c)) EXPECT_TRUE(order.greater(a, c));
        if (&order != &orders[2] || a.degree() != b.degree()) continue;
        Rat wa = 0, wb = 0;
        for (int i = 0; i < 5; ++i) {
          wa += w[static_cast<std::size_t>(i)] * a[i];
          wb += w[static_cast<std::size_t>(i)] * b[i];
        }
        if (wa != wb) EXPECT_EQ(order.greater(a, b), wa > wb);
      }
    }
  }
}

TEST(Groebner, GrevlexLastMakesVariableSmallest) {
  const auto order = TermOrder::grevlex_last(3, 0);
  EXPECT_TRUE(order.greater(Monomial::variable(3, 2), Monomial::variable(3, 0)));
  EXPECT_TRUE(TermOrder::grevlex(3).greater(Monomial::variable(3, 0), Monomial::variable(3, 2)));
}

TEST(Groebner, UnitSquareIsSegre) {
  const auto config = config_of(unit_square());
  const auto gens = toric_ideal_generators(config);
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(to_string(gens[0]), "x2*x3 - x1*x4");
  EXPECT_EQ(interior_monomial_ideal(config),
            MonomialIdeal(4, {Monomial::squarefree(4, {0, 3}), Monomial::squarefree(4, {1, 2})}));
}

TEST(Groebner, PentagonReferenceToricListLacksTheFiberOverOneTwo) {
  const auto config = config_of(pentagon());
  ASSERT_EQ(config.size(), 8);
  const auto order = TermOrder::grevlex(8);
  const auto computed = buchberger(toric_ideal_generators(config), order);
  const auto reference = buchberger(pentagon_reference_toric(), order);
  for (const auto& g : pentagon_reference_toric()) EXPECT_TRUE(computed.contains(g)) << to_string(g);
  std::vector<Binomial> quadrics;
  for (const auto& g : computed.elements())
    if (g.degree() == 2) quadrics.push_back(g);
  EXPECT_TRUE(buchberger(quadrics, order).elements() == computed.elements());

  // (1,2) = a1 + a5 = a7 + a8 = a2 + a6 in 2P, and no reference binomial
  // touches that fiber: the reference ideal has 24 standard quadrics, 2P has 22 points.
  EXPECT_FALSE(reference.contains(pb({1, 5}, {7, 8})));
  EXPECT_FALSE(reference.contains(pb({1, 5}, {2, 6})));
  EXPECT_EQ(hilbert_function(initial_ideal(reference), 2), 24);
  EXPECT_EQ(hilbert_function(initial_ideal(computed), 2), 22);

  auto completed = pentagon_reference_toric();
  completed.push_back(pb({1, 5}, {7, 8}));
  completed.push_back(pb({1, 5}, {2, 6}));
  EXPECT_TRUE(buchberger(completed, order).elements() == computed.elements());
}

TEST(Groebner, PentagonInteriorIdealMatchesReferenceGenerators) {
  const auto config = config_of(pentagon());
  const MonomialIdeal expected(8, {pm({8}), pm({1, 4}), pm({1, 5}), pm({2, 4}), pm({2, 5}), pm({2, 6}), pm({2, 7}),
                                   pm({3, 5}), pm({3, 6}), pm({3, 7}), pm({4, 6}), pm({4, 7}), pm({5, 7})});
  const auto mp = interior_monomial_ideal(config);
  EXPECT_EQ(mp, expected);
  EXPECT_EQ(mp.generators().size(), 13u);
}

TEST(Groebner, SimplexInteriorIdealIsFullProduct) {
  for (const auto& pts : {unit_triangle(), unit_tetrahedron()}) {
    const auto config = config_of(pts);
    const int n = config.size();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    EXPECT_EQ(interior_monomial_ideal(config), MonomialIdeal(n, {Monomial::squarefree(n, all)}));
    EXPECT_TRUE(toric_ideal_generators(config).empty());
  }
}

TEST(Groebner, InteriorIdealSupportLaw) {
  std::mt19937_64 rng(5);
  for (const auto& pts : {pentagon(), octahedron(), hexagon(), boundary_quad()}) {
    const auto config = config_of(pts);
    const auto mp = interior_monomial_ideal(config);
    EXPECT_TRUE(is_squarefree(mp));
    for (const auto& g : mp.generators()) EXPECT_TRUE(gamma_in_interior(config, g)) << to_string(g);
    for (int k = 0; k < 500; ++k) {
      Exponents e = Exponents::Zero(config.size());
      std::uniform_int_distribution<int> pick(0, config.size() - 1);
      const int size = 1 + k % 4;
      for (int j = 0; j < size; ++j) e(pick(rng)) += 1;
      const Monomial x(e);
      const bool in_facet = in_some_facet(config, x.support());
      EXPECT_EQ(mp.contains(x), !in_facet) << to_string(x);
      EXPECT_EQ(gamma_in_interior(config, x), !in_facet) << to_string(x);
    }
  }
}

TEST(Groebner, BoundarySetsAreExactlyTheNonRadicalMembers) {
  const auto config = config_of(pentagon());
  const auto rad = radical_monomial(interior_monomial_ideal(config));
  for (int mask = 1; mask < (1 << config.size()); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < config.size(); ++i)
      if (mask & (1 << i)) s.push_back(i);
    EXPECT_EQ(in_some_facet(config, s), !rad.contains(Monomial::squarefree(config.size(), s)));
  }
}

TEST(Groebner, FiberOracleAgreesWithKernelConstruction) {
  for (const auto& pts : {unit_square(), pentagon(), octahedron(), boundary_quad(), hexagon()}) {
    const auto config = config_of(pts);
    const auto order = TermOrder::grevlex(config.size());
    const auto from_kernel = toric_ideal_generators(config);
    const auto from_fibers = buchberger(fiber_generators(config, config.dim() + 1), order);
    EXPECT_TRUE(from_kernel == from_fibers.elements()) << config.size();
  }
}

TEST(Groebner, HilbertFunctionOfToricInitialIdealIsEhrhart) {
  const auto config = config_of(hexagon());
  ASSERT_EQ(config.size(), 16);
  const auto gens = toric_ideal_generators(config);
  const auto in_grevlex = initial_ideal(buchberger(gens, TermOrder::grevlex(16)));
  const auto in_weighted = initial_ideal(buchberger(gens, TermOrder::weighted(random_weights(config, WeightSupport::Full, 3), 16)));
  EXPECT_EQ(hilbert_function(in_grevlex, 0), 1);
  EXPECT_EQ(hilbert_function(in_grevlex, 1), 16);
  EXPECT_EQ(hilbert_function(in_grevlex, 2), 53);
  for (int m = 0; m <= 4; ++m) {
    const Integer expected = 11 * m * m + 4 * m + 1;
    EXPECT_EQ(hilbert_function(in_grevlex, m), expected) << m;
    EXPECT_EQ(hilbert_function(in_weighted, m), expected) << m;
  }
}

TEST(Groebner, HilbertFunctionAgainstBruteForce) {
  EXPECT_EQ(hilbert_function(MonomialIdeal(4, {}), 8), binomial(11, 8));
  EXPECT_EQ(hilbert_function(MonomialIdeal(3, {Monomial(3)}), 2), 0);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 1 + trial % 5; ++k) {
      Monomial g = random_monomial(rng, 4, 2);
      if (!g.is_one()) gens.push_back(g);
    }
    const MonomialIdeal ideal(4, gens);
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(hilbert_function(ideal, m), brute_hilbert(ideal, m));
  }
}

TEST(Groebner, DegreeCapIsExactBelowAndRefusesAbove) {
  const auto config = config_of(pentagon());
  const auto gens = fiber_generators(config, 3);
  const auto order = TermOrder::grevlex(8);
  const auto full = initial_ideal(buchberger(gens, order));
  const auto capped = initial_ideal(buchberger(gens, order, 2));
  EXPECT_EQ(capped.valid_through(), 2);
  for (int m = 0; m <= 2; ++m) EXPECT_EQ(hilbert_function(capped, m), hilbert_function(full, m));
  EXPECT_THROW(hilbert_function(capped, 3), CapTooLowForQuery);
}

TEST(Groebner, NormalFormDecidesMembership) {
  const auto config = config_of(unit_square());
  const auto gb = buchberger(toric_ideal_generators(config), TermOrder::grevlex(4));
  const Monomial x1 = Monomial::variable(4, 0), x2 = Monomial::variable(4, 1), x3 = Monomial::variable(4, 2),
                 x4 = Monomial::variable(4, 3);
  EXPECT_TRUE(gb.contains(Binomial{x1 * x1 * x4 * x4, x2 * x2 * x3 * x3}));
  EXPECT_FALSE(gb.contains(Binomial{x1 * x4, x1 * x1}));
  EXPECT_FALSE(gb.contains(Binomial{x1, std::nullopt}));
}

TEST(Groebner, BoundaryIdealDecomposesInitialIdeal) {
  const auto config = config_of(pentagon());
  const auto order = TermOrder::weighted(random_weights(config, WeightSupport::Full, 4), config.size());
  const auto parts = boundary_ideal(config);
  const auto in_b = initial_ideal(buchberger(parts.generators(), order));
  const auto in_p = initial_ideal(buchberger(parts.toric, order));
  EXPECT_EQ(in_b, in_p + parts.interior);
}

TEST(Groebner, SturmfelsCorrespondence) {
  for (const auto& pts : {unit_square(), pentagon(), octahedron(), hexagon()}) {
    const auto config = config_of(pts);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto r = verify_sturmfels(config, random_weights(config, WeightSupport::Full, seed));
      EXPECT_TRUE(r.pass) << config.size() << " seed " << seed;
    }
    const auto sq = verify_sturmfels(config, sqnorm_weights(config, WeightSupport::Full));
    EXPECT_TRUE(sq.pass);
  }
}

TEST(Groebner, BoundarySturmfelsCorrespondence) {
  for (const auto& pts : {unit_square(), pentagon(), octahedron(), boundary_quad(), unit_tetrahedron()}) {
    const auto config = config_of(pts);
    for (std::uint64_t seed : {1u, 2u}) {
      const auto w = random_weights(config, WeightSupport::Boundary, seed);
      try {
        boundary_triangulation(config, w);
      } catch (const BoundaryNotTriangulated&) {
        continue;
      }
      expect_all_pass(verify_boundary_sturmfels(config, w, seed));
    }
  }
}
