#include "acceptance.hpp"

#include "hstar/analysis.hpp"
#include "hstar/groebner.hpp"
#include "hstar/linalg.hpp"
#include "hstar/simplicial.hpp"

#include <random>
#include <set>

namespace hstar::cli {

namespace {

class Evidence {
 public:
  explicit Evidence(Criterion& c) : c_(c) { c_.pass = true; }
  void expect(bool ok, const std::string& what) {
    c_.details.push_back((ok ? "ok: " : "FAILED: ") + what);
    if (!ok) c_.pass = false;
  }
  void note(const std::string& what) { c_.details.push_back(what); }

 private:
  Criterion& c_;
};

std::vector<Integer> ints(std::initializer_list<long> v) { return std::vector<Integer>(v.begin(), v.end()); }

std::vector<Integer> padded(std::vector<Integer> v, std::size_t n) {
  v.resize(std::max(v.size(), n), Integer(0));
  return v;
}

const PolytopeFile& find_instance(const std::vector<CorpusInstance>& corpus, const std::string& name) {
  for (const auto& c : corpus)
    if (c.name == name) return c.file;
  throw InputError("corpus has no instance '" + name + "'");
}

PointConfiguration config_of(const std::vector<CorpusInstance>& corpus, const std::string& name) {
  return PointConfiguration(to_polytope(find_instance(corpus, name)));
}

bool all_reports_pass(const ReportList& reports, Evidence& ev, const std::string& where) {
  bool ok = true;
  for (const auto& r : reports) {
    if (!r.pass) {
      ev.expect(false, where + ": " + r.check);
      ok = false;
    }
  }
  return ok;
}

std::optional<BoundaryRUTCertificate> boundary_certificate(const PointConfiguration& config, std::uint64_t seed) {
  const auto bt = find_unimodular_boundary_triangulation(config, seed);
  if (!bt) return std::nullopt;
  return BoundaryRUTCertificate::certify(config, bt->boundary_weights);
}

std::optional<WeightFunction> generic_boundary_weights(const PointConfiguration& config, std::uint64_t seed) {
  for (std::uint64_t s = seed; s < seed + 64; ++s) {
    auto w = random_weights(config, WeightSupport::Boundary, s);
    try {
      boundary_triangulation(config, w);
      return w;
    } catch (const BoundaryNotTriangulated&) {
    }
  }
  return std::nullopt;
}

Criterion example_11(const std::vector<CorpusInstance>& corpus, std::uint64_t seed) {
  Criterion c{1, "Hexagon: h*(P) = (1,13,8), unimodular triangulation h = (1,13,8,0)", false, {}};
  Evidence ev(c);
  const auto config = config_of(corpus, "hexagon");
  const auto h = hstar_pair(config.polytope());
  ev.expect(h.polytope.coeffs == ints({1, 13, 8}), "h*(P) = " + render(h.polytope.coeffs));
  const auto t = find_unimodular_triangulation(config, seed);
  const auto cert = t ? RUTCertificate::certify(config, *t->inducing_weights) : std::nullopt;
  ev.expect(cert.has_value(), "regular unimodular triangulation certified");
  if (!cert) return c;
  const auto ht = h_vector(as_complex(cert->cells(), config));
  ev.expect(ht == ints({1, 13, 8, 0}), "h(T) = " + render(ht) + " over " + std::to_string(cert->cells().size()) + " cells");
  ev.expect(betke_mcmullen(config, *cert).pass, "h(T) equals h*(P)");
  return c;
}

Criterion octahedron(const std::vector<CorpusInstance>& corpus, std::uint64_t) {
  Criterion c{2, "Octahedron: h*(P) = (1,3,3,1) and the coned triangulation has h = (1,3,3,1)", false, {}};
  Evidence ev(c);
  const auto config = config_of(corpus, "octahedron");
  const auto h = hstar_pair(config.polytope());
  ev.expect(h.polytope.coeffs == ints({1, 3, 3, 1}), "h*(P) = " + render(h.polytope.coeffs));

  const int origin = config.index_of(LatticePoint::Zero(3));
  std::set<Face> cone;
  for (const auto& f : config.polytope().facets()) {
    auto cell = config.facet_points(f);
    cell.push_back(origin);
    cone.insert(make_face(cell));
  }
  const auto cells = regular_subdivision(config, sqnorm_weights(config, WeightSupport::Full));
  ev.expect(std::set<Face>(cells.begin(), cells.end()) == cone,
            "sqnorm weights induce the cone from the origin over the 8 boundary triangles");
  const auto ht = h_vector(as_complex(cells, config));
  ev.expect(ht == padded(ints({1, 3, 3, 1}), ht.size()), "h(T) = " + render(ht) + " (trailing zero from length d+2)");
  return c;
}

Criterion boundary_example(const std::vector<CorpusInstance>& corpus, std::uint64_t seed) {
  Criterion c{3, "conv{(0,0),(0,2),(2,0),(3,3)}: h*(dP) = (1,4,1) = h(Delta) for unimodular Delta", false, {}};
  Evidence ev(c);
  const auto config = config_of(corpus, "boundary_quad");
  const auto h = hstar_pair(config.polytope());
  ev.expect(h.boundary.coeffs == ints({1, 4, 1}), "h*(dP) = " + render(h.boundary.coeffs));
  const auto cert = boundary_certificate(config, seed);
  ev.expect(cert.has_value(), "regular unimodular boundary triangulation certified");
  if (cert) ev.expect(h_vector(cert->delta()) == ints({1, 4, 1}), "h(Delta) = " + render(h_vector(cert->delta())));
  int unimodular = 0;
  for (std::uint64_t s = seed; s < seed + 20; ++s) {
    const auto w = random_weights(config, WeightSupport::Boundary, s);
    try {
      const auto delta = boundary_triangulation(config, w);
      if (!is_boundary_unimodular(delta, config)) continue;
      ++unimodular;
      if (h_vector(delta) != ints({1, 4, 1})) ev.expect(false, "random:" + std::to_string(s) + " gives " + render(h_vector(delta)));
    } catch (const BoundaryNotTriangulated&) {
    }
  }
  ev.expect(unimodular > 0, std::to_string(unimodular) + " of 20 random boundary weights give unimodular Delta, all with h = (1,4,1)");
  return c;
}

// Pentagon labels a1..a8 as lexicographic indices.
constexpr int kPentagon[] = {0, 3, 6, 7, 5, 2, 1, 4};

Monomial pentagon_monomial(std::initializer_list<int> labels) {
  Exponents e = Exponents::Zero(8);
  for (int v : labels) ++e(kPentagon[v - 1]);
  return Monomial(e);
}

Criterion pentagon_ideals(const std::vector<CorpusInstance>& corpus, std::uint64_t) {
  Criterion c{4, "Pentagon: I_P equals the 12 reference binomials, M_P the 13 reference generators", false, {}};
  Evidence ev(c);
  const auto config = config_of(corpus, "pentagon");
  auto b = [](std::initializer_list<int> u, std::initializer_list<int> v) {
    return Binomial{pentagon_monomial(u), pentagon_monomial(v)};
  };
  const std::vector<Binomial> reference = {b({1, 3}, {2, 2}), b({1, 6}, {7, 7}), b({1, 8}, {2, 7}), b({2, 4}, {3, 8}),
                                         b({5, 7}, {6, 8}), b({2, 5}, {8, 8}), b({3, 6}, {8, 8}), b({4, 7}, {8, 8}),
                                         b({1, 4}, {3, 7}), b({2, 8}, {3, 7}), b({3, 5}, {4, 8}), b({4, 6}, {5, 8})};
  const auto order = TermOrder::grevlex(8);
  const auto computed = buchberger(toric_ideal_generators(config), order);
  const auto reference_gb = buchberger(reference, order);

  // Render in the a1..a8 labels.
  std::vector<std::string> names(8);
  for (int label = 1; label <= 8; ++label) names[static_cast<std::size_t>(kPentagon[label - 1])] = "x" + std::to_string(label);

  int reference_in_computed = 0;
  for (const auto& g : reference) reference_in_computed += computed.contains(g) ? 1 : 0;
  ev.expect(reference_in_computed == 12, std::to_string(reference_in_computed) + " of 12 reference binomials lie in the computed I_P");
  std::vector<std::string> missing;
  for (const auto& g : computed.elements())
    if (!reference_gb.contains(g)) missing.push_back(to_string(g, names));
  std::string listing;
  for (const auto& m : missing) listing += (listing.empty() ? "" : ", ") + m;
  ev.expect(missing.empty(), missing.empty() ? "computed I_P lies in the reference ideal"
                                             : "computed Groebner basis elements outside the reference ideal: " + listing);
  if (!missing.empty()) {
    ev.note("degree-2 standard monomials: reference ideal " + to_string(hilbert_function(initial_ideal(reference_gb), 2)) +
            ", I_P " + to_string(hilbert_function(initial_ideal(computed), 2)) + " (= points of 2P)");
  }

  const MonomialIdeal expected(
      8, {pentagon_monomial({8}), pentagon_monomial({1, 4}), pentagon_monomial({1, 5}), pentagon_monomial({2, 4}),
          pentagon_monomial({2, 5}), pentagon_monomial({2, 6}), pentagon_monomial({2, 7}), pentagon_monomial({3, 5}),
          pentagon_monomial({3, 6}), pentagon_monomial({3, 7}), pentagon_monomial({4, 6}), pentagon_monomial({4, 7}),
          pentagon_monomial({5, 7})});
  const auto mp = interior_monomial_ideal(config);
  ev.expect(mp == expected, "M_P has " + std::to_string(mp.generators().size()) + " minimal generators, equal to the reference list");
  return c;
}

Criterion boundary_sturmfels(const std::vector<CorpusInstance>& corpus, std::uint64_t seed) {
  Criterion c{5, "Boundary Sturmfels with sqnorm weights: radical, squarefree iff unimodular, Hilbert = L_dP", false, {}};
  Evidence ev(c);
  for (const std::string name : {"unit_square", "pentagon", "octahedron"}) {
    const auto config = config_of(corpus, name);
    const auto reports = verify_boundary_sturmfels(config, sqnorm_weights(config, WeightSupport::Boundary), seed);
    if (all_reports_pass(reports, ev, name)) ev.expect(true, name + ": " + std::to_string(reports.size()) + " reports pass");
  }
  return c;
}

Criterion dehn_sommerville_random(const std::vector<CorpusInstance>&, std::uint64_t seed) {
  Criterion c{6, "Dehn-Sommerville residuals vanish on 100 random polytopes, d in {2,3}, vertices in [-4,4]^d", false, {}};
  Evidence ev(c);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-4, 4);
  int done = 0, failed = 0;
  while (done < 100) {
    const int d = 2 + done % 2;
    std::vector<LatticePoint> pts;
    for (int i = 0; i < d + 3; ++i) {
      LatticePoint p(d);
      for (int k = 0; k < d; ++k) p(k) = coord(rng);
      pts.push_back(p);
    }
    if (affine_rank(as_columns(pts)) != d) continue;
    const auto h = hstar_pair(LatticePolytope(pts));
    if (!dehn_sommerville(h.polytope, h.boundary, d).pass) ++failed;
    ++done;
  }
  ev.expect(failed == 0, std::to_string(done - failed) + " of " + std::to_string(done) + " polytopes with zero residuals");
  return c;
}

Criterion hnfs(const std::vector<CorpusInstance>&, std::uint64_t) {
  Criterion c{7, "HNFS simplices match the closed form; (6,2,13) has GLBT equality at r = 1", false, {}};
  Evidence ev(c);
  for (const auto& [d, k, n] : std::vector<std::tuple<int, long, long>>{{2, 2, 5}, {3, 1, 4}, {6, 2, 13}}) {
    const auto h = hstar_pair(LatticePolytope(hnfs_simplex(d, k, n)));
    const std::string label = "(" + std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(n) + ")";
    ev.expect(h.polytope.coeffs == hnfs_closed_form(d, k, n), label + ": h* = " + render(h.polytope.coeffs));
    if (d == 6) {
      const auto r = glbt_equality_r(h.boundary, d);
      ev.expect(r == 1, label + ": glbt r = " + (r ? std::to_string(*r) : "none"));
    }
  }
  return c;
}

Criterion bounds(const std::vector<CorpusInstance>& corpus, std::uint64_t seed) {
  Criterion c{8, "Upper bound on certified instances, tight for the hexagon; balanced lower bound tight for the octahedron", false, {}};
  Evidence ev(c);
  int certified = 0;
  for (const auto& inst : corpus) {
    const PointConfiguration config(to_polytope(inst.file));
    const auto cert = boundary_certificate(config, seed);
    if (!cert) {
      ev.note(inst.name + ": no boundary certificate, not evaluated");
      continue;
    }
    ++certified;
    const auto h = hstar_pair(config.polytope());
    const auto r = bounds_check(h.polytope, h.boundary, h.dim, is_balanced(cert->delta()));
    if (!r.pass) ev.expect(false, inst.name + ": bounds");
  }
  ev.expect(certified > 0, std::to_string(certified) + " certified instances checked");

  const auto ex = hstar_pair(config_of(corpus, "hexagon").polytope());
  const auto upper = bounds_check(ex.polytope, ex.boundary, 2, std::nullopt);
  ev.expect(upper.pass && upper.residuals.at(1) == 0, "hexagon: " + upper.lhs.at(1) + " " + upper.rhs.at(1) + " (tight)");

  const auto oct = config_of(corpus, "octahedron");
  const auto cert = boundary_certificate(oct, seed);
  ev.expect(cert.has_value(), "octahedron boundary certified");
  if (!cert) return c;
  bool proper = true;
  auto color = [&oct](int v) {
    const auto& p = oct.points()[static_cast<std::size_t>(v)];
    for (int k = 0; k < 3; ++k)
      if (p(k) != 0) return k;
    return -1;
  };
  for (const auto& f : cert->delta().facets()) {
    std::set<int> colors;
    for (int v : f) colors.insert(color(v));
    proper = proper && colors.size() == f.size() && !colors.count(-1);
  }
  ev.expect(proper, "coordinate 3-coloring is proper on Delta");
  const auto h = hstar_pair(oct.polytope());
  const auto lower = bounds_check(h.polytope, h.boundary, 3, proper);
  ev.expect(lower.pass && lower.residuals.back() == 0, "octahedron: " + lower.lhs.back() + " " + lower.rhs.back() + " (tight)");
  return c;
}

Criterion oracles(const std::vector<CorpusInstance>& corpus, std::uint64_t seed) {
  Criterion c{9, "Oracle equivalences: kernel vs fiber toric ideal, M_P vs gamma, Hilbert across two orders", false, {}};
  Evidence ev(c);
  std::mt19937_64 rng(seed);
  for (const auto& inst : corpus) {
    const PointConfiguration config(to_polytope(inst.file));
    const int n = config.size(), d = config.dim();
    const auto gens = toric_ideal_generators(config);
    const auto fibers = buchberger(fiber_generators(config, d + 1), TermOrder::grevlex(n));
    if (gens != fibers.elements()) ev.expect(false, inst.name + ": kernel and fiber toric ideals differ");

    const auto mp = interior_monomial_ideal(config);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int disagreements = 0;
    for (int k = 0; k < 500; ++k) {
      Exponents e = Exponents::Zero(n);
      for (int j = 0; j <= k % 4; ++j) e(pick(rng)) += 1;
      const Monomial m(e);
      if (mp.contains(m) != gamma_in_interior(config, m)) ++disagreements;
    }
    if (disagreements) ev.expect(false, inst.name + ": " + std::to_string(disagreements) + " M_P / gamma disagreements");

    const auto in_a = initial_ideal(buchberger(gens, TermOrder::grevlex(n)));
    const auto in_b = initial_ideal(buchberger(gens, TermOrder::weighted(random_weights(config, WeightSupport::Full, seed), n)));
    const auto profile = ehrhart_profile(config.polytope(), d + 1);
    for (int m = 0; m <= d + 1; ++m) {
      const Integer ha = hilbert_function(in_a, m), hb = hilbert_function(in_b, m);
      if (ha != hb || ha != profile.counts_polytope[static_cast<std::size_t>(m)])
        ev.expect(false, inst.name + ": Hilbert functions differ at m = " + std::to_string(m));
    }
    ev.note(inst.name + ": " + std::to_string(gens.size()) + " toric generators, " +
            std::to_string(mp.generators().size()) + " M_P generators");
  }
  ev.expect(c.pass, std::to_string(corpus.size()) + " corpus instances");
  return c;
}

Criterion decomposition(const std::vector<CorpusInstance>& corpus, std::uint64_t seed) {
  Criterion c{10, "in(I_dP) = in(I_P) + M_P and facet restriction on all corpus instances, generic weights", false, {}};
  Evidence ev(c);
  for (const auto& inst : corpus) {
    const PointConfiguration config(to_polytope(inst.file));
    const auto w = generic_boundary_weights(config, seed);
    if (!w) {
      ev.expect(false, inst.name + ": no generic boundary weights found");
      continue;
    }
    int facets = 0;
    bool ok = true;
    for (const auto& r : verify_boundary_sturmfels(config, *w, seed)) {
      if (r.check != "initial_decomposition" && r.check != "facet_restriction") continue;
      facets += r.check == "facet_restriction" ? 1 : 0;
      ok = ok && r.pass;
    }
    ev.expect(ok, inst.name + ": decomposition and " + std::to_string(facets) + " facet restrictions");
  }
  return c;
}

}  // namespace

std::vector<Integer> hnfs_closed_form(int d, long k, long n) {
  std::vector<Integer> h(static_cast<std::size_t>(d) + 1, Integer(k));
  h[0] = 1;
  if (n == k * d) {
    h[static_cast<std::size_t>(d)] = k - 1;
  } else if (n != k * d + 1) {
    throw std::invalid_argument("closed form needs N = kd or kd + 1");
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

Criterion criterion(int id, const std::vector<CorpusInstance>& corpus, std::uint64_t seed) {
  using Fn = Criterion (*)(const std::vector<CorpusInstance>&, std::uint64_t);
  static constexpr Fn table[] = {example_11, octahedron, boundary_example, pentagon_ideals, boundary_sturmfels,
                                 dehn_sommerville_random, hnfs, bounds, oracles, decomposition};
  if (id < 1 || id > 10) throw std::out_of_range("criterion id must be 1..10");
  try {
    return table[id - 1](corpus, seed);
  } catch (const std::exception& e) {
    Criterion c{id, "criterion " + std::to_string(id), false, {}};
    c.details.push_back(std::string("FAILED: exception: ") + e.what());
    return c;
  }
}

std::vector<Criterion> run_acceptance(const std::filesystem::path& corpus_dir, std::uint64_t seed) {
  const auto corpus = load_corpus(corpus_dir);
  std::vector<Criterion> out;
  for (int id = 1; id <= 10; ++id) out.push_back(criterion(id, corpus, seed));
  return out;
}

std::string summary_line(const Criterion& c) {
  return "criterion " + std::to_string(c.id) + ": " + (c.pass ? "PASS" : "FAIL") + "  " + c.title;
}

VerificationReport as_report(const Criterion& c) {
  VerificationReport r;
  r.check = "acceptance_" + std::to_string(c.id);
  r.instance = "corpus";
  r.lhs = {c.title};
  r.pass = c.pass;
  r.notes = c.details;
  return r;
}

}  // namespace hstar::cli
