#include "cli.hpp"

#include "acceptance.hpp"
#include "checks.hpp"
#include "formats.hpp"

#include "hstar/groebner.hpp"
#include "hstar/lattice.hpp"
#include "hstar/simplicial.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace hstar::cli {

using nlohmann::json;

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("EHRHART_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("EHRHART_SEED must be a non-negative integer, got '") + env + "'");
}

std::vector<std::string> variable_names(const PointConfiguration& config) {
  std::vector<std::string> names;
  for (int i = 0; i < config.size(); ++i) names.push_back("x" + std::to_string(i));
  return names;
}

json points_json(const std::vector<LatticePoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

json cells_json(const std::vector<Face>& cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back(c);
  return out;
}

json binomials_json(const std::vector<Binomial>& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(to_string(g));
  return out;
}

json monomials_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& m : ideal.generators()) out.push_back(to_string(m));
  return out;
}

struct Session {
  std::ostream& out;
  std::ostream& err;
  int failures = 0;
  int reports = 0;
  int skipped = 0;

  void emit(const json& j) { out << j.dump() << '\n'; }

  void emit(const ReportList& list) {
    for (const auto& r : list) {
      emit(to_json(r));
      ++reports;
      if (r.skipped) ++skipped;
      if (!r.pass) {
        ++failures;
        err << "FAIL " << r.check << " on " << r.instance << '\n';
      }
    }
  }

  void summarize() {
    if (reports == 0) return;
    err << reports << " reports: " << reports - failures - skipped << " pass, " << failures << " fail, " << skipped
        << " skipped\n";
  }
};

struct Args {
  std::string poly;
  std::string weights;
  std::string part = "P";
  std::string check;
  std::string filter;
  std::string corpus;
  long dilation = 1;
  int truncate = 0;
  bool boundary = false;
  std::optional<std::uint64_t> seed;
};

json header(const std::string& command, const PolytopeFile& file) {
  return json{{"command", command}, {"instance", file.name}};
}

void cmd_points(Session& s, const Args& a) {
  if (a.dilation < 0) throw InputError("--dilation must be non-negative");
  const auto file = load_polytope_arg(a.poly);
  const auto poly = to_polytope(file);
  const auto pts = enumerate_dilation(poly, a.dilation);
  const auto count = count_dilation(poly, a.dilation);
  auto j = header("points", file);
  j["dilation"] = a.dilation;
  j["count"] = integer_json(count.total);
  j["boundary_count"] = integer_json(count.boundary);
  j["points"] = points_json(pts);
  s.emit(j);
  s.err << file.name << ": " << count.total << " points in " << a.dilation << "P\n";
}

void cmd_facets(Session& s, const Args& a) {
  const auto file = load_polytope_arg(a.poly);
  const auto poly = to_polytope(file);
  json facets = json::array();
  for (const auto& f : poly.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", integer_json(f.offset)}});
  auto j = header("facets", file);
  j["facets"] = facets;
  s.emit(j);
  s.err << file.name << ": " << poly.facets().size() << " facets\n";
}

void cmd_hstar(Session& s, const Args& a) {
  const auto file = load_polytope_arg(a.poly);
  const auto poly = to_polytope(file);
  const EhrhartPart part = a.part == "boundary" ? EhrhartPart::Boundary
                           : a.part == "interior" ? EhrhartPart::Interior
                                                  : EhrhartPart::Polytope;
  const auto h = hstar_vector(ehrhart_profile(poly, poly.dim() + 1), part);
  auto j = header("hstar", file);
  j["part"] = a.part;
  j["coefficients"] = to_json(h.coeffs);
  j["denominator_exponent"] = h.denominator_exponent;
  s.emit(j);
  s.err << file.name << " h*(" << a.part << ") = " << render(h.coeffs) << '\n';
}

void cmd_triangulate(Session& s, const Args& a, std::uint64_t seed) {
  const auto file = load_polytope_arg(a.poly);
  const PointConfiguration config(to_polytope(file));
  auto w = load_weights_as_given(a.weights, config, WeightSupport::Full);
  auto j = header("triangulate", file);
  if (w.support == WeightSupport::Boundary) {
    const auto ext = extend_boundary_weights(config, w, seed);
    j["extended_from_boundary"] = true;
    j["extension_attempts"] = ext.attempts;
    w = ext.weights;
  }
  const auto cells = regular_subdivision(config, w);
  const bool tri = is_triangulation(cells, config);
  j["points"] = points_json(config.points());
  j["cells"] = cells_json(cells);
  j["triangulation"] = tri;
  j["unimodular"] = tri && is_unimodular(cells, config);
  s.emit(j);
  s.err << file.name << ": " << cells.size() << " cells, " << (tri ? "triangulation" : "not a triangulation") << '\n';
}

void cmd_hvector(Session& s, const Args& a) {
  const auto file = load_polytope_arg(a.poly);
  const PointConfiguration config(to_polytope(file));
  auto j = header("hvector", file);
  std::optional<SimplicialComplex> complex;
  if (a.boundary) {
    try {
      complex = boundary_triangulation(config, load_weights_arg(a.weights, config, WeightSupport::Boundary));
      j["unimodular"] = is_boundary_unimodular(*complex, config);
    } catch (const BoundaryNotTriangulated& e) {
      j["error"] = e.what();
    }
  } else {
    const auto cells = regular_subdivision(config, load_weights_arg(a.weights, config, WeightSupport::Full));
    if (is_triangulation(cells, config)) {
      complex = as_complex(cells, config);
      j["unimodular"] = is_unimodular(cells, config);
    } else {
      j["error"] = "weights induce a subdivision that is not a triangulation";
    }
  }
  j["boundary"] = a.boundary;
  if (complex) {
    const auto fh = fh_vector(*complex);
    j["f"] = to_json(fh.f);
    j["h"] = to_json(fh.h);
    s.err << file.name << " h = " << render(fh.h) << '\n';
  } else {
    ++s.failures;
    s.err << file.name << ": " << j["error"].get<std::string>() << '\n';
  }
  s.emit(j);
}

void cmd_toric(Session& s, const Args& a) {
  const auto file = load_polytope_arg(a.poly);
  const PointConfiguration config(to_polytope(file));
  auto j = header("toric", file);
  std::vector<Binomial> gens;
  if (a.truncate > 0) {
    gens = buchberger(fiber_generators(config, a.truncate), TermOrder::grevlex(config.size()), a.truncate).elements();
    j["truncate"] = a.truncate;
  } else {
    gens = toric_ideal_generators(config);
  }
  j["points"] = points_json(config.points());
  j["generators"] = binomials_json(gens);
  s.emit(j);
  s.err << file.name << ": " << gens.size() << " binomials in the grevlex basis\n";
}

void cmd_boundary_ideal(Session& s, const Args& a) {
  const auto file = load_polytope_arg(a.poly);
  const PointConfiguration config(to_polytope(file));
  const auto ideal = boundary_ideal(config);
  auto j = header("boundary-ideal", file);
  j["points"] = points_json(config.points());
  j["toric"] = binomials_json(ideal.toric);
  j["interior"] = monomials_json(ideal.interior);
  s.emit(j);
  s.err << file.name << ": " << ideal.toric.size() << " toric binomials, " << ideal.interior.generators().size()
        << " interior monomials\n";
}

void cmd_initial(Session& s, const Args& a, std::uint64_t seed) {
  const auto file = load_polytope_arg(a.poly);
  const PointConfiguration config(to_polytope(file));
  const auto w = load_weights_as_given(a.weights, config, WeightSupport::Full);
  auto j = header("initial", file);
  std::vector<Binomial> gens;
  WeightFunction order_weights = w;
  if (w.support == WeightSupport::Boundary) {
    order_weights = extend_boundary_weights(config, w, seed).weights;
    gens = boundary_ideal(config).generators();
    j["ideal"] = "boundary";
  } else {
    gens = toric_ideal_generators(config);
    j["ideal"] = "toric";
  }
  const auto in = initial_ideal(buchberger(gens, TermOrder::weighted(order_weights, config.size())));
  j["points"] = points_json(config.points());
  j["generators"] = monomials_json(in);
  j["radical"] = monomials_json(radical_monomial(in));
  j["squarefree"] = is_squarefree(in);
  s.emit(j);
  s.err << file.name << ": initial ideal with " << in.generators().size() << " generators, "
        << (is_squarefree(in) ? "squarefree" : "not squarefree") << '\n';
}

void cmd_verify(Session& s, const Args& a, std::uint64_t seed) {
  const auto file = load_polytope_arg(a.poly);
  CheckOptions options;
  if (!a.weights.empty()) options.weights = a.weights;
  options.seed = seed;
  s.emit(run_check(a.check, file, options));
}

void cmd_corpus_run(Session& s, const Args& a, std::uint64_t seed) {
  const std::filesystem::path dir = a.corpus.empty() ? default_corpus_dir() : std::filesystem::path(a.corpus);
  const auto corpus = load_corpus(dir);
  for (const auto& inst : corpus) {
    if (!a.filter.empty() && inst.name.find(a.filter) == std::string::npos) continue;
    s.emit(run_all_checks(inst.file, seed));
  }
  if (!a.filter.empty()) return;
  for (int id = 1; id <= 10; ++id) {
    const auto c = criterion(id, corpus, seed);
    s.emit({as_report(c)});
    s.err << summary_line(c) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart h*-vectors, triangulations and toric ideals of lattice polytopes", "hstar-cli"};
  app.require_subcommand(1);
  Args a;
  std::function<void(Session&, std::uint64_t)> action;

  auto poly_arg = [&a](CLI::App* sub) {
    sub->add_option("poly", a.poly, "polytope file or hnfs:d,k,N")->required();
  };
  auto seed_opt = [&a](CLI::App* sub) { sub->add_option("--seed", a.seed, "seed (default: EHRHART_SEED or 0)"); };

  auto* points = app.add_subcommand("points", "lattice points of a dilate");
  poly_arg(points);
  points->add_option("--dilation", a.dilation, "dilation factor m")->capture_default_str();
  points->callback([&] { action = [&](Session& s, std::uint64_t) { cmd_points(s, a); }; });

  auto* facets = app.add_subcommand("facets", "facet inequalities");
  poly_arg(facets);
  facets->callback([&] { action = [&](Session& s, std::uint64_t) { cmd_facets(s, a); }; });

  auto* hstar = app.add_subcommand("hstar", "h*-vector of P, its boundary or its interior");
  poly_arg(hstar);
  hstar->add_option("--part", a.part, "P, boundary or interior")
      ->check(CLI::IsMember({"P", "boundary", "interior"}))
      ->capture_default_str();
  hstar->callback([&] { action = [&](Session& s, std::uint64_t) { cmd_hstar(s, a); }; });

  auto* tri = app.add_subcommand("triangulate", "regular subdivision induced by weights");
  poly_arg(tri);
  tri->add_option("--weights", a.weights, "weight file, sqnorm, zero or random:<seed>")->required();
  seed_opt(tri);
  tri->callback([&] { action = [&](Session& s, std::uint64_t seed) { cmd_triangulate(s, a, seed); }; });

  auto* hv = app.add_subcommand("hvector", "f- and h-vector of an induced triangulation");
  poly_arg(hv);
  hv->add_option("--weights", a.weights, "weight file, sqnorm, zero or random:<seed>")->required();
  hv->add_flag("--boundary", a.boundary, "triangulate the boundary only");
  hv->callback([&] { action = [&](Session& s, std::uint64_t) { cmd_hvector(s, a); }; });

  auto* toric = app.add_subcommand("toric", "reduced grevlex Groebner basis of the toric ideal");
  poly_arg(toric);
  toric->add_option("--truncate", a.truncate, "only binomials up to this degree")->check(CLI::PositiveNumber);
  toric->callback([&] { action = [&](Session& s, std::uint64_t) { cmd_toric(s, a); }; });

  auto* bideal = app.add_subcommand("boundary-ideal", "toric ideal plus interior monomial ideal");
  poly_arg(bideal);
  bideal->callback([&] { action = [&](Session& s, std::uint64_t) { cmd_boundary_ideal(s, a); }; });

  auto* initial = app.add_subcommand("initial", "initial ideal under a weight order");
  poly_arg(initial);
  initial->add_option("--weights", a.weights, "full weights for I_P, boundary weights for I_dP")->required();
  seed_opt(initial);
  initial->callback([&] { action = [&](Session& s, std::uint64_t seed) { cmd_initial(s, a, seed); }; });

  auto* verify = app.add_subcommand("verify", "run one named check");
  verify->add_option("check", a.check, "check name")->required()->check(CLI::IsMember(check_names()));
  poly_arg(verify);
  verify->add_option("--weights", a.weights, "weight file, sqnorm, zero or random:<seed>");
  seed_opt(verify);
  verify->callback([&] { action = [&](Session& s, std::uint64_t seed) { cmd_verify(s, a, seed); }; });

  auto* corpus = app.add_subcommand("corpus", "corpus operations");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "all checks on every corpus instance, then the acceptance criteria");
  run->add_option("--filter", a.filter, "only instances whose name contains this; skips the criteria");
  run->add_option("--corpus", a.corpus, "corpus directory");
  seed_opt(run);
  run->callback([&] { action = [&](Session& s, std::uint64_t seed) { cmd_corpus_run(s, a, seed); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Session session{out, err};
  try {
    const std::uint64_t seed = a.seed ? *a.seed : default_seed();
    action(session, seed);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  session.summarize();
  return session.failures == 0 ? 0 : 1;
}

}  // namespace hstar::cli
