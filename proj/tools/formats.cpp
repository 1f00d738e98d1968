#include "formats.hpp"

#include "hstar/exactgeom.hpp"
#include "hstar/linalg.hpp"

#include <fstream>
#include <limits>
#include <regex>

namespace hstar::cli {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

LatticePoint parse_point(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of integers");
  LatticePoint p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_number_integer()) {
      p(static_cast<Eigen::Index>(i)) = j[i].get<std::int64_t>();
    } else if (j[i].is_string()) {
      try {
        p(static_cast<Eigen::Index>(i)) = Integer(j[i].get<std::string>());
      } catch (const std::exception&) {
        throw InputError(where + ": bad integer '" + j[i].get<std::string>() + "'");
      }
    } else {
      throw InputError(where + ": coordinates must be integers");
    }
  }
  return p;
}

}  // namespace

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(integer_json(v(i)));
  return out;
}

PolytopeFile parse_polytope(const json& j) {
  if (!j.is_object()) throw InputError("polytope file must be a JSON object");
  PolytopeFile p;
  try {
    p.name = j.at("name").get<std::string>();
    p.dim = j.at("dim").get<int>();
  } catch (const json::exception& e) {
    throw InputError(std::string("polytope file: ") + e.what());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw InputError("polytope file: 'vertices' must be a non-empty array");
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    auto v = parse_point(j["vertices"][i], "vertex " + std::to_string(i));
    if (v.size() != p.dim)
      throw InputError("vertex " + std::to_string(i) + " has " + std::to_string(v.size()) + " coordinates, dim is " +
                       std::to_string(p.dim));
    p.vertices.push_back(std::move(v));
  }
  return p;
}

json to_json(const PolytopeFile& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  return json{{"name", p.name}, {"dim", p.dim}, {"vertices", vertices}};
}

PolytopeFile read_polytope_file(const std::filesystem::path& path) { return parse_polytope(read_json(path)); }

LatticePolytope to_polytope(const PolytopeFile& p) {
  if (affine_rank(as_columns(p.vertices)) != p.dim)
    throw InputError(p.name + ": polytope is not full-dimensional in dimension " + std::to_string(p.dim));
  return LatticePolytope(p.vertices);
}

PolytopeFile load_polytope_arg(const std::string& arg) {
  static const std::regex hnfs(R"(hnfs:(\d+),(\d+),(\d+))");
  std::smatch m;
  if (std::regex_match(arg, m, hnfs)) {
    PolytopeFile p;
    const int d = std::stoi(m[1]);
    p.name = "hnfs_" + std::string(m[1]) + "_" + std::string(m[2]) + "_" + std::string(m[3]);
    p.dim = d;
    try {
      p.vertices = hnfs_simplex(d, std::stol(m[2]), std::stol(m[3]));
    } catch (const std::invalid_argument& e) {
      throw InputError(arg + ": " + e.what());
    }
    return p;
  }
  if (arg.rfind("hnfs:", 0) == 0) throw InputError("expected hnfs:d,k,N, got '" + arg + "'");
  return read_polytope_file(arg);
}

WeightFunction parse_weights(const json& j, const PointConfiguration& config) {
  if (!j.is_object() || !j.contains("scope") || !j.contains("entries") || !j["entries"].is_array())
    throw InputError("weight file needs 'scope' and an 'entries' array");
  const std::string scope = j["scope"].is_string() ? j["scope"].get<std::string>() : "";
  if (scope != "boundary" && scope != "full") throw InputError("weight scope must be 'boundary' or 'full'");
  const WeightSupport support = scope == "full" ? WeightSupport::Full : WeightSupport::Boundary;
  const auto allowed = support == WeightSupport::Full ? config.all_indices() : config.boundary_indices();

  WeightFunction w;
  w.support = support;
  for (std::size_t k = 0; k < j["entries"].size(); ++k) {
    const auto& e = j["entries"][k];
    const std::string where = "weight entry " + std::to_string(k);
    if (!e.is_object() || !e.contains("point") || !e.contains("weight")) throw InputError(where + ": needs point and weight");
    const auto p = parse_point(e["point"], where);
    const int idx = p.size() == config.dim() ? config.index_of(p) : -1;
    if (idx < 0 || !std::binary_search(allowed.begin(), allowed.end(), idx))
      throw InputError(where + ": point " + to_string(p) + " is not in the " + scope + " point set");
    Rat value;
    try {
      value = e["weight"].is_number_integer() ? Rat(e["weight"].get<std::int64_t>())
                                              : parse_rational(e["weight"].get<std::string>());
    } catch (const std::exception&) {
      throw InputError(where + ": weight must be an integer or a rational string p/q");
    }
    if (!w.values.emplace(idx, value).second) throw InputError(where + ": point listed twice");
  }
  if (w.values.size() != allowed.size())
    throw InputError("weight file lists " + std::to_string(w.values.size()) + " of " + std::to_string(allowed.size()) +
                     " " + scope + " points");
  return w;
}

json to_json(const WeightFunction& w, const PointConfiguration& config) {
  json entries = json::array();
  for (const auto& [idx, value] : w.values)
    entries.push_back({{"point", to_json(config.points()[static_cast<std::size_t>(idx)])}, {"weight", to_string(value)}});
  return json{{"scope", w.support == WeightSupport::Full ? "full" : "boundary"}, {"entries", entries}};
}

WeightFunction load_weights_arg(const std::string& arg, const PointConfiguration& config, WeightSupport scope) {
  if (std::filesystem::is_regular_file(arg)) {
    WeightFunction w = parse_weights(read_json(arg), config);
    if (w.support == scope) return w;
    if (scope == WeightSupport::Boundary) return w.restricted(config.boundary_indices(), WeightSupport::Boundary);
    throw InputError(arg + ": weights on the boundary only, but this command needs weights on all points");
  }
  try {
    return named_weights(config, scope, arg);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(e.what()) + "; no such weight file either");
  }
}

WeightFunction load_weights_as_given(const std::string& arg, const PointConfiguration& config,
                                     WeightSupport named_scope) {
  if (std::filesystem::is_regular_file(arg)) return parse_weights(read_json(arg), config);
  return load_weights_arg(arg, config, named_scope);
}

json to_json(const VerificationReport& r) {
  json lhs = r.lhs, rhs = r.rhs, notes = r.notes;
  return json{{"check", r.check}, {"instance", r.instance}, {"pass", r.pass},     {"skipped", r.skipped},
              {"lhs", lhs},       {"rhs", rhs},             {"residuals", to_json(r.residuals)}, {"notes", notes}};
}

std::vector<CorpusInstance> load_corpus(const std::filesystem::path& dir) {
  const json index = read_json(dir / "index.json");
  std::vector<CorpusInstance> out;
  for (const auto& f : index.at("polytopes")) {
    auto file = read_polytope_file(dir / f.get<std::string>());
    out.push_back({file.name, std::move(file)});
  }
  for (const auto& h : index.at("hnfs")) {
    auto file = load_polytope_arg("hnfs:" + std::to_string(h.at(0).get<int>()) + "," +
                                  std::to_string(h.at(1).get<int>()) + "," + std::to_string(h.at(2).get<int>()));
    out.push_back({file.name, std::move(file)});
  }
  return out;
}

std::filesystem::path default_corpus_dir() { return HSTAR_CORPUS_DIR; }

}  // namespace hstar::cli
