#pragma once

// JSON file formats for polytopes, weights and reports, and the corpus layout.

#include "hstar/report.hpp"
#include "hstar/triangulate.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace hstar::cli {

/// Malformed or inconsistent user input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolytopeFile {
  std::string name;
  int dim = 0;
  std::vector<LatticePoint> vertices;

  friend bool operator==(const PolytopeFile& a, const PolytopeFile& b) {
    return a.name == b.name && a.dim == b.dim && a.vertices == b.vertices;
  }
};

PolytopeFile parse_polytope(const nlohmann::json& j);
nlohmann::json to_json(const PolytopeFile& p);
PolytopeFile read_polytope_file(const std::filesystem::path& path);
/// Full-dimensional polytope of the file; InputError otherwise.
LatticePolytope to_polytope(const PolytopeFile& p);

/// A path to a polytope file, or "hnfs:d,k,N".
PolytopeFile load_polytope_arg(const std::string& arg);

/// Weight file: {"scope": "boundary"|"full", "entries": [{"point": [..], "weight": "p/q"}, ...]}.
/// Every point of the scope must be listed exactly once.
WeightFunction parse_weights(const nlohmann::json& j, const PointConfiguration& config);
nlohmann::json to_json(const WeightFunction& w, const PointConfiguration& config);

/// A weight file path or a built-in name (sqnorm, zero, random:<seed>) on `scope`.
WeightFunction load_weights_arg(const std::string& arg, const PointConfiguration& config, WeightSupport scope);
/// As above, but a weight file keeps its own scope; names use `named_scope`.
WeightFunction load_weights_as_given(const std::string& arg, const PointConfiguration& config,
                                     WeightSupport named_scope);

nlohmann::json integer_json(const Integer& v);
nlohmann::json to_json(const std::vector<Integer>& v);
nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const VerificationReport& r);

struct CorpusInstance {
  std::string name;
  PolytopeFile file;
};

/// Instances listed by index.json in `dir`: polytope files, then HNFS simplices.
std::vector<CorpusInstance> load_corpus(const std::filesystem::path& dir);
std::filesystem::path default_corpus_dir();

}  // namespace hstar::cli
