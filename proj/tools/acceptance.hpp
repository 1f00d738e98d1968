#pragma once

// The ten acceptance criteria, evaluated on the shipped corpus.

#include "formats.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace hstar::cli {

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Human-readable evidence, one fact per entry.
  std::vector<std::string> details;
};

/// h* of the HNFS simplex for N = kd or kd + 1.
std::vector<Integer> hnfs_closed_form(int d, long k, long n);

Criterion criterion(int id, const std::vector<CorpusInstance>& corpus, std::uint64_t seed);
std::vector<Criterion> run_acceptance(const std::filesystem::path& corpus_dir, std::uint64_t seed);

/// "criterion N: PASS|FAIL  title"
std::string summary_line(const Criterion& c);
VerificationReport as_report(const Criterion& c);

}  // namespace hstar::cli
