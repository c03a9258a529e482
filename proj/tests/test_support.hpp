#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "satdforge/code/language.hpp"
#include "satdforge/code/lexer.hpp"
#include "satdforge/track/record.hpp"

namespace testsupport {

// A scratch git repository driven through the real git binary.
class TestRepo {
 public:
  explicit TestRepo(const std::filesystem::path& dir);

  const std::filesystem::path& dir() const { return dir_; }

  void write(const std::string& rel_path, const std::string& content);
  void remove(const std::string& rel_path);
  void move(const std::string& from, const std::string& to);
  // Stages everything and commits with a fixed identity and an increasing
  // timestamp; returns the commit hash.
  std::string commit(const std::string& message);

 private:
  std::string git(const std::vector<std::string>& args,
                  const std::string& stdin_data = "");
  std::filesystem::path dir_;
  long long clock_ = 1600000000;
};

// The filter-pipeline fixture: one record violating each heuristic step, a
// duplicate pair, two clean records and one surviving SATD.
struct PipelineFixture {
  std::filesystem::path repo_path;  // <root>/fixuser/fixrepo
  std::vector<std::pair<std::string, std::size_t>> expected_stats;
  std::size_t expected_final = 0;
};
PipelineFixture build_pipeline_fixture(const std::filesystem::path& root);

// ---- synthetic histories for the tracker oracle ----

struct SyntheticHistory {
  std::filesystem::path repo_path;
  std::vector<std::string> planted_texts;  // globally unique comment lines
};

// Random history written via git fast-import: unique code and SATD lines,
// inserts, deletions and renames. Deterministic per seed.
SyntheticHistory generate_history(const std::filesystem::path& root,
                                  unsigned seed, satdforge::code::Language lang);

struct OracleRecord {
  std::string comment_text;
  std::string creation_commit;
  std::optional<std::string> deletion_commit;
  int line_at_creation = 0;
  std::optional<int> line_before_deletion;
  std::string file_path;
};

// Brute-force per-commit text search over the first-parent walk, independent
// of the tracker: creation is the first commit containing the planted line,
// deletion the first commit no longer containing it.
std::vector<OracleRecord> brute_force_scan(const std::filesystem::path& repo,
                                           const std::vector<std::string>& texts,
                                           satdforge::code::Language lang);

// ---- independent BLEU oracle ----

// Naive Eq.1/Eq.2 computation: clipping via multiset removal, geometric mean
// via pow products. Shares no code with the library implementation.
double oracle_bleu(const satdforge::code::TokenStream& candidate,
                   const satdforge::code::TokenStream& reference, int max_order,
                   const std::vector<double>& weights);

satdforge::code::TokenStream random_stream(std::mt19937& rng,
                                           std::size_t max_len,
                                           int alphabet_size);

}  // namespace testsupport
