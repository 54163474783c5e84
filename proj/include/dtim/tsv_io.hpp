#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dtim/evaluation.hpp"
#include "dtim/lexicon.hpp"
#include "dtim/ngram_model.hpp"

namespace dtim {

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string file_digest(const std::filesystem::path& path);  // throws DataError

// Reproducibility record accompanying every score file. The hash covers the
// fields that determine the output bytes; wall time is reported but not
// hashed.
struct RunManifest {
  std::string tool_version;
  std::string method;
  nlohmann::json config;  // effective configuration snapshot
  std::string lexicon_digest;
  std::string labels_digest;  // empty when no label file was involved
  std::size_t word_count = 0;
  std::size_t emitted_rows = 0;
  int iterations_run = 0;
  bool converged = false;
  double wall_time_seconds = 0.0;

  std::string hash() const;
  nlohmann::json to_json() const;  // includes "manifest_hash"
};

// Words with their scores, ranked for output: decreasing score, ties by
// ascending raw text. min_chars > 0 drops words with fewer characters.
std::vector<ScoredWord> ranked_scores(const Lexicon& lex,
                                      std::span<const double> scores,
                                      std::size_t min_chars = 0);

// `word<TAB>score` rows at full round-trip precision, preceded by a
// `# manifest <hash>` comment when a hash is given.
void write_scores(std::ostream& out, std::span<const ScoredWord> ranked,
                  std::string_view manifest_hash = {});

struct ScoresFile {
  std::vector<ScoredWord> rows;
  std::string manifest_hash;  // empty when the header is absent
};

// Throws DataError naming the offending line; duplicate words are rejected.
ScoresFile read_scores(std::istream& in);

void write_labels(std::ostream& out,
                  std::span<const std::pair<std::string, Label>> labels);

// `ngram<TAB>native<TAB>transliterable` dump of both distributions.
void write_distributions(std::ostream& out, const NGramVocab& vocab,
                         const Lexicon& lex, const NGramDistribution& native,
                         const NGramDistribution& translit);

}  // namespace dtim
