#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtim/errors.hpp"

namespace dtim {

enum class Label { Native, Transliterable, Unknown };

struct LabeledSet {
  std::unordered_map<std::string, Label> labels;

  // TSV `word<TAB>label`, labels case-insensitive, duplicates rejected.
  // Throws DataError naming the offending line.
  static LabeledSet from_tsv(std::istream& in);
  static std::optional<Label> parse_label(std::string_view text);
};

struct ScoredWord {
  std::string word;
  double score = 0.0;
};

struct RankedWord {
  std::string word;
  double score = 0.0;
  Label label = Label::Unknown;
};

// Labeled words ranked by decreasing score, ties broken by ascending raw
// text. Unknown labels and labels absent from the scoring are excluded and
// counted.
struct Ordering {
  std::vector<RankedWord> entries;
  std::size_t n_native = 0;
  std::size_t n_translit = 0;
  std::size_t n_unknown = 0;    // excluded: labeled unknown
  std::size_t n_unmatched = 0;  // excluded: label without a scored word
};

// Throws DataError unless both classes are represented among the scored
// words.
Ordering ordering(std::span<const ScoredWord> scores, const LabeledSet& labels);

struct PrecisionAtK {
  double top = 0.0;     // native fraction of the first k
  double bottom = 0.0;  // transliterable fraction of the last k
  double avg = 0.0;
};

// Throws DataError when k is zero or exceeds the ordering size.
PrecisionAtK precision_at_k(const Ordering& ord, std::size_t k);

struct ClusteringQuality {
  double native_q = 0.0;    // native fraction of the top-N block
  double translit_q = 0.0;  // transliterable fraction of the bottom-T block
  double weighted = 0.0;    // cardinality-weighted average
};

ClusteringQuality clustering_quality(const Ordering& ord);

struct EvalReport {
  std::vector<std::pair<std::size_t, PrecisionAtK>> per_k;
  ClusteringQuality clustering;
  std::size_t n_native = 0;
  std::size_t n_translit = 0;
  std::size_t n_unknown = 0;
  std::size_t n_unmatched = 0;
};

EvalReport evaluate(std::span<const ScoredWord> scores, const LabeledSet& labels,
                    std::span<const std::size_t> ks);

std::string render_table(const EvalReport& report);  // aligned plain text
std::string render_tsv(const EvalReport& report);

}  // namespace dtim
