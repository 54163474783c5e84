#include "dtim/tsv_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace dtim {

namespace {

constexpr std::string_view kManifestPrefix = "# manifest ";

std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return fnv1a64_hex(bytes);
}

std::string RunManifest::hash() const {
  nlohmann::json body;
  body["tool_version"] = tool_version;
  body["method"] = method;
  body["config"] = config;
  body["lexicon_digest"] = lexicon_digest;
  body["labels_digest"] = labels_digest;
  body["word_count"] = word_count;
  body["emitted_rows"] = emitted_rows;
  body["iterations_run"] = iterations_run;
  body["converged"] = converged;
  return fnv1a64_hex(body.dump());
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["tool_version"] = tool_version;
  j["method"] = method;
  j["config"] = config;
  j["lexicon_digest"] = lexicon_digest;
  j["labels_digest"] = labels_digest;
  j["word_count"] = word_count;
  j["emitted_rows"] = emitted_rows;
  j["iterations_run"] = iterations_run;
  j["converged"] = converged;
  j["wall_time_seconds"] = wall_time_seconds;
  j["manifest_hash"] = hash();
  return j;
}

std::vector<ScoredWord> ranked_scores(const Lexicon& lex,
                                      std::span<const double> scores,
                                      std::size_t min_chars) {
  if (scores.size() != lex.size()) {
    throw ModelError("score vector does not match the lexicon");
  }
  std::vector<ScoredWord> out;
  out.reserve(lex.size());
  for (std::size_t i = 0; i < lex.size(); ++i) {
    const Word& w = lex.words()[i];
    if (min_chars > 0 && w.length() < min_chars) continue;
    out.push_back({w.raw, scores[i]});
  }
  std::sort(out.begin(), out.end(),
            [](const ScoredWord& a, const ScoredWord& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  return out;
}

void write_scores(std::ostream& out, std::span<const ScoredWord> ranked,
                  std::string_view manifest_hash) {
  if (!manifest_hash.empty()) {
    out << kManifestPrefix << manifest_hash << '\n';
  }
  for (const ScoredWord& row : ranked) {
    out << row.word << '\t' << format_score(row.score) << '\n';
  }
}

ScoresFile read_scores(std::istream& in) {
  ScoresFile file;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with(kManifestPrefix) && file.manifest_hash.empty()) {
        file.manifest_hash = line.substr(kManifestPrefix.size());
      }
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw DataError("scores line " + std::to_string(line_no) +
                      ": expected word<TAB>score");
    }
    std::string word = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    char* end = nullptr;
    const double score = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
      throw DataError("scores line " + std::to_string(line_no) +
                      ": unparseable score '" + value + "'");
    }
    if (!seen.insert(word).second) {
      throw DataError("scores line " + std::to_string(line_no) +
                      ": duplicate word");
    }
    file.rows.push_back({std::move(word), score});
  }
  return file;
}

void write_labels(std::ostream& out,
                  std::span<const std::pair<std::string, Label>> labels) {
  for (const auto& [word, label] : labels) {
    const char* text = label == Label::Native ? "native"
                       : label == Label::Transliterable ? "transliterable"
                                                        : "unknown";
    out << word << '\t' << text << '\n';
  }
}

void write_distributions(std::ostream& out, const NGramVocab& vocab,
                         const Lexicon& lex, const NGramDistribution& native,
                         const NGramDistribution& translit) {
  for (GramIndex g = 0; g < vocab.size(); ++g) {
    out << vocab.render(g, lex) << '\t' << format_score(native.probs[g])
        << '\t' << format_score(translit.probs[g]) << '\n';
  }
}

}  // namespace dtim
