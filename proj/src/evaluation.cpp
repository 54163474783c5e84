#include "dtim/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <istream>
#include <sstream>

namespace dtim {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Label> LabeledSet::parse_label(std::string_view text) {
  const std::string t = lowercase(trim(text));
  if (t == "native") return Label::Native;
  if (t == "transliterable") return Label::Transliterable;
  if (t == "unknown") return Label::Unknown;
  return std::nullopt;
}

LabeledSet LabeledSet::from_tsv(std::istream& in) {
  LabeledSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line.starts_with('#')) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError("labels line " + std::to_string(line_no) +
                      ": expected word<TAB>label");
    }
    const std::string word(trim(std::string_view(line).substr(0, tab)));
    const auto label = parse_label(std::string_view(line).substr(tab + 1));
    if (word.empty() || !label) {
      throw DataError("labels line " + std::to_string(line_no) +
                      ": unrecognized entry");
    }
    if (!set.labels.emplace(word, *label).second) {
      throw DataError("labels line " + std::to_string(line_no) +
                      ": duplicate word");
    }
  }
  return set;
}

Ordering ordering(std::span<const ScoredWord> scores, const LabeledSet& labels) {
  Ordering ord;
  std::size_t matched_unknown = 0;
  std::size_t matched = 0;
  for (const ScoredWord& s : scores) {
    auto it = labels.labels.find(s.word);
    if (it == labels.labels.end()) continue;
    ++matched;
    if (it->second == Label::Unknown) {
      ++matched_unknown;
      continue;
    }
    ord.entries.push_back({s.word, s.score, it->second});
    if (it->second == Label::Native) {
      ++ord.n_native;
    } else {
      ++ord.n_translit;
    }
  }
  ord.n_unknown = matched_unknown;
  ord.n_unmatched = labels.labels.size() - matched;
  if (ord.n_native == 0 || ord.n_translit == 0) {
    throw DataError("need at least one scored native and one scored "
                    "transliterable word");
  }
  std::sort(ord.entries.begin(), ord.entries.end(),
            [](const RankedWord& a, const RankedWord& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  return ord;
}

PrecisionAtK precision_at_k(const Ordering& ord, std::size_t k) {
  if (k == 0 || k > ord.entries.size()) {
    throw DataError("k = " + std::to_string(k) +
                    " outside the labeled ordering of size " +
                    std::to_string(ord.entries.size()));
  }
  std::size_t native_top = 0;
  std::size_t translit_bottom = 0;
  for (std::size_t i = 0; i < k; ++i) {
    native_top += ord.entries[i].label == Label::Native;
    translit_bottom +=
        ord.entries[ord.entries.size() - 1 - i].label == Label::Transliterable;
  }
  PrecisionAtK p;
  p.top = static_cast<double>(native_top) / static_cast<double>(k);
  p.bottom = static_cast<double>(translit_bottom) / static_cast<double>(k);
  p.avg = (p.top + p.bottom) / 2.0;
  return p;
}

ClusteringQuality clustering_quality(const Ordering& ord) {
  const std::size_t n = ord.n_native;
  const std::size_t t = ord.n_translit;
  std::size_t native_top = 0;
  std::size_t translit_bottom = 0;
  for (std::size_t i = 0; i < n; ++i) {
    native_top += ord.entries[i].label == Label::Native;
  }
  for (std::size_t i = 0; i < t; ++i) {
    translit_bottom +=
        ord.entries[ord.entries.size() - 1 - i].label == Label::Transliterable;
  }
  ClusteringQuality q;
  q.native_q = static_cast<double>(native_top) / static_cast<double>(n);
  q.translit_q = static_cast<double>(translit_bottom) / static_cast<double>(t);
  q.weighted = (static_cast<double>(n) * q.native_q +
                static_cast<double>(t) * q.translit_q) /
               static_cast<double>(n + t);
  return q;
}

EvalReport evaluate(std::span<const ScoredWord> scores, const LabeledSet& labels,
                    std::span<const std::size_t> ks) {
  const Ordering ord = ordering(scores, labels);
  EvalReport report;
  report.per_k.reserve(ks.size());
  for (std::size_t k : ks) {
    report.per_k.emplace_back(k, precision_at_k(ord, k));
  }
  report.clustering = clustering_quality(ord);
  report.n_native = ord.n_native;
  report.n_translit = ord.n_translit;
  report.n_unknown = ord.n_unknown;
  report.n_unmatched = ord.n_unmatched;
  return report;
}

std::string render_table(const EvalReport& r) {
  std::ostringstream out;
  out << "labeled words: " << r.n_native << " native, " << r.n_translit
      << " transliterable (" << r.n_unknown << " unknown and "
      << r.n_unmatched << " unmatched excluded)\n\n";
  out << std::fixed << std::setprecision(3);
  out << std::setw(8) << "k" << std::setw(10) << "top-k" << std::setw(10)
      << "bottom-k" << std::setw(10) << "avg-k" << '\n';
  for (const auto& [k, p] : r.per_k) {
    out << std::setw(8) << k << std::setw(10) << p.top << std::setw(10)
        << p.bottom << std::setw(10) << p.avg << '\n';
  }
  out << "\nclustering quality: native " << r.clustering.native_q
      << ", transliterable " << r.clustering.translit_q << ", weighted "
      << r.clustering.weighted << '\n';
  return out.str();
}

std::string render_tsv(const EvalReport& r) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "metric\tk\ttop\tbottom\tavg\n";
  for (const auto& [k, p] : r.per_k) {
    out << "precision\t" << k << '\t' << p.top << '\t' << p.bottom << '\t'
        << p.avg << '\n';
  }
  out << "clustering\t-\t" << r.clustering.native_q << '\t'
      << r.clustering.translit_q << '\t' << r.clustering.weighted << '\n';
  out << "counts\t-\t" << r.n_native << '\t' << r.n_translit << '\t'
      << r.n_unknown + r.n_unmatched << '\n';
  return out.str();
}

}  // namespace dtim
