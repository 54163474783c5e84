// Command-line front end: score lexicons, evaluate orderings against a
// labeled subset, sweep hyper-parameters, and generate synthetic oracles.
//
// Exit codes: 0 success, 1 usage error, 2 data/model error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtim/baselines.hpp"
#include "dtim/evaluation.hpp"
#include "dtim/optimizer.hpp"
#include "dtim/synth.hpp"
#include "dtim/tsv_io.hpp"
#include "dtim/version.hpp"

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dtim::DataError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dtim::DataError("cannot write " + path);
  out << content;
}

dtim::SegmentMode parse_segment_mode(const std::string& name) {
  if (name == "grapheme") return dtim::SegmentMode::Grapheme;
  if (name == "codepoint") return dtim::SegmentMode::Codepoint;
  throw UsageError("unknown segmentation mode '" + name +
                   "' (grapheme|codepoint)");
}

struct ScoreOptions {
  std::string input;
  std::string output;
  std::string method = "dtim";
  std::string segment = "grapheme";
  std::string config_path;
  std::string dump_dists;
  dtim::DtimConfig dtim;
  double lambda = 0.8;
  bool gen_length_norm = false;
  std::size_t min_chars = 0;
  bool print_config = false;
};

json effective_config(const ScoreOptions& o) {
  json j;
  j["method"] = o.method;
  j["segment"] = o.segment;
  j["stem"] = o.dtim.stem_length;
  j["min-chars"] = o.min_chars;
  if (o.method == "dtim" || o.method == "init") {
    j["tau"] = o.dtim.tau;
  }
  if (o.method == "dtim") {
    j["n"] = o.dtim.n;
    j["max-iters"] = o.dtim.max_iters;
    j["eps"] = o.dtim.convergence_eps;
    j["pad"] = o.dtim.pad_boundaries;
    j["fresh-native"] = o.dtim.translit_against_fresh_native;
    j["neutral"] = o.dtim.neutral_score;
  }
  if (o.method == "gen") {
    j["lambda"] = o.lambda;
    j["length-norm"] = o.gen_length_norm;
  }
  return j;
}

// Config file values take effect as defaults; explicit flags win.
void apply_config_file(ScoreOptions& o, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw dtim::DataError("config file " + path + ": " + e.what());
  }
  if (j.contains("method")) o.method = j["method"].get<std::string>();
  if (j.contains("segment")) o.segment = j["segment"].get<std::string>();
  if (j.contains("stem")) o.dtim.stem_length = j["stem"].get<std::size_t>();
  if (j.contains("n")) o.dtim.n = j["n"].get<int>();
  if (j.contains("tau")) o.dtim.tau = j["tau"].get<int>();
  if (j.contains("max-iters")) o.dtim.max_iters = j["max-iters"].get<int>();
  if (j.contains("eps")) o.dtim.convergence_eps = j["eps"].get<double>();
  if (j.contains("pad")) o.dtim.pad_boundaries = j["pad"].get<bool>();
  if (j.contains("fresh-native")) {
    o.dtim.translit_against_fresh_native = j["fresh-native"].get<bool>();
  }
  if (j.contains("neutral")) o.dtim.neutral_score = j["neutral"].get<double>();
  if (j.contains("lambda")) o.lambda = j["lambda"].get<double>();
  if (j.contains("length-norm")) o.gen_length_norm = j["length-norm"].get<bool>();
  if (j.contains("min-chars")) o.min_chars = j["min-chars"].get<std::size_t>();
}

int cmd_score(const ScoreOptions& o) {
  if (o.print_config) {
    std::cout << effective_config(o).dump(2) << '\n';
    if (o.input.empty()) return 0;
  }
  if (o.input.empty()) throw UsageError("score: missing input word list");
  if (o.output.empty()) throw UsageError("score: missing --output");

  const auto t0 = std::chrono::steady_clock::now();
  const std::string bytes = read_file(o.input);
  std::istringstream stream(bytes);
  const dtim::Lexicon lex = dtim::Lexicon::from_lines(
      stream, {o.dtim.stem_length, parse_segment_mode(o.segment)});

  std::vector<double> scores;
  dtim::RunManifest manifest;
  manifest.tool_version = dtim::kVersion;
  manifest.method = o.method;
  manifest.config = effective_config(o);
  manifest.lexicon_digest = dtim::fnv1a64_hex(bytes);
  manifest.word_count = lex.size();

  if (o.method == "dtim") {
    const dtim::DtimResult result = dtim::run(lex, o.dtim);
    scores = result.scores;
    manifest.iterations_run = result.iterations_run;
    manifest.converged = result.converged;
    if (!o.dump_dists.empty()) {
      const dtim::NGramVocab vocab(lex, o.dtim.n, o.dtim.pad_boundaries);
      std::ostringstream dists;
      dtim::write_distributions(dists, vocab, lex, result.native_dist,
                                result.translit_dist);
      write_file(o.dump_dists, dists.str());
    }
  } else if (o.method == "init") {
    scores = dtim::init_baseline(lex, o.dtim.init_config());
    manifest.converged = true;
  } else if (o.method == "gen") {
    const dtim::CharLanguageModel lm = dtim::train_char_lm(lex, o.lambda);
    scores = dtim::gen_scores(lex, lm, o.gen_length_norm);
    manifest.converged = true;
  } else {
    throw UsageError("unknown method '" + o.method + "' (dtim|init|gen)");
  }

  const auto ranked = dtim::ranked_scores(lex, scores, o.min_chars);
  manifest.emitted_rows = ranked.size();
  manifest.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::ostringstream body;
  dtim::write_scores(body, ranked, manifest.hash());
  if (o.output == "-") {
    std::cout << body.str();
  } else {
    write_file(o.output, body.str());
    write_file(o.output + ".manifest.json", manifest.to_json().dump(2) + "\n");
  }
  std::cerr << "scored " << lex.size() << " words with " << o.method;
  if (o.method == "dtim") {
    std::cerr << " (" << manifest.iterations_run << " iterations, "
              << (manifest.converged ? "converged" : "iteration cap") << ")";
  }
  std::cerr << " in " << manifest.wall_time_seconds << "s\n";
  return 0;
}

struct EvalOptions {
  std::string scores_path;
  std::string labels_path;
  std::string tsv_out;
  std::string manifest_path;
  std::vector<std::size_t> ks = {50, 100, 150, 200};
};

int cmd_eval(const EvalOptions& o) {
  std::istringstream scores_stream(read_file(o.scores_path));
  const dtim::ScoresFile scores = dtim::read_scores(scores_stream);
  std::istringstream labels_stream(read_file(o.labels_path));
  const dtim::LabeledSet labels = dtim::LabeledSet::from_tsv(labels_stream);

  if (!o.manifest_path.empty()) {
    const json manifest = json::parse(read_file(o.manifest_path));
    const std::string expected =
        manifest.value("manifest_hash", std::string());
    if (!scores.manifest_hash.empty() && !expected.empty() &&
        scores.manifest_hash != expected) {
      std::cerr << "warning: score file provenance " << scores.manifest_hash
                << " does not match manifest " << expected << "\n";
    }
  }

  const dtim::EvalReport report = dtim::evaluate(scores.rows, labels, o.ks);
  std::cout << dtim::render_table(report);
  if (!o.tsv_out.empty()) write_file(o.tsv_out, dtim::render_tsv(report));
  return 0;
}

struct SweepOptions {
  std::string lexicon_path;
  std::string labels_path;
  std::string output;
  std::string segment = "grapheme";
  std::vector<int> n_list = {1, 2, 3, 4};
  std::vector<int> tau_list = {10};
  std::vector<std::size_t> stem_list = {2};
  int max_iters = 100;
  double eps = 1e-4;
  bool pad = false;
};

int cmd_sweep(const SweepOptions& o) {
  if (o.n_list.empty() || o.tau_list.empty() || o.stem_list.empty()) {
    throw UsageError("sweep: empty grid");
  }
  for (int n : o.n_list) {
    if (n < 1 || n > 4) throw UsageError("sweep: n must be in 1..4");
  }
  for (int tau : o.tau_list) {
    if (tau < 1) throw UsageError("sweep: tau must be at least 1");
  }
  for (std::size_t stem : o.stem_list) {
    if (stem < 1) throw UsageError("sweep: stem length must be at least 1");
  }
  std::istringstream labels_stream(read_file(o.labels_path));
  const dtim::LabeledSet labels = dtim::LabeledSet::from_tsv(labels_stream);

  std::istringstream lex_stream(read_file(o.lexicon_path));
  dtim::Lexicon base = dtim::Lexicon::from_lines(
      lex_stream, {o.stem_list.front(), parse_segment_mode(o.segment)});

  std::ostringstream out;
  out << "n\ttau\tstem\tnative_q\ttranslit_q\tweighted\titerations\t"
         "converged\n";
  for (std::size_t stem : o.stem_list) {
    const dtim::Lexicon lex =
        stem == base.stem_length() ? base : base.with_stem_length(stem);
    for (int n : o.n_list) {
      for (int tau : o.tau_list) {
        dtim::DtimConfig cfg;
        cfg.n = n;
        cfg.tau = tau;
        cfg.stem_length = stem;
        cfg.max_iters = o.max_iters;
        cfg.convergence_eps = o.eps;
        cfg.pad_boundaries = o.pad;
        const dtim::DtimResult result = dtim::run(lex, cfg);
        const auto ranked = dtim::ranked_scores(lex, result.scores);
        const dtim::Ordering ord = dtim::ordering(ranked, labels);
        const dtim::ClusteringQuality q = dtim::clustering_quality(ord);
        out << n << '\t' << tau << '\t' << stem << '\t' << q.native_q << '\t'
            << q.translit_q << '\t' << q.weighted << '\t'
            << result.iterations_run << '\t' << (result.converged ? 1 : 0)
            << '\n';
        std::cerr << "sweep n=" << n << " tau=" << tau << " stem=" << stem
                  << ": weighted " << q.weighted << "\n";
      }
    }
  }
  if (o.output.empty() || o.output == "-") {
    std::cout << out.str();
  } else {
    write_file(o.output, out.str());
  }
  return 0;
}

struct SynthOptions {
  std::string words_out;
  std::string labels_out;
  dtim::SynthConfig cfg;
};

int cmd_synth(const SynthOptions& o) {
  const dtim::SynthData data = dtim::generate_synthetic(o.cfg);
  std::ostringstream words;
  for (const std::string& w : data.words) words << w << '\n';
  write_file(o.words_out, words.str());
  std::ostringstream labels;
  dtim::write_labels(labels, data.labels);
  write_file(o.labels_out, labels.str());
  std::cerr << "wrote " << data.words.size() << " words\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nativeness scoring of lexicon words"};
  app.set_version_flag("--version", std::string(dtim::kVersion));
  app.require_subcommand(1);

  ScoreOptions so;
  CLI::App* score = app.add_subcommand(
      "score", "rank the words of a lexicon by nativeness");
  score->add_option("input", so.input, "word list, one word per line");
  score->add_option("-o,--output", so.output,
                    "ranked TSV destination ('-' for stdout)");
  score->add_option("--method", so.method, "dtim|init|gen")
      ->check(CLI::IsMember({"dtim", "init", "gen"}));
  score->add_option("--config", so.config_path, "JSON config file");
  auto* opt_n =
      score->add_option("--n", so.dtim.n, "n-gram order")->check(CLI::Range(1, 4));
  auto* opt_tau = score->add_option("--tau", so.dtim.tau,
                                    "diversity saturation threshold");
  score->add_option("--stem", so.dtim.stem_length, "word stem length");
  auto* opt_iters =
      score->add_option("--max-iters", so.dtim.max_iters, "iteration cap");
  auto* opt_eps = score->add_option("--eps", so.dtim.convergence_eps,
                                    "convergence threshold");
  auto* opt_pad = score->add_flag("--pad", so.dtim.pad_boundaries,
                                  "pad words with boundary markers");
  auto* opt_fresh = score->add_flag(
      "--fresh-native,!--prev-native", so.dtim.translit_against_fresh_native,
      "couple the transliterable update to the fresh native estimate");
  auto* opt_dump = score->add_option("--dump-dists", so.dump_dists,
                                     "write both distributions as TSV");
  auto* opt_lambda =
      score->add_option("--lambda", so.lambda, "bigram interpolation weight")
          ->check(CLI::Range(0.0, 1.0));
  auto* opt_norm = score->add_flag("--length-norm", so.gen_length_norm,
                                   "normalize gen scores by pair count");
  score->add_option("--min-chars", so.min_chars,
                    "drop words with fewer characters from the output");
  score->add_option("--segment", so.segment, "grapheme|codepoint")
      ->check(CLI::IsMember({"grapheme", "codepoint"}));
  score->add_flag("--print-config", so.print_config,
                  "dump the effective configuration to stdout");

  EvalOptions eo;
  CLI::App* eval = app.add_subcommand(
      "eval", "score an ordering against a labeled subset");
  eval->add_option("scores", eo.scores_path, "ranked score TSV")->required();
  eval->add_option("labels", eo.labels_path, "word<TAB>label TSV")->required();
  eval->add_option("--k", eo.ks, "precision cutoffs")->delimiter(',');
  eval->add_option("--tsv", eo.tsv_out, "machine-readable report destination");
  eval->add_option("--manifest", eo.manifest_path,
                   "score manifest to check provenance against");

  SweepOptions wo;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "grid of configurations with their clustering quality");
  sweep->add_option("lexicon", wo.lexicon_path)->required();
  sweep->add_option("labels", wo.labels_path)->required();
  sweep->add_option("-o,--output", wo.output, "sweep TSV ('-' for stdout)");
  sweep->add_option("--n-list", wo.n_list, "n-gram orders")->delimiter(',');
  sweep->add_option("--tau-list", wo.tau_list, "tau values")->delimiter(',');
  sweep->add_option("--stem-list", wo.stem_list, "stem lengths")
      ->delimiter(',');
  sweep->add_option("--max-iters", wo.max_iters);
  sweep->add_option("--eps", wo.eps);
  sweep->add_flag("--pad", wo.pad);
  sweep->add_option("--segment", wo.segment)
      ->check(CLI::IsMember({"grapheme", "codepoint"}));

  SynthOptions yo;
  CLI::App* synth = app.add_subcommand(
      "synth", "generate a two-class lexicon with ground-truth labels");
  synth->add_option("-o,--output", yo.words_out, "word list destination")
      ->required();
  synth->add_option("--labels", yo.labels_out, "labels TSV destination")
      ->required();
  synth->add_option("--native-alphabet", yo.cfg.native_alphabet);
  synth->add_option("--translit-alphabet", yo.cfg.translit_alphabet);
  synth->add_option("--native-count", yo.cfg.native_count);
  synth->add_option("--translit-count", yo.cfg.translit_count);
  synth->add_option("--min-len", yo.cfg.min_length);
  synth->add_option("--max-len", yo.cfg.max_length);
  synth->add_option("--overlap", yo.cfg.overlap)->check(CLI::Range(0.0, 1.0));
  synth->add_option("--seed", yo.cfg.seed);

  try {
    // config file values act as defaults under explicit flags
    for (int i = 1; i + 1 < argc; ++i) {
      if (std::string_view(argv[i]) == "--config") {
        apply_config_file(so, argv[i + 1]);
        break;
      }
    }
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const dtim::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(score)) {
      const bool dtim_only = *opt_n || *opt_iters || *opt_eps || *opt_pad ||
                             *opt_fresh || *opt_dump;
      if (so.method != "dtim" && dtim_only) {
        throw UsageError("--n/--max-iters/--eps/--pad/--fresh-native/"
                         "--dump-dists apply only to --method dtim");
      }
      if (so.method != "gen" && (*opt_lambda || *opt_norm)) {
        throw UsageError("--lambda/--length-norm apply only to --method gen");
      }
      if (so.method == "gen" && *opt_tau) {
        throw UsageError("--tau does not apply to --method gen");
      }
      return cmd_score(so);
    }
    if (app.got_subcommand(eval)) return cmd_eval(eo);
    if (app.got_subcommand(sweep)) return cmd_sweep(wo);
    if (app.got_subcommand(synth)) return cmd_synth(yo);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const dtim::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dtim::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
