#include "chunkalign/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "chunkalign/baseline_gc.h"
#include "chunkalign/error.h"
#include "chunkalign/evaluator.h"
#include "chunkalign/pipeline.h"
#include "chunkalign/ratio.h"
#include "chunkalign/syncorpus.h"

namespace chunkalign::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return kExitUsage;
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kInvalidUtf8:
    case ErrorCode::kEmptyCorpus:
    case ErrorCode::kFormat: return kExitFormat;
  }
  return kExitFormat;
}

void require_file(const std::string& path) {
  if (!fs::is_regular_file(path)) throw Error(ErrorCode::kIo, path + ": no such file");
}

void require_dir(const std::string& path) {
  if (!fs::is_directory(path)) throw Error(ErrorCode::kIo, path + ": no such directory");
}

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, dir.string() + ": " + ec.message());
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

// Sorted stems of the files in `dir` with the given extension.
std::vector<std::string> list_ids(const fs::path& dir, const std::string& extension) {
  require_dir(dir.string());
  std::vector<std::string> ids;
  for (const fs::directory_entry& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == extension) ids.push_back(e.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  if (ids.empty()) throw Error(ErrorCode::kEmptyCorpus, dir.string() + ": no " + extension + " files");
  return ids;
}

// Runs job(i) for i in [0, count) on up to `jobs` threads. The error of the
// lowest failing index is rethrown, whatever the scheduling.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& job) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct ChunkOptions {
  std::string input;
  std::string language = "en";
  std::string rules;
  std::string out;
};

struct AlignOptions {
  std::string source;
  std::string target;
  std::string corpus;
  std::string out;
  std::string out_dir;
  std::string lexicon;
  std::string synonyms;
  std::string translit;
  std::string source_rules;
  std::string target_rules;
  std::string threshold = "0.1";
  std::optional<std::size_t> window;
  bool many_many = false;
  std::string ratio_bound = "1.5";
  bool no_chunk_counts = false;
  bool no_rescoring = false;
  std::size_t max_group = 3;
  bool prechunked = false;
  std::size_t jobs = 1;
};

struct GcOptions {
  std::string source;
  std::string target;
  std::string corpus;
  std::string out;
  std::string out_dir;
  std::string params;
  bool prechunked = false;
  std::size_t jobs = 1;
};

struct EvalCliOptions {
  std::string pred;
  std::string gold;
  std::string pred_dir;
  std::string gold_dir;
  bool partial_credit = false;
  bool count_deletions = false;
  std::string report;
  std::string histogram;
  std::string bucket_width = "10";
  std::string export_path;
};

struct CompareOptions {
  std::string a;
  std::string b;
  std::string out;
};

struct GenOptions {
  GenConfig cfg;
  std::string out_dir;
};

ChunkRuleSet rules_for(const std::string& path, const std::string& language) {
  if (path.empty()) return ChunkRuleSet::shipped(language);
  require_file(path);
  return ChunkRuleSet::load(path);
}

void run_chunk(const ChunkOptions& o, std::ostream& out) {
  if (o.language != "en" && o.language != "hi" && o.rules.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no shipped rules for language '" + o.language + "'; pass --rules");
  }
  const ChunkRuleSet rules = rules_for(o.rules, o.language);
  require_file(o.input);
  emit(o.out, to_bracket_notation(load_chunked_text(o.input, rules, false)), out);
}

void run_align(const AlignOptions& o, std::ostream& out) {
  const bool batch = !o.corpus.empty();
  if (batch == (!o.source.empty() || !o.target.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "give either --source and --target, or --corpus");
  }
  if (batch && o.out_dir.empty()) throw Error(ErrorCode::kInvalidArgument, "--corpus needs --out-dir");
  if (!batch && (o.source.empty() || o.target.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "--source and --target are both required");
  }

  PipelineConfig config;
  config.aligner.threshold = parse_ratio(o.threshold);
  config.aligner.window = o.window;
  config.many_many = o.many_many;
  config.extension.ratio_bound = parse_ratio(o.ratio_bound);
  config.extension.use_chunk_counts = !o.no_chunk_counts;
  config.extension.use_rescoring = !o.no_rescoring;
  config.extension.max_group_size = o.max_group;

  // Every referenced file is checked before any work starts.
  for (const std::string* path : {&o.lexicon, &o.source_rules, &o.target_rules, &o.translit}) {
    if (!path->empty()) require_file(*path);
  }
  if (!batch) {
    require_file(o.source);
    require_file(o.target);
  }

  Resources resources;
  if (!o.source_rules.empty()) resources.source_rules = ChunkRuleSet::load(o.source_rules);
  if (!o.target_rules.empty()) resources.target_rules = ChunkRuleSet::load(o.target_rules);
  resources.lexicon = load_lexicon(o.lexicon);
  if (!o.synonyms.empty()) resources.synonyms = load_synonyms(o.synonyms, true);
  if (!o.translit.empty()) resources.translit = TransliterationTable::load(o.translit);
  const LexicalAligner aligner(resources, config);

  const auto align_pair = [&](const fs::path& src, const fs::path& tgt) {
    const Text s = load_chunked_text(src, resources.source_rules, o.prechunked);
    const Text t = load_chunked_text(tgt, resources.target_rules, o.prechunked);
    return to_tsv(aligner.align(s, t));
  };
  if (!batch) {
    emit(o.out, align_pair(o.source, o.target), out);
    return;
  }
  const fs::path corpus(o.corpus);
  const std::vector<std::string> ids = list_ids(corpus / "src", ".txt");
  make_dir(o.out_dir);
  parallel_for(ids.size(), o.jobs, [&](std::size_t i) {
    write_file_atomic(fs::path(o.out_dir) / (ids[i] + ".tsv"),
                      align_pair(corpus / "src" / (ids[i] + ".txt"), corpus / "tgt" / (ids[i] + ".txt")));
  });
}

void run_gc_align(const GcOptions& o, std::ostream& out) {
  const bool batch = !o.corpus.empty();
  if (batch == (!o.source.empty() || !o.target.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "give either --source and --target, or --corpus");
  }
  if (batch && o.out_dir.empty()) throw Error(ErrorCode::kInvalidArgument, "--corpus needs --out-dir");
  if (!batch && (o.source.empty() || o.target.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "--source and --target are both required");
  }
  LengthModelParams params;
  if (!o.params.empty()) {
    require_file(o.params);
    params = LengthModelParams::load(o.params);
  }
  params.validate();
  const ChunkRuleSet en = ChunkRuleSet::shipped("en");
  const ChunkRuleSet hi = ChunkRuleSet::shipped("hi");
  const auto align_pair = [&](const fs::path& src, const fs::path& tgt) {
    const Text s = o.prechunked ? parse_prechunked(src, "en", &en) : load_text(src, "en");
    const Text t = o.prechunked ? parse_prechunked(tgt, "hi", &hi) : load_text(tgt, "hi");
    return to_tsv(align_gc(s, t, params));
  };
  if (!batch) {
    require_file(o.source);
    require_file(o.target);
    emit(o.out, align_pair(o.source, o.target), out);
    return;
  }
  const fs::path corpus(o.corpus);
  const std::vector<std::string> ids = list_ids(corpus / "src", ".txt");
  make_dir(o.out_dir);
  parallel_for(ids.size(), o.jobs, [&](std::size_t i) {
    write_file_atomic(fs::path(o.out_dir) / (ids[i] + ".tsv"),
                      align_pair(corpus / "src" / (ids[i] + ".txt"), corpus / "tgt" / (ids[i] + ".txt")));
  });
}

void run_eval(const EvalCliOptions& o, std::ostream& out) {
  const bool batch = !o.gold_dir.empty() || !o.pred_dir.empty();
  if (batch == (!o.pred.empty() || !o.gold.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "give either --pred and --gold, or --pred-dir and --gold-dir");
  }
  if (batch && (o.pred_dir.empty() || o.gold_dir.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "--pred-dir and --gold-dir are both required");
  }
  if (!batch && (o.pred.empty() || o.gold.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "--pred and --gold are both required");
  }
  if (batch && !o.export_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--export-path needs a single --pred file");
  }
  const Ratio width = parse_ratio(o.bucket_width);
  EvalOptions options;
  options.partial_credit = o.partial_credit;
  options.count_deletions = o.count_deletions;

  std::vector<TextReport> reports;
  const auto score = [&](const fs::path& pred_path, const fs::path& gold_path, const std::string& id) {
    require_file(pred_path.string());
    require_file(gold_path.string());
    const Alignment gold = load_alignment(gold_path);
    const Alignment pred = load_alignment(pred_path);
    reports.push_back(score_alignment(pred, gold, options, id));
    return pred;
  };
  if (batch) {
    for (const std::string& id : list_ids(o.gold_dir, ".tsv")) {
      score(fs::path(o.pred_dir) / (id + ".tsv"), fs::path(o.gold_dir) / (id + ".tsv"), id);
    }
  } else {
    const Alignment pred = score(o.pred, o.gold, fs::path(o.gold).stem().string());
    if (!o.export_path.empty()) write_file_atomic(o.export_path, export_path_csv(pred));
  }
  if (!o.report.empty()) write_file_atomic(o.report, report_csv(reports));
  if (!o.histogram.empty()) write_file_atomic(o.histogram, histogram_csv(error_histogram(reports, width)));
  out << summary_line(aggregate(reports)) << "\n";
}

void run_compare(const CompareOptions& o, std::ostream& out) {
  require_file(o.a);
  require_file(o.b);
  emit(o.out, compare_csv(compare_aligners(load_report_csv(o.a), load_report_csv(o.b))), out);
}

void run_gen(const GenOptions& o) {
  o.cfg.validate();
  write_corpus(generate(o.cfg), o.out_dir);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lexical sentence alignment of parallel texts by chunk matching", "chunkalign"};
  app.set_config("--config", "", "Key-value defaults file; command-line flags take precedence");
  app.require_subcommand(1);
  app.get_formatter()->column_width(36);

  ChunkOptions chunk_o;
  CLI::App* chunk = app.add_subcommand("chunk", "Write a text in bracketed chunk notation");
  chunk->add_option("--input", chunk_o.input, "Text file, one sentence per line")->required();
  chunk->add_option("--language", chunk_o.language, "Language of the shipped rules (en, hi)")->capture_default_str();
  chunk->add_option("--rules", chunk_o.rules, "Chunk rule file replacing the shipped rules");
  chunk->add_option("--out", chunk_o.out, "Output file (default: stdout)");

  AlignOptions align_o;
  CLI::App* align = app.add_subcommand("align", "Align sentences by lexical chunk matching");
  align->add_option("--source", align_o.source, "Source text");
  align->add_option("--target", align_o.target, "Target text");
  align->add_option("--corpus", align_o.corpus, "Directory with src/<id>.txt and tgt/<id>.txt");
  align->add_option("--out", align_o.out, "Alignment TSV (default: stdout)");
  align->add_option("--out-dir", align_o.out_dir, "Output directory for --corpus");
  align->add_option("--lexicon", align_o.lexicon, "Bilingual lexicon TSV")->required();
  align->add_option("--synonyms", align_o.synonyms, "Source-side synonym TSV");
  align->add_option("--translit", align_o.translit, "Transliteration table (default: shipped Devanagari table)");
  align->add_option("--source-rules", align_o.source_rules, "Source chunk rules (default: shipped English)");
  align->add_option("--target-rules", align_o.target_rules, "Target chunk rules (default: shipped Hindi)");
  align->add_option("--threshold", align_o.threshold, "Minimum score of an accepted pair")->capture_default_str();
  align->add_option("--window", align_o.window, "Only score pairs within W sentences of the diagonal");
  align->add_flag("--many-many", align_o.many_many, "Extend one-one pairs to 1-N and N-1 groups");
  align->add_option("--ratio-bound", align_o.ratio_bound, "Chunk-count ratio that triggers extension")
      ->capture_default_str();
  align->add_flag("--no-chunk-counts", align_o.no_chunk_counts, "Skip the chunk-count extension");
  align->add_flag("--no-rescoring", align_o.no_rescoring, "Skip the rescoring extension");
  align->add_option("--max-group", align_o.max_group, "Largest side of an extended group")->capture_default_str();
  align->add_flag("--prechunked", align_o.prechunked, "Inputs are already in bracketed chunk notation");
  align->add_option("--jobs", align_o.jobs, "Parallel texts for --corpus")->capture_default_str();

  GcOptions gc_o;
  CLI::App* gc = app.add_subcommand("gc-align", "Length-based baseline alignment");
  gc->add_option("--source", gc_o.source, "Source text");
  gc->add_option("--target", gc_o.target, "Target text");
  gc->add_option("--corpus", gc_o.corpus, "Directory with src/<id>.txt and tgt/<id>.txt");
  gc->add_option("--out", gc_o.out, "Alignment TSV (default: stdout)");
  gc->add_option("--out-dir", gc_o.out_dir, "Output directory for --corpus");
  gc->add_option("--params", gc_o.params, "Length model parameters (key = value)");
  gc->add_flag("--prechunked", gc_o.prechunked, "Inputs are in bracketed chunk notation");
  gc->add_option("--jobs", gc_o.jobs, "Parallel texts for --corpus")->capture_default_str();

  EvalCliOptions eval_o;
  CLI::App* eval = app.add_subcommand("eval", "Score predicted alignments against gold");
  eval->add_option("--pred", eval_o.pred, "Predicted alignment TSV");
  eval->add_option("--gold", eval_o.gold, "Gold alignment TSV");
  eval->add_option("--pred-dir", eval_o.pred_dir, "Directory of predicted <id>.tsv");
  eval->add_option("--gold-dir", eval_o.gold_dir, "Directory of gold <id>.tsv");
  eval->add_flag("--partial-credit", eval_o.partial_credit, "Count groups overlapping gold on both sides");
  eval->add_flag("--count-deletions", eval_o.count_deletions, "Score deletion groups too");
  eval->add_option("--report", eval_o.report, "Per-text report CSV");
  eval->add_option("--histogram", eval_o.histogram, "Error-percentage histogram CSV");
  eval->add_option("--bucket-width", eval_o.bucket_width, "Histogram bucket width in percent")->capture_default_str();
  eval->add_option("--export-path", eval_o.export_path, "Alignment path CSV for plotting");

  CompareOptions compare_o;
  CLI::App* compare = app.add_subcommand("compare", "Per-text precision of two aligners");
  compare->add_option("--a", compare_o.a, "Report CSV of the first aligner")->required();
  compare->add_option("--b", compare_o.b, "Report CSV of the second aligner (sort key)")->required();
  compare->add_option("--out", compare_o.out, "Output CSV (default: stdout)");

  GenOptions gen_o;
  GenConfig& g = gen_o.cfg;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic parallel corpus with gold alignments");
  gen->add_option("--seed", g.seed, "Random seed")->capture_default_str();
  gen->add_option("--texts", g.texts, "Number of text pairs")->capture_default_str();
  gen->add_option("--sentences", g.sentences_mean, "Mean source sentences per text")->capture_default_str();
  gen->add_option("--min-chunks", g.min_chunks, "Fewest chunks per sentence")->capture_default_str();
  gen->add_option("--max-chunks", g.max_chunks, "Most chunks per sentence")->capture_default_str();
  gen->add_option("--coverage", g.coverage, "Fraction of word pairs in lexicon.tsv")->capture_default_str();
  gen->add_option("--deletion-rate", g.deletion_rate, "Probability a sentence is untranslated")
      ->capture_default_str();
  gen->add_option("--merge-rate", g.merge_rate, "Probability two sentences share one translation")
      ->capture_default_str();
  gen->add_flag("--reorder,!--no-reorder", g.reorder, "Shuffle chunks within target sentences")
      ->capture_default_str();
  gen->add_option("--leading-deletions", g.leading_deletions, "Untranslated sentences at the start of each text")
      ->capture_default_str();
  gen->add_option("--out-dir", gen_o.out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    // Top-level help lists the flags of every subcommand.
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help("", CLI::AppFormatMode::All) : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (chunk->parsed()) run_chunk(chunk_o, out);
    if (align->parsed()) run_align(align_o, out);
    if (gc->parsed()) run_gc_align(gc_o, out);
    if (eval->parsed()) run_eval(eval_o, out);
    if (compare->parsed()) run_compare(compare_o, out);
    if (gen->parsed()) run_gen(gen_o);
  } catch (const Error& e) {
    err << "chunkalign: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "chunkalign: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace chunkalign::cli
