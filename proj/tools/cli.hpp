#ifndef NAMELINK_TOOLS_CLI_HPP
#define NAMELINK_TOOLS_CLI_HPP

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "namelink/namelink.hpp"

// Command-line driver: annotate, evaluate, match, stats.
// Exit codes: 0 success, 1 usage or validation error, 2 I/O error.
namespace namelink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

struct Options {
  std::string corpus;
  std::string protagonists;
  std::string out;
  bool write_inline = false;
  int threshold = 75;
  bool no_rules = false;
  bool emit_unmatched = false;
  std::string ner = "gazetteer";
  std::string import_path;
  std::string diminutives;
  std::string genders;
  std::string titles;
  std::string stopwords;
  std::string gold;
  std::string pred;
  std::string mode = "span-tag";
  std::string entity;
  std::string prefix;
  bool explain = false;
  std::string tag;
  std::string surname;
};

namespace detail {

inline Lexicons load_lexicons(const Options& o) {
  Lexicons lex = Lexicons::starter();
  if (!o.diminutives.empty()) lex.diminutives = load_diminutives(std::filesystem::path(o.diminutives));
  if (!o.genders.empty()) lex.genders = load_genders(std::filesystem::path(o.genders));
  if (!o.titles.empty()) lex.titles = load_titles(std::filesystem::path(o.titles));
  return lex;
}

inline MatchConfig match_config(const Options& o) {
  MatchConfig cfg;
  cfg.partial_similarity_precision = SimilarityScore(o.threshold);
  cfg.rules_enabled = !o.no_rules;
  cfg.lexicons = load_lexicons(o);
  return cfg;
}

inline std::vector<Annotation> load_annotations_flag(const Options& o) {
  if (!o.pred.empty()) return standoff::load(o.pred);
  if (!o.gold.empty()) return standoff::load(o.gold);
  throw ValidationError("an annotation file is required (--pred or --gold)");
}

inline PrefixKind parse_prefix(const std::string& text, const TitleLexicon& titles) {
  if (normalize(text).empty()) return NoPrefix{};
  if (normalize(text) == "the") return TheArticle{};
  if (!titles.contains(text)) throw ValidationError("--prefix '" + text + "' is neither 'the' nor a known title");
  return TitlePrefix{text};
}

inline void emit(const Options& o, const std::string& data, std::ostream& out) {
  if (o.out.empty()) {
    out << data;
  } else {
    write_file(o.out, data);
  }
}

inline std::string percent1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", v);
  return buf;
}

}  // namespace detail

inline int run_annotate(const Options& o, std::ostream& out) {
  PipelineConfig cfg;
  cfg.match = detail::match_config(o);
  cfg.emit_unmatched = o.emit_unmatched;
  if (!o.stopwords.empty()) cfg.stopwords = load_stopwords(std::filesystem::path(o.stopwords));
  if (o.ner == "heuristic") {
    cfg.recognizer = HeuristicRecognizer{};
  } else if (o.ner == "gazetteer") {
    cfg.recognizer = GazetteerRecognizer{};
  } else {
    if (o.import_path.empty()) throw ValidationError("--ner import requires --import FILE");
    cfg.recognizer = ImportRecognizer{o.import_path};
  }
  if (o.write_inline && o.out.empty()) throw ValidationError("--inline requires --out FILE");

  const auto protagonists = load_protagonists(std::filesystem::path(o.protagonists), cfg.match.lexicons.titles);
  const Corpus corpus = load_corpus(o.corpus);
  const auto annotations = annotate_corpus(corpus, protagonists, cfg);
  detail::emit(o, standoff::dump(annotations), out);

  if (o.write_inline) {
    const auto dir = std::filesystem::path(o.out).parent_path();
    for (const auto& doc : corpus) {
      std::vector<Annotation> mine;
      for (const auto& a : annotations) {
        if (a.doc_id == doc.id()) mine.push_back(a);
      }
      write_file(dir / (doc.id() + ".annotated.txt"), render_inline(doc, mine));
    }
  }
  return kExitOk;
}

inline int run_evaluate(const Options& o, std::ostream& out) {
  const auto gold = standoff::load(o.gold);
  const auto pred = standoff::load(o.pred);
  const MatchMode mode = o.mode == "span" ? MatchMode::span_only : MatchMode::span_and_tag;

  if (!o.corpus.empty()) {
    std::set<std::string, std::less<>> ids;
    for (const auto& d : load_corpus(o.corpus)) ids.insert(d.id());
    compare(gold, pred, mode, &ids);
  }
  const auto rows = compare_per_document(gold, pred, mode);
  std::vector<MetricsReport> reports;
  for (const auto& [_, r] : rows) reports.push_back(r);
  const MetricsReport overall = aggregate(reports);

  if (!o.out.empty()) write_file(o.out, to_json(overall).dump(2) + "\n");
  out << format_metrics_table(rows, overall);
  return kExitOk;
}

inline int run_match(const Options& o, std::ostream& out) {
  const MatchConfig cfg = detail::match_config(o);
  const auto protagonists = load_protagonists(std::filesystem::path(o.protagonists), cfg.lexicons.titles);
  const PrefixKind prefix = detail::parse_prefix(o.prefix, cfg.lexicons.titles);
  if (normalize(o.entity).empty()) throw ValidationError("--entity must be non-empty");

  const auto outcome = find_best_match(o.entity, prefix, protagonists, cfg);
  out << outcome.tag() << "\n";
  if (o.explain) {
    out << "branch: " << to_string(outcome.branch()) << "\n";
    out << "prefix: " << (describe(prefix).empty() ? "(none)" : describe(prefix)) << "\n";
    out << "threshold: " << o.threshold << "\n";
    out << "rules: " << (cfg.rules_enabled ? "on" : "off") << "\n";
    out << "candidates:";
    const auto candidates = score_candidates(o.entity, protagonists, cfg.partial_similarity_precision);
    if (candidates.empty()) out << " (none)";
    out << "\n";
    for (const auto& c : candidates) out << "  " << c.score.value() << "  " << protagonists[c.index].tag() << "\n";
  }
  return kExitOk;
}

inline int run_stats(const Options& o, std::ostream& out) {
  const Lexicons lex = detail::load_lexicons(o);
  if (!o.tag.empty()) {
    const auto annotations = detail::load_annotations_flag(o);
    const auto counts = surface_form_counts(annotations, o.tag);
    std::size_t width = std::string_view("Named entity").size();
    for (const auto& [surface, _] : counts) width = std::max(width, unicode::decode(surface).size());
    out << namelink::detail::pad_right("Named entity", width + 2) << "# of appearances\n";
    for (const auto& [surface, n] : counts) out << namelink::detail::pad_right(surface, width + 2) << n << "\n";
    return kExitOk;
  }
  if (!o.surname.empty()) {
    if (o.corpus.empty()) throw ValidationError("--surname requires --corpus DIR");
    const auto annotations = detail::load_annotations_flag(o);
    const Corpus corpus = load_corpus(o.corpus);
    const auto buckets = title_breakdown(annotations, o.surname, lex.titles, corpus);
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (const auto& [bucket, n] : buckets) {
      rows.emplace_back(bucket == kBareBucket ? o.surname + " (no title)" : bucket + " " + o.surname, n);
    }
    std::size_t width = std::string_view("Named entity").size();
    for (const auto& [label, _] : rows) width = std::max(width, unicode::decode(label).size());
    out << namelink::detail::pad_right("Named entity", width + 2) << "# of appearances\n";
    for (const auto& [label, n] : rows) out << namelink::detail::pad_right(label, width + 2) << n << "\n";
    return kExitOk;
  }
  if (!o.protagonists.empty()) {
    const auto protagonists = load_protagonists(std::filesystem::path(o.protagonists), lex.titles);
    const auto stats = shared_common_part_stats(protagonists, lex.titles);
    out << "# tags  # tags that share a common part  % tags that share a common part\n";
    out << namelink::detail::pad_left(std::to_string(stats.tags), 6)
        << namelink::detail::pad_left(std::to_string(stats.shared), 33)
        << namelink::detail::pad_left(detail::percent1(stats.percent()), 33) << "\n";
    return kExitOk;
  }
  throw ValidationError("stats needs one of --tag, --surname or --protagonists");
}

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Person mention recognition and linking to full-name tags", "namelink"};
  app.require_subcommand(1);
  Options o;

  auto add_lexicon_flags = [&](CLI::App* sub) {
    sub->add_option("--diminutives", o.diminutives, "Diminutive CSV (canonical,dim1,...)");
    sub->add_option("--genders", o.genders, "Given-name gender TSV");
    sub->add_option("--titles", o.titles, "Personal-title gender TSV (extends the defaults)");
  };
  auto add_match_flags = [&](CLI::App* sub) {
    sub->add_option("--threshold", o.threshold, "Partial similarity lower bound")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    sub->add_flag("--no-rules", o.no_rules, "Disable title, 'the' and diminutive rules");
    add_lexicon_flags(sub);
  };

  auto* annotate = app.add_subcommand("annotate", "Annotate a directory of .txt documents");
  annotate->add_option("--corpus", o.corpus, "Directory of .txt documents")->required();
  annotate->add_option("--protagonists", o.protagonists, "Protagonist list, one tag per line")->required();
  annotate->add_option("--out", o.out, "Standoff JSON output (default: stdout)");
  annotate->add_flag("--inline", o.write_inline, "Also write <doc>.annotated.txt next to --out");
  annotate->add_flag("--emit-unmatched", o.emit_unmatched, "Keep mentions tagged 'person'");
  annotate->add_option("--ner", o.ner, "Recognizer")
      ->check(CLI::IsMember({"heuristic", "gazetteer", "import"}))
      ->capture_default_str();
  annotate->add_option("--import", o.import_path, "Standoff JSON of external NER spans");
  annotate->add_option("--stopwords", o.stopwords, "Stopword list for the heuristic recognizer");
  add_match_flags(annotate);

  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold annotations");
  evaluate->add_option("--gold", o.gold, "Gold standoff JSON")->required();
  evaluate->add_option("--pred", o.pred, "Predicted standoff JSON")->required();
  evaluate->add_option("--mode", o.mode, "span (NER) or span-tag (full linkage)")
      ->check(CLI::IsMember({"span", "span-tag"}))
      ->capture_default_str();
  evaluate->add_option("--out", o.out, "Write the JSON report here");
  evaluate->add_option("--corpus", o.corpus, "Reject annotations for documents outside this corpus");

  auto* match = app.add_subcommand("match", "Link a single entity string");
  match->add_option("--entity", o.entity, "Recognized mention text")->required();
  match->add_option("--protagonists", o.protagonists, "Protagonist list")->required();
  match->add_option("--prefix", o.prefix, "Preceding token: a title, 'the', or empty");
  match->add_flag("--explain", o.explain, "Print the decision branch and candidates");
  add_match_flags(match);

  auto* stats = app.add_subcommand("stats", "Corpus and tag-list statistics");
  stats->add_option("--tag", o.tag, "Surface forms linked to this tag");
  stats->add_option("--surname", o.surname, "Title breakdown for mentions of this surname");
  stats->add_option("--protagonists", o.protagonists, "Tags sharing a common part");
  stats->add_option("--pred", o.pred, "Annotation file");
  stats->add_option("--gold", o.gold, "Annotation file");
  stats->add_option("--corpus", o.corpus, "Documents the annotations refer to");
  add_lexicon_flags(stats);

  std::vector<std::string> argv_storage{"namelink"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (annotate->parsed()) return run_annotate(o, out);
    if (evaluate->parsed()) return run_evaluate(o, out);
    if (match->parsed()) return run_match(o, out);
    return run_stats(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace namelink::cli

#endif  // NAMELINK_TOOLS_CLI_HPP
