#ifndef NAMELINK_PIPELINE_HPP
#define NAMELINK_PIPELINE_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "namelink/error.hpp"
#include "namelink/lexicons.hpp"
#include "namelink/matcher.hpp"
#include "namelink/protagonists.hpp"
#include "namelink/recognizer.hpp"
#include "namelink/standoff.hpp"
#include "namelink/text_model.hpp"
#include "namelink/unicode.hpp"

namespace namelink {

struct PipelineConfig {
  RecognizerKind recognizer = GazetteerRecognizer{};
  MatchConfig match;
  /// Keep annotations whose outcome is the general "person" tag.
  bool emit_unmatched = false;
  StopwordSet stopwords = default_english_stopwords();
};

namespace detail {

inline std::vector<Annotation> link_mentions(std::span<const Mention> mentions, const ProtagonistList& protagonists,
                                             const PipelineConfig& cfg) {
  std::vector<Annotation> out;
  out.reserve(mentions.size());
  for (const auto& m : mentions) {
    const auto outcome = find_best_match(m.surface, m.prefix, protagonists, cfg.match);
    if (outcome.kind() == MatchOutcome::Kind::unmatched && !cfg.emit_unmatched) continue;
    out.push_back(Annotation{m.doc_id, m.span, m.surface, outcome.tag()});
  }
  return out;
}

inline std::vector<Mention> recognize(const Document& doc, const ProtagonistList& protagonists,
                                      const PipelineConfig& cfg) {
  const Lexicons& lex = cfg.match.lexicons;
  if (std::holds_alternative<HeuristicRecognizer>(cfg.recognizer)) {
    return recognize_heuristic(doc, lex.titles, cfg.stopwords);
  }
  if (std::holds_alternative<GazetteerRecognizer>(cfg.recognizer)) {
    return recognize_gazetteer(doc, protagonists, lex.diminutives, lex.titles);
  }
  const auto& path = std::get<ImportRecognizer>(cfg.recognizer).path;
  auto records = standoff::load(path);
  std::erase_if(records, [&](const Annotation& r) { return r.doc_id != doc.id(); });
  return import_mentions(records, std::span<const Document>(&doc, 1), lex.titles);
}

}  // namespace detail

/// Recognize, then link every mention. Output is sorted by start.
inline std::vector<Annotation> annotate_document(const Document& doc, const ProtagonistList& protagonists,
                                                 const PipelineConfig& cfg) {
  const auto mentions = detail::recognize(doc, protagonists, cfg);
  return detail::link_mentions(mentions, protagonists, cfg);
}

/// Annotates each document independently; result ordered by (doc_id, start).
inline std::vector<Annotation> annotate_corpus(std::span<const Document> docs, const ProtagonistList& protagonists,
                                               const PipelineConfig& cfg) {
  std::set<std::string, std::less<>> ids;
  for (const auto& d : docs) {
    if (!ids.insert(d.id()).second) throw ConfigError("duplicate document id '" + d.id() + "'");
  }

  std::vector<Annotation> out;
  if (const auto* import = std::get_if<ImportRecognizer>(&cfg.recognizer)) {
    const auto mentions = import_mentions(import->path, docs, cfg.match.lexicons.titles);
    out = detail::link_mentions(mentions, protagonists, cfg);
  } else {
    for (const auto& d : docs) {
      auto part = annotate_document(d, protagonists, cfg);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  sort_annotations(out);
  return out;
}

/// Loads every `*.txt` file of a directory (excluding `*.annotated.txt`);
/// the file stem is the document id. Sorted by id.
inline Corpus load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError("corpus directory " + dir.string() + " not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const auto name = entry.path().filename().string();
    if (entry.path().extension() != ".txt" || name.ends_with(".annotated.txt")) continue;
    files.push_back(entry.path());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  Corpus corpus;
  corpus.reserve(files.size());
  for (const auto& f : files) corpus.emplace_back(f.stem().string(), read_file(f));
  return corpus;
}

namespace detail {

inline std::string escape_attribute(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string unescape_attribute(std::string_view s) {
  static const std::pair<std::string_view, char> entities[] = {
      {"&amp;", '&'}, {"&quot;", '"'}, {"&lt;", '<'}, {"&gt;", '>'}};
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    bool replaced = false;
    for (const auto& [entity, c] : entities) {
      if (s.substr(i).starts_with(entity)) {
        out.push_back(c);
        i += entity.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(s[i++]);
  }
  return out;
}

}  // namespace detail

/// Wraps each annotated span as `<person name="TAG">surface</person>`.
/// Text outside annotations is copied unchanged.
inline std::string render_inline(const Document& doc, std::span<const Annotation> annotations) {
  const auto chars = doc.chars();
  std::string out;
  std::size_t cursor = 0;
  for (const auto& a : annotations) {
    if (a.doc_id != doc.id()) throw ValidationError("annotation for '" + a.doc_id + "' rendered into '" + doc.id() + "'");
    if (!doc.contains(a.span)) throw ValidationError("annotation span out of bounds");
    if (a.span.start < cursor) throw ValidationError("annotations overlap or are unsorted");
    out += unicode::encode(chars.substr(cursor, a.span.start - cursor));
    out += "<person name=\"" + detail::escape_attribute(a.tag) + "\">";
    out += unicode::encode(chars.substr(a.span.start, a.span.length()));
    out += "</person>";
    cursor = a.span.end;
  }
  out += unicode::encode(chars.substr(cursor));
  return out;
}

struct InlineDocument {
  Document document;
  std::vector<Annotation> annotations;
};

/// Inverse of render_inline: strips the markup and recovers the standoff set.
inline InlineDocument parse_inline(std::string doc_id, std::string_view rendered) {
  static constexpr std::string_view kOpen = "<person name=\"";
  static constexpr std::string_view kClose = "</person>";
  std::string text;
  struct Pending {
    std::size_t start, end;
    std::string surface, tag;
  };
  std::vector<Pending> found;
  std::size_t chars_so_far = 0;
  std::size_t pos = 0;
  while (pos < rendered.size()) {
    const auto open = rendered.find(kOpen, pos);
    const auto plain = rendered.substr(pos, open == std::string_view::npos ? std::string_view::npos : open - pos);
    text += plain;
    chars_so_far += unicode::decode(plain).size();
    if (open == std::string_view::npos) break;

    const auto tag_begin = open + kOpen.size();
    const auto tag_end = rendered.find("\">", tag_begin);
    if (tag_end == std::string_view::npos) throw ValidationError("unterminated <person> tag");
    const auto body_begin = tag_end + 2;
    const auto close = rendered.find(kClose, body_begin);
    if (close == std::string_view::npos) throw ValidationError("missing </person>");
    const auto body = rendered.substr(body_begin, close - body_begin);
    if (body.find(kOpen) != std::string_view::npos) throw ValidationError("nested <person> tags");

    const std::size_t length = unicode::decode(body).size();
    found.push_back({chars_so_far, chars_so_far + length, std::string(body),
                     detail::unescape_attribute(rendered.substr(tag_begin, tag_end - tag_begin))});
    text += body;
    chars_so_far += length;
    pos = close + kClose.size();
  }

  InlineDocument result{Document(doc_id, std::move(text)), {}};
  for (auto& p : found) {
    if (p.start == p.end) throw ValidationError("empty <person> element");
    result.annotations.push_back(Annotation{doc_id, Span{p.start, p.end}, std::move(p.surface), std::move(p.tag)});
  }
  return result;
}

}  // namespace namelink

#endif  // NAMELINK_PIPELINE_HPP
