#ifndef NAMELINK_RECOGNIZER_HPP
#define NAMELINK_RECOGNIZER_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "namelink/error.hpp"
#include "namelink/lexicons.hpp"
#include "namelink/protagonists.hpp"
#include "namelink/standoff.hpp"
#include "namelink/text_model.hpp"
#include "namelink/unicode.hpp"

// The recognition phase: find every span that may name a person. Recall
// matters more than precision here; disambiguation filters the rest.
namespace namelink {

struct HeuristicRecognizer {};
struct GazetteerRecognizer {};
struct ImportRecognizer {
  std::filesystem::path path;
};

using RecognizerKind = std::variant<HeuristicRecognizer, GazetteerRecognizer, ImportRecognizer>;

/// Normalized words that never start or extend a heuristic mention.
using StopwordSet = std::unordered_set<std::string>;

inline StopwordSet load_stopwords(std::istream& in) {
  StopwordSet words;
  detail::for_each_record(in, [&](std::size_t, std::string_view line) {
    words.insert(normalize(line));
  });
  return words;
}

inline StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return load_stopwords(in);
}

inline const StopwordSet& default_english_stopwords() {
  static const StopwordSet words = [] {
    std::istringstream in(detail::kEnglishStopwords);
    return load_stopwords(in);
  }();
  return words;
}

/// Classifies the token immediately before `span`.
inline PrefixKind extract_prefix(std::span<const Token> tokens, const Span& span, const TitleLexicon& titles) {
  const Token* previous = nullptr;
  for (const auto& t : tokens) {
    if (t.span.end > span.start) break;
    previous = &t;
  }
  if (previous == nullptr) return NoPrefix{};
  if (titles.contains(previous->text)) return TitlePrefix{previous->text};
  if (normalize(previous->text) == "the") return TheArticle{};
  return NoPrefix{};
}

inline PrefixKind extract_prefix(const Document& doc, const Span& span, const TitleLexicon& titles) {
  return extract_prefix(tokenize(doc.chars(), titles.abbreviations()), span, titles);
}

namespace detail {

inline Mention make_mention(const Document& doc, std::span<const Token> tokens, std::size_t first,
                            std::size_t last, const TitleLexicon& titles) {
  const Span span{tokens[first].span.start, tokens[last].span.end};
  return Mention{doc.id(), span, doc.substring(span), extract_prefix(tokens, span, titles)};
}

inline bool starts_lowercase(const Token& t) {
  return !t.text.empty() && unicode::is_lower(unicode::decode(t.text).front());
}

}  // namespace detail

/// Maximal runs of capitalized, non-stopword, non-title tokens. A title
/// before a run becomes its prefix rather than part of the span.
inline std::vector<Mention> recognize_heuristic(const Document& doc, const TitleLexicon& titles,
                                                const StopwordSet& stopwords) {
  const auto tokens = tokenize(doc.chars(), titles.abbreviations());
  auto capitalized = [&](const Token& t) {
    const auto chars = unicode::decode(t.text);
    return unicode::is_upper_initial(chars.front()) && !stopwords.contains(normalize(t.text)) &&
           !titles.contains(t.text);
  };

  std::vector<Mention> mentions;
  for (std::size_t i = 0; i < tokens.size();) {
    if (!capitalized(tokens[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && capitalized(tokens[j + 1])) ++j;
    mentions.push_back(detail::make_mention(doc, tokens, i, j, titles));
    i = j + 1;
  }
  return mentions;
}

/// Maximal runs of tokens that are protagonist name words or known
/// diminutives. Runs are trimmed so they start and end on a token that is
/// not lowercase ("de" may sit inside "Catherine de Bourgh" but a bare
/// lowercase "long" never becomes a mention on its own).
inline std::vector<Mention> recognize_gazetteer(const Document& doc, const ProtagonistList& protagonists,
                                                const DiminutiveLexicon& diminutives,
                                                const TitleLexicon& titles = TitleLexicon::defaults()) {
  std::unordered_set<std::string> names;
  for (const auto& p : protagonists) {
    for (const auto& t : p.normalized_name_tokens()) names.insert(t);
  }
  const auto tokens = tokenize(doc.chars(), titles.abbreviations());
  auto qualifies = [&](const Token& t) {
    if (titles.contains(t.text)) return false;
    const std::string key = normalize(t.text);
    return names.contains(key) || diminutives.contains(key);
  };

  std::vector<Mention> mentions;
  for (std::size_t i = 0; i < tokens.size();) {
    if (!qualifies(tokens[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && qualifies(tokens[j + 1])) ++j;
    const std::size_t next = j + 1;
    std::size_t first = i;
    std::size_t last = j;
    while (first <= last && detail::starts_lowercase(tokens[first])) ++first;
    while (last > first && detail::starts_lowercase(tokens[last])) --last;
    if (first <= last && !detail::starts_lowercase(tokens[last])) {
      mentions.push_back(detail::make_mention(doc, tokens, first, last, titles));
    }
    i = next;
  }
  return mentions;
}

/// Exports mentions in the standoff layout with the general "person" tag.
inline std::vector<Annotation> export_mentions(std::span<const Mention> mentions) {
  std::vector<Annotation> out;
  out.reserve(mentions.size());
  for (const auto& m : mentions) out.push_back(Annotation{m.doc_id, m.span, m.surface, "person"});
  return out;
}

/// Turns externally produced NER records into mentions. Each record's
/// surface must match the document text at its span. The result is sorted
/// by (doc_id, start); overlapping records keep the leftmost-longest one.
inline std::vector<Mention> import_mentions(std::span<const Annotation> records, std::span<const Document> docs,
                                            const TitleLexicon& titles = TitleLexicon::defaults()) {
  std::map<std::string, const Document*, std::less<>> by_id;
  for (const auto& d : docs) by_id.emplace(d.id(), &d);

  struct Indexed {
    std::size_t index;
    const Annotation* record;
  };
  std::vector<Indexed> order;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Annotation& r = records[i];
    auto it = by_id.find(r.doc_id);
    if (it == by_id.end()) {
      throw ValidationError("record " + std::to_string(i) + ": unknown doc_id '" + r.doc_id + "'");
    }
    if (!it->second->contains(r.span)) {
      throw ValidationError("record " + std::to_string(i) + ": span out of bounds");
    }
    if (it->second->substring(r.span) != r.surface) {
      throw ValidationError("record " + std::to_string(i) + ": surface does not match document text");
    }
    order.push_back({i, &r});
  }
  std::stable_sort(order.begin(), order.end(), [](const Indexed& a, const Indexed& b) {
    const auto& x = *a.record;
    const auto& y = *b.record;
    if (x.doc_id != y.doc_id) return x.doc_id < y.doc_id;
    if (x.span.start != y.span.start) return x.span.start < y.span.start;
    return x.span.end > y.span.end;
  });

  std::map<std::string, std::vector<Token>, std::less<>> token_cache;
  std::vector<Mention> mentions;
  for (const auto& [index, record] : order) {
    if (!mentions.empty() && mentions.back().doc_id == record->doc_id &&
        mentions.back().span.overlaps(record->span)) {
      continue;
    }
    const Document& doc = *by_id.find(record->doc_id)->second;
    auto cached = token_cache.find(doc.id());
    if (cached == token_cache.end()) {
      cached = token_cache.emplace(doc.id(), tokenize(doc.chars(), titles.abbreviations())).first;
    }
    mentions.push_back(
        Mention{record->doc_id, record->span, record->surface, extract_prefix(cached->second, record->span, titles)});
  }
  return mentions;
}

inline std::vector<Mention> import_mentions(const std::filesystem::path& path, std::span<const Document> docs,
                                            const TitleLexicon& titles = TitleLexicon::defaults()) {
  const auto records = standoff::load(path);
  return import_mentions(records, docs, titles);
}

}  // namespace namelink

#endif  // NAMELINK_RECOGNIZER_HPP
