#ifndef NAMELINK_TEXT_MODEL_HPP
#define NAMELINK_TEXT_MODEL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "namelink/error.hpp"
#include "namelink/unicode.hpp"

namespace namelink {

/// Half-open range [start, end) of code-point indices into a document.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  constexpr std::size_t length() const noexcept { return end - start; }
  constexpr bool overlaps(const Span& other) const noexcept {
    return start < other.end && other.start < end;
  }

  friend constexpr bool operator==(const Span&, const Span&) = default;
  friend constexpr auto operator<=>(const Span&, const Span&) = default;
};

/// Immutable UTF-8 text with a stable identifier.
class Document {
 public:
  Document(std::string id, std::string text) : id_(std::move(id)), text_(std::move(text)) {
    if (id_.empty()) throw ValidationError("document id must be non-empty");
    if (!unicode::is_valid_utf8(text_)) throw ValidationError("document '" + id_ + "' is not valid UTF-8");
    chars_ = unicode::decode(text_);
  }

  const std::string& id() const noexcept { return id_; }
  const std::string& text() const noexcept { return text_; }
  std::u32string_view chars() const noexcept { return chars_; }
  std::size_t length() const noexcept { return chars_.size(); }

  bool contains(const Span& span) const noexcept {
    return span.start < span.end && span.end <= chars_.size();
  }

  std::string substring(const Span& span) const {
    if (!contains(span)) {
      throw ValidationError("span [" + std::to_string(span.start) + ", " + std::to_string(span.end) +
                            ") out of bounds for document '" + id_ + "'");
    }
    return unicode::encode(std::u32string_view(chars_).substr(span.start, span.length()));
  }

 private:
  std::string id_;
  std::string text_;
  std::u32string chars_;
};

using Corpus = std::vector<Document>;

struct Token {
  std::string text;
  Span span;

  friend bool operator==(const Token&, const Token&) = default;
};

struct NoPrefix {
  friend constexpr bool operator==(NoPrefix, NoPrefix) = default;
};
struct TheArticle {
  friend constexpr bool operator==(TheArticle, TheArticle) = default;
};
/// A personal title as it appears in the text, e.g. "Mrs.".
struct TitlePrefix {
  std::string title;
  friend bool operator==(const TitlePrefix&, const TitlePrefix&) = default;
};

/// The token preceding a mention, as far as disambiguation cares.
using PrefixKind = std::variant<NoPrefix, TheArticle, TitlePrefix>;

inline std::string describe(const PrefixKind& prefix) {
  if (std::holds_alternative<TheArticle>(prefix)) return "the";
  if (const auto* t = std::get_if<TitlePrefix>(&prefix)) return t->title;
  return "";
}

/// Candidate person span produced by a recognizer.
struct Mention {
  std::string doc_id;
  Span span;
  std::string surface;
  PrefixKind prefix;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct Annotation {
  std::string doc_id;
  Span span;
  std::string surface;
  std::string tag;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Sorts by (doc_id, start, end) - the canonical order of every annotation file.
inline void sort_annotations(std::vector<Annotation>& annotations) {
  std::stable_sort(annotations.begin(), annotations.end(), [](const Annotation& a, const Annotation& b) {
    return std::tie(a.doc_id, a.span.start, a.span.end) < std::tie(b.doc_id, b.span.start, b.span.end);
  });
}

namespace detail {

inline std::u32string collapse_whitespace(std::u32string_view chars) {
  std::u32string out;
  out.reserve(chars.size());
  bool pending_space = false;
  for (char32_t c : chars) {
    if (unicode::is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Comparison form of a string: NFC, case-folded, trimmed, inner whitespace
/// runs collapsed to one space. Idempotent.
inline std::string normalize(std::string_view s) {
  return unicode::encode(detail::collapse_whitespace(unicode::decode(unicode::nfc_casefold(s))));
}

/// Same as normalize() but returns code points, which is what the
/// similarity functions consume.
inline std::u32string normalize_chars(std::string_view s) {
  return detail::collapse_whitespace(unicode::decode(unicode::nfc_casefold(s)));
}

/// Trims surrounding whitespace and collapses inner runs, preserving case.
inline std::string collapse_spaces(std::string_view s) {
  return unicode::encode(detail::collapse_whitespace(unicode::decode(s)));
}

/// Normalized abbreviations whose terminal period belongs to the token.
using AbbreviationSet = std::set<std::string, std::less<>>;

inline const AbbreviationSet& default_abbreviations() {
  static const AbbreviationSet set{"mr.", "mrs.", "ms."};
  return set;
}

namespace detail {

inline bool is_leading_punct(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U'(': case U'[': case U'“': case U'‘':
    case U'«': case U'-': case U'–': case U'—':
      return true;
    default:
      return false;
  }
}

inline bool is_trailing_punct(char32_t c) {
  switch (c) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?': case U'"': case U'\'':
    case U')': case U']': case U'”': case U'’': case U'»': case U'-':
    case U'–': case U'—': case U'…':
      return true;
    default:
      return false;
  }
}

inline bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

inline void split_word(std::u32string_view chars, std::size_t begin, std::size_t end,
                       const AbbreviationSet& abbreviations, std::vector<Token>& out) {
  auto emit = [&](std::size_t s, std::size_t e) {
    out.push_back(Token{unicode::encode(chars.substr(s, e - s)), Span{s, e}});
  };

  while (begin < end && is_leading_punct(chars[begin])) {
    emit(begin, begin + 1);
    ++begin;
  }

  std::size_t core_end = end;
  while (core_end > begin && is_trailing_punct(chars[core_end - 1])) {
    if (chars[core_end - 1] == U'.' &&
        abbreviations.contains(normalize(unicode::encode(chars.substr(begin, core_end - begin))))) {
      break;
    }
    --core_end;
  }

  // Possessive 's becomes its own token so "Bennet's" still yields "Bennet".
  std::size_t word_end = core_end;
  if (core_end - begin > 2 && is_apostrophe(chars[core_end - 2]) &&
      (chars[core_end - 1] == U's' || chars[core_end - 1] == U'S')) {
    word_end = core_end - 2;
  }

  if (word_end > begin) emit(begin, word_end);
  if (core_end > word_end) emit(word_end, core_end);
  for (std::size_t i = core_end; i < end; ++i) emit(i, i + 1);
}

}  // namespace detail

/// Splits text into whitespace-delimited tokens with code-point spans.
/// Leading quotes/brackets and trailing sentence punctuation become
/// separate one-character tokens, except the period of a known title
/// abbreviation ("Mr." stays whole). Total on any input.
inline std::vector<Token> tokenize(std::u32string_view chars, const AbbreviationSet& abbreviations) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < chars.size()) {
    if (unicode::is_space(chars[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < chars.size() && !unicode::is_space(chars[j])) ++j;
    detail::split_word(chars, i, j, abbreviations, tokens);
    i = j;
  }
  return tokens;
}

inline std::vector<Token> tokenize(std::string_view text, const AbbreviationSet& abbreviations) {
  return tokenize(std::u32string_view(unicode::decode(text)), abbreviations);
}

inline std::vector<Token> tokenize(std::string_view text) { return tokenize(text, default_abbreviations()); }

}  // namespace namelink

#endif  // NAMELINK_TEXT_MODEL_HPP
