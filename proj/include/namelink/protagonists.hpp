#ifndef NAMELINK_PROTAGONISTS_HPP
#define NAMELINK_PROTAGONISTS_HPP

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "namelink/error.hpp"
#include "namelink/lexicons.hpp"
#include "namelink/text_model.hpp"

namespace namelink {

/// One full-name tag, e.g. "Mrs. Bennet" or "Elizabeth Bennet".
class Protagonist {
 public:
  Protagonist(std::string tag, const TitleLexicon& titles) : tag_(collapse_spaces(tag)) {
    if (tag_.empty()) throw ValidationError("protagonist tag must be non-empty");
    normalized_ = normalize_chars(tag_);
    std::vector<std::string> words;
    for (auto w : detail::split(tag_, ' ')) words.emplace_back(w);
    std::size_t first = 0;
    if (words.size() > 1 && titles.contains(words.front())) {
      title_ = words.front();
      first = 1;
    }
    for (std::size_t i = first; i < words.size(); ++i) {
      name_tokens_.push_back(words[i]);
      normalized_name_tokens_.push_back(normalize(words[i]));
    }
  }

  const std::string& tag() const noexcept { return tag_; }
  const std::optional<std::string>& title() const noexcept { return title_; }
  /// Tag words after any leading title, original casing.
  const std::vector<std::string>& name_tokens() const noexcept { return name_tokens_; }
  const std::vector<std::string>& normalized_name_tokens() const noexcept { return normalized_name_tokens_; }
  std::u32string_view normalized_tag() const noexcept { return normalized_; }

  bool has_name_token(std::string_view normalized_token) const {
    for (const auto& t : normalized_name_tokens_) {
      if (t == normalized_token) return true;
    }
    return false;
  }

 private:
  std::string tag_;
  std::u32string normalized_;
  std::optional<std::string> title_;
  std::vector<std::string> name_tokens_;
  std::vector<std::string> normalized_name_tokens_;
};

/// Ordered protagonist tags. Order is significant: it breaks every tie.
class ProtagonistList {
 public:
  ProtagonistList() = default;

  ProtagonistList(const std::vector<std::string>& tags, const TitleLexicon& titles) {
    std::set<std::u32string> seen;
    for (const auto& tag : tags) {
      Protagonist p(tag, titles);
      if (!seen.insert(std::u32string(p.normalized_tag())).second) {
        throw ValidationError("duplicate protagonist tag '" + p.tag() + "'");
      }
      entries_.push_back(std::move(p));
    }
  }

  explicit ProtagonistList(const std::vector<std::string>& tags)
      : ProtagonistList(tags, TitleLexicon::defaults()) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Protagonist& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool contains_tag(std::string_view tag) const {
    const auto key = normalize_chars(tag);
    for (const auto& p : entries_) {
      if (p.normalized_tag() == key) return true;
    }
    return false;
  }

 private:
  std::vector<Protagonist> entries_;
};

/// One tag per line; `#` comments and blank lines are skipped.
inline ProtagonistList load_protagonists(std::istream& in, const TitleLexicon& titles) {
  std::vector<std::string> tags;
  detail::for_each_record(in, [&](std::size_t, std::string_view line) {
    tags.emplace_back(detail::trim_ascii(line));
  });
  return ProtagonistList(tags, titles);
}

inline ProtagonistList load_protagonists(const std::filesystem::path& path, const TitleLexicon& titles) {
  std::istringstream in(read_file(path));
  return load_protagonists(in, titles);
}

}  // namespace namelink

#endif  // NAMELINK_PROTAGONISTS_HPP
