#ifndef NAMELINK_LEXICONS_HPP
#define NAMELINK_LEXICONS_HPP

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "namelink/detail/starter_data.hpp"
#include "namelink/error.hpp"
#include "namelink/text_model.hpp"

namespace namelink {

enum class Gender { female, male, unknown };

inline std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::female: return "female";
    case Gender::male: return "male";
    case Gender::unknown: break;
  }
  return "unknown";
}

inline std::optional<Gender> parse_gender(std::string_view s) {
  const std::string n = normalize(s);
  if (n == "female") return Gender::female;
  if (n == "male") return Gender::male;
  if (n == "unknown") return Gender::unknown;
  return std::nullopt;
}

namespace detail {

inline std::string_view trim_ascii(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

/// Calls fn(line_number, line) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const std::string_view body = trim_ascii(line);
    if (body.empty() || body.front() == '#') continue;
    fn(number, std::string_view(line));
  }
}

}  // namespace detail

/// Diminutive -> canonical given name. Keys and values are normalized.
class DiminutiveLexicon {
 public:
  DiminutiveLexicon() = default;

  /// Adds or replaces one entry; a diminutive equal to its canonical form is ignored.
  void insert(std::string_view diminutive, std::string_view canonical) {
    std::string key = normalize(diminutive);
    std::string value = normalize(canonical);
    if (key.empty() || value.empty() || key == value) return;
    entries_.insert_or_assign(std::move(key), std::move(value));
  }

  const std::string* find(std::string_view normalized) const {
    auto it = entries_.find(std::string(normalized));
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool contains(std::string_view normalized) const { return find(normalized) != nullptr; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::unordered_map<std::string, std::string> entries_;
};

/// Reads `canonical,dim1,dim2,...` records. Later lines win on collisions.
inline DiminutiveLexicon load_diminutives(std::istream& in) {
  DiminutiveLexicon lexicon;
  detail::for_each_record(in, [&](std::size_t line, std::string_view text) {
    std::vector<std::string_view> fields;
    for (auto f : detail::split(text, ',')) {
      if (!detail::trim_ascii(f).empty()) fields.push_back(detail::trim_ascii(f));
    }
    if (fields.size() < 2) throw ParseError(line, "expected canonical,diminutive[,...]");
    for (std::size_t i = 1; i < fields.size(); ++i) lexicon.insert(fields[i], fields[0]);
  });
  return lexicon;
}

inline DiminutiveLexicon load_diminutives(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return load_diminutives(in);
}

/// Canonical name for a diminutive. The whole input is tried first, then
/// each whitespace token in order; the first hit wins.
inline std::optional<std::string> get_name_from_diminutive(const DiminutiveLexicon& lexicon, std::string_view name) {
  const std::string key = normalize(name);
  if (const auto* hit = lexicon.find(key)) return *hit;
  for (auto token : detail::split(key, ' ')) {
    if (const auto* hit = lexicon.find(token)) return *hit;
  }
  return std::nullopt;
}

class GenderLexicon {
 public:
  void insert(std::string_view name, Gender gender) { entries_.insert_or_assign(normalize(name), gender); }

  Gender lookup(std::string_view name) const {
    auto it = entries_.find(normalize(name));
    return it == entries_.end() ? Gender::unknown : it->second;
  }

  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::unordered_map<std::string, Gender> entries_;
};

inline GenderLexicon load_genders(std::istream& in) {
  GenderLexicon lexicon;
  detail::for_each_record(in, [&](std::size_t line, std::string_view text) {
    const auto fields = detail::split(text, '\t');
    if (fields.size() != 2) throw ParseError(line, "expected name<TAB>gender");
    const auto name = detail::trim_ascii(fields[0]);
    const auto gender = parse_gender(detail::trim_ascii(fields[1]));
    if (name.empty()) throw ParseError(line, "empty name");
    if (!gender) throw ParseError(line, "gender must be female, male or unknown");
    lexicon.insert(name, *gender);
  });
  return lexicon;
}

inline GenderLexicon load_genders(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return load_genders(in);
}

/// Personal titles and the gender each one implies. Never maps to unknown.
class TitleLexicon {
 public:
  struct Entry {
    std::string display;
    Gender gender;
  };

  static TitleLexicon defaults();

  void insert(std::string_view title, Gender gender) {
    if (gender == Gender::unknown) throw ConfigError("title '" + std::string(title) + "' must be female or male");
    entries_.insert_or_assign(normalize(title), Entry{collapse_spaces(title), gender});
  }

  bool contains(std::string_view title) const { return entries_.contains(normalize(title)); }

  const Entry* find(std::string_view title) const {
    auto it = entries_.find(normalize(title));
    return it == entries_.end() ? nullptr : &it->second;
  }

  /// Titles ending in a period; the tokenizer keeps those periods attached.
  AbbreviationSet abbreviations() const {
    AbbreviationSet out;
    for (const auto& [key, entry] : entries_) {
      if (key.ends_with('.')) out.insert(key);
    }
    return out;
  }

  const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

/// Reads `title<TAB>female|male` records on top of `base`.
inline TitleLexicon load_titles(std::istream& in, TitleLexicon base) {
  detail::for_each_record(in, [&](std::size_t line, std::string_view text) {
    const auto fields = detail::split(text, '\t');
    if (fields.size() != 2) throw ParseError(line, "expected title<TAB>gender");
    const auto title = detail::trim_ascii(fields[0]);
    const auto gender = parse_gender(detail::trim_ascii(fields[1]));
    if (title.empty()) throw ParseError(line, "empty title");
    if (!gender || *gender == Gender::unknown) throw ParseError(line, "title gender must be female or male");
    base.insert(title, *gender);
  });
  return base;
}

inline TitleLexicon TitleLexicon::defaults() {
  static const TitleLexicon table = [] {
    std::istringstream in(detail::kDefaultTitles);
    return load_titles(in, TitleLexicon{});
  }();
  return table;
}

inline TitleLexicon load_titles(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return load_titles(in, TitleLexicon::defaults());
}

inline Gender get_title_gender(const TitleLexicon& titles, std::string_view title) {
  const auto* entry = titles.find(title);
  if (entry == nullptr) throw LookupError("unknown personal title '" + std::string(title) + "'");
  return entry->gender;
}

/// Gender implied by a full name. A leading title decides on its own
/// ("Mrs. Bennet" is female); otherwise the first name token is looked up.
inline Gender get_name_gender(const GenderLexicon& genders, const TitleLexicon& titles, std::string_view full_name) {
  const std::string n = normalize(full_name);
  if (n.empty()) return Gender::unknown;
  const auto tokens = detail::split(n, ' ');
  if (const auto* title = titles.find(tokens.front())) return title->gender;
  return genders.lookup(tokens.front());
}

/// The three knowledge sources the disambiguator consults.
struct Lexicons {
  DiminutiveLexicon diminutives;
  GenderLexicon genders;
  TitleLexicon titles = TitleLexicon::defaults();

  /// The built-in starter resources.
  static Lexicons starter() {
    static const Lexicons built = [] {
      Lexicons l;
      std::istringstream dims(detail::kStarterDiminutives);
      l.diminutives = load_diminutives(dims);
      std::istringstream genders(detail::kStarterGenders);
      l.genders = load_genders(genders);
      return l;
    }();
    return built;
  }
};

}  // namespace namelink

#endif  // NAMELINK_LEXICONS_HPP
