#ifndef NAMELINK_SIMILARITY_HPP
#define NAMELINK_SIMILARITY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "namelink/text_model.hpp"
#include "namelink/unicode.hpp"

namespace namelink {

/// Integer similarity on a 0..100 scale; 100 means the compared strings are
/// equal after normalization.
class SimilarityScore {
 public:
  constexpr SimilarityScore() = default;
  constexpr explicit SimilarityScore(int value) : value_(value) {
    if (value < 0 || value > 100) throw std::out_of_range("similarity score must lie in [0, 100]");
  }

  constexpr int value() const noexcept { return value_; }

  friend constexpr bool operator==(SimilarityScore, SimilarityScore) = default;
  friend constexpr auto operator<=>(SimilarityScore, SimilarityScore) = default;

 private:
  int value_ = 0;
};

inline constexpr SimilarityScore kExactScore{100};

/// Unit-cost Levenshtein distance over any two random-access sequences.
/// Keeps a single row of min(|a|, |b|) + 1 cells.
template <std::ranges::random_access_range A, std::ranges::random_access_range B>
std::size_t levenshtein_distance(const A& a, const B& b) {
  const auto m = static_cast<std::size_t>(std::ranges::size(a));
  const auto n = static_cast<std::size_t>(std::ranges::size(b));
  if (m < n) return levenshtein_distance(b, a);
  if (n == 0) return m;

  std::vector<std::size_t> row(n + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    const auto& ca = std::ranges::begin(a)[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (ca == std::ranges::begin(b)[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[n];
}

/// Edit distance between two UTF-8 strings, counted in code points. The
/// inputs are compared as given (no normalization).
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein_distance(unicode::decode(a), unicode::decode(b));
}

namespace detail {

// round(100 * (L - d) / L), half-up, with L = |a| + |b|.
inline SimilarityScore ratio_of(std::size_t total_length, std::size_t distance) {
  if (total_length == 0) return kExactScore;
  const std::size_t matched = total_length - distance;
  return SimilarityScore(static_cast<int>((200 * matched + total_length) / (2 * total_length)));
}

inline SimilarityScore regular_ratio(std::u32string_view a, std::u32string_view b) {
  return ratio_of(a.size() + b.size(), levenshtein_distance(a, b));
}

inline SimilarityScore partial_ratio(std::u32string_view a, std::u32string_view b) {
  const std::u32string_view shorter = a.size() <= b.size() ? a : b;
  const std::u32string_view longer = a.size() <= b.size() ? b : a;
  if (shorter.empty()) return kExactScore;

  SimilarityScore best;
  for (std::size_t offset = 0; offset + shorter.size() <= longer.size(); ++offset) {
    best = std::max(best, regular_ratio(shorter, longer.substr(offset, shorter.size())));
    if (best == kExactScore) break;
  }
  return best;
}

}  // namespace detail

/// Normalized Levenshtein similarity of the normalized inputs; symmetric.
inline SimilarityScore regular_string_similarity(std::string_view a, std::string_view b) {
  return detail::regular_ratio(normalize_chars(a), normalize_chars(b));
}

/// Best regular similarity between the shorter normalized input and any
/// equal-length window of the longer one. An exact substring scores 100.
inline SimilarityScore partial_string_similarity(std::string_view a, std::string_view b) {
  return detail::partial_ratio(normalize_chars(a), normalize_chars(b));
}

}  // namespace namelink

#endif  // NAMELINK_SIMILARITY_HPP
