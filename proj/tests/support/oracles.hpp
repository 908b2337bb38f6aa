#ifndef NAMELINK_TESTS_SUPPORT_ORACLES_HPP
#define NAMELINK_TESTS_SUPPORT_ORACLES_HPP

// Independent reference implementations for the tests. Nothing here calls
// into the library's similarity code; strings are plain lowercase ASCII so
// no normalization is needed either.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace oracle {

/// Exponential recursion over all edit scripts: the last characters are
/// either deleted, inserted or substituted (free when equal).
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  const auto del = levenshtein(a.substr(0, a.size() - 1), b) + 1;
  const auto ins = levenshtein(a, b.substr(0, b.size() - 1)) + 1;
  const auto sub = levenshtein(a.substr(0, a.size() - 1), b.substr(0, b.size() - 1)) +
                   (a.back() == b.back() ? 0 : 1);
  return std::min({del, ins, sub});
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

/// round-half-up(100 * (|a| + |b| - lev) / (|a| + |b|)) computed in floating
/// point, as a second route to the integer formula.
inline int ratio(std::string_view a_in, std::string_view b_in) {
  const std::string a = lower(a_in), b = lower(b_in);
  const double total = static_cast<double>(a.size() + b.size());
  if (total == 0) return 100;
  const double exact = 100.0 * (total - static_cast<double>(levenshtein(a, b))) / total;
  return static_cast<int>(exact + 0.5 + 1e-9);
}

inline int partial(std::string_view a_in, std::string_view b_in) {
  const std::string a = lower(a_in), b = lower(b_in);
  const std::string& s = a.size() <= b.size() ? a : b;
  const std::string& l = a.size() <= b.size() ? b : a;
  if (s.empty()) return 100;
  int best = 0;
  for (std::size_t i = 0; i + s.size() <= l.size(); ++i) best = std::max(best, ratio(s, l.substr(i, s.size())));
  return best;
}

}  // namespace oracle

#endif  // NAMELINK_TESTS_SUPPORT_ORACLES_HPP
