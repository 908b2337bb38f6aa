#ifndef NAMELINK_MATCHER_HPP
#define NAMELINK_MATCHER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "namelink/lexicons.hpp"
#include "namelink/protagonists.hpp"
#include "namelink/similarity.hpp"
#include "namelink/text_model.hpp"

// The disambiguation phase: link one recognized mention to a protagonist
// tag, a family tag ("the Bennet"), or the general "person" tag.
namespace namelink {

inline constexpr std::string_view kUnmatchedTag = "person";

struct MatchConfig {
  /// Lower bound on partial similarity for a protagonist to become a candidate.
  SimilarityScore partial_similarity_precision{75};
  /// Title, "the" and diminutive rules. Off means pure string matching.
  bool rules_enabled = true;
  Lexicons lexicons = Lexicons::starter();
};

/// Which step of the decision procedure produced an outcome.
enum class MatchBranch {
  exact,                  // some tag equals the entity after normalization
  top_candidate,          // several candidates, no usable prefix: best score wins
  family_article,         // several candidates, prefix "the"
  title_gender,           // several candidates, first one agreeing with the title's gender
  title_fallback,         // several candidates, none agreeing with the title's gender
  single_candidate,       // exactly one candidate
  diminutive,             // no candidates, diminutive resolved to a protagonist
  diminutive_unresolved,  // no candidates, diminutive known but no protagonist carries it
  no_candidates,          // no candidates and no diminutive hit
};

inline std::string_view to_string(MatchBranch b) {
  switch (b) {
    case MatchBranch::exact: return "exact";
    case MatchBranch::top_candidate: return "top-candidate";
    case MatchBranch::family_article: return "family-article";
    case MatchBranch::title_gender: return "title-gender";
    case MatchBranch::title_fallback: return "title-fallback";
    case MatchBranch::single_candidate: return "single-candidate";
    case MatchBranch::diminutive: return "diminutive";
    case MatchBranch::diminutive_unresolved: return "diminutive-unresolved";
    case MatchBranch::no_candidates: break;
  }
  return "no-candidates";
}

class MatchOutcome {
 public:
  enum class Kind { matched, family, unmatched };

  static MatchOutcome matched(std::string tag, SimilarityScore score, MatchBranch branch) {
    return MatchOutcome(Kind::matched, std::move(tag), score, branch);
  }
  static MatchOutcome family(std::string tag, MatchBranch branch = MatchBranch::family_article) {
    return MatchOutcome(Kind::family, std::move(tag), SimilarityScore{}, branch);
  }
  static MatchOutcome unmatched(MatchBranch branch = MatchBranch::no_candidates) {
    return MatchOutcome(Kind::unmatched, std::string(kUnmatchedTag), SimilarityScore{}, branch);
  }

  Kind kind() const noexcept { return kind_; }
  /// The annotation tag: a protagonist tag, "the <surname>", or "person".
  const std::string& tag() const noexcept { return tag_; }
  /// Similarity behind a Matched outcome; zero otherwise.
  SimilarityScore score() const noexcept { return score_; }
  MatchBranch branch() const noexcept { return branch_; }

  friend bool operator==(const MatchOutcome&, const MatchOutcome&) = default;

 private:
  MatchOutcome(Kind kind, std::string tag, SimilarityScore score, MatchBranch branch)
      : kind_(kind), tag_(std::move(tag)), score_(score), branch_(branch) {}

  Kind kind_;
  std::string tag_;
  SimilarityScore score_;
  MatchBranch branch_;
};

struct Candidate {
  std::size_t index;  // position in the protagonist list
  SimilarityScore score;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

namespace detail {

inline std::vector<Candidate> score_normalized(std::u32string_view entity, const ProtagonistList& protagonists,
                                               SimilarityScore threshold) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < protagonists.size(); ++i) {
    const auto score = detail::partial_ratio(protagonists[i].normalized_tag(), entity);
    if (score >= threshold) out.push_back({i, score});
  }
  // Stable: equal scores keep list order.
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.score > b.score; });
  return out;
}

}  // namespace detail

/// Protagonists whose partial similarity to `entity` reaches `threshold`,
/// best first, ties in list order.
inline std::vector<Candidate> score_candidates(std::string_view entity, const ProtagonistList& protagonists,
                                               SimilarityScore threshold) {
  return detail::score_normalized(normalize_chars(entity), protagonists, threshold);
}

inline MatchOutcome find_best_match(std::string_view entity, const PrefixKind& prefix,
                                    const ProtagonistList& protagonists, const MatchConfig& cfg) {
  const std::u32string key = normalize_chars(entity);
  if (key.empty()) return MatchOutcome::unmatched();

  for (const auto& p : protagonists) {
    if (detail::regular_ratio(p.normalized_tag(), key) == kExactScore) {
      return MatchOutcome::matched(p.tag(), kExactScore, MatchBranch::exact);
    }
  }

  const auto candidates = detail::score_normalized(key, protagonists, cfg.partial_similarity_precision);
  const Lexicons& lex = cfg.lexicons;

  if (candidates.size() > 1) {
    const Candidate& top = candidates.front();
    if (cfg.rules_enabled) {
      if (std::holds_alternative<TheArticle>(prefix)) {
        return MatchOutcome::family("the " + collapse_spaces(entity));
      }
      if (const auto* title = std::get_if<TitlePrefix>(&prefix)) {
        const Gender wanted = get_title_gender(lex.titles, title->title);
        for (const auto& c : candidates) {
          const auto& p = protagonists[c.index];
          if (get_name_gender(lex.genders, lex.titles, p.tag()) == wanted) {
            return MatchOutcome::matched(p.tag(), c.score, MatchBranch::title_gender);
          }
        }
        return MatchOutcome::matched(protagonists[top.index].tag(), top.score, MatchBranch::title_fallback);
      }
    }
    return MatchOutcome::matched(protagonists[top.index].tag(), top.score, MatchBranch::top_candidate);
  }

  if (candidates.empty()) {
    if (!cfg.rules_enabled) return MatchOutcome::unmatched();
    const auto original = get_name_from_diminutive(lex.diminutives, entity);
    if (!original) return MatchOutcome::unmatched();
    for (const auto& p : protagonists) {
      if (p.has_name_token(*original)) {
        return MatchOutcome::matched(p.tag(), detail::partial_ratio(p.normalized_tag(), key), MatchBranch::diminutive);
      }
    }
    return MatchOutcome::unmatched(MatchBranch::diminutive_unresolved);
  }

  const Candidate& only = candidates.front();
  return MatchOutcome::matched(protagonists[only.index].tag(), only.score, MatchBranch::single_candidate);
}

}  // namespace namelink

#endif  // NAMELINK_MATCHER_HPP
