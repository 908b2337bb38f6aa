#ifndef NAMELINK_EVALUATION_HPP
#define NAMELINK_EVALUATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "namelink/error.hpp"
#include "namelink/lexicons.hpp"
#include "namelink/protagonists.hpp"
#include "namelink/recognizer.hpp"
#include "namelink/text_model.hpp"

namespace namelink {

/// Exact non-negative rational, always stored reduced.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

enum class MatchMode {
  span_only,     // NER scoring: any tag counts
  span_and_tag,  // full linkage scoring: tags must agree
};

struct TagCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  friend bool operator==(const TagCounts&, const TagCounts&) = default;
};

/// Confusion counts with the derived precision / recall / F-measure.
/// Empty denominators count as perfect: no predictions means precision 1,
/// no gold mentions means recall 1.
struct MetricsReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::map<std::string, TagCounts> per_tag;

  Fraction precision() const { return tp + fp == 0 ? Fraction(1, 1) : Fraction(tp, tp + fp); }
  Fraction recall() const { return tp + fn == 0 ? Fraction(1, 1) : Fraction(tp, tp + fn); }
  Fraction f1() const {
    const Fraction p = precision();
    const Fraction r = recall();
    const std::uint64_t denom = p.num() * r.den() + r.num() * p.den();
    if (denom == 0) return Fraction{};
    return Fraction(2 * p.num() * r.num(), denom);
  }
  std::size_t support() const noexcept { return tp + fn; }

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Exact-span scoring. Each gold annotation is consumed at most once; in
/// span_and_tag mode the tags must also agree after normalization. When
/// `known_docs` is given, annotations for other documents are rejected.
inline MetricsReport compare(std::span<const Annotation> gold, std::span<const Annotation> pred, MatchMode mode,
                             const std::set<std::string, std::less<>>* known_docs = nullptr) {
  if (known_docs != nullptr) {
    auto check = [&](std::span<const Annotation> set, std::string_view which) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (!known_docs->contains(set[i].doc_id)) {
          throw ValidationError(std::string(which) + " record " + std::to_string(i) + ": unknown doc_id '" +
                                set[i].doc_id + "'");
        }
      }
    };
    check(gold, "gold");
    check(pred, "prediction");
  }

  using Key = std::tuple<std::string_view, std::size_t, std::size_t>;
  std::map<Key, std::vector<std::size_t>> open;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    open[Key{gold[i].doc_id, gold[i].span.start, gold[i].span.end}].push_back(i);
  }
  std::vector<bool> consumed(gold.size(), false);

  MetricsReport report;
  for (const auto& p : pred) {
    auto it = open.find(Key{p.doc_id, p.span.start, p.span.end});
    bool hit = false;
    if (it != open.end()) {
      const std::string pred_tag = mode == MatchMode::span_and_tag ? normalize(p.tag) : std::string();
      auto& slots = it->second;
      for (auto s = slots.begin(); s != slots.end(); ++s) {
        if (mode == MatchMode::span_and_tag && normalize(gold[*s].tag) != pred_tag) continue;
        consumed[*s] = true;
        ++report.tp;
        ++report.per_tag[gold[*s].tag].tp;
        slots.erase(s);
        hit = true;
        break;
      }
    }
    if (!hit) {
      ++report.fp;
      ++report.per_tag[p.tag].fp;
    }
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (consumed[i]) continue;
    ++report.fn;
    ++report.per_tag[gold[i].tag].fn;
  }
  return report;
}

/// Micro-average: counts are summed, ratios recomputed from the sums.
inline MetricsReport aggregate(std::span<const MetricsReport> reports) {
  MetricsReport total;
  for (const auto& r : reports) {
    total.tp += r.tp;
    total.fp += r.fp;
    total.fn += r.fn;
    for (const auto& [tag, c] : r.per_tag) {
      auto& t = total.per_tag[tag];
      t.tp += c.tp;
      t.fp += c.fp;
      t.fn += c.fn;
    }
  }
  return total;
}

/// Scores each document separately. Documents come from the union of both
/// sets, in id order.
inline std::vector<std::pair<std::string, MetricsReport>> compare_per_document(std::span<const Annotation> gold,
                                                                               std::span<const Annotation> pred,
                                                                               MatchMode mode) {
  std::map<std::string, std::pair<std::vector<Annotation>, std::vector<Annotation>>> split;
  for (const auto& a : gold) split[a.doc_id].first.push_back(a);
  for (const auto& a : pred) split[a.doc_id].second.push_back(a);
  std::vector<std::pair<std::string, MetricsReport>> out;
  for (const auto& [id, sets] : split) out.emplace_back(id, compare(sets.first, sets.second, mode));
  return out;
}

inline nlohmann::ordered_json to_json(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["tp"] = r.tp;
  j["fp"] = r.fp;
  j["fn"] = r.fn;
  j["precision"] = r.precision().value();
  j["recall"] = r.recall().value();
  j["f1"] = r.f1().value();
  j["support"] = r.support();
  nlohmann::ordered_json tags = nlohmann::ordered_json::object();
  for (const auto& [tag, c] : r.per_tag) tags[tag] = {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}};
  j["per_tag"] = std::move(tags);
  return j;
}

namespace detail {

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string pad_right(std::string s, std::size_t width) {
  const std::size_t len = unicode::decode(s).size();
  if (len < width) s.append(width - len, ' ');
  return s;
}

inline std::string pad_left(std::string s, std::size_t width) {
  const std::size_t len = unicode::decode(s).size();
  if (len < width) s.insert(0, width - len, ' ');
  return s;
}

}  // namespace detail

/// Aligned text table: one row per labelled report, then the overall row.
inline std::string format_metrics_table(const std::vector<std::pair<std::string, MetricsReport>>& rows,
                                        const MetricsReport& overall) {
  std::size_t label_width = std::string_view("-- Overall results --").size();
  for (const auto& [label, _] : rows) label_width = std::max(label_width, unicode::decode(label).size());
  label_width += 2;

  auto line = [&](const std::string& label, const MetricsReport& r) {
    return detail::pad_right(label, label_width) + detail::pad_left(detail::fixed2(r.precision().value()), 10) +
           detail::pad_left(detail::fixed2(r.recall().value()), 10) +
           detail::pad_left(detail::fixed2(r.f1().value()), 11) +
           detail::pad_left(std::to_string(r.support()), 10) + "\n";
  };

  std::string out = detail::pad_right("Testing set", label_width) + detail::pad_left("Precision", 10) +
                    detail::pad_left("Recall", 10) + detail::pad_left("F-measure", 11) +
                    detail::pad_left("Support", 10) + "\n";
  for (const auto& [label, r] : rows) out += line(label, r);
  out += line("-- Overall results --", overall);
  return out;
}

/// Distinct surfaces (whitespace-collapsed, case kept) under one tag,
/// most frequent first; ties alphabetical.
inline std::vector<std::pair<std::string, std::size_t>> surface_form_counts(std::span<const Annotation> annotations,
                                                                            std::string_view tag) {
  const std::string key = normalize(tag);
  std::map<std::string, std::size_t> counts;
  for (const auto& a : annotations) {
    if (normalize(a.tag) == key) ++counts[collapse_spaces(a.surface)];
  }
  std::vector<std::pair<std::string, std::size_t>> out(counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

inline constexpr std::string_view kBareBucket = "bare";

/// Counts annotations ending in `surname` by the title that precedes them
/// in the text; untitled ones land in the "bare" bucket.
inline std::map<std::string, std::size_t> title_breakdown(std::span<const Annotation> annotations,
                                                          std::string_view surname, const TitleLexicon& titles,
                                                          std::span<const Document> docs) {
  const std::string key = normalize(surname);
  std::map<std::string, const Document*, std::less<>> by_id;
  for (const auto& d : docs) by_id.emplace(d.id(), &d);
  std::map<std::string, std::vector<Token>, std::less<>> tokens;

  std::map<std::string, std::size_t> buckets;
  for (const auto& a : annotations) {
    const std::string surface = normalize(a.surface);
    const auto words = detail::split(surface, ' ');
    if (words.empty() || words.back() != key) continue;
    auto doc = by_id.find(a.doc_id);
    if (doc == by_id.end()) throw ValidationError("annotation references unknown doc_id '" + a.doc_id + "'");
    auto cached = tokens.find(a.doc_id);
    if (cached == tokens.end()) {
      cached = tokens.emplace(a.doc_id, tokenize(doc->second->chars(), titles.abbreviations())).first;
    }
    const PrefixKind prefix = extract_prefix(cached->second, a.span, titles);
    if (const auto* t = std::get_if<TitlePrefix>(&prefix)) {
      ++buckets[titles.find(t->title)->display];
    } else {
      ++buckets[std::string(kBareBucket)];
    }
  }
  return buckets;
}

struct CommonPartStats {
  std::size_t tags = 0;
  std::size_t shared = 0;

  Fraction fraction() const { return tags == 0 ? Fraction{} : Fraction(shared, tags); }
  double percent() const { return 100.0 * fraction().value(); }
};

/// How many tags share a name word (given name or surname) with some other
/// tag. Personal titles never count as a common part.
inline CommonPartStats shared_common_part_stats(const ProtagonistList& protagonists, const TitleLexicon& titles) {
  std::vector<std::set<std::string>> words(protagonists.size());
  std::map<std::string, std::size_t> owners;
  for (std::size_t i = 0; i < protagonists.size(); ++i) {
    const std::string tag = normalize(protagonists[i].tag());
    for (auto w : detail::split(tag, ' ')) {
      if (!titles.contains(w)) words[i].insert(std::string(w));
    }
    for (const auto& w : words[i]) ++owners[w];
  }
  CommonPartStats stats{protagonists.size(), 0};
  for (const auto& set : words) {
    if (std::any_of(set.begin(), set.end(), [&](const std::string& w) { return owners[w] > 1; })) ++stats.shared;
  }
  return stats;
}

}  // namespace namelink

#endif  // NAMELINK_EVALUATION_HPP
