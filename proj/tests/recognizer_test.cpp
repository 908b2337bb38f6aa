#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "namelink/recognizer.hpp"

namespace namelink {
namespace {

const TitleLexicon& titles() {
  static const TitleLexicon t = TitleLexicon::defaults();
  return t;
}

std::vector<std::string> surfaces(const std::vector<Mention>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.surface);
  return out;
}

void expect_sorted_disjoint(const std::vector<Mention>& ms, const Document& doc) {
  for (std::size_t i = 0; i < ms.size(); ++i) {
    ASSERT_TRUE(doc.contains(ms[i].span));
    ASSERT_EQ(doc.substring(ms[i].span), ms[i].surface);
    if (i > 0) {
      ASSERT_LE(ms[i - 1].span.end, ms[i].span.start);
    }
  }
}

TEST(Heuristic, TitleBecomesPrefix) {
  const Document doc("d1", "Mr. Bennet spoke.");
  const auto ms = recognize_heuristic(doc, titles(), default_english_stopwords());
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].surface, "Bennet");
  EXPECT_EQ(ms[0].span, (Span{4, 10}));
  EXPECT_EQ(ms[0].prefix, PrefixKind(TitlePrefix{"Mr."}));
}

TEST(Heuristic, LowercaseTextYieldsNothing) {
  EXPECT_TRUE(recognize_heuristic(Document("d", "she walked home"), titles(), default_english_stopwords()).empty());
}

TEST(Heuristic, MaximalRuns) {
  const Document doc("d", "Elizabeth Bennet met Jane. The end.");
  const auto ms = recognize_heuristic(doc, titles(), default_english_stopwords());
  EXPECT_EQ(surfaces(ms), (std::vector<std::string>{"Elizabeth Bennet", "Jane"}));
  EXPECT_EQ(ms[0].prefix, PrefixKind(NoPrefix{}));
}

TEST(Gazetteer, DiminutiveAndTitle) {
  const ProtagonistList cast({"Elizabeth Bennet", "Mr. Bennet"});
  const auto dims = Lexicons::starter().diminutives;

  const auto lizzy = recognize_gazetteer(Document("d", "Lizzy laughed"), cast, dims);
  ASSERT_EQ(lizzy.size(), 1u);
  EXPECT_EQ(lizzy[0].surface, "Lizzy");

  const auto miss = recognize_gazetteer(Document("d", "Miss Bennet"), cast, dims);
  ASSERT_EQ(miss.size(), 1u);
  EXPECT_EQ(miss[0].surface, "Bennet");
  EXPECT_EQ(miss[0].prefix, PrefixKind(TitlePrefix{"Miss"}));
}

TEST(Gazetteer, LowercaseWordsDoNotStartOrEndMentions) {
  const ProtagonistList cast({"Mrs. Long", "Lady Catherine de Bourgh"});
  const auto ms = recognize_gazetteer(Document("d", "It was long ago that Catherine de Bourgh came, de facto."),
                                      cast, DiminutiveLexicon{});
  EXPECT_EQ(surfaces(ms), (std::vector<std::string>{"Catherine de Bourgh"}));
}

TEST(Gazetteer, TheArticlePrefix) {
  const ProtagonistList cast({"Mr. Bennet", "Mrs. Bennet"});
  const Document doc("d", "the Bennet family");
  const auto ms = recognize_gazetteer(doc, cast, DiminutiveLexicon{});
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].prefix, PrefixKind(TheArticle{}));
}

TEST(ExtractPrefix, Examples) {
  EXPECT_EQ(extract_prefix(Document("d", "the Bennet family"), Span{4, 10}, titles()), PrefixKind(TheArticle{}));
  EXPECT_EQ(extract_prefix(Document("d", "Mrs. Bennet"), Span{5, 11}, titles()), PrefixKind(TitlePrefix{"Mrs."}));
  EXPECT_EQ(extract_prefix(Document("d", "Bennet left"), Span{0, 6}, titles()), PrefixKind(NoPrefix{}));
  EXPECT_EQ(extract_prefix(Document("d", "dear Bennet"), Span{5, 11}, titles()), PrefixKind(NoPrefix{}));
}

TEST(Import, Examples) {
  const std::vector<Document> docs{Document("d1", "Mr. Bennet spoke.")};
  const std::vector<Annotation> records{{"d1", {4, 10}, "Bennet", "person"}};
  const auto ms = import_mentions(records, docs);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].prefix, PrefixKind(TitlePrefix{"Mr."}));
  EXPECT_TRUE(import_mentions(std::vector<Annotation>{}, docs).empty());
}

TEST(Import, RejectsBadRecords) {
  const std::vector<Document> docs{Document("d1", "Mr. Bennet spoke.")};
  EXPECT_THROW(import_mentions(std::vector<Annotation>{{"d1", {4, 40}, "Bennet", "person"}}, docs), ValidationError);
  EXPECT_THROW(import_mentions(std::vector<Annotation>{{"zz", {4, 10}, "Bennet", "person"}}, docs), ValidationError);
  try {
    import_mentions(std::vector<Annotation>{{"d1", {0, 2}, "Mr", "person"}, {"d1", {4, 10}, "Bonnet", "person"}},
                    docs);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("record 1"), std::string::npos);
  }
}

TEST(Import, OverlapsKeepLeftmostLongest) {
  const std::vector<Document> docs{Document("d", "Elizabeth Bennet smiled")};
  const std::vector<Annotation> records{
      {"d", {10, 16}, "Bennet", "person"}, {"d", {0, 9}, "Elizabeth", "person"}, {"d", {0, 16}, "Elizabeth Bennet", "person"}};
  EXPECT_EQ(surfaces(import_mentions(records, docs)), (std::vector<std::string>{"Elizabeth Bennet"}));
}

// Random documents built from filler words and capitalized protagonist names.
struct GeneratedDoc {
  Document doc;
  std::vector<Span> planted;
};

GeneratedDoc generate(std::mt19937& rng, const std::vector<std::string>& names, int index) {
  static const std::vector<std::string> filler{"walked", "and", "then", "said", "quietly", "to", "her", "a",
                                               "letter", "came", "from", "town", "—", ",", "."};
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<std::size_t> pick_f(0, filler.size() - 1), pick_n(0, names.size() - 1);
  std::u32string text;
  std::vector<Span> planted;
  for (int w = 0; w < 30; ++w) {
    if (!text.empty()) text += U' ';
    if (coin(rng) == 0) {
      const auto name = unicode::decode(names[pick_n(rng)]);
      planted.push_back({text.size(), text.size() + name.size()});
      text += name;
      text += U' ';
    }
    text += unicode::decode(filler[pick_f(rng)]);
  }
  return {Document("g" + std::to_string(index), unicode::encode(text)), planted};
}

TEST(RecognizerProperty, SortedDisjointAndGazetteerRecall) {
  const ProtagonistList cast({"Elizabeth Bennet", "Jane Bennet", "Mr. Darcy", "Łukasz Żółć"});
  std::vector<std::string> words;
  for (const auto& p : cast) {
    for (const auto& w : p.name_tokens()) words.push_back(w);
  }
  const auto dims = Lexicons::starter().diminutives;
  std::mt19937 rng(31337);
  for (int i = 0; i < 300; ++i) {
    const auto g = generate(rng, words, i);
    const auto gaz = recognize_gazetteer(g.doc, cast, dims);
    const auto heu = recognize_heuristic(g.doc, titles(), default_english_stopwords());
    expect_sorted_disjoint(gaz, g.doc);
    expect_sorted_disjoint(heu, g.doc);
    for (const auto& s : g.planted) {
      bool covered = false;
      for (const auto& m : gaz) covered = covered || (m.span.start <= s.start && s.end <= m.span.end);
      ASSERT_TRUE(covered) << g.doc.text() << " @" << s.start;
    }
  }
}

TEST(RecognizerProperty, ExportImportRoundTrip) {
  const ProtagonistList cast({"Elizabeth Bennet", "Mr. Darcy"});
  std::vector<std::string> words{"Elizabeth", "Bennet", "Darcy", "Mr. Darcy", "Mrs. Bennet", "the Bennet"};
  std::mt19937 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto g = generate(rng, words, i);
    const std::vector<Document> docs{g.doc};
    const auto ms = recognize_gazetteer(g.doc, cast, DiminutiveLexicon{});
    const auto exported = export_mentions(ms);
    ASSERT_EQ(import_mentions(exported, docs), ms);
  }
}

}  // namespace
}  // namespace namelink
