#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "namelink/standoff.hpp"

namespace namelink {
namespace {

TEST(Standoff, DumpSortsAndKeepsFieldOrder) {
  const std::vector<Annotation> in{{"b", {0, 3}, "Jim", "Jim Hawkins"},
                                   {"a", {5, 11}, "Bennet", "Mr. Bennet"},
                                   {"a", {0, 4}, "Jane", "Jane Bennet"}};
  const std::string text = standoff::dump(in);
  EXPECT_EQ(text.find("\"doc_id\""), text.find('{') + 6);
  const auto parsed = standoff::parse(text);
  ASSERT_EQ(parsed.size(), 3u);
  EXPECT_EQ(parsed[0], in[2]);
  EXPECT_EQ(parsed[1], in[1]);
  EXPECT_EQ(parsed[2], in[0]);
}

TEST(Standoff, RoundTripPreservesUnicode) {
  const std::vector<Annotation> in{{"news-1", {10, 16}, "Łukasz", "Łukasz Żółć"}};
  EXPECT_EQ(standoff::parse(standoff::dump(in)), in);
}

TEST(Standoff, EmptyList) {
  EXPECT_EQ(standoff::dump({}), "[]\n");
  EXPECT_TRUE(standoff::parse("[]").empty());
}

TEST(Standoff, ErrorsNameTheRecord) {
  EXPECT_THROW(standoff::parse("{}"), ValidationError);
  EXPECT_THROW(standoff::parse("[ oops"), ValidationError);
  try {
    standoff::parse(R"([{"doc_id":"d","start":0,"end":1,"surface":"a","tag":"person"},
                        {"doc_id":"d","start":-1,"end":1,"surface":"a","tag":"person"}])");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("record 1"), std::string::npos);
  }
  EXPECT_THROW(standoff::parse(R"([{"doc_id":"d","start":3,"end":3,"surface":"","tag":"person"}])"),
               ValidationError);
  EXPECT_THROW(standoff::parse(R"([{"doc_id":"d","start":0,"end":1,"surface":"a"}])"), ValidationError);
  EXPECT_THROW(standoff::parse(R"([{"doc_id":7,"start":0,"end":1,"surface":"a","tag":"x"}])"), ValidationError);
}

}  // namespace
}  // namespace namelink
