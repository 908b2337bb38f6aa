#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "namelink/standoff.hpp"
#include "support/temp_dir.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = namelink::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    tags_ = dir_.write("tags.txt", "Mr. Bennet\nMrs. Bennet\nElizabeth Bennet\nMr. Darcy\n").string();
    dir_.write("corpus/ch1.txt", "Mrs. Bennet smiled at Lizzy. Mr. Darcy bowed.");
    dir_.write("corpus/ch2.txt", "The Bennet girls and Mr. Bennet walked.");
    dir_.write("empty/.keep", "");
  }

  testing_support::TempDir dir_;
  std::string tags_;
};

TEST_F(CliTest, MatchPrintsTag) {
  const auto r = run({"match", "--entity", "Lizzy", "--protagonists", tags_});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Elizabeth Bennet\n");
  EXPECT_EQ(run({"match", "--entity", "Bennet", "--prefix", "Mrs.", "--protagonists", tags_}).out, "Mrs. Bennet\n");
  EXPECT_EQ(run({"match", "--entity", "Gandalf", "--protagonists", tags_}).out, "person\n");
}

TEST_F(CliTest, MatchExplain) {
  const auto r = run({"match", "--entity", "Bennet", "--prefix", "the", "--protagonists", tags_, "--explain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "the Bennet");
  EXPECT_NE(r.out.find("branch: family-article"), std::string::npos);
  EXPECT_NE(r.out.find("  100  Mr. Bennet\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, AnnotateEmptyCorpus) {
  const auto r = run({"annotate", "--corpus", (dir_.path() / "empty").string(), "--protagonists", tags_});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[]\n");
}

TEST_F(CliTest, AnnotateWritesStandoffAndInline) {
  const auto out = (dir_.path() / "out" / "pred.json").string();
  std::filesystem::create_directories(dir_.path() / "out");
  const auto r = run({"annotate", "--corpus", (dir_.path() / "corpus").string(), "--protagonists", tags_, "--out",
                      out, "--inline"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto anns = namelink::standoff::load(out);
  ASSERT_FALSE(anns.empty());
  EXPECT_EQ(anns.front().doc_id, "ch1");
  EXPECT_EQ(anns.front().tag, "Mrs. Bennet");
  const auto rendered = namelink::read_file(dir_.path() / "out" / "ch1.annotated.txt");
  EXPECT_TRUE(rendered.starts_with("Mrs. <person name=\"Mrs. Bennet\">Bennet</person> smiled")) << rendered;

  // Byte-identical on a rerun.
  const auto first = namelink::read_file(out);
  ASSERT_EQ(run({"annotate", "--corpus", (dir_.path() / "corpus").string(), "--protagonists", tags_, "--out", out})
                .code,
            0);
  EXPECT_EQ(namelink::read_file(out), first);
}

TEST_F(CliTest, EvaluateSelfComparison) {
  const auto pred = (dir_.path() / "pred.json").string();
  ASSERT_EQ(run({"annotate", "--corpus", (dir_.path() / "corpus").string(), "--protagonists", tags_, "--out", pred})
                .code,
            0);
  const auto report = (dir_.path() / "report.json").string();
  const auto r = run({"evaluate", "--gold", pred, "--pred", pred, "--out", report});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("-- Overall results --"), std::string::npos);
  const auto json = nlohmann::json::parse(namelink::read_file(report));
  EXPECT_EQ(json["precision"], 1.0);
  EXPECT_EQ(json["recall"], 1.0);
  EXPECT_EQ(json["f1"], 1.0);
}

TEST_F(CliTest, Stats) {
  const auto pred = (dir_.path() / "pred.json").string();
  ASSERT_EQ(run({"annotate", "--corpus", (dir_.path() / "corpus").string(), "--protagonists", tags_, "--out", pred})
                .code,
            0);
  const auto common = run({"stats", "--protagonists", tags_});
  EXPECT_EQ(common.code, 0);
  EXPECT_NE(common.out.find("75.0%"), std::string::npos) << common.out;

  const auto forms = run({"stats", "--tag", "Elizabeth Bennet", "--pred", pred});
  EXPECT_NE(forms.out.find("Lizzy"), std::string::npos) << forms.out;

  const auto titles = run({"stats", "--surname", "Bennet", "--pred", pred, "--corpus", (dir_.path() / "corpus").string()});
  EXPECT_EQ(titles.code, 0) << titles.err;
  EXPECT_NE(titles.out.find("Mrs. Bennet"), std::string::npos) << titles.out;
  EXPECT_NE(titles.out.find("Mr. Bennet"), std::string::npos);

  EXPECT_EQ(run({"stats"}).code, 1);
}

TEST_F(CliTest, WritesOnlyWhereFlagsPoint) {
  const auto snapshot = [&] {
    std::set<std::string> files;
    for (const auto& e : std::filesystem::recursive_directory_iterator(dir_.path())) {
      files.insert(std::filesystem::relative(e.path(), dir_.path()).string());
    }
    return files;
  };
  auto before = snapshot();
  const auto out = (dir_.path() / "pred.json").string();
  ASSERT_EQ(run({"annotate", "--corpus", (dir_.path() / "corpus").string(), "--protagonists", tags_, "--out", out})
                .code,
            0);
  before.insert("pred.json");
  EXPECT_EQ(snapshot(), before);
  ASSERT_EQ(run({"evaluate", "--gold", out, "--pred", out}).code, 0);
  ASSERT_EQ(run({"stats", "--protagonists", tags_}).code, 0);
  EXPECT_EQ(snapshot(), before);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"match", "--entity", "x", "--protagonists", tags_, "--bogus"}).code, 1);
  EXPECT_EQ(run({"match", "--entity", "x", "--protagonists", tags_, "--threshold", "101"}).code, 1);
  EXPECT_EQ(run({"match", "--entity", "x", "--protagonists", tags_, "--prefix", "Dr."}).code, 1);
  EXPECT_EQ(run({"match", "--entity", "x", "--protagonists", (dir_.path() / "nope.txt").string()}).code, 2);
  EXPECT_EQ(run({"annotate", "--corpus", (dir_.path() / "nope").string(), "--protagonists", tags_}).code, 2);
  EXPECT_EQ(run({"annotate", "--corpus", (dir_.path() / "corpus").string(), "--protagonists", tags_, "--inline"}).code,
            1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
