#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "stgf/cli.hpp"
#include "test_support.hpp"

namespace stgf {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STGF_TEST_DATA) + "/" + name; }

TEST(CliTest, SubtreesCount) {
  const auto r = invoke({"subtrees", "--k", "2", data("path3.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
}

TEST(CliTest, BcCount) {
  const auto r = invoke({"bc", "--k", "2", data("path3.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(CliTest, PairGenfun) {
  const auto r = invoke({"subtrees", "--k", "4", "--contains", "A,H", "--genfun", data("t1.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1*y^3*z^2 + 8*y^4*z^3 + 28*y^5*z^4 + 52*y^6*z^5 + 52*y^7*z^6 + 24*y^8*z^7\n");
}

TEST(CliTest, DoubleSpiderCounts) {
  EXPECT_EQ(invoke({"subtrees", "--k", "4", data("t1.txt")}).out, "446\n");
  EXPECT_EQ(invoke({"subtrees", "--k", "4", "--contains", "A", data("t1.txt")}).out, "406\n");
}

TEST(CliTest, ReadsStandardInput) {
  const auto r = invoke({"subtrees", "--k", "2", "--genfun"}, "a b\nb c\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3*y + 2*y^2*z + 1*y^3*z^2\n");
}

TEST(CliTest, JsonOutput) {
  const auto count = invoke({"bc", "--k", "2", "--json", data("path5.txt")});
  EXPECT_EQ(count.code, 0);
  EXPECT_EQ(nlohmann::json::parse(count.out), nlohmann::json({{"count", "4"}}));
  const auto gen = invoke({"bc", "--k", "2", "--json", "--genfun", data("path5.txt")});
  EXPECT_EQ(bipoly_from_json(nlohmann::json::parse(gen.out)), parse_bipoly("3*y^2*z^2 + 1*y^3*z^4"));
}

TEST(CliTest, ExactDegree) {
  EXPECT_EQ(invoke({"subtrees", "--k", "3", "--exact-degree", "--genfun", data("star3.txt")}).out, "1*y^4*z^3\n");
  EXPECT_EQ(invoke({"bc", "--k", "3", "--exact-degree", "--genfun", data("star3.txt")}).out, "1*y^3*z^3\n");
  EXPECT_EQ(invoke({"oracle", "--k", "3", "--exact-degree", "--genfun", data("star3.txt")}).out, "1*y^4*z^3\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"subtrees", data("path3.txt")}).code, 1);
  EXPECT_EQ(invoke({"subtrees", "--k", "x", data("path3.txt")}).code, 1);
  EXPECT_EQ(invoke({"subtrees", "--k", "2", "--contains", "a,b,c", data("path3.txt")}).code, 1);
  EXPECT_EQ(invoke({"subtrees", "--k", "2", "--contains", "a,", data("path3.txt")}).code, 1);
  EXPECT_EQ(invoke({"subtrees", "--k", "2", data("missing.txt")}).code, 1);
  EXPECT_EQ(invoke({"oracle", "--k", "2", "--family", "cycles", data("path3.txt")}).code, 1);
  EXPECT_EQ(invoke({"ratio", "--n", "5", "--kmax", "9", "--out", "x.csv"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
}

TEST(CliTest, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("subtrees"), std::string::npos);
}

TEST(CliTest, DataErrors) {
  const auto cycle = invoke({"subtrees", "--k", "2"}, "a b\nb c\nc a\n");
  EXPECT_EQ(cycle.code, 2);
  EXPECT_FALSE(cycle.err.empty());
  EXPECT_EQ(invoke({"subtrees", "--k", "2", "--contains", "zz", data("path3.txt")}).code, 2);
  EXPECT_EQ(invoke({"subtrees", "--k", "2", "--contains", "a,a", data("path3.txt")}).code, 2);
  EXPECT_EQ(invoke({"bc", "--k", "1", data("path3.txt")}).code, 2);
  EXPECT_EQ(invoke({"subtrees", "--k", "-1", data("path3.txt")}).code, 2);
  EXPECT_EQ(invoke({"subtrees", "--k", "2"}, "a b c\n").code, 2);

  std::string big;
  for (int i = 1; i < 20; ++i) big += "p" + std::to_string(i) + " p" + std::to_string(i + 1) + "\n";
  EXPECT_EQ(invoke({"oracle", "--k", "2"}, big).code, 2);
}

TEST(CliTest, RandomTree) {
  const auto a = invoke({"random-tree", "--n", "12", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, render_edge_list(random_tree(12, 5)));
  EXPECT_EQ(parse_edge_list(a.out).size(), 12U);
  EXPECT_EQ(invoke({"random-tree", "--n", "12", "--seed", "5"}).out, a.out);
  EXPECT_EQ(invoke({"random-tree", "--n", "0", "--seed", "5"}).code, 1);
}

TEST(CliTest, RatioWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "stgf_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "ratios.csv";
  const auto r = invoke({"ratio", "--n", "3", "--samples", "2", "--kmax", "2", "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "n,k,sample_id,ratio\n3,1,0,0.833333\n3,1,1,0.833333\n3,2,0,1.000000\n3,2,1,1.000000\n");
  EXPECT_TRUE(std::filesystem::exists(dir / "ratios_mean.csv"));
}

// The oracle subcommand and the main subcommands agree on every mode for
// small trees; the generating function evaluates to the printed count.
TEST(CliProperty, OracleGoldenDiff) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Tree t = random_tree(3 + seed % 6, seed);
    const std::string text = render_edge_list(t);
    const std::string a = t.label(0), b = t.label(t.size() - 1);
    for (int k = 1; k < static_cast<int>(t.size()); ++k) {
      for (const std::string& anchors : {std::string(), a, a + "," + b}) {
        std::vector<std::string> tail{"--k", std::to_string(k), "--genfun"};
        if (!anchors.empty()) {
          tail.push_back("--contains");
          tail.push_back(anchors);
        }
        auto with = [&](std::vector<std::string> head) {
          head.insert(head.end(), tail.begin(), tail.end());
          return head;
        };
        const auto main_sub = invoke(with({"subtrees"}), text);
        EXPECT_EQ(main_sub.out, invoke(with({"oracle"}), text).out);
        if (k >= 2) {
          const auto main_bc = invoke(with({"bc"}), text);
          EXPECT_EQ(main_bc.out, invoke(with({"oracle", "--family", "bc"}), text).out);
        }
        auto count_args = with({"subtrees"});
        count_args.erase(std::find(count_args.begin(), count_args.end(), "--genfun"));
        const auto count = invoke(count_args, text);
        const std::string poly = main_sub.out.substr(0, main_sub.out.size() - 1);
        EXPECT_EQ(count.out, eval_counts(parse_bipoly(poly)).str() + "\n");
      }
    }
  }
}

}  // namespace
}  // namespace stgf
