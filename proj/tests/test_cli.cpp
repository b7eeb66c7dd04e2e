#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cactus/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "cactus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cactus::cli::run(static_cast<int>(argv.size()), argv.data(), in,
                              out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), {}};
}

const std::string samples = CACTUS_SAMPLES_DIR;
const std::string golden = CACTUS_GOLDEN_DIR;

}  // namespace

TEST(Cli, PromoteAlternating) {
  auto r = cli({"promote", "--in", samples + "/alternating_54123.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "0,0,0;1,0,0;1,0,-1;1,1,-1;1,0,-1;1,1,-1;1,0,-1;1,0,0;1,0,-1;1,0,0;"
            "0,0,0\n");
}

TEST(Cli, PromoteOscillatingFromStdin) {
  auto r = cli({"promote"}, "0;1;2;1\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0;1;0;1\n");
}

TEST(Cli, PromotionDiagramMatchesGolden) {
  auto r = cli({"promote", "--diagram", "--in",
                samples + "/alternating_54123.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_file(golden + "/promotion_example.txt"));
}

TEST(Cli, Evacuate) {
  auto r = cli({"evacuate", "--in", samples + "/oscillating_9.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0;1;11;111;211;221;321;311;31;21\n");
}

TEST(Cli, SundaramRoundTrip) {
  auto r = cli({"sundaram", "--in", samples + "/oscillating_9.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "matching {{1,4},{2,9},{3,6}}\ntableau {5,7},{8}\n");
  auto back = cli({"sundaram", "--inverse", "--n", "3"}, r.out);
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(back.out, "0;1;11;21;2;21;11;21;211;21\n");
}

TEST(Cli, PermJsonRoundTrip) {
  auto path = samples + "/alternating_length7.txt";
  auto r = cli({"perm", "--format", "json", "--in", path});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.is_object());
  auto back = cli({"perm", "--inverse"}, r.out);
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(back.out, read_file(path));
}

TEST(Cli, TableauJsonRoundTrip) {
  auto r = cli({"evacuate", "--format", "json", "--in",
                samples + "/oscillating_9.txt"});
  EXPECT_EQ(r.code, 0);
  auto twice = cli({"evacuate"}, r.out);
  EXPECT_EQ(twice.code, 0);
  EXPECT_EQ(twice.out, "0;1;11;21;2;21;11;21;211;21\n");
}

TEST(Cli, PaddedPromotion) {
  auto r = cli({"promote", "--kind", "alternating", "--n", "4", "--in",
                samples + "/alternating_54123.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 16), "0,0,0,0;1,0,0,0;");
}

TEST(Cli, CactusGeneratorBounds) {
  auto bad = cli({"cactus", "--p", "3", "--q", "1", "--in",
                  samples + "/oscillating_9.txt"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("1 <= p <= q"), std::string::npos);
  auto whole = cli({"cactus", "--p", "1", "--q", "9", "--in",
                    samples + "/oscillating_9.txt"});
  auto ev = cli({"evacuate", "--in", samples + "/oscillating_9.txt"});
  EXPECT_EQ(whole.code, 0);
  EXPECT_EQ(whole.out, ev.out);
}

TEST(Cli, MalformedInput) {
  auto r = cli({"promote", "--in", samples + "/malformed.txt"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed"), std::string::npos);
  EXPECT_EQ(cli({"promote", "--in", samples + "/missing.txt"}).code, 2);
  EXPECT_EQ(cli({"promote"}, "").code, 2);
  EXPECT_EQ(cli({"nosuch"}).code, 2);
  EXPECT_EQ(cli({"verify", "--suite", "nosuch"}).code, 2);
}

TEST(Cli, ChordSvgMatchesGolden) {
  auto m = cli({"render", "--kind", "matching", "--format", "svg"},
               "{{1,6},{2,4},{3,8},{5,7}}\n");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, read_file(golden + "/chord_matching.svg"));
  auto p = cli({"render", "--kind", "permutation", "--format", "svg"},
               "54123\n");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, read_file(golden + "/chord_permutation.svg"));
}

TEST(Cli, EnumerateCount) {
  auto r = cli({"enumerate", "--kind", "matching", "--r", "8", "--bound", "1",
                "--count"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14\n");
}

TEST(Cli, EmbedMinimal) {
  auto r = cli({"embed", "--minimal", "--in", samples + "/oscillating_9.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
}

TEST(Cli, VerifyAndCsp) {
  auto v = cli({"verify", "--suite", "matchings", "--r-max", "4", "--n-max",
                "2"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("matchings"), std::string::npos);
  EXPECT_NE(v.out.find("PASS"), std::string::npos);
  auto c = cli({"csp", "--r-max", "3"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("r=3 q-Catalan coefficients: 1 0 1 1 1 0 1\n"),
            std::string::npos);
  auto j = cli({"verify", "--suite", "csp", "--r-max", "3", "--format",
                "json"});
  EXPECT_EQ(j.code, 0);
  auto parsed = nlohmann::json::parse(j.out);
  ASSERT_TRUE(parsed.is_array());
  EXPECT_EQ(parsed.size(), 1u);
}
