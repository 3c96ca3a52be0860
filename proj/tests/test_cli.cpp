#include "../tools/cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mcfl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, MemberPrintsVerdict) {
  EXPECT_EQ(call({"member", "--n", "2", "a1A2A1a2"}).out, "true\n");
  EXPECT_EQ(call({"member", "--n", "2", "a1A2A1"}).out, "false\n");
  EXPECT_EQ(call({"member", "--n", "1", "a2A2"}).code, 2);
  EXPECT_EQ(call({"member", "--n", "1", ""}).out, "true\n");
}

TEST(Cli, MemberJson) {
  const auto r = call({"--format", "json", "member", "--n", "2", "a1A1"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["member"], true);
  EXPECT_EQ(j["n"], 2);
}

TEST(Cli, DeriveMatchesGolden) {
  const auto r = call({"derive", "--n", "2", "--check", "a1a1A2A1A1a2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, mcfl::acceptance::detail::read_file(std::string(MCFL_GOLDEN_DIR) + "/derive_a1a1A2A1A1a2.txt"));
}

TEST(Cli, DeriveOutputParsesBack) {
  for (const char* backend : {"necklace", "brute", "kyfan"}) {
    const auto r = call({"derive", "--n", "3", "--backend", backend, "--check", "a1a2A3A1a3A2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto tree = mcfl::parse_tree(r.out);
    EXPECT_TRUE(mcfl::verify_tree(mcfl::build_gn(3).grammar, tree));
    EXPECT_EQ(mcfl::format_tree(tree), r.out);
  }
}

TEST(Cli, DeriveTuple) {
  const auto r = call({"derive", "--tuple", "--check", "a1|A1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("un:1:L:2:L:a1 :: I(a1|A1)\n"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"member", "a1x"}).code, 2);
  EXPECT_EQ(call({"derive", "--n", "2", "a1a1"}).code, 1);
  EXPECT_EQ(call({"decompose", "a1A1|a2"}).code, 1);
  EXPECT_EQ(call({"necklace-split", "--n", "1", "--target=1", "a1A1"}).code, 1);
  EXPECT_EQ(call({"necklace-split", "--target=x", "a1A1"}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
  const auto r = call({"member", "a1x"});
  EXPECT_TRUE(r.err.starts_with("error: malformed:"));
  EXPECT_EQ(std::ranges::count(r.err, '\n'), 1);
}

TEST(Cli, BoundExceeded) {
  const auto r = call({"decompose", "--backend", "brute", "--bound-m", "4", "a1A1A2a2|a2A2A1a1"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, DecomposeText) {
  EXPECT_EQ(call({"decompose", "a1A1A2a2|a2A2A1a1"}).out, "k=0,1,4\nu=a1A1A2a2|a2A2A1||a1\n");
  EXPECT_EQ(call({"decompose", "--backend", "kyfan", "a1A1A2a2|a2A2A1a1"}).out,
            "k=0,1,4\nu=a1A1A2a2|a2A2A1a1||\n");
}

TEST(Cli, NecklaceSplit) {
  const auto r = call({"necklace-split", "--n", "1", "--target=0", "a1A1a1a1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("cuts=1\nstart=A\nA=a1\nB=A1a1a1\n"));
}

TEST(Cli, CollectionSplitJsonBalanced) {
  const auto r = call({"--format", "json", "collection-split", "a1A2|A1a2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  std::string a;
  for (const auto& s : j["A"]) a += s.get<std::string>();
  EXPECT_TRUE(mcfl::is_in_On(mcfl::parse_word(a), 2));
}

TEST(Cli, TuckerZero) {
  EXPECT_EQ(call({"tucker-zero", "--variant", "52", "a1a1A1A1"}).out.substr(0, 10), "zero=0+++\n");
  const auto r = call({"tucker-zero", "a1A1A2a2|a2A2A1a1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("u=a1A1A2a2|a2A2A1a1||"), std::string::npos);
}

TEST(Cli, GrammarCensusAndEnumerate) {
  EXPECT_EQ(call({"grammar", "--n", "2", "--census"}).out, "init 1\nbinary 5\nunary 24\nempty 1\ntotal 31\n");
  EXPECT_EQ(call({"grammar", "--n", "2"}).out,
            mcfl::acceptance::detail::read_file(std::string(MCFL_GOLDEN_DIR) + "/g2_grammar.txt"));
  EXPECT_EQ(call({"enumerate", "--n", "1", "--max-len", "2"}).out, "\na1A1\nA1a1\n");
}

TEST(Cli, EnvBound) {
  setenv("MCFL_ON_BOUND_M", "4", 1);
  const auto r = call({"decompose", "--backend", "brute", "a1A1A2a2|a2A2A1a1"});
  unsetenv("MCFL_ON_BOUND_M");
  EXPECT_EQ(r.code, 1);
}
