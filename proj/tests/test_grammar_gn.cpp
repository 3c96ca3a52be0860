#include <mcfl/grammar_gn.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace mcfl;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST(GrammarGn, Census) {
  EXPECT_EQ(rule_census(build_gn(1)), (RuleCensus{1, 1, 2, 1}));
  EXPECT_EQ(rule_census(build_gn(2)), (RuleCensus{1, 5, 24, 1}));
  EXPECT_EQ(rule_census(build_gn(2)).total(), 31u);
  EXPECT_EQ(rule_census(build_gn(3)).binary, 28u);
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(rule_census(build_gn(n)).binary, binomial(3 * static_cast<std::size_t>(n) - 1, static_cast<std::size_t>(n) - 1));
}

TEST(GrammarGn, RejectsZero) { EXPECT_THROW(build_gn(0), precondition_error); }

TEST(GrammarGn, G1Rules) {
  EXPECT_EQ(format_grammar(build_gn(1).grammar), "S(x1) <- I(x1)\n"
                                                 "I(x1y1) <- I(x1), I(y1)\n"
                                                 "I(a1x1A1) <- I(x1)\n"
                                                 "I(A1x1a1) <- I(x1)\n"
                                                 "I()\n");
}

TEST(GrammarGn, G2DumpMatchesGolden) {
  EXPECT_EQ(format_grammar(build_gn(2).grammar), read(MCFL_GOLDEN_DIR "/g2_grammar.txt"));
}

TEST(GrammarGn, Ids) {
  EXPECT_EQ(binary_rule_id({3, 1}), "bin:3,1");
  EXPECT_EQ(wrap_rule_id(2, Letter::neg(1)), "un:2:wrap:A1");
  EXPECT_EQ(pair_rule_id(1, Side::left, 2, Side::right, Letter::pos(2)), "un:1:L:2:R:a2");
  // (k, l, alpha) and (l, k, bar alpha) name one rule
  EXPECT_EQ(pair_rule_id(2, Side::right, 1, Side::left, Letter::neg(2)), "un:1:L:2:R:a2");
  EXPECT_EQ(compositions(4, 2), (std::vector<std::vector<int>>{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}}));
}

TEST(GrammarGnProperty, RulesAreWellFormed) {
  for (int n = 1; n <= 4; ++n) {
    const GnGrammar g = build_gn(n);
    const auto& rules = g.grammar.rules();
    int init = 0;
    int empty = 0;
    for (const Rule& r : rules) {
      EXPECT_FALSE(validate_rule(r)) << r.id;
      init += r.id == "init";
      empty += r.id == "empty";
      if (r.id.starts_with("bin:")) {
        // concatenated patterns are x1 y1 ... xn yn
        std::vector<Variable> seq;
        for (const Pattern& p : r.patterns)
          for (const Symbol& s : p) seq.push_back(std::get<Variable>(s));
        ASSERT_EQ(seq.size(), 2u * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          EXPECT_EQ(seq[2 * static_cast<std::size_t>(i)], (Variable{0, i + 1}));
          EXPECT_EQ(seq[2 * static_cast<std::size_t>(i) + 1], (Variable{1, i + 1}));
        }
      }
      if (r.id.starts_with("un:")) {
        // the bar-symmetric instance exists
        Rule flipped = r;
        for (Pattern& p : flipped.patterns)
          for (Symbol& s : p)
            if (auto* l = std::get_if<Letter>(&s)) *l = bar(*l);
        bool found = false;
        for (const Rule& o : rules)
          if (o.patterns == flipped.patterns) found = true;
        EXPECT_TRUE(found) << r.id;
      }
    }
    EXPECT_EQ(init, 1);
    EXPECT_EQ(empty, 1);
    EXPECT_EQ(format_grammar(build_gn(n).grammar), format_grammar(g.grammar));
  }
}

TEST(GrammarGnProperty, UnaryRulesAreDistinct) {
  const GnGrammar g = build_gn(3);
  std::set<std::vector<Pattern>> bodies;
  for (const Rule& r : g.grammar.rules()) EXPECT_TRUE(bodies.insert(r.patterns).second) << r.id;
  // every id resolves to its rule
  for (const Rule& r : g.grammar.rules()) EXPECT_EQ(g.grammar.find(r.id), &r);
}
