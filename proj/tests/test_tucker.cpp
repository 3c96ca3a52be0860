#include <mcfl/tucker.hpp>

#include "support/oracle.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace mcfl;

namespace {

SignVector sv(std::string_view s) { return parse_sign_vector(s); }

std::vector<std::size_t> random_lengths(gen::Rng& rng, std::size_t m) {
  std::vector<std::size_t> lengths{1};
  for (std::size_t p = 1; p < m; ++p) {
    if (gen::uniform(rng, 0, 2) == 0)
      lengths.push_back(1);
    else
      ++lengths.back();
  }
  return lengths;
}

} // namespace

TEST(SignVectors, Order) {
  EXPECT_TRUE(precedes(sv("0+0"), sv("-+-")));
  EXPECT_FALSE(precedes(sv("0+0"), sv("-- -")));
  EXPECT_EQ(-sv("+0-"), sv("-0+"));
  EXPECT_EQ(format_sign_vector(sv("+, 0, -")), "+0-");
  EXPECT_THROW(sv("+x"), malformed_input);
}

TEST(SignVectors, ScanOrder) {
  std::vector<std::string> seen;
  scan_sign_vectors(2, [&](const SignVector& x) {
    seen.push_back(format_sign_vector(x));
    return false;
  });
  EXPECT_EQ(seen, (std::vector<std::string>{"0+", "0-", "+0", "++", "+-", "-0", "-+", "--"}));
  seen.clear();
  scan_full_sign_vectors(2, [&](const SignVector& y) {
    seen.push_back(format_sign_vector(y));
    return false;
  });
  EXPECT_EQ(seen, (std::vector<std::string>{"++", "+-", "-+", "--"}));
}

TEST(Tucker, Alt) {
  EXPECT_EQ(alt(sv("+-+")), 2);
  EXPECT_EQ(alt(sv("+0+")), 2);
  EXPECT_EQ(alt(sv("+0-")), 1);
  EXPECT_EQ(alt(sv("00+00")), 4);
  EXPECT_THROW(alt(sv("000")), precondition_error);
}

TEST(Tucker, SignOf) {
  EXPECT_EQ(sign_of(sv("0+0")), -1);
  EXPECT_EQ(sign_of(sv("+--")), 1);
  EXPECT_EQ(sign_of(sv("00-")), -1);
}

TEST(Tucker, Unbalance) {
  const Word s = parse_word("a1a1");
  EXPECT_EQ(unbalance(sv("+0"), s), 0);
  EXPECT_EQ(unbalance(sv("++"), s), 1);
  EXPECT_EQ(unbalance(sv("-0"), parse_word("A1a1")), 0);
  EXPECT_EQ(unbalance(sv("+-+-"), parse_word("a1A1a2A2")), 1);
  EXPECT_EQ(unbalance(sv("+0+-"), parse_word("a1a1a2a2")), 0);
  EXPECT_EQ(unbalance(sv("00-+"), parse_word("a1a1a2a2")), 0);
  EXPECT_EQ(unbalance(sv("00--"), parse_word("a1a1a2a2")), -2);
  EXPECT_THROW(unbalance(sv("+"), s), precondition_error);
}

TEST(Tucker, Lambda52) {
  const Word s = parse_word("a1A1a1A1");
  // alt > n
  EXPECT_EQ(lambda_52(sv("+-+-"), s, 1), 3);
  EXPECT_EQ(lambda_52(sv("0+-+"), s, 1), -3);
  // a balanced completion with one cut
  EXPECT_EQ(lambda_52(sv("++--"), s, 1), 0);
}

TEST(Tucker, FindZero52) {
  const Zero52 z = find_zero_52(parse_word("a1A1"), 1);
  EXPECT_EQ(format_sign_vector(z.zero), "0+");
  EXPECT_EQ(z.split, (NecklaceSplit{{}, Part::A}));

  const Word s = parse_word("a1a1A1A1");
  const Zero52 y = find_zero_52(s, 1);
  EXPECT_EQ(format_sign_vector(y.zero), "0+++");
  EXPECT_EQ(format_sign_vector(y.completion), "++++");
  EXPECT_LE(y.split.cuts.size(), 1u);
  EXPECT_EQ(discrepancy(s, 1, y.split), (AmountVector{0}));

  const Word odd = parse_word("a1a2a2");
  const Zero52 w = find_zero_52(odd, 2, AmountVector{-1, 0});
  EXPECT_EQ(discrepancy(odd, 2, w.split), (AmountVector{-1, 0}));
  EXPECT_THROW(find_zero_52(odd, 2, AmountVector{0, 0}), parity_error);
  EXPECT_THROW(find_zero_52(Word(13, Letter::pos(1)), 1), bound_exceeded);
  EXPECT_THROW(find_zero_52(Word{}, 1), precondition_error);
}

TEST(Tucker, Malt) {
  EXPECT_EQ(malt(sv("+------+--"), Profile({4, 3, 3})), 5);
  EXPECT_EQ(malt(sv("+-+-+"), Profile::single(5)), 4);
  EXPECT_EQ(malt(sv("-----"), Profile::single(5)), 0);
  EXPECT_EQ(malt(sv("++"), Profile({1, 1})), 2);
  EXPECT_THROW(malt(sv("+0"), Profile::single(2)), precondition_error);
  EXPECT_THROW(malt(sv("++"), Profile::single(3)), precondition_error);
}

TEST(Tucker, H) {
  const Profile p({2, 2});
  EXPECT_EQ(h(sv("+-+-"), p), malt(sv("+-+-"), p));
  EXPECT_EQ(h(sv("+000"), p), 4);
  EXPECT_EQ(format_sign_vector(h_completion(sv("0+00"), p)), "-++-");
  EXPECT_EQ(leading_sign(sv("00+0"), p), -1);
  EXPECT_THROW(h(sv("0000"), p), precondition_error);
}

TEST(Tucker, Lambda53Cases) {
  const Profile p({2, 2});
  const Word s = parse_word("a1A2a2A1");
  // h >= 2n
  EXPECT_EQ(lambda_53(1, sv("+000"), p, s, 2), 4);
  // one sign absent, h < 2n
  EXPECT_EQ(lambda_53(1, sv("++00"), p, s, 2), 3);
  EXPECT_EQ(lambda_53(-1, sv("++00"), p, s, 2), -3);
  EXPECT_EQ(lambda_53(1, sv("--00"), p, s, 2), -3);
  // both signs, h < 2n
  EXPECT_EQ(lambda_53(1, sv("++--"), p, s, 2), 1);
  EXPECT_EQ(lambda_53(1, sv("++--"), p, parse_word("a1A1a2A2"), 2), 0);
  EXPECT_THROW(lambda_53(0, sv("++--"), p, s, 2), precondition_error);
}

TEST(Tucker, FindZero53) {
  const WordTuple t = parse_tuple("a1A1A2a2|a2A2A1a1");
  const Zero53 z = find_zero_53(t);
  EXPECT_TRUE(verify_decomposition(t, z.decomposition));
  EXPECT_EQ(lambda_53(1, z.zero, Profile::of(t), concat(t), 2), 0);
  EXPECT_EQ(format_decomposition(z.decomposition), "k=0,1,4 u=a1A1A2a2|a2A2A1a1||");
  EXPECT_THROW(find_zero_53(parse_tuple("a1A2|a2A1")), precondition_error);
}

TEST(Tucker, KyFanChecker) {
  const std::size_t m = 5;
  auto clean = [](const SignVector& x) { return sign_of(x) * (alt(x) + 1); };
  EXPECT_EQ(check_kyfan_hypotheses(clean, m).kind, KyFanReport::Kind::ok);

  const SignVector victim = sv("0+-00");
  auto corrupted = [&](const SignVector& x) { return x == victim ? -clean(x) : clean(x); };
  const KyFanReport r = check_kyfan_hypotheses(corrupted, m);
  EXPECT_EQ(r.kind, KyFanReport::Kind::antisymmetry);
  EXPECT_TRUE(r.x == victim || r.y == victim);

  auto last_entry = [](const SignVector& x) {
    for (std::size_t p = x.size(); p-- > 0;)
      if (x[p] != 0) return x[p];
    return 0;
  };
  const KyFanReport pair = check_kyfan_hypotheses(last_entry, 2);
  EXPECT_EQ(pair.kind, KyFanReport::Kind::complementary_pair);
  EXPECT_TRUE(precedes(pair.x, pair.y));
  EXPECT_EQ(pair.label_x + pair.label_y, 0);

  const Word s = parse_word("a1A2a2A1a1A1");
  const KyFanReport z = check_kyfan_hypotheses([&](const SignVector& x) { return lambda_52(x, s, 2); }, s.size());
  EXPECT_EQ(z.kind, KyFanReport::Kind::zero);
  EXPECT_EQ(lambda_52(z.x, s, 2), 0);

  EXPECT_THROW(check_kyfan_hypotheses(clean, 10), bound_exceeded);
}

TEST(Decoding, WorkedExample) {
  const WordTuple s = parse_tuple("a1a2A2a3|A2A3a1|A1A1A2");
  const auto d = decode_decomposition(sv("+------+--"), s);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->boundaries, (std::vector<std::size_t>{0, 2, 4, 6}));
  EXPECT_EQ(d->odd(), parse_tuple("a1||A1"));
  EXPECT_EQ(d->even(), parse_tuple("a2A2a3|A2A3a1|A1A2"));
  EXPECT_FALSE(decode_decomposition(sv("+-+-+-+-+-"), s));
}

TEST(TuckerProperty, ClosedFormsMatchBruteForce) {
  gen::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const auto m = static_cast<std::size_t>(gen::uniform(rng, 1, 12));
    const SignVector x = gen::sign_vector(rng, m);
    const auto lengths = random_lengths(rng, m);
    const Profile p(lengths);
    const Word s = gen::word(rng, 3, m);
    EXPECT_EQ(alt(x), oracle::alt(x));
    EXPECT_EQ(h(x, p), oracle::h(x, lengths));
    EXPECT_EQ(unbalance(x, s), oracle::unbalance(x, s));
    EXPECT_EQ(oracle::h_signs(x, lengths), std::set<int>{leading_sign(x, p)});
  }
}

TEST(TuckerProperty, Symmetries) {
  gen::Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    const auto m = static_cast<std::size_t>(gen::uniform(rng, 1, 10));
    const int n = gen::uniform(rng, 1, 3);
    const SignVector x = gen::sign_vector(rng, m);
    const Word s = gen::word(rng, n, m);
    const auto lengths = random_lengths(rng, m);
    const Profile p(lengths);
    EXPECT_EQ(alt(-x), alt(x));
    EXPECT_EQ(sign_of(-x), -sign_of(x));
    EXPECT_EQ(unbalance(-x, s), -unbalance(x, s));
    EXPECT_EQ(h(-x, p), h(x, p));
    EXPECT_EQ(leading_sign(-x, p), -leading_sign(x, p));
    if (const int l = lambda_52(x, s, n); l != 0) EXPECT_EQ(lambda_52(-x, s, n), -l);
    if (m >= 2 * static_cast<std::size_t>(n)) {
      // lambda_53 lives on n components of length at least 2
      const Profile q = Profile::of(gen::split(rng, s, static_cast<std::size_t>(n), 2));
      for (int b : {1, -1})
        if (const int l = lambda_53(b, x, q, s, n); l != 0) EXPECT_EQ(lambda_53(b, -x, q, s, n), -l);
    }

    // x <= y for a random y above x
    SignVector y = x;
    for (std::size_t q = 0; q < m; ++q)
      if (y[q] == 0 && gen::uniform(rng, 0, 1)) y[q] = gen::uniform(rng, 0, 1) ? 1 : -1;
    EXPECT_GE(alt(x), alt(y));
    EXPECT_GE(h(x, p), h(y, p));
    if (const int u = unbalance(x, s); u != 0) {
      const int kappa = u > 0 ? 1 : -1;
      oracle::for_each_completion(y, [&](const SignVector& z) {
        EXPECT_GT(oracle::E(z, s, kappa, std::abs(u)), oracle::E(z, s, -kappa, std::abs(u)));
      });
    }
  }
}

TEST(TuckerProperty, MaltBound) {
  gen::Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const auto m = static_cast<std::size_t>(gen::uniform(rng, 1, 12));
    const auto lengths = random_lengths(rng, m);
    SignVector y(m);
    for (std::size_t q = 0; q < m; ++q) y[q] = gen::uniform(rng, 0, 1) ? 1 : -1;
    EXPECT_LE(malt(y, Profile(lengths)), static_cast<int>(m + lengths.size()) - 2);
    EXPECT_EQ(malt(y, Profile(lengths)), oracle::malt(y, lengths));
  }
}

TEST(TuckerProperty, Lambda53PairCondition) {
  gen::Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    const int n = gen::uniform(rng, 1, 3);
    std::size_t len = static_cast<std::size_t>(gen::uniform(rng, 2 * n, 8));
    len -= len % 2;
    const WordTuple t = gen::split(rng, gen::balanced_word(rng, n, len), static_cast<std::size_t>(n), 2);
    const Word s = concat(t);
    const Profile p = Profile::of(t);
    for (int b : {1, -1}) {
      const KyFanReport r =
          check_kyfan_hypotheses([&](const SignVector& x) { return lambda_53(b, x, p, s, n); }, s.size());
      EXPECT_TRUE(r.ok_or_zero()) << format_tuple(t) << " " << to_string(r.kind);
    }
    const KyFanReport r52 = check_kyfan_hypotheses([&](const SignVector& x) { return lambda_52(x, s, n); }, s.size());
    EXPECT_EQ(r52.kind, KyFanReport::Kind::zero);
  }
}

TEST(TuckerProperty, FindZero52Splits) {
  gen::Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const int n = gen::uniform(rng, 1, 3);
    const Word s = gen::word(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, 9)));
    if (s.size() <= static_cast<std::size_t>(n) && !is_in_On(s, n)) {
      EXPECT_THROW(find_zero_52(s, n), precondition_error);
      continue;
    }
    for (const AmountVector& d : feasible_targets(s, n)) {
      const Zero52 z = find_zero_52(s, n, d);
      EXPECT_TRUE(precedes(z.zero, z.completion));
      EXPECT_LE(z.split.cuts.size(), static_cast<std::size_t>(n));
      EXPECT_EQ(discrepancy(s, n, z.split), d);
    }
  }
}
