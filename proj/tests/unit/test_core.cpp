#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "predkit/bits.hpp"
#include "predkit/claim.hpp"
#include "predkit/cost.hpp"
#include "predkit/error.hpp"
#include "predkit/measures.hpp"

namespace predkit {
namespace {

BitString B(const char* s) { return BitString::parse(s); }

TEST(BitString, ParsesAndRejectsOtherCharacters) {
  EXPECT_EQ(B("0110").to_string(), "0110");
  EXPECT_EQ(B("0110").count_ones(), 2U);
  EXPECT_THROW(B("01a0"), InvalidInput);
  BitString b(3, 0);
  EXPECT_THROW(b.set(0, 2), InvalidInput);
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(parse_rational("2.5"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_THROW(parse_rational("x"), InvalidInput);
}

TEST(Cost, InfiniteAbsorbsAdditionAndZeroTimesInfinityIsZero) {
  EXPECT_TRUE((Cost(3) + Cost::infinite()).is_infinite());
  EXPECT_TRUE((Cost::infinite() + Cost(0)).is_infinite());
  EXPECT_EQ(Cost::infinite() * Cost(0), Cost(0));
  EXPECT_EQ(Cost(0) * Cost::infinite(), Cost(0));
  EXPECT_TRUE((Cost::infinite() * Cost(2)).is_infinite());
  EXPECT_LT(Cost(1000000), Cost::infinite());
  EXPECT_EQ(Cost::parse("inf"), Cost::infinite());
  EXPECT_EQ(Cost::parse("3/4"), Cost(Rational(3, 4)));
}

TEST(Slack, InfiniteDifferences) {
  EXPECT_EQ(Slack::difference(Cost::infinite(), Cost(5)).kind(), Slack::Kind::kPositiveInfinity);
  EXPECT_EQ(Slack::difference(Cost(5), Cost::infinite()).kind(), Slack::Kind::kNegativeInfinity);
  Slack balanced = Slack::difference(Cost::infinite(), Cost::infinite());
  EXPECT_EQ(balanced.kind(), Slack::Kind::kBalanced);
  EXPECT_TRUE(balanced.within(0));
  EXPECT_FALSE(Slack::finite(1).within(0));
  EXPECT_TRUE(Slack::finite(1).within(1));
}

TEST(Measures, Mu0Examples) {
  EXPECT_EQ(naive::mu0("0110", "1100"), 1);
  EXPECT_EQ(mu0(B("0110"), B("1100")), 1);
  EXPECT_EQ(mu0(B("0110"), B("0110")), 0);
  EXPECT_EQ(mu0(B("111"), B("000")), 3);
  EXPECT_THROW(mu0(B("01"), B("011")), InvalidInput);
}

TEST(Measures, Mu1Examples) {
  EXPECT_EQ(naive::mu1("0110", "1100"), 1);
  EXPECT_EQ(mu1(B("0110"), B("1100")), 1);
  EXPECT_EQ(mu1(B("1010"), B("1010")), 0);
  EXPECT_EQ(mu1(B("000"), B("111")), 3);
}

TEST(Measures, ZeroMeasureIsAlwaysZero) {
  ErrorMeasure z = zero_measure();
  EXPECT_EQ(z.evaluate(B("0110"), B("1001")), Rational(0));
  EXPECT_EQ(z.evaluate(BitString(), BitString()), Rational(0));
  EXPECT_EQ(z.evaluate(B("111"), B("000")), Rational(0));
}

TEST(Measures, MuSumIsHammingDistance) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 1000; ++rep) {
    std::size_t n = rng() % 20;
    BitString x(n), xh(n);
    std::size_t hamming = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x.set(i, rng() & 1);
      xh.set(i, rng() & 1);
      hamming += x[i] != xh[i];
    }
    ASSERT_EQ(static_cast<std::size_t>(mu0(x, xh) + mu1(x, xh)), hamming);
  }
}

std::vector<Insertion> random_insertions(std::mt19937_64& rng, std::size_t base_size) {
  std::vector<Insertion> out;
  std::size_t size = base_size;
  for (std::size_t m = rng() % 5 + 1; m > 0; --m) {
    Bit b = rng() & 1;
    out.push_back({static_cast<std::size_t>(rng() % (size + 1)), b, b});
    ++size;
  }
  return out;
}

TEST(Measures, InsertionMonotoneOnRandomInsertions) {
  std::mt19937_64 rng(11);
  std::vector<ErrorMeasure> measures{mu0_measure(), mu1_measure(), zero_measure("Z0"), zero_measure("Z1")};
  for (int rep = 0; rep < 1000; ++rep) {
    std::size_t n = rng() % 12;
    BitString x(n), xh(n);
    for (std::size_t i = 0; i < n; ++i) {
      x.set(i, rng() & 1);
      xh.set(i, rng() & 1);
    }
    auto ins = random_insertions(rng, n);
    for (const ErrorMeasure& m : measures) {
      MonotonicityVerdict v = check_insertion_monotone(m, x, xh, ins);
      ASSERT_TRUE(v.pass) << m.id();
      ASSERT_EQ(v.x.size(), n + ins.size());
    }
  }
}

TEST(Measures, LengthMeasureFailsInsertionMonotonicity) {
  ErrorMeasure length("length", [](const BitString& x, const BitString&) { return Rational(x.size()); }, false);
  std::vector<Insertion> ins{{1, 0, 0}};
  MonotonicityVerdict v = check_insertion_monotone(length, B("01"), B("11"), ins);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.base_value, Rational(2));
  EXPECT_EQ(v.extended_value, Rational(3));
  EXPECT_EQ(v.x.to_string(), "001");
  EXPECT_EQ(v.xhat.to_string(), "101");
}

TEST(Measures, WronglyPredictedInsertionIsRejected) {
  std::vector<Insertion> ins{{0, 1, 0}};
  EXPECT_THROW(check_insertion_monotone(mu0_measure(), B("0"), B("0"), ins), InvalidInput);
}

RunRecord record(Cost alg, Cost opt, Rational eta0, Rational eta1) {
  RunRecord r;
  r.instance_id = "r";
  r.alg_cost = alg;
  r.opt_cost = opt;
  r.eta0 = eta0;
  r.eta1 = eta1;
  return r;
}

TEST(CheckClaim, FtpRecordIsTightUnderOneTwoOne) {
  // t=3, x=0110, xhat=1100: FtP pays 5, OPT 2, mu0 = mu1 = 1.
  ASSERT_EQ(naive::asg_cost(3, "0110", "1100"), 5);
  std::vector<RunRecord> rs{record(5, 2, 1, 1)};
  ClaimCheck c = check_claim(rs, CompetitiveClaim::parse("1,2,1", true));
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.max_slack, Slack::finite(0));
  EXPECT_EQ(c.tight, 1U);
}

TEST(CheckClaim, AlwaysZeroRecord) {
  // t=4, x=101: AlwaysZero pays t * sum x = 8, OPT 2.
  ASSERT_EQ(naive::asg_cost(4, "101", "000"), 8);
  std::vector<RunRecord> rs{record(8, 2, 2, 0)};
  ClaimCheck pass = check_claim(rs, CompetitiveClaim::parse("4,0,0", true));
  EXPECT_TRUE(pass.pass);
  EXPECT_EQ(pass.max_slack, Slack::finite(0));
  ClaimCheck fail = check_claim(rs, CompetitiveClaim::parse("3,0,0", true));
  EXPECT_FALSE(fail.pass);
  EXPECT_EQ(fail.max_slack, Slack::finite(2));
  ASSERT_TRUE(fail.witness.has_value());
  EXPECT_EQ(*fail.witness, 0U);
}

TEST(CheckClaim, InfiniteCosts) {
  // Infinite ALG against infinite alpha with OPT 0: inf - inf*0 is +inf.
  std::vector<RunRecord> rs{record(Cost::infinite(), 0, 0, 0)};
  EXPECT_FALSE(check_claim(rs, CompetitiveClaim::parse("inf,0,0", true)).pass);
  // Infinite ALG covered by an infinite coefficient on a positive error.
  std::vector<RunRecord> covered{record(Cost::infinite(), 1, 1, 0)};
  EXPECT_TRUE(check_claim(covered, CompetitiveClaim::parse("1,inf,0", true)).pass);
  // Finite ALG, infinite coefficient times zero error contributes nothing.
  std::vector<RunRecord> finite{record(3, 1, 0, 0)};
  EXPECT_FALSE(check_claim(finite, CompetitiveClaim::parse("1,inf,inf", true)).pass);
}

TEST(CheckClaim, StrictClaimRejectsPositiveKappa) {
  EXPECT_THROW(CompetitiveClaim::parse("1,1,1", true, 1), InvalidInput);
  EXPECT_NO_THROW(CompetitiveClaim::parse("1,1,1", false, 1));
  EXPECT_THROW(CompetitiveClaim::parse("1,1", true), InvalidInput);
}

TEST(CheckClaim, LooseningNeverTurnsPassIntoFail) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<RunRecord> rs;
    for (int i = 0; i < 5; ++i) {
      rs.push_back(record(static_cast<std::int64_t>(rng() % 20), static_cast<std::int64_t>(rng() % 8),
                          static_cast<std::int64_t>(rng() % 5), static_cast<std::int64_t>(rng() % 5)));
    }
    CompetitiveClaim c{Cost(static_cast<std::int64_t>(rng() % 3 + 1)), Cost(static_cast<std::int64_t>(rng() % 3)),
                       Cost(static_cast<std::int64_t>(rng() % 3)), Rational(static_cast<std::int64_t>(rng() % 3)),
                       false};
    bool base = check_claim(rs, c).pass;
    if (!base) continue;
    for (int coord = 0; coord < 4; ++coord) {
      CompetitiveClaim looser = c;
      if (coord == 0) looser.alpha = looser.alpha + Cost(1);
      if (coord == 1) looser.beta = looser.beta + Cost(1);
      if (coord == 2) looser.gamma = looser.gamma + Cost(Rational(1, 2));
      if (coord == 3) looser.kappa += 1;
      ASSERT_TRUE(check_claim(rs, looser).pass);
    }
  }
}

TEST(CheckClaim, EmptyRecordsPass) {
  ClaimCheck c = check_claim(std::vector<RunRecord>{}, CompetitiveClaim::parse("1,0,0", true));
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.max_slack.kind(), Slack::Kind::kNegativeInfinity);
}

}  // namespace
}  // namespace predkit
