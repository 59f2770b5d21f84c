#include <gtest/gtest.h>

#include <atomic>

#include "predkit/adversaries.hpp"
#include "predkit/algorithms.hpp"
#include "predkit/error.hpp"
#include "predkit/harness.hpp"

namespace predkit {
namespace {

TEST(PurelyOnline, AlwaysZeroExample) {
  AdversaryRun run = adv_purely_online(constant_factory<AsgPrompt>(0), 2, 5);
  EXPECT_EQ(run.instance.data.x.to_string(), "11111");
  EXPECT_EQ(run.record.opt_cost, Cost(5));
  EXPECT_EQ(run.record.alg_cost, Cost(10));
  EXPECT_EQ(run.measure_pair, "zero");
  EXPECT_EQ(run.record.eta0, Rational(0));
  EXPECT_TRUE(run.identity_holds);
}

TEST(PurelyOnline, AlwaysOneExample) {
  for (std::int64_t t = 1; t <= 4; ++t) {
    AdversaryRun run = adv_purely_online(constant_factory<AsgPrompt>(1), t, 7);
    EXPECT_EQ(run.instance.data.x.to_string(), "0000000");
    EXPECT_EQ(run.record.opt_cost, Cost(0));
    EXPECT_EQ(run.record.alg_cost, Cost(7));
  }
}

TEST(PurelyOnline, IdentityForEveryAlgorithm) {
  for (const auto& entry : asg_algorithms(5)) {
    AdversaryRun run = adv_purely_online(entry.make, 3, 20);
    ASSERT_TRUE(run.identity_holds) << entry.id;
    ASSERT_EQ(run.record.alg_cost, Cost(2) * run.record.opt_cost + Cost(20)) << entry.id;
  }
}

TEST(AllOnesPred, Examples) {
  AdversaryRun ftp = adv_all_ones_pred(ftp_factory<AsgPrompt>(), 3, 6);
  EXPECT_EQ(ftp.instance.data.xhat.to_string(), "111111");
  EXPECT_EQ(ftp.instance.data.x.to_string(), "000000");
  EXPECT_EQ(ftp.record.alg_cost, Cost(6));
  EXPECT_EQ(ftp.record.opt_cost, Cost(0));
  EXPECT_EQ(ftp.record.eta1, Rational(6));
  EXPECT_EQ(ftp.record.eta0, Rational(0));

  AdversaryRun zero = adv_all_ones_pred(constant_factory<AsgPrompt>(0), 3, 6);
  EXPECT_EQ(zero.instance.data.x.to_string(), "111111");
  EXPECT_EQ(zero.record.alg_cost, Cost(18));
  EXPECT_EQ(zero.record.eta1, Rational(0));
  for (const auto& entry : asg_algorithms(2)) {
    ASSERT_TRUE(adv_all_ones_pred(entry.make, 4, 30).identity_holds) << entry.id;
  }
}

TEST(AllZerosPred, PredictionsAreZero) {
  for (const auto& entry : asg_algorithms(3)) {
    AdversaryRun run = adv_all_zeros_pred(entry.make, 3, 25);
    ASSERT_EQ(run.instance.data.xhat, BitString(25));
    ASSERT_EQ(run.record.eta1, Rational(0));
    ASSERT_TRUE(run.identity_holds) << entry.id;
  }
}

TEST(AsgInf, CaseSplit) {
  AdversaryRun ftp = adv_asg_inf(ftp_factory<AsgPrompt>(), 5);
  EXPECT_EQ(ftp.instance.data.x.to_string(), "11111");
  EXPECT_TRUE(ftp.record.alg_cost.is_infinite());
  AdversaryRun one = adv_asg_inf(constant_factory<AsgPrompt>(1), 5);
  EXPECT_EQ(one.record.alg_cost, Cost(5));
  EXPECT_EQ(one.record.opt_cost, Cost(0));
  for (const auto& entry : asg_algorithms(9)) {
    for (std::size_t n : {1U, 4U, 17U}) {
      AdversaryRun run = adv_asg_inf(entry.make, n);
      bool infinite = run.record.alg_cost.is_infinite();
      bool exact = run.record.alg_cost == Cost(static_cast<std::int64_t>(n)) && run.record.opt_cost == Cost(0);
      ASSERT_NE(infinite, exact) << entry.id;
      ASSERT_TRUE(run.identity_holds);
    }
  }
}

TEST(Adversaries, ReplayIsReproducible) {
  for (const auto& entry : asg_algorithms(4)) {
    AdversaryRun a = adv_purely_online(entry.make, 3, 40);
    AdversaryRun b = adv_purely_online(entry.make, 3, 40);
    ASSERT_EQ(a.instance.data.x, b.instance.data.x);
    ASSERT_EQ(a.record.decisions, b.record.decisions);
    ASSERT_EQ(a.record.alg_cost, b.record.alg_cost);
  }
}

class Drifting final : public OnlineAlgorithm<AsgPrompt> {
 public:
  explicit Drifting(int offset) : offset_(offset) {}
  std::string name() const override { return "drifting"; }
  Bit decide(const AsgPrompt&, Bit) override { return static_cast<Bit>((offset_ + step_++) & 1); }

 private:
  int offset_;
  int step_ = 0;
};

TEST(Adversaries, NondeterministicAlgorithmIsDetected) {
  auto counter = std::make_shared<std::atomic<int>>(0);
  AlgorithmFactory<AsgPrompt> make = [counter] { return std::make_unique<Drifting>((*counter)++); };
  EXPECT_THROW(adv_purely_online(make, 2, 6), DeterminismError);
  EXPECT_THROW(adv_asg_inf(make, 6), DeterminismError);
}

TEST(SlackCurve, AlwaysZeroAgainstTMinusOne) {
  const std::int64_t t = 3;
  std::vector<std::size_t> ns{10, 20, 40, 80};
  CompetitiveClaim claim{Cost(t - 1), Cost(0), Cost(0), 0, true};
  SlackCurve c = grow_slack_curve(AdversaryKind::kPurelyOnline, constant_factory<AsgPrompt>(0), AsgLevel::finite(t),
                                  claim, ns);
  ASSERT_EQ(c.points.size(), ns.size());
  for (const SlackPoint& p : c.points) {
    EXPECT_EQ(p.slack, Slack::finite(static_cast<std::int64_t>(p.n)));
  }
  ASSERT_TRUE(c.slope.has_value());
  EXPECT_EQ(*c.slope, Rational(1));
  EXPECT_TRUE(c.unbounded);

  CompetitiveClaim tight{Cost(t), Cost(0), Cost(0), 0, true};
  SlackCurve flat = grow_slack_curve(AdversaryKind::kPurelyOnline, constant_factory<AsgPrompt>(0),
                                     AsgLevel::finite(t), tight, ns);
  for (const SlackPoint& p : flat.points) EXPECT_EQ(p.slack, Slack::finite(0));
  EXPECT_FALSE(flat.unbounded);
}

TEST(SlackCurve, FtpSmallGammaUnderAllOnes) {
  const std::int64_t t = 3;
  std::vector<std::size_t> ns{10, 20, 40};
  CompetitiveClaim claim{Cost(t - 1), Cost(t - 1), Cost(Rational(1, 2)), 0, true};
  SlackCurve c = grow_slack_curve(AdversaryKind::kAllOnesPred, ftp_factory<AsgPrompt>(), AsgLevel::finite(t), claim, ns);
  for (const SlackPoint& p : c.points) {
    EXPECT_EQ(p.slack, Slack::finite(Rational(static_cast<std::int64_t>(p.n), 2)));
  }
  ASSERT_TRUE(c.slope.has_value());
  EXPECT_GT(*c.slope, Rational(0));
  EXPECT_TRUE(c.unbounded);
}

TEST(SlackCurve, HierarchySeparation) {
  std::vector<std::size_t> ns{10, 30, 90};
  for (std::int64_t t = 1; t <= 4; ++t) {
    CompetitiveClaim claim{Cost(t), Cost(0), Cost(0), 0, true};
    for (const auto* id : {"always-zero", "ftp"}) {
      const auto algs = asg_algorithms(1);
      SlackCurve c = grow_slack_curve(AdversaryKind::kPurelyOnline, find_algorithm(algs, id).make,
                                      AsgLevel::finite(t + 1), claim, ns);
      ASSERT_TRUE(c.unbounded) << id << " t=" << t;
    }
  }
}

TEST(ParetoProfiles, PassOnEveryAdversary) {
  for (std::int64_t t = 1; t <= 4; ++t) {
    CompetitiveClaim zero_claim{Cost(t), Cost(0), Cost(0), 0, true};
    CompetitiveClaim ftp_claim{Cost(1), Cost(t - 1), Cost(1), 0, true};
    for (AdversaryKind kind : {AdversaryKind::kAllOnesPred, AdversaryKind::kAllZerosPred}) {
      for (std::size_t n : {5U, 50U}) {
        AdversaryRun z = run_adversary(kind, constant_factory<AsgPrompt>(0), AsgLevel::finite(t), n);
        AdversaryRun f = run_adversary(kind, ftp_factory<AsgPrompt>(), AsgLevel::finite(t), n);
        ASSERT_TRUE(slack_of(z.record, zero_claim).within(0));
        ASSERT_TRUE(slack_of(f.record, ftp_claim).within(0));
      }
    }
  }
}

}  // namespace
}  // namespace predkit
