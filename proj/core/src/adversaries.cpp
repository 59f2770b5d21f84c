#include "predkit/adversaries.hpp"

#include "predkit/error.hpp"
#include "predkit/measures.hpp"
#include "predkit/problems.hpp"

namespace predkit {

std::string_view adversary_id(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kPurelyOnline:
      return "purely-online";
    case AdversaryKind::kAllOnesPred:
      return "all-ones-pred";
    case AdversaryKind::kAllZerosPred:
      return "all-zeros-pred";
    case AdversaryKind::kAsgInf:
      return "asg-inf";
  }
  return "?";
}

std::vector<std::string> known_adversary_ids() {
  return {"purely-online", "all-ones-pred", "all-zeros-pred", "asg-inf"};
}

AdversaryKind parse_adversary_id(std::string_view id) {
  for (AdversaryKind kind : {AdversaryKind::kPurelyOnline, AdversaryKind::kAllOnesPred,
                             AdversaryKind::kAllZerosPred, AdversaryKind::kAsgInf}) {
    if (adversary_id(kind) == id) return kind;
  }
  std::string known;
  for (const std::string& k : known_adversary_ids()) known += (known.empty() ? "" : ", ") + k;
  throw InvalidInput("unknown adversary \"" + std::string(id) + "\"; known: " + known);
}

namespace {

struct Built {
  PredictedInstance<AsgPrompt> data;
  BitString y;
};

Built build(const AlgorithmFactory<AsgPrompt>& make, Bit prediction, std::size_t n) {
  auto alg = make();
  Built out;
  for (std::size_t i = 0; i < n; ++i) {
    Bit y = alg->decide(AsgPrompt{}, prediction);
    out.y.push_back(y);
    out.data.requests.push_back(AsgPrompt{});
    out.data.xhat.push_back(prediction);
    out.data.x.push_back(static_cast<Bit>(1 - y));
  }
  alg->reveal(out.data.x);
  return out;
}

AdversaryRun run(AdversaryKind kind, const AlgorithmFactory<AsgPrompt>& make, const AsgLevel& level,
                 std::size_t n) {
  const Bit prediction = kind == AdversaryKind::kAllOnesPred ? 1 : 0;
  Built first = build(make, prediction, n);
  Built second = build(make, prediction, n);
  BitString replay = run_online(make, first.data);
  if (first.data != second.data || first.y != second.y || replay != first.y) {
    throw DeterminismError("algorithm \"" + make()->name() + "\" answered differently on a replay");
  }

  AdversaryRun out;
  out.kind = kind;
  out.instance = AsgInstance{level, first.data};
  const BitString& x = first.data.x;
  const BitString& xhat = first.data.xhat;
  const auto sum_x = static_cast<std::int64_t>(x.count_ones());
  out.record.instance_id = std::string(adversary_id(kind)) + "/t=" + level.to_string() + "/n=" + std::to_string(n);
  out.record.alg_cost = asg_cost(level, x, first.y);
  out.record.opt_cost = Cost(sum_x);
  out.record.decisions = first.y;
  MeasurePair pair = kind == AdversaryKind::kPurelyOnline ? zero_pair() : mu_pair();
  out.measure_pair = pair.name;
  out.record.eta0 = pair.eta0.evaluate(x, xhat);
  out.record.eta1 = pair.eta1.evaluate(x, xhat);

  const auto size = static_cast<std::int64_t>(n);
  if (kind == AdversaryKind::kAsgInf) {
    out.identity = "ALG = inf xor (ALG = n and OPT = 0)";
    bool infinite = out.record.alg_cost.is_infinite();
    bool finite_case = !infinite && out.record.alg_cost == Cost(size) && sum_x == 0;
    out.identity_holds = infinite != finite_case;
  } else {
    const std::int64_t t = level.t();
    out.identity = "ALG = n + (t-1)*OPT";
    out.identity_holds = out.record.alg_cost == Cost(size + (t - 1) * sum_x);
  }
  return out;
}

std::int64_t finite_t(std::int64_t t) {
  if (t < 1) throw InvalidInput("ASG level must be at least 1");
  return t;
}

}  // namespace

AdversaryRun adv_purely_online(const AlgorithmFactory<AsgPrompt>& alg, std::int64_t t, std::size_t n) {
  return run(AdversaryKind::kPurelyOnline, alg, AsgLevel::finite(finite_t(t)), n);
}

AdversaryRun adv_all_ones_pred(const AlgorithmFactory<AsgPrompt>& alg, std::int64_t t, std::size_t n) {
  return run(AdversaryKind::kAllOnesPred, alg, AsgLevel::finite(finite_t(t)), n);
}

AdversaryRun adv_all_zeros_pred(const AlgorithmFactory<AsgPrompt>& alg, std::int64_t t, std::size_t n) {
  return run(AdversaryKind::kAllZerosPred, alg, AsgLevel::finite(finite_t(t)), n);
}

AdversaryRun adv_asg_inf(const AlgorithmFactory<AsgPrompt>& alg, std::size_t n) {
  return run(AdversaryKind::kAsgInf, alg, AsgLevel::infinite(), n);
}

AdversaryRun run_adversary(AdversaryKind kind, const AlgorithmFactory<AsgPrompt>& alg, const AsgLevel& level,
                           std::size_t n) {
  if ((kind == AdversaryKind::kAsgInf) != level.is_infinite()) {
    throw InvalidInput("adversary " + std::string(adversary_id(kind)) + " does not apply to ASG level " +
                       level.to_string());
  }
  if (kind == AdversaryKind::kAsgInf) return adv_asg_inf(alg, n);
  return run(kind, alg, AsgLevel::finite(finite_t(level.t())), n);
}

SlackCurve grow_slack_curve(AdversaryKind kind, const AlgorithmFactory<AsgPrompt>& alg, const AsgLevel& level,
                            const CompetitiveClaim& claim, std::span<const std::size_t> n_values) {
  SlackCurve curve;
  bool all_finite = true;
  for (std::size_t n : n_values) {
    AdversaryRun r = run_adversary(kind, alg, level, n);
    SlackPoint p{n, r.record.opt_cost, r.record.alg_cost, r.record.eta0, r.record.eta1,
                 slack_of(r.record, claim)};
    if (p.slack.kind() == Slack::Kind::kPositiveInfinity) curve.unbounded = true;
    if (!p.slack.is_finite()) all_finite = false;
    curve.points.push_back(p);
  }
  if (all_finite && curve.points.size() >= 2) {
    const Rational count(static_cast<std::int64_t>(curve.points.size()));
    Rational sx(0), sy(0), sxx(0), sxy(0);
    for (const SlackPoint& p : curve.points) {
      Rational xn(static_cast<std::int64_t>(p.n));
      sx += xn;
      sy += p.slack.value();
      sxx += xn * xn;
      sxy += xn * p.slack.value();
    }
    Rational denominator = count * sxx - sx * sx;
    if (denominator != 0) {
      curve.slope = (count * sxy - sx * sy) / denominator;
      if (*curve.slope > 0) curve.unbounded = true;
    }
  }
  return curve;
}

}  // namespace predkit
