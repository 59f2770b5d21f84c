#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "predkit/algorithm.hpp"
#include "predkit/claim.hpp"
#include "predkit/instance.hpp"

namespace predkit {

// Adaptive ASG adversaries. Each one fixes the predictions up front and sets
// x_i = 1 - y_i from the algorithm's own answers.
enum class AdversaryKind {
  kPurelyOnline,  // xhat = 0^n, scored under (Z0, Z1)
  kAllOnesPred,   // xhat = 1^n, scored under (mu0, mu1)
  kAllZerosPred,  // xhat = 0^n, scored under (mu0, mu1)
  kAsgInf,        // xhat = 0^n against ASG_inf, scored under (mu0, mu1)
};

std::string_view adversary_id(AdversaryKind kind);
AdversaryKind parse_adversary_id(std::string_view id);
std::vector<std::string> known_adversary_ids();

struct AdversaryRun {
  AdversaryKind kind = AdversaryKind::kPurelyOnline;
  AsgInstance instance;
  RunRecord record;
  std::string measure_pair;  // "zero" or "mu"
  bool identity_holds = false;
  std::string identity;  // the identity that was checked, in words
};

// Builds the instance twice with fresh algorithms and replays it once more
// through run_online; any disagreement throws DeterminismError.
AdversaryRun adv_purely_online(const AlgorithmFactory<AsgPrompt>& alg, std::int64_t t, std::size_t n);
AdversaryRun adv_all_ones_pred(const AlgorithmFactory<AsgPrompt>& alg, std::int64_t t, std::size_t n);
AdversaryRun adv_all_zeros_pred(const AlgorithmFactory<AsgPrompt>& alg, std::int64_t t, std::size_t n);
AdversaryRun adv_asg_inf(const AlgorithmFactory<AsgPrompt>& alg, std::size_t n);

// Dispatch; `level` must be infinite exactly for kAsgInf.
AdversaryRun run_adversary(AdversaryKind kind, const AlgorithmFactory<AsgPrompt>& alg, const AsgLevel& level,
                           std::size_t n);

struct SlackPoint {
  std::size_t n = 0;
  Cost opt;
  Cost alg;
  Rational eta0{0};
  Rational eta1{0};
  Slack slack;
};

struct SlackCurve {
  std::vector<SlackPoint> points;
  // Least-squares slope of slack against n over the points, when every slack is finite.
  std::optional<Rational> slope;
  // Slope > 0, or some slack is +inf.
  bool unbounded = false;
};

SlackCurve grow_slack_curve(AdversaryKind kind, const AlgorithmFactory<AsgPrompt>& alg, const AsgLevel& level,
                            const CompetitiveClaim& claim, std::span<const std::size_t> n_values);

}  // namespace predkit
