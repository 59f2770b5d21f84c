#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "predkit/bits.hpp"
#include "predkit/cost.hpp"

namespace predkit {

// ALG <= alpha*OPT + beta*eta0 + gamma*eta1 + kappa, for constant coefficients.
struct CompetitiveClaim {
  Cost alpha{1};
  Cost beta{0};
  Cost gamma{0};
  Rational kappa{0};
  bool strict = true;

  // Throws InvalidInput when strict is set with a positive kappa.
  void validate() const;
  std::string to_string() const;
  // Parses "alpha,beta,gamma"; each entry accepts anything Cost::parse accepts.
  static CompetitiveClaim parse(std::string_view triple, bool strict, const Rational& kappa = 0);
};

struct RunRecord {
  std::string instance_id;
  Cost alg_cost;
  Cost opt_cost;
  Rational eta0{0};
  Rational eta1{0};
  BitString decisions;
};

// alg - (alpha*opt + beta*eta0 + gamma*eta1), with Infinite*0 = 0.
Slack slack_of(const RunRecord& record, const CompetitiveClaim& claim);

struct ClaimCheck {
  bool pass = true;
  Slack max_slack;  // -inf when there are no records
  std::optional<std::size_t> witness;  // index of the record with the largest slack on FAIL
  std::size_t violations = 0;
  std::size_t tight = 0;  // records whose finite slack equals kappa
};

ClaimCheck check_claim(std::span<const RunRecord> records, const CompetitiveClaim& claim);

}  // namespace predkit
