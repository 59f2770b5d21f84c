#include "predkit/claim.hpp"

#include <vector>

#include "predkit/error.hpp"

namespace predkit {

void CompetitiveClaim::validate() const {
  if (strict && kappa > 0) throw InvalidInput("a strict claim requires kappa <= 0");
}

std::string CompetitiveClaim::to_string() const {
  std::string out = "(" + alpha.to_string() + "," + beta.to_string() + "," + gamma.to_string() + ")";
  if (strict) {
    out += " strict";
    if (kappa != 0) out += " kappa=" + predkit::to_string(kappa);
  } else {
    out += " kappa=" + predkit::to_string(kappa);
  }
  return out;
}

CompetitiveClaim CompetitiveClaim::parse(std::string_view triple, bool strict, const Rational& kappa) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = triple.find(',', start);
    parts.push_back(triple.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw InvalidInput("claim must be alpha,beta,gamma: \"" + std::string(triple) + "\"");
  }
  CompetitiveClaim claim{Cost::parse(parts[0]), Cost::parse(parts[1]), Cost::parse(parts[2]), kappa,
                         strict};
  claim.validate();
  return claim;
}

Slack slack_of(const RunRecord& record, const CompetitiveClaim& claim) {
  Cost rhs = claim.alpha * record.opt_cost + claim.beta * Cost(record.eta0) +
             claim.gamma * Cost(record.eta1);
  return Slack::difference(record.alg_cost, rhs);
}

ClaimCheck check_claim(std::span<const RunRecord> records, const CompetitiveClaim& claim) {
  claim.validate();
  ClaimCheck check;
  for (std::size_t i = 0; i < records.size(); ++i) {
    Slack s = slack_of(records[i], claim);
    if (!s.within(claim.kappa)) ++check.violations;
    if (s.is_finite() && s.value() == claim.kappa) ++check.tight;
    if (i == 0 || check.max_slack < s) {
      check.max_slack = s;
      check.witness = i;
    }
  }
  check.pass = check.violations == 0;
  if (check.pass) check.witness.reset();
  return check;
}

}  // namespace predkit
