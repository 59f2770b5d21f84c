#include "predkit/instance.hpp"

#include "predkit/cost.hpp"

namespace predkit {

AsgLevel AsgLevel::finite(std::int64_t t) {
  if (t < 1) throw InvalidInput("ASG level t must be a positive integer, got " + std::to_string(t));
  AsgLevel level;
  level.t_ = t;
  return level;
}

AsgLevel AsgLevel::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinite();
  Rational r = parse_rational(text);
  if (r.denominator() != 1) throw InvalidInput("ASG level must be an integer or inf");
  return finite(r.numerator());
}

std::int64_t AsgLevel::t() const {
  if (!t_) throw InvalidInput("t() on ASG level inf");
  return *t_;
}

std::string AsgLevel::to_string() const { return t_ ? std::to_string(*t_) : "inf"; }

ProblemKind kind_of(const AnyInstance& instance) {
  return static_cast<ProblemKind>(instance.index());
}

std::string_view problem_id(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kAsg:
      return "asg";
    case ProblemKind::kVertexCover:
      return "vc";
    case ProblemKind::kIntervalRejection:
      return "ir";
    case ProblemKind::kSpill:
      return "spill";
    case ProblemKind::kSat2:
      return "sat2";
    case ProblemKind::kDominatingSet:
      return "dom";
    case ProblemKind::kPaging:
      return "paging";
  }
  return "?";
}

std::vector<std::string> known_problem_ids() {
  return {"asg", "vc", "ir", "spill", "sat2", "dom", "paging"};
}

ProblemKind parse_problem_id(std::string_view id) {
  for (int i = 0; i <= static_cast<int>(ProblemKind::kPaging); ++i) {
    auto kind = static_cast<ProblemKind>(i);
    if (problem_id(kind) == id) return kind;
  }
  std::string known;
  for (const std::string& k : known_problem_ids()) known += (known.empty() ? "" : ", ") + k;
  throw InvalidInput("unknown problem id \"" + std::string(id) + "\"; known: " + known);
}

const BitString& truth_bits(const AnyInstance& instance) {
  return std::visit([](const auto& inst) -> const BitString& { return inst.data.x; }, instance);
}

const BitString& predicted_bits(const AnyInstance& instance) {
  return std::visit([](const auto& inst) -> const BitString& { return inst.data.xhat; }, instance);
}

std::size_t instance_size(const AnyInstance& instance) {
  return std::visit([](const auto& inst) { return inst.data.size(); }, instance);
}

void validate_shape(const AnyInstance& instance) {
  std::visit([](const auto& inst) { inst.data.validate_shape(); }, instance);
}

}  // namespace predkit
