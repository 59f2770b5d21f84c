#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "predkit/bits.hpp"
#include "predkit/cost.hpp"
#include "predkit/graph.hpp"
#include "predkit/instance.hpp"

namespace predkit {

// Outcome of scoring a decision vector. Infeasible solutions carry Infinite cost.
struct Evaluation {
  bool feasible = true;
  Cost cost;
  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// sum of y_i + t * x_i * (1 - y_i).
Cost asg_cost(std::int64_t t, const BitString& x, const BitString& y);
// sum of y_i if no true 1 is guessed 0, otherwise Infinite.
Cost asg_inf_cost(const BitString& x, const BitString& y);
Cost asg_cost(const AsgLevel& level, const BitString& x, const BitString& y);

// Throws PreconditionViolation when the graph exceeds the degree bound.
void require_degree_bound(const Graph& g, std::optional<std::int64_t> bound);

Evaluation vc_check_and_cost(const Graph& g, const BitString& y, std::optional<std::int64_t> t_bound);

bool overlaps(const Interval& a, const Interval& b);
// Largest number of other intervals any single interval overlaps.
std::int64_t max_overlap_count(std::span<const Interval> intervals);
void validate_intervals(std::span<const Interval> intervals);
Evaluation ir_check_and_cost(std::span<const Interval> intervals, const BitString& y,
                             std::optional<std::int64_t> t_bound);

Evaluation spill_check_and_cost(const Graph& g, const BitString& y, std::int64_t k,
                                std::optional<std::int64_t> d_bound);

bool literal_value(const Literal& lit, const BitString& assignment);
bool clause_satisfied(const Clause2& clause, const BitString& assignment);
// Every clause of every request, in request order. Validates that a clause in
// request i only references variables <= i.
std::vector<Clause2> flatten_clauses(std::span<const Sat2Request> requests);
// Throws InvalidInput when a clause references a variable outside the assignment.
Cost sat2_cost(std::span<const Clause2> clauses, const BitString& assignment);

Evaluation dom_check_and_cost(const Graph& g, const BitString& y);

// Scores y on any instance whose decisions are bits (everything except paging).
Evaluation evaluate_decisions(const AnyInstance& instance, const BitString& y);
// Checks problem-specific preconditions (bounds, index ranges). Throws on violation.
void validate_instance(const AnyInstance& instance);

}  // namespace predkit
