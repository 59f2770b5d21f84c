#include "predkit/problems.hpp"

#include <algorithm>
#include <string>

#include "predkit/error.hpp"
#include "predkit/oracles.hpp"

namespace predkit {

Cost asg_cost(std::int64_t t, const BitString& x, const BitString& y) {
  if (t < 1) throw InvalidInput("ASG level t must be positive");
  require_same_length(x, y, "asg_cost");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += y[i] + t * x[i] * (1 - y[i]);
  return Cost(total);
}

Cost asg_inf_cost(const BitString& x, const BitString& y) {
  require_same_length(x, y, "asg_inf_cost");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 1 && y[i] == 0) return Cost::infinite();
  }
  return Cost(static_cast<std::int64_t>(y.count_ones()));
}

Cost asg_cost(const AsgLevel& level, const BitString& x, const BitString& y) {
  return level.is_infinite() ? asg_inf_cost(x, y) : asg_cost(level.t(), x, y);
}

void require_degree_bound(const Graph& g, std::optional<std::int64_t> bound) {
  if (bound && static_cast<std::int64_t>(g.max_degree()) > *bound) {
    throw PreconditionViolation("graph has maximum degree " + std::to_string(g.max_degree()) +
                                " above the bound " + std::to_string(*bound));
  }
}

namespace {

void require_decisions(std::size_t n, const BitString& y, std::string_view what) {
  if (y.size() != n) {
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(n) + " decisions, got " +
                       std::to_string(y.size()));
  }
}

Evaluation feasible_with_ones(bool feasible, const BitString& y) {
  if (!feasible) return {false, Cost::infinite()};
  return {true, Cost(static_cast<std::int64_t>(y.count_ones()))};
}

}  // namespace

Evaluation vc_check_and_cost(const Graph& g, const BitString& y, std::optional<std::int64_t> t_bound) {
  require_degree_bound(g, t_bound);
  require_decisions(g.size(), y, "vc_check_and_cost");
  bool feasible = true;
  for (auto [u, v] : g.edges()) {
    if (y[u] == 0 && y[v] == 0) {
      feasible = false;
      break;
    }
  }
  return feasible_with_ones(feasible, y);
}

bool overlaps(const Interval& a, const Interval& b) {
  return std::max(a.left, b.left) < std::min(a.right, b.right);
}

void validate_intervals(std::span<const Interval> intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].left >= intervals[i].right) {
      throw InvalidInput("interval " + std::to_string(i) + " has left >= right");
    }
  }
}

std::int64_t max_overlap_count(std::span<const Interval> intervals) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    std::int64_t count = 0;
    for (std::size_t j = 0; j < intervals.size(); ++j) {
      if (i != j && overlaps(intervals[i], intervals[j])) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

Evaluation ir_check_and_cost(std::span<const Interval> intervals, const BitString& y,
                             std::optional<std::int64_t> t_bound) {
  validate_intervals(intervals);
  if (t_bound && max_overlap_count(intervals) > *t_bound) {
    throw PreconditionViolation("an interval overlaps more than " + std::to_string(*t_bound) + " others");
  }
  require_decisions(intervals.size(), y, "ir_check_and_cost");
  std::vector<Interval> kept;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (y[i] == 0) kept.push_back(intervals[i]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  bool feasible = true;
  for (std::size_t i = 1; i < kept.size(); ++i) {
    // If neighbours are disjoint, right endpoints increase too, so checking neighbours suffices.
    if (kept[i].left < kept[i - 1].right) {
      feasible = false;
      break;
    }
  }
  return feasible_with_ones(feasible, y);
}

Evaluation spill_check_and_cost(const Graph& g, const BitString& y, std::int64_t k,
                                std::optional<std::int64_t> d_bound) {
  if (k < 1) throw InvalidInput("k-Spill requires k >= 1");
  require_degree_bound(g, d_bound);
  require_decisions(g.size(), y, "spill_check_and_cost");
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (y[v] == 0) kept.push_back(v);
  }
  return feasible_with_ones(k_colorable(g.induced(kept), k), y);
}

bool literal_value(const Literal& lit, const BitString& assignment) {
  if (lit.var >= assignment.size()) {
    throw InvalidInput("clause references unknown variable " + std::to_string(lit.var + 1));
  }
  bool v = assignment[lit.var] == 1;
  return lit.negated ? !v : v;
}

bool clause_satisfied(const Clause2& clause, const BitString& assignment) {
  bool a = literal_value(clause.a, assignment);
  bool b = literal_value(clause.b, assignment);
  return a || b;
}

std::vector<Clause2> flatten_clauses(std::span<const Sat2Request> requests) {
  std::vector<Clause2> out;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    for (const Clause2& c : requests[i].clauses) {
      if (c.a.var > i || c.b.var > i) {
        throw InvalidInput("clause in request " + std::to_string(i + 1) +
                           " references a variable not yet revealed");
      }
      out.push_back(c);
    }
  }
  return out;
}

Cost sat2_cost(std::span<const Clause2> clauses, const BitString& assignment) {
  std::int64_t unsatisfied = 0;
  for (const Clause2& c : clauses) {
    if (!clause_satisfied(c, assignment)) ++unsatisfied;
  }
  return Cost(unsatisfied);
}

Evaluation dom_check_and_cost(const Graph& g, const BitString& y) {
  require_decisions(g.size(), y, "dom_check_and_cost");
  bool feasible = true;
  for (std::size_t v = 0; v < g.size() && feasible; ++v) {
    if (y[v] == 1) continue;
    const auto& nbrs = g.neighbors(v);
    feasible = std::any_of(nbrs.begin(), nbrs.end(), [&](std::size_t u) { return y[u] == 1; });
  }
  return feasible_with_ones(feasible, y);
}

namespace {

struct DecisionEvaluator {
  const BitString& y;

  Evaluation operator()(const AsgInstance& inst) const {
    return {true, asg_cost(inst.level, inst.data.x, y)};
  }
  Evaluation operator()(const VcInstance& inst) const {
    return vc_check_and_cost(Graph::from_arrivals(inst.data.requests), y, inst.degree_bound);
  }
  Evaluation operator()(const IrInstance& inst) const {
    return ir_check_and_cost(inst.data.requests, y, inst.overlap_bound);
  }
  Evaluation operator()(const SpillInstance& inst) const {
    return spill_check_and_cost(Graph::from_arrivals(inst.data.requests), y, inst.k, inst.degree_bound);
  }
  Evaluation operator()(const Sat2Instance& inst) const {
    require_decisions(inst.data.size(), y, "sat2_cost");
    return {true, sat2_cost(flatten_clauses(inst.data.requests), y)};
  }
  Evaluation operator()(const DomInstance& inst) const {
    return dom_check_and_cost(Graph::from_arrivals(inst.data.requests), y);
  }
  Evaluation operator()(const PagingInstance&) const {
    throw InvalidInput("paging decisions are evictions, not bits");
  }
};

struct InstanceValidator {
  void operator()(const AsgInstance&) const {}
  void operator()(const VcInstance& inst) const {
    require_degree_bound(Graph::from_arrivals(inst.data.requests), inst.degree_bound);
  }
  void operator()(const IrInstance& inst) const {
    validate_intervals(inst.data.requests);
    if (inst.overlap_bound && max_overlap_count(inst.data.requests) > *inst.overlap_bound) {
      throw PreconditionViolation("an interval overlaps more than the bound allows");
    }
  }
  void operator()(const SpillInstance& inst) const {
    if (inst.k < 1) throw InvalidInput("k-Spill requires k >= 1");
    require_degree_bound(Graph::from_arrivals(inst.data.requests), inst.degree_bound);
  }
  void operator()(const Sat2Instance& inst) const { flatten_clauses(inst.data.requests); }
  void operator()(const DomInstance& inst) const { Graph::from_arrivals(inst.data.requests); }
  void operator()(const PagingInstance& inst) const {
    if (inst.cache_size < 1) throw InvalidInput("cache size must be positive");
  }
};

}  // namespace

Evaluation evaluate_decisions(const AnyInstance& instance, const BitString& y) {
  validate_shape(instance);
  return std::visit(DecisionEvaluator{y}, instance);
}

void validate_instance(const AnyInstance& instance) {
  validate_shape(instance);
  std::visit(InstanceValidator{}, instance);
}

}  // namespace predkit
