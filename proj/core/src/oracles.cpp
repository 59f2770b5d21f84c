#include "predkit/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "predkit/error.hpp"
#include "predkit/paging.hpp"
#include "predkit/problems.hpp"

namespace predkit {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::kExhaustive:
      return "exhaustive";
    case OracleMethod::kSearch:
      return "search";
    case OracleMethod::kGreedy:
      return "greedy";
    case OracleMethod::kLfd:
      return "lfd";
    case OracleMethod::kClosedForm:
      return "closed_form";
  }
  return "?";
}

namespace {

using Evaluator = std::function<Evaluation(const BitString&)>;

Evaluator make_evaluator(const AnyInstance& instance) {
  struct Maker {
    Evaluator operator()(const AsgInstance& inst) const {
      return [level = inst.level, x = inst.data.x](const BitString& y) {
        return Evaluation{true, asg_cost(level, x, y)};
      };
    }
    Evaluator operator()(const VcInstance& inst) const {
      auto g = Graph::from_arrivals(inst.data.requests);
      require_degree_bound(g, inst.degree_bound);
      return [g](const BitString& y) { return vc_check_and_cost(g, y, std::nullopt); };
    }
    Evaluator operator()(const IrInstance& inst) const {
      return [intervals = inst.data.requests](const BitString& y) {
        return ir_check_and_cost(intervals, y, std::nullopt);
      };
    }
    Evaluator operator()(const SpillInstance& inst) const {
      auto g = Graph::from_arrivals(inst.data.requests);
      require_degree_bound(g, inst.degree_bound);
      return [g, k = inst.k](const BitString& y) { return spill_check_and_cost(g, y, k, std::nullopt); };
    }
    Evaluator operator()(const Sat2Instance& inst) const {
      return [clauses = flatten_clauses(inst.data.requests)](const BitString& y) {
        return Evaluation{true, sat2_cost(clauses, y)};
      };
    }
    Evaluator operator()(const DomInstance& inst) const {
      auto g = Graph::from_arrivals(inst.data.requests);
      return [g](const BitString& y) { return dom_check_and_cost(g, y); };
    }
    Evaluator operator()(const PagingInstance&) const {
      throw InvalidInput("brute force is not defined for paging; use LFD");
    }
  };
  return std::visit(Maker{}, instance);
}

BitString from_mask(std::uint64_t mask, std::size_t n) {
  BitString y(n, 0);
  for (std::size_t i = 0; i < n; ++i) y.set(i, static_cast<Bit>((mask >> (n - 1 - i)) & 1U));
  return y;
}

// Colors the component `vertices` (sorted by a good order) by backtracking.
bool color_component(const Graph& g, const std::vector<std::size_t>& order, std::int64_t k) {
  const std::size_t m = order.size();
  std::vector<std::int64_t> color(g.size(), -1);
  std::function<bool(std::size_t, std::int64_t)> assign = [&](std::size_t pos, std::int64_t used) {
    if (pos == m) return true;
    std::size_t v = order[pos];
    std::int64_t limit = std::min(k, used + 1);
    for (std::int64_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (std::size_t u : g.neighbors(v)) {
        if (color[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      if (assign(pos + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return assign(0, 0);
}

}  // namespace

OracleResult brute_force_opt(const AnyInstance& instance) {
  validate_shape(instance);
  const std::size_t n = instance_size(instance);
  if (n > kBruteForceLimit) {
    throw SizeLimitExceeded("brute force limited to " + std::to_string(kBruteForceLimit) +
                            " decisions, instance has " + std::to_string(n));
  }
  Evaluator eval = make_evaluator(instance);
  OracleResult best{Cost::infinite(), BitString(n, 1), OracleMethod::kExhaustive};
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BitString y = from_mask(mask, n);
    Evaluation e = eval(y);
    if (!e.feasible) continue;
    if (!found || e.cost < best.opt_cost) {
      best.opt_cost = e.cost;
      best.witness = y;
      found = true;
    }
  }
  if (!found) throw ConstructionError("no feasible solution found by brute force");
  return best;
}

bool k_colorable(const Graph& g, std::int64_t k) {
  if (k < 1) return g.size() == 0;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (std::size_t u : g.neighbors(component[head])) {
        if (!seen[u]) {
          seen[u] = true;
          component.push_back(u);
        }
      }
    }
    if (static_cast<std::int64_t>(component.size()) <= k) continue;
    if (component.size() > kColoringComponentLimit) {
      throw SizeLimitExceeded("k-colorability limited to components of " +
                              std::to_string(kColoringComponentLimit) + " vertices");
    }
    std::stable_sort(component.begin(), component.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    if (!color_component(g, component, k)) return false;
  }
  return true;
}

OracleResult greedy_ir_opt(std::span<const Interval> intervals) {
  validate_intervals(intervals);
  std::vector<std::size_t> order(intervals.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return intervals[a].right < intervals[b].right;
  });
  BitString rejected(intervals.size(), 1);
  std::optional<std::int64_t> last_right;
  std::int64_t kept = 0;
  for (std::size_t i : order) {
    if (!last_right || intervals[i].left >= *last_right) {
      rejected.set(i, 0);
      last_right = intervals[i].right;
      ++kept;
    }
  }
  return {Cost(static_cast<std::int64_t>(intervals.size()) - kept), rejected, OracleMethod::kGreedy};
}

namespace {

// Iterative deepening over the budget; `feasible_within` returns true and
// fills `chosen` when a solution of size <= budget exists.
template <class Search>
OracleResult deepen(std::size_t n, Search&& feasible_within) {
  for (std::size_t budget = 0; budget <= n; ++budget) {
    std::vector<Bit> chosen(n, 0);
    if (feasible_within(chosen, budget)) {
      BitString witness{std::vector<Bit>(chosen)};
      return {Cost(static_cast<std::int64_t>(witness.count_ones())), witness, OracleMethod::kSearch};
    }
  }
  throw ConstructionError("bounded search found no solution");
}

}  // namespace

OracleResult search_vc_opt(const Graph& g) {
  auto edges = g.edges();
  std::function<bool(std::vector<Bit>&, std::size_t)> solve = [&](std::vector<Bit>& chosen,
                                                                    std::size_t budget) {
    for (auto [u, v] : edges) {
      if (chosen[u] || chosen[v]) continue;
      if (budget == 0) return false;
      for (std::size_t w : {u, v}) {
        chosen[w] = 1;
        if (solve(chosen, budget - 1)) return true;
        chosen[w] = 0;
      }
      return false;
    }
    return true;
  };
  return deepen(g.size(), solve);
}

OracleResult search_dom_opt(const Graph& g) {
  std::function<bool(std::vector<Bit>&, std::size_t)> solve = [&](std::vector<Bit>& chosen,
                                                                    std::size_t budget) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (chosen[v]) continue;
      const auto& nbrs = g.neighbors(v);
      if (std::any_of(nbrs.begin(), nbrs.end(), [&](std::size_t u) { return chosen[u] == 1; })) continue;
      if (budget == 0) return false;
      std::vector<std::size_t> closed(nbrs.begin(), nbrs.end());
      closed.push_back(v);
      std::sort(closed.begin(), closed.end());
      for (std::size_t w : closed) {
        chosen[w] = 1;
        if (solve(chosen, budget - 1)) return true;
        chosen[w] = 0;
      }
      return false;
    }
    return true;
  };
  return deepen(g.size(), solve);
}

OracleResult search_spill_opt(const Graph& g, std::int64_t k) {
  auto remaining_graph = [&](const std::vector<Bit>& removed, std::vector<std::size_t>& kept) {
    kept.clear();
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!removed[v]) kept.push_back(v);
    }
    return g.induced(kept);
  };
  std::function<bool(std::vector<Bit>&, std::size_t)> solve = [&](std::vector<Bit>& removed,
                                                                    std::size_t budget) {
    std::vector<std::size_t> kept;
    Graph rest = remaining_graph(removed, kept);
    if (k_colorable(rest, k)) return true;
    if (budget == 0) return false;
    // Shrink to a vertex-critical obstruction; every solution deletes one of its vertices.
    std::vector<std::size_t> obstruction = kept;
    for (std::size_t i = 0; i < obstruction.size();) {
      std::vector<std::size_t> without = obstruction;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      if (!k_colorable(g.induced(without), k)) {
        obstruction = std::move(without);
      } else {
        ++i;
      }
    }
    for (std::size_t w : obstruction) {
      removed[w] = 1;
      if (solve(removed, budget - 1)) return true;
      removed[w] = 0;
    }
    return false;
  };
  return deepen(g.size(), solve);
}

OracleResult exact_opt(const AnyInstance& instance) {
  validate_instance(instance);
  struct Dispatch {
    OracleResult operator()(const AsgInstance& inst) const {
      return {asg_cost(inst.level, inst.data.x, inst.data.x), inst.data.x, OracleMethod::kClosedForm};
    }
    OracleResult operator()(const VcInstance& inst) const {
      return search_vc_opt(Graph::from_arrivals(inst.data.requests));
    }
    OracleResult operator()(const IrInstance& inst) const { return greedy_ir_opt(inst.data.requests); }
    OracleResult operator()(const SpillInstance& inst) const {
      return search_spill_opt(Graph::from_arrivals(inst.data.requests), inst.k);
    }
    OracleResult operator()(const Sat2Instance& inst) const { return brute_force_opt(AnyInstance(inst)); }
    OracleResult operator()(const DomInstance& inst) const {
      return search_dom_opt(Graph::from_arrivals(inst.data.requests));
    }
    OracleResult operator()(const PagingInstance& inst) const {
      LfdRun run = lfd(inst.data.requests, inst.cache_size);
      return {Cost(run.faults), run.labels, OracleMethod::kLfd};
    }
  };
  return std::visit(Dispatch{}, instance);
}

EncodingVerdict verify_optimal_encoding(const AnyInstance& instance) {
  EncodingVerdict verdict;
  if (const auto* paging = std::get_if<PagingInstance>(&instance)) {
    paging->data.validate_shape();
    LfdRun run = lfd(paging->data.requests, paging->cache_size);
    verdict.feasible = true;
    verdict.opt_cost = Cost(run.faults);
    verdict.x_cost = verdict.opt_cost;
    verdict.pass = run.labels == paging->data.x;
    if (!verdict.pass) verdict.detail = "x differs from lfd_labels " + run.labels.to_string();
    return verdict;
  }
  OracleResult opt = exact_opt(instance);
  Evaluation e = evaluate_decisions(instance, truth_bits(instance));
  verdict.feasible = e.feasible;
  verdict.x_cost = e.cost;
  verdict.opt_cost = opt.opt_cost;
  verdict.pass = e.feasible && e.cost == opt.opt_cost;
  if (!e.feasible) {
    verdict.detail = "x is infeasible";
  } else if (!verdict.pass) {
    verdict.detail = "x costs " + e.cost.to_string() + " but the optimum is " + opt.opt_cost.to_string();
  }
  return verdict;
}

}  // namespace predkit
