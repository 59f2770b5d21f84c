#include "predkit/generators.hpp"

#include <algorithm>
#include <numeric>

#include "predkit/algorithms.hpp"
#include "predkit/error.hpp"
#include "predkit/graph.hpp"
#include "predkit/oracles.hpp"
#include "predkit/paging.hpp"
#include "predkit/problems.hpp"

namespace predkit {

BitString corrupt(const BitString& x, const Corruption& corruption, std::mt19937_64& rng) {
  BitString xhat = x;
  switch (corruption.mode) {
    case Corruption::Mode::kNone:
      break;
    case Corruption::Mode::kExact: {
      std::vector<std::size_t> ones;
      std::vector<std::size_t> zeros;
      for (std::size_t i = 0; i < x.size(); ++i) (x[i] ? ones : zeros).push_back(i);
      if (corruption.mu0 < 0 || corruption.mu1 < 0 ||
          corruption.mu0 > static_cast<std::int64_t>(ones.size()) ||
          corruption.mu1 > static_cast<std::int64_t>(zeros.size())) {
        throw InvalidInput("corruption target (" + std::to_string(corruption.mu0) + ", " +
                           std::to_string(corruption.mu1) + ") unreachable with " +
                           std::to_string(ones.size()) + " ones and " + std::to_string(zeros.size()) +
                           " zeros");
      }
      std::vector<std::size_t> picked;
      std::sample(ones.begin(), ones.end(), std::back_inserter(picked), corruption.mu0, rng);
      std::sample(zeros.begin(), zeros.end(), std::back_inserter(picked), corruption.mu1, rng);
      for (std::size_t i : picked) xhat.set(i, static_cast<Bit>(1 - x[i]));
      break;
    }
    case Corruption::Mode::kProbability: {
      if (corruption.flip_probability < 0 || corruption.flip_probability > 1) {
        throw InvalidInput("flip probability must lie in [0, 1]");
      }
      std::bernoulli_distribution flip(corruption.flip_probability);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (flip(rng)) xhat.set(i, static_cast<Bit>(1 - x[i]));
      }
      break;
    }
  }
  return xhat;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  return mix64(mix64(seed) ^ (static_cast<std::uint64_t>(index) + 0x9e3779b97f4a7c15ULL));
}

namespace {

std::vector<VertexArrival> random_graph(std::size_t n, std::optional<std::int64_t> degree_bound, double p,
                                        std::mt19937_64& rng, bool no_isolated = false) {
  std::bernoulli_distribution edge(p);
  std::vector<std::size_t> degree(n, 0);
  std::vector<VertexArrival> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!edge(rng)) continue;
      if (degree_bound && (static_cast<std::int64_t>(degree[i]) >= *degree_bound ||
                           static_cast<std::int64_t>(degree[j]) >= *degree_bound)) {
        continue;
      }
      out[i].back_edges.push_back(j);
      ++degree[i];
      ++degree[j];
    }
  }
  if (no_isolated && n >= 2) {
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] > 0) continue;
      std::vector<std::size_t> room;
      for (std::size_t u = 0; u < n; ++u) {
        if (u != v && (!degree_bound || static_cast<std::int64_t>(degree[u]) < *degree_bound)) room.push_back(u);
      }
      if (room.empty()) continue;
      std::size_t u = room[std::uniform_int_distribution<std::size_t>(0, room.size() - 1)(rng)];
      auto& later = out[std::max(u, v)].back_edges;
      later.insert(std::upper_bound(later.begin(), later.end(), std::min(u, v)), std::min(u, v));
      ++degree[u];
      ++degree[v];
    }
  }
  return out;
}

std::vector<Interval> random_intervals(std::size_t n, std::optional<std::int64_t> overlap_bound,
                                       std::mt19937_64& rng) {
  const auto span = static_cast<std::int64_t>(2 * n + 4);
  std::uniform_int_distribution<std::int64_t> start(0, span);
  std::uniform_int_distribution<std::int64_t> length(1, 6);
  std::vector<Interval> out;
  while (out.size() < n) {
    Interval candidate{start(rng), 0};
    candidate.right = candidate.left + length(rng);
    out.push_back(candidate);
    if (overlap_bound && max_overlap_count(out) > *overlap_bound) out.pop_back();
  }
  return out;
}

std::vector<Sat2Request> random_formula(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> clause_count(1, 2);
  std::bernoulli_distribution negate(0.5);
  std::vector<Sat2Request> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> var(0, i);
    int m = clause_count(rng);
    for (int c = 0; c < m; ++c) {
      // Each clause mentions the newly revealed variable.
      Literal a{i, negate(rng)};
      Literal b{var(rng), negate(rng)};
      out[i].clauses.push_back({a, b, ClauseKind::kGeneral});
    }
  }
  return out;
}

std::vector<PageId> random_trace(const GeneratorConfig& config, std::size_t n, std::mt19937_64& rng) {
  const std::int64_t need = config.min_distinct_pages > 0 ? config.min_distinct_pages : config.t;
  if (config.pages < need) {
    throw InvalidInput("paging universe of " + std::to_string(config.pages) + " pages cannot reach " +
                       std::to_string(need) + " distinct pages");
  }
  if (static_cast<std::int64_t>(n) < need) {
    throw InvalidInput("trace length " + std::to_string(n) + " cannot reach " + std::to_string(need) +
                       " distinct pages");
  }
  std::uniform_int_distribution<PageId> page(0, config.pages - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<PageId> trace(n);
    for (PageId& p : trace) p = page(rng);
    if (static_cast<std::int64_t>(distinct_pages(trace)) >= need) return trace;
  }
  throw InvalidInput("could not draw a trace with " + std::to_string(need) + " distinct pages");
}

template <class Req>
PredictedInstance<Req> with_truth(std::vector<Req> requests, BitString x, const Corruption& corruption,
                                  std::mt19937_64& rng) {
  PredictedInstance<Req> data;
  data.requests = std::move(requests);
  data.xhat = corrupt(x, corruption, rng);
  data.x = std::move(x);
  return data;
}

}  // namespace

AnyInstance gen_instance(const GeneratorConfig& config, std::size_t index) {
  std::mt19937_64 rng(instance_seed(config.seed, index));
  std::size_t n = config.n;
  if (config.min_n > 0 && config.min_n < config.n) {
    n = std::uniform_int_distribution<std::size_t>(config.min_n, config.n)(rng);
  }
  std::optional<std::int64_t> bound;
  if (config.bounded) bound = config.t;
  AnyInstance out;
  switch (config.problem) {
    case ProblemKind::kAsg: {
      std::bernoulli_distribution coin(0.5);
      BitString x;
      for (std::size_t i = 0; i < n; ++i) x.push_back(coin(rng) ? 1 : 0);
      out = AsgInstance{config.level, with_truth(std::vector<AsgPrompt>(n), x, config.corruption, rng)};
      break;
    }
    case ProblemKind::kVertexCover: {
      auto arrivals = random_graph(n, bound, config.edge_probability, rng, config.no_isolated);
      BitString x = search_vc_opt(Graph::from_arrivals(arrivals)).witness;
      out = VcInstance{bound, with_truth(std::move(arrivals), x, config.corruption, rng)};
      break;
    }
    case ProblemKind::kDominatingSet: {
      auto arrivals = random_graph(n, std::nullopt, config.edge_probability, rng);
      BitString x = search_dom_opt(Graph::from_arrivals(arrivals)).witness;
      out = DomInstance{with_truth(std::move(arrivals), x, config.corruption, rng)};
      break;
    }
    case ProblemKind::kSpill: {
      auto arrivals = random_graph(n, config.t, config.edge_probability, rng);
      BitString x = search_spill_opt(Graph::from_arrivals(arrivals), config.k).witness;
      out = SpillInstance{config.k, config.t, with_truth(std::move(arrivals), x, config.corruption, rng)};
      break;
    }
    case ProblemKind::kIntervalRejection: {
      auto intervals = random_intervals(n, bound, rng);
      BitString x = greedy_ir_opt(intervals).witness;
      out = IrInstance{bound, with_truth(std::move(intervals), x, config.corruption, rng)};
      break;
    }
    case ProblemKind::kSat2: {
      auto requests = random_formula(n, rng);
      Sat2Instance probe{{BitString(n, 0), BitString(n, 0), requests}};
      BitString x = brute_force_opt(probe).witness;
      out = Sat2Instance{with_truth(std::move(requests), x, config.corruption, rng)};
      break;
    }
    case ProblemKind::kPaging: {
      if (config.t < 1) throw InvalidInput("cache size must be at least 1");
      auto trace = random_trace(config, n, rng);
      BitString x = lfd_labels(trace, config.t);
      out = PagingInstance{config.t, with_truth(std::move(trace), x, config.corruption, rng)};
      break;
    }
  }
  EncodingVerdict verdict = verify_optimal_encoding(out);
  if (!verdict.pass) throw ConstructionError("generated instance failed the encoding check: " + verdict.detail);
  return out;
}

std::vector<AnyInstance> gen_instances(const GeneratorConfig& config, std::size_t count) {
  std::vector<AnyInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen_instance(config, i));
  return out;
}

std::vector<AsgInstance> asg_exhaustive(const AsgLevel& level, std::size_t n) {
  if (n > 12) throw SizeLimitExceeded("exhaustive ASG enumeration is limited to n <= 12");
  const std::uint64_t size = std::uint64_t{1} << n;
  auto bits = [n](std::uint64_t mask) {
    BitString b(n, 0);
    for (std::size_t i = 0; i < n; ++i) b.set(i, static_cast<Bit>((mask >> (n - 1 - i)) & 1U));
    return b;
  };
  std::vector<AsgInstance> out;
  out.reserve(size * size);
  for (std::uint64_t xm = 0; xm < size; ++xm) {
    for (std::uint64_t hm = 0; hm < size; ++hm) {
      out.push_back(AsgInstance{level, {bits(xm), bits(hm), std::vector<AsgPrompt>(n)}});
    }
  }
  return out;
}

}  // namespace predkit
