#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "predkit/adversaries.hpp"
#include "predkit/claim.hpp"
#include "predkit/generators.hpp"
#include "predkit/instance.hpp"
#include "predkit/measures.hpp"
#include "predkit/paging.hpp"
#include "predkit/paging_policies.hpp"
#include "predkit/reductions.hpp"

namespace predkit {

unsigned default_workers();

// Applies f to 0..count-1 on `workers` threads and returns the results in
// index order. The first exception (by index) is rethrown.
template <class F>
auto parallel_map(std::size_t count, F&& f, unsigned workers = 0) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

// Algorithm ids accepted for instances of `problem`. Paging uses the policy ids.
std::vector<std::string> known_algorithm_ids(ProblemKind problem);
std::vector<std::string> known_paging_policy_ids();

// Runs the named algorithm on the instance and scores it with `pair`.
RunRecord run_named(const AnyInstance& instance, std::string_view algorithm, const MeasurePair& pair,
                    std::uint64_t seed = 1);

struct CertifyConfig {
  GeneratorConfig generator;
  std::size_t samples = 0;                    // random instances
  std::optional<std::size_t> exhaustive_n;    // ASG: every (x, xhat) of length 1..n
  std::vector<AdversaryKind> adversaries;     // ASG only; appended to the suite
  std::vector<std::size_t> adversary_n{10, 100};
  std::string measure_pair = "mu";            // "mu" or "zero"
  unsigned workers = 0;
};

struct ExperimentReport {
  std::string problem;
  std::string algorithm;
  CompetitiveClaim claim;
  std::string measure_pair;
  std::vector<RunRecord> records;      // sorted by instance id
  std::vector<AnyInstance> instances;  // parallel to records
  ClaimCheck check;

  bool pass() const { return check.pass; }
  const RunRecord* witness_record() const;
  const AnyInstance* witness_instance() const;
};

MeasurePair measure_pair_by_name(std::string_view name);

// Adversary instances requested in the config are always added to the suite.
ExperimentReport certify(std::string_view algorithm, const CompetitiveClaim& claim, const CertifyConfig& config);

struct ReductionInfo {
  std::string id;
  ProblemKind source;
  std::vector<std::string> default_algorithms;
};
std::vector<ReductionInfo> known_reductions();
const ReductionInfo& find_reduction(std::string_view id);

struct ReductionCheckConfig {
  GeneratorConfig generator;  // source problem parameters; n is the largest source size
  std::size_t samples = 100;
  std::vector<std::string> algorithms;  // empty: the reduction's defaults
  ReductionVariant variant = ReductionVariant::kAsymptotic;  // vc-to-dom only
  // Every fourth ASG source is made adaptive against the target algorithm.
  bool adversarial = true;
  unsigned workers = 0;
};

// Source sizes that keep every target inside the exact oracles' limits.
ReductionCheckConfig default_reduction_config(std::string_view id, std::int64_t t, std::int64_t k,
                                              std::uint64_t seed);

// Applies reduction `id` to one source instance with the named target algorithm.
ReductionTrace apply_reduction(std::string_view id, const AnyInstance& source, std::string_view algorithm,
                               const ReductionCheckConfig& config);

struct ReductionWitness {
  std::size_t sample = 0;
  std::string algorithm;
  std::string condition;
  ReductionTrace trace;
};

struct ReductionReport {
  std::string reduction_id;
  ReductionVariant variant = ReductionVariant::kStrict;
  std::vector<std::string> algorithms;
  std::size_t samples = 0;
  std::size_t applications = 0;
  std::size_t violations = 0;  // applications with at least one failed condition
  std::size_t rejections = 0;  // sources refused by a precondition
  std::vector<std::string> rejection_reasons;  // first few, in order
  std::map<std::string, std::size_t> failures_by_condition;
  std::optional<ReductionWitness> witness;  // first violation in sample order

  bool pass() const { return violations == 0; }
};

ReductionReport certify_reduction(std::string_view id, const ReductionCheckConfig& config);

struct ParetoConfig {
  AsgLevel level = AsgLevel::finite(3);
  std::vector<std::string> algorithms{"ftp", "always-zero", "always-one", "contrarian", "hashed"};
  std::size_t exhaustive_n = 6;
  std::size_t samples = 200;
  std::size_t random_n = 12;
  std::vector<std::size_t> adversary_n{10, 50, 100};
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct ParetoVerdict {
  std::string algorithm;
  bool pass = false;
  Slack max_slack;
  std::string witness_id;
};

struct ParetoCell {
  CompetitiveClaim claim;
  std::vector<ParetoVerdict> verdicts;
  bool pass = false;
  std::string passing_algorithm;
  bool undominated = false;  // PASS and no other PASS cell is coordinatewise at most this one
  std::optional<AnyInstance> witness;  // FAIL: the worst instance for the first algorithm
  std::string witness_algorithm;
};

struct ParetoReport {
  AsgLevel level;
  std::vector<ParetoCell> cells;
};

std::vector<CompetitiveClaim> claim_grid(const std::vector<Rational>& alphas, const std::vector<Rational>& betas,
                                         const std::vector<Rational>& gammas);

ParetoReport pareto_scan(const std::vector<CompetitiveClaim>& grid, const ParetoConfig& config);

struct FbbTraceSummary {
  std::size_t index = 0;
  std::int64_t fbb_faults = 0;
  std::int64_t lfd_faults = 0;
  std::int64_t mu0 = 0;
  std::int64_t mu1 = 0;
  Rational bound{0};
  bool total_holds = true;
  std::vector<FbbBlockStats> blocks;
  std::vector<BlockLemmaCheck> restarted_checks;
  std::vector<BlockLemmaCheck> global_checks;
};

struct FbbReport {
  std::int64_t t = 0;
  std::size_t traces = 0;
  std::size_t blocks = 0;
  std::size_t total_violations = 0;
  // "<lemma>/<restarted|global>" -> (applicable checks, violations)
  std::map<std::string, std::pair<std::size_t, std::size_t>> lemma_counts;
  std::vector<FbbTraceSummary> summaries;  // kept for every trace when requested, else only violators
  std::optional<PagingInstance> witness;   // first trace violating the total bound

  bool total_pass() const { return total_violations == 0; }
  std::size_t lemma_violations(std::string_view lemma, LfdAttribution attribution) const;
};

// generator.problem must be paging; generator.t is the cache size.
FbbReport fbb_experiment(const GeneratorConfig& generator, std::size_t samples, bool keep_all = false,
                         unsigned workers = 0);

}  // namespace predkit
