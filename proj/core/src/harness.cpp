#include "predkit/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <numeric>

#include "predkit/algorithms.hpp"
#include "predkit/error.hpp"
#include "predkit/oracles.hpp"
#include "predkit/problems.hpp"

namespace predkit {

unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

namespace {

template <class Req>
std::vector<std::string> ids_of(const std::vector<NamedAlgorithm<Req>>& registry) {
  std::vector<std::string> out;
  for (const auto& entry : registry) out.push_back(entry.id);
  return out;
}

std::unique_ptr<PagingPolicy> make_policy(std::string_view id) {
  if (id == "fwz") return std::make_unique<FwzPolicy>();
  if (id == "fbb") return std::make_unique<FbbPolicy>();
  if (id == "lru") return std::make_unique<LruPolicy>();
  if (id == "fifo") return std::make_unique<FifoPolicy>();
  std::string known;
  for (const std::string& k : known_paging_policy_ids()) known += (known.empty() ? "" : ", ") + k;
  throw InvalidInput("unknown paging policy \"" + std::string(id) + "\"; known: " + known);
}

std::string padded(std::size_t value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%08zu", value);
  return buffer;
}

}  // namespace

std::vector<std::string> known_paging_policy_ids() { return {"fwz", "fbb", "lru", "fifo"}; }

std::vector<std::string> known_algorithm_ids(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::kAsg:
      return ids_of(asg_algorithms());
    case ProblemKind::kVertexCover:
      return ids_of(vc_algorithms());
    case ProblemKind::kIntervalRejection:
      return ids_of(ir_algorithms());
    case ProblemKind::kSpill:
      return ids_of(spill_algorithms(2));
    case ProblemKind::kSat2:
      return ids_of(sat2_algorithms());
    case ProblemKind::kDominatingSet:
      return ids_of(dom_algorithms());
    case ProblemKind::kPaging:
      return known_paging_policy_ids();
  }
  return {};
}

MeasurePair measure_pair_by_name(std::string_view name) {
  if (name == "mu") return mu_pair();
  if (name == "zero") return zero_pair();
  throw InvalidInput("unknown measure pair \"" + std::string(name) + "\"; known: mu, zero");
}

RunRecord run_named(const AnyInstance& instance, std::string_view algorithm, const MeasurePair& pair,
                    std::uint64_t seed) {
  RunRecord record;
  struct Runner {
    std::string_view id;
    std::uint64_t seed;
    BitString operator()(const AsgInstance& inst) const {
      return run_online(find_algorithm(asg_algorithms(seed), id).make, inst.data);
    }
    BitString operator()(const VcInstance& inst) const {
      return run_online(find_algorithm(vc_algorithms(seed), id).make, inst.data);
    }
    BitString operator()(const IrInstance& inst) const {
      return run_online(find_algorithm(ir_algorithms(seed), id).make, inst.data);
    }
    BitString operator()(const SpillInstance& inst) const {
      return run_online(find_algorithm(spill_algorithms(inst.k, seed), id).make, inst.data);
    }
    BitString operator()(const Sat2Instance& inst) const {
      return run_online(find_algorithm(sat2_algorithms(seed), id).make, inst.data);
    }
    BitString operator()(const DomInstance& inst) const {
      return run_online(find_algorithm(dom_algorithms(seed), id).make, inst.data);
    }
    BitString operator()(const PagingInstance&) const { return {}; }
  };
  if (const auto* paging = std::get_if<PagingInstance>(&instance)) {
    paging->data.validate_shape();
    auto policy = make_policy(algorithm);
    PagingRun run = simulate_paging(paging->data.requests, paging->data.xhat, paging->cache_size, *policy);
    record.alg_cost = Cost(run.faults);
    record.decisions = BitString(std::vector<Bit>(run.fault_at.begin(), run.fault_at.end()));
  } else {
    record.decisions = std::visit(Runner{algorithm, seed}, instance);
    record.alg_cost = evaluate_decisions(instance, record.decisions).cost;
  }
  record.opt_cost = exact_opt(instance).opt_cost;
  record.eta0 = pair.eta0.evaluate(truth_bits(instance), predicted_bits(instance));
  record.eta1 = pair.eta1.evaluate(truth_bits(instance), predicted_bits(instance));
  return record;
}

const RunRecord* ExperimentReport::witness_record() const {
  return check.witness ? &records[*check.witness] : nullptr;
}

const AnyInstance* ExperimentReport::witness_instance() const {
  return check.witness ? &instances[*check.witness] : nullptr;
}

ExperimentReport certify(std::string_view algorithm, const CompetitiveClaim& claim, const CertifyConfig& config) {
  claim.validate();
  const MeasurePair pair = measure_pair_by_name(config.measure_pair);
  const GeneratorConfig& gen = config.generator;
  const bool asg = gen.problem == ProblemKind::kAsg;
  if (config.exhaustive_n && !asg) throw InvalidInput("exhaustive suites exist only for asg");
  if (!config.adversaries.empty() && !asg) throw InvalidInput("adversaries exist only for asg");
  if (gen.problem == ProblemKind::kPaging) make_policy(algorithm);

  std::vector<std::pair<std::string, AnyInstance>> suite;
  if (config.exhaustive_n) {
    for (std::size_t n = 1; n <= *config.exhaustive_n; ++n) {
      for (AsgInstance& inst : asg_exhaustive(gen.level, n)) {
        std::string id = "exh/n=" + padded(n) + "/" + inst.data.x.to_string() + "/" + inst.data.xhat.to_string();
        suite.emplace_back(std::move(id), std::move(inst));
      }
    }
  }
  std::vector<AnyInstance> random = parallel_map(
      config.samples, [&](std::size_t i) { return gen_instance(gen, i); }, config.workers);
  for (std::size_t i = 0; i < random.size(); ++i) suite.emplace_back("rnd/" + padded(i), std::move(random[i]));
  if (asg) {
    AlgorithmFactory<AsgPrompt> make = find_algorithm(asg_algorithms(gen.seed), algorithm).make;
    for (AdversaryKind kind : config.adversaries) {
      for (std::size_t n : config.adversary_n) {
        AdversaryRun run = run_adversary(kind, make, gen.level, n);
        suite.emplace_back("adv/" + std::string(adversary_id(kind)) + "/n=" + padded(n), run.instance);
      }
    }
  }
  std::stable_sort(suite.begin(), suite.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  ExperimentReport report;
  report.problem = std::string(problem_id(gen.problem));
  report.algorithm = std::string(algorithm);
  report.claim = claim;
  report.measure_pair = pair.name;
  report.records = parallel_map(
      suite.size(),
      [&](std::size_t i) {
        RunRecord r = run_named(suite[i].second, algorithm, pair, gen.seed);
        r.instance_id = suite[i].first;
        return r;
      },
      config.workers);
  report.instances.reserve(suite.size());
  for (auto& entry : suite) report.instances.push_back(std::move(entry.second));
  report.check = check_claim(report.records, claim);
  return report;
}

std::vector<ReductionInfo> known_reductions() {
  auto asg = ids_of(asg_algorithms());
  return {
      {"asg-to-bdvc", ProblemKind::kAsg, ids_of(vc_algorithms())},
      {"asg-to-ir", ProblemKind::kAsg, ids_of(ir_algorithms())},
      {"asg-to-spill", ProblemKind::kAsg, ids_of(spill_algorithms(2))},
      {"bdvc-to-asg", ProblemKind::kVertexCover, asg},
      {"ir-to-bdvc", ProblemKind::kIntervalRejection, ids_of(vc_algorithms())},
      {"ir-to-sat2", ProblemKind::kIntervalRejection, ids_of(sat2_algorithms())},
      {"vc-to-dom", ProblemKind::kVertexCover, ids_of(dom_algorithms())},
      {"vc-to-asg", ProblemKind::kVertexCover, asg},
      {"pag-to-asg", ProblemKind::kPaging, asg},
      {"asg-step", ProblemKind::kAsg, asg},
      {"asg-to-bdvc-broken", ProblemKind::kAsg, ids_of(vc_algorithms())},
  };
}

const ReductionInfo& find_reduction(std::string_view id) {
  static const std::vector<ReductionInfo> registry = known_reductions();
  for (const ReductionInfo& info : registry) {
    if (info.id == id) return info;
  }
  std::string known;
  for (const ReductionInfo& info : registry) known += (known.empty() ? "" : ", ") + info.id;
  throw InvalidInput("unknown reduction \"" + std::string(id) + "\"; known: " + known);
}

ReductionCheckConfig default_reduction_config(std::string_view id, std::int64_t t, std::int64_t k,
                                              std::uint64_t seed) {
  const ReductionInfo& info = find_reduction(id);
  ReductionCheckConfig config;
  GeneratorConfig& g = config.generator;
  g.problem = info.source;
  g.seed = seed;
  g.t = t;
  g.k = k;
  g.level = AsgLevel::finite(t);
  g.min_n = 1;
  g.corruption = Corruption::probability(0.3);
  if (id == "asg-to-spill") {
    g.n = 3;
  } else if (id == "asg-to-bdvc" || id == "asg-to-bdvc-broken" || id == "asg-to-ir") {
    g.n = 6;
  } else if (id == "vc-to-dom") {
    g.n = 6;
  } else if (id == "ir-to-sat2") {
    g.n = 8;
  } else if (id == "pag-to-asg") {
    g.n = 12;
    g.min_n = static_cast<std::size_t>(t);
    g.pages = 2 * t;
  } else {
    g.n = 10;
  }
  return config;
}

ReductionTrace apply_reduction(std::string_view id, const AnyInstance& source, std::string_view algorithm,
                               const ReductionCheckConfig& config) {
  const std::uint64_t seed = config.generator.seed;
  const ReductionInfo& info = find_reduction(id);
  if (kind_of(source) != info.source) {
    throw InvalidInput("reduction " + info.id + " expects a " + std::string(problem_id(info.source)) + " source");
  }
  auto vc = [&] { return find_algorithm(vc_algorithms(seed), algorithm).make; };
  auto asg = [&] { return find_algorithm(asg_algorithms(seed), algorithm).make; };
  if (id == "asg-to-bdvc") return red_asg_to_bdvc(std::get<AsgInstance>(source), vc());
  if (id == "asg-to-bdvc-broken") return red_asg_to_bdvc_broken(std::get<AsgInstance>(source), vc());
  if (id == "asg-to-ir") {
    return red_asg_to_ir(std::get<AsgInstance>(source), find_algorithm(ir_algorithms(seed), algorithm).make);
  }
  if (id == "asg-to-spill") {
    const std::int64_t k = config.generator.k;
    return red_asg_to_spill(k, std::get<AsgInstance>(source),
                            find_algorithm(spill_algorithms(k, seed), algorithm).make);
  }
  if (id == "bdvc-to-asg") return red_bdvc_to_asg(std::get<VcInstance>(source), asg());
  if (id == "ir-to-bdvc") return red_ir_to_bdvc(std::get<IrInstance>(source), vc());
  if (id == "ir-to-sat2") {
    return red_ir_to_sat2(std::get<IrInstance>(source), find_algorithm(sat2_algorithms(seed), algorithm).make);
  }
  if (id == "vc-to-dom") {
    return red_vc_to_dom(config.variant, std::get<VcInstance>(source),
                         find_algorithm(dom_algorithms(seed), algorithm).make);
  }
  if (id == "vc-to-asg") return red_vc_to_asg(std::get<VcInstance>(source), asg());
  if (id == "pag-to-asg") return red_pag_to_asg(std::get<PagingInstance>(source), asg());
  return red_asg_step(std::get<AsgInstance>(source), asg());
}

namespace {

struct Outcome {
  std::string algorithm;
  bool rejected = false;
  std::string reason;
  std::vector<std::string> failed;
  std::optional<ReductionTrace> trace;  // kept only on a violation
};

}  // namespace

ReductionReport certify_reduction(std::string_view id, const ReductionCheckConfig& config) {
  const ReductionInfo& info = find_reduction(id);
  ReductionReport report;
  report.reduction_id = info.id;
  report.variant = info.id == "vc-to-dom" ? config.variant : ReductionVariant::kStrict;
  report.algorithms = config.algorithms.empty() ? info.default_algorithms : config.algorithms;
  report.samples = config.samples;
  GeneratorConfig gen = config.generator;
  gen.problem = info.source;

  auto outcomes = parallel_map(
      config.samples,
      [&](std::size_t i) {
        std::vector<Outcome> out;
        AnyInstance source = gen_instance(gen, i);
        for (const std::string& alg : report.algorithms) {
          Outcome o;
          o.algorithm = alg;
          try {
            AnyInstance used = source;
            if (config.adversarial && info.source == ProblemKind::kAsg && i % 4 == 3) {
              // Source decisions do not depend on x, so a first pass reveals them.
              ReductionTrace probe = apply_reduction(id, used, alg, config);
              auto& asg = std::get<AsgInstance>(used);
              for (std::size_t j = 0; j < asg.data.size(); ++j) {
                asg.data.x.set(j, static_cast<Bit>(1 - probe.source_decisions[j]));
              }
            }
            ReductionTrace trace = apply_reduction(id, used, alg, config);
            ConditionReport conditions = check_conditions(trace);
            for (const ConditionResult& c : conditions.conditions) {
              if (!c.pass) o.failed.push_back(c.name);
            }
            if (!o.failed.empty()) o.trace = std::move(trace);
          } catch (const PreconditionViolation& e) {
            o.rejected = true;
            o.reason = e.what();
          }
          out.push_back(std::move(o));
        }
        return out;
      },
      config.workers);

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (Outcome& o : outcomes[i]) {
      if (o.rejected) {
        ++report.rejections;
        if (report.rejection_reasons.size() < 5) report.rejection_reasons.push_back(o.reason);
        continue;
      }
      ++report.applications;
      if (o.failed.empty()) continue;
      ++report.violations;
      for (const std::string& name : o.failed) ++report.failures_by_condition[name];
      if (!report.witness) report.witness = ReductionWitness{i, o.algorithm, o.failed.front(), std::move(*o.trace)};
    }
  }
  return report;
}

std::vector<CompetitiveClaim> claim_grid(const std::vector<Rational>& alphas, const std::vector<Rational>& betas,
                                         const std::vector<Rational>& gammas) {
  std::vector<CompetitiveClaim> out;
  for (const Rational& a : alphas) {
    for (const Rational& b : betas) {
      for (const Rational& g : gammas) out.push_back({Cost(a), Cost(b), Cost(g), Rational(0), true});
    }
  }
  return out;
}

ParetoReport pareto_scan(const std::vector<CompetitiveClaim>& grid, const ParetoConfig& config) {
  if (config.level.is_infinite()) throw InvalidInput("pareto_scan needs a finite ASG level");
  CertifyConfig suite;
  suite.generator.problem = ProblemKind::kAsg;
  suite.generator.level = config.level;
  suite.generator.n = config.random_n;
  suite.generator.min_n = 1;
  suite.generator.seed = config.seed;
  suite.generator.corruption = Corruption::probability(0.5);
  suite.samples = config.samples;
  suite.exhaustive_n = config.exhaustive_n;
  suite.adversaries = {AdversaryKind::kPurelyOnline, AdversaryKind::kAllOnesPred, AdversaryKind::kAllZerosPred};
  suite.adversary_n = config.adversary_n;
  suite.workers = config.workers;

  std::vector<ExperimentReport> runs;
  for (const std::string& alg : config.algorithms) {
    runs.push_back(certify(alg, CompetitiveClaim{}, suite));
  }

  ParetoReport report;
  report.level = config.level;
  for (const CompetitiveClaim& claim : grid) {
    ParetoCell cell;
    cell.claim = claim;
    for (const ExperimentReport& run : runs) {
      ClaimCheck check = check_claim(run.records, claim);
      ParetoVerdict verdict{run.algorithm, check.pass, check.max_slack, ""};
      if (check.witness) verdict.witness_id = run.records[*check.witness].instance_id;
      if (check.pass && !cell.pass) {
        cell.pass = true;
        cell.passing_algorithm = run.algorithm;
      }
      if (!check.pass && !cell.witness) {
        cell.witness = run.instances[*check.witness];
        cell.witness_algorithm = run.algorithm;
      }
      cell.verdicts.push_back(std::move(verdict));
    }
    if (cell.pass) {
      cell.witness.reset();
      cell.witness_algorithm.clear();
    }
    report.cells.push_back(std::move(cell));
  }
  for (ParetoCell& cell : report.cells) {
    if (!cell.pass) continue;
    cell.undominated = std::none_of(report.cells.begin(), report.cells.end(), [&](const ParetoCell& other) {
      const CompetitiveClaim& a = other.claim;
      const CompetitiveClaim& b = cell.claim;
      bool at_most = a.alpha <= b.alpha && a.beta <= b.beta && a.gamma <= b.gamma;
      bool differs = !(a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma);
      return other.pass && at_most && differs;
    });
  }
  return report;
}

std::size_t FbbReport::lemma_violations(std::string_view lemma, LfdAttribution attribution) const {
  std::string key = std::string(lemma) + (attribution == LfdAttribution::kGlobal ? "/global" : "/restarted");
  auto it = lemma_counts.find(key);
  return it == lemma_counts.end() ? 0 : it->second.second;
}

FbbReport fbb_experiment(const GeneratorConfig& generator, std::size_t samples, bool keep_all, unsigned workers) {
  if (generator.problem != ProblemKind::kPaging) throw InvalidInput("fbb_experiment needs a paging generator");
  const std::int64_t t = generator.t;
  auto summaries = parallel_map(
      samples,
      [&](std::size_t i) {
        AnyInstance inst = gen_instance(generator, i);
        const auto& data = std::get<PagingInstance>(inst).data;
        FbbRun run = fbb(data.requests, t, data.xhat);
        FbbTraceSummary s;
        s.index = i;
        s.fbb_faults = run.run.faults;
        s.lfd_faults = lfd(data.requests, t).faults;
        s.mu0 = mu0(data.x, data.xhat);
        s.mu1 = mu1(data.x, data.xhat);
        s.bound = fbb_total_bound(t, s.lfd_faults, s.mu0, s.mu1);
        s.total_holds = Rational(s.fbb_faults) <= s.bound;
        s.blocks = fbb_block_stats(data.requests, t, data.xhat, data.x, run);
        for (const FbbBlockStats& b : s.blocks) {
          for (auto& c : check_fbb_lemmas(b, t, LfdAttribution::kRestarted)) s.restarted_checks.push_back(c);
          for (auto& c : check_fbb_lemmas(b, t, LfdAttribution::kGlobal)) s.global_checks.push_back(c);
        }
        return s;
      },
      workers);

  FbbReport report;
  report.t = t;
  report.traces = samples;
  for (FbbTraceSummary& s : summaries) {
    report.blocks += s.blocks.size();
    bool violator = !s.total_holds;
    auto tally = [&](const std::vector<BlockLemmaCheck>& checks, const char* suffix) {
      for (const BlockLemmaCheck& c : checks) {
        if (!c.applies) continue;
        auto& counts = report.lemma_counts[c.lemma + suffix];
        ++counts.first;
        if (!c.holds) {
          ++counts.second;
          violator = true;
        }
      }
    };
    tally(s.restarted_checks, "/restarted");
    tally(s.global_checks, "/global");
    if (!s.total_holds) {
      ++report.total_violations;
      if (!report.witness) report.witness = std::get<PagingInstance>(gen_instance(generator, s.index));
    }
    if (keep_all || violator) report.summaries.push_back(std::move(s));
  }
  return report;
}

}  // namespace predkit
