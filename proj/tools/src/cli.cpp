#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "predkit/adversaries.hpp"
#include "predkit/algorithms.hpp"
#include "predkit/error.hpp"
#include "predkit/generators.hpp"
#include "predkit/harness.hpp"
#include "predkit/oracles.hpp"
#include "predkit/serialization.hpp"

namespace predkit::cli {

namespace {

using nlohmann::json;

struct Common {
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
  unsigned workers = 0;
};

std::uint64_t seed_from_env() {
  const char* value = std::getenv("PREDKIT_SEED");
  if (value == nullptr || *value == '\0') return 1;
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("PREDKIT_SEED is not an unsigned integer: ") + value);
  }
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "Random seed (default: PREDKIT_SEED or 1)");
  cmd->add_option("--out", common.out_path, "Write the machine-readable artifact to this file");
  cmd->add_option("--format", common.format, "Artifact format")
      ->check(CLI::IsMember({"json", "csv", "jsonl"}));
  cmd->add_option("--workers", common.workers, "Worker threads (0: hardware concurrency)");
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Common& common, const std::string& content, std::ostream& out) {
  if (common.out_path.empty()) return;
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + common.out_path + " for writing");
  file << content;
  out << "wrote " << common.format << " to " << common.out_path << "\n";
}

std::string jsonl_of(const std::vector<AnyInstance>& instances) {
  std::ostringstream s;
  write_jsonl(s, instances);
  return s.str();
}

Corruption corruption_from(double flip, std::int64_t mu0_target, std::int64_t mu1_target) {
  if (mu0_target >= 0 || mu1_target >= 0) {
    return Corruption::exact(std::max<std::int64_t>(mu0_target, 0), std::max<std::int64_t>(mu1_target, 0));
  }
  return flip > 0 ? Corruption::probability(flip) : Corruption::none();
}

// certify -------------------------------------------------------------------

struct CertifyArgs {
  Common common;
  std::string alg;
  std::string problem = "asg";
  std::string t = "2";
  std::int64_t k = 2;
  std::string claim;
  bool strict = false;
  std::string kappa = "0";
  std::size_t exhaustive_n = 0;
  std::size_t samples = 0;
  bool samples_given = false;
  std::size_t n = 8;
  std::vector<std::string> adversaries;
  std::string measures = "mu";
  double flip = 0.3;
  std::int64_t pages = 0;
};

int do_certify(const CertifyArgs& a, std::ostream& out) {
  CertifyConfig config;
  GeneratorConfig& g = config.generator;
  g.problem = parse_problem_id(a.problem);
  g.seed = a.common.seed;
  g.n = a.n;
  g.min_n = 1;
  g.k = a.k;
  g.corruption = Corruption::probability(a.flip);
  if (g.problem == ProblemKind::kAsg) {
    g.level = AsgLevel::parse(a.t);
  } else {
    g.t = AsgLevel::parse(a.t).t();
  }
  if (g.problem == ProblemKind::kPaging) {
    g.pages = a.pages > 0 ? a.pages : 2 * g.t;
    g.min_n = static_cast<std::size_t>(g.t);
  }
  if (a.exhaustive_n > 0) config.exhaustive_n = a.exhaustive_n;
  for (const std::string& id : a.adversaries) config.adversaries.push_back(parse_adversary_id(id));
  config.adversary_n = {a.n};
  config.samples = a.samples_given ? a.samples : (config.exhaustive_n || !config.adversaries.empty() ? 0 : 100);
  config.measure_pair = a.measures;
  config.workers = a.common.workers;
  CompetitiveClaim claim = CompetitiveClaim::parse(a.claim, a.strict, parse_rational(a.kappa));

  ExperimentReport report = certify(a.alg, claim, config);
  out << "certify " << a.alg << " on " << report.problem << " t=" << a.t << " claim " << claim.to_string()
      << " under (" << report.measure_pair << "): " << (report.pass() ? "PASS" : "FAIL") << " ("
      << report.records.size() << " instances, " << report.check.violations << " violations, max slack "
      << report.check.max_slack.to_string() << ")\n";
  if (const RunRecord* w = report.witness_record()) {
    out << "witness " << w->instance_id << ": ALG " << w->alg_cost.to_string() << ", OPT "
        << w->opt_cost.to_string() << ", slack " << slack_of(*w, claim).to_string() << "\n";
    out << "witness instance: " << instance_to_json_line(*report.witness_instance()) << "\n";
  }
  std::string artifact;
  if (a.common.format == "json") {
    artifact = experiment_report_json(report);
  } else if (a.common.format == "csv") {
    artifact = records_csv(report);
  } else {
    std::vector<AnyInstance> witness;
    if (const AnyInstance* w = report.witness_instance()) witness.push_back(*w);
    artifact = jsonl_of(witness);
  }
  emit(a.common, artifact, out);
  return report.pass() ? kExitOk : kExitFail;
}

// check-reduction -----------------------------------------------------------

struct ReductionArgs {
  Common common;
  std::string id;
  std::int64_t t = 3;
  std::int64_t k = 2;
  std::size_t samples = 100;
  std::size_t n = 0;
  std::vector<std::string> algorithms;
  std::string variant = "asymptotic";
  double flip = 0.3;
};

int do_check_reduction(const ReductionArgs& a, std::ostream& out) {
  ReductionCheckConfig config = default_reduction_config(a.id, a.t, a.k, a.common.seed);
  config.samples = a.samples;
  config.algorithms = a.algorithms;
  config.variant = a.variant == "strict" ? ReductionVariant::kStrict : ReductionVariant::kAsymptotic;
  config.workers = a.common.workers;
  config.generator.corruption = Corruption::probability(a.flip);
  if (a.n > 0) config.generator.n = a.n;
  if (a.id == "vc-to-dom" && config.variant == ReductionVariant::kStrict) config.generator.no_isolated = true;

  ReductionReport report = certify_reduction(a.id, config);
  out << "check-reduction " << report.reduction_id << " (" << to_string(report.variant) << "): "
      << (report.pass() ? "PASS" : "FAIL") << " (" << report.applications << " applications over "
      << report.samples << " sources x " << report.algorithms.size() << " algorithms, " << report.violations
      << " violations, " << report.rejections << " rejected by preconditions)\n";
  for (const auto& [name, count] : report.failures_by_condition) {
    out << "  " << name << " failed " << count << " times\n";
  }
  if (report.witness) {
    out << "witness: sample " << report.witness->sample << " with " << report.witness->algorithm << " fails "
        << report.witness->condition << "; source " << instance_to_json_line(report.witness->trace.source) << "\n";
  }
  std::string artifact;
  if (a.common.format == "json") {
    artifact = reduction_report_json(report);
  } else if (a.common.format == "csv") {
    std::ostringstream s;
    s << "condition,failures\n";
    for (const auto& [name, count] : report.failures_by_condition) s << name << ',' << count << '\n';
    artifact = s.str();
  } else {
    // Target instances for the first algorithm, for cross-checking with other tools.
    const std::string& alg = report.algorithms.front();
    GeneratorConfig g = config.generator;
    g.problem = find_reduction(a.id).source;
    std::vector<AnyInstance> targets;
    for (std::size_t i = 0; i < config.samples; ++i) {
      try {
        targets.push_back(apply_reduction(a.id, gen_instance(g, i), alg, config).target);
      } catch (const PreconditionViolation&) {
      }
    }
    artifact = jsonl_of(targets);
  }
  emit(a.common, artifact, out);
  return report.pass() ? kExitOk : kExitFail;
}

// adversary -----------------------------------------------------------------

struct AdversaryArgs {
  Common common;
  std::string adversary = "purely-online";
  std::string alg = "ftp";
  std::string t = "2";
  std::vector<std::size_t> n_values{10};
  std::string claim;
  bool strict = false;
  std::string kappa = "0";
};

int do_adversary(const AdversaryArgs& a, std::ostream& out) {
  AdversaryKind kind = parse_adversary_id(a.adversary);
  AsgLevel level = AsgLevel::parse(a.t);
  auto make = find_algorithm(asg_algorithms(a.common.seed), a.alg).make;
  if (a.claim.empty()) {
    std::vector<AnyInstance> instances;
    bool all_hold = true;
    std::string last_json;
    for (std::size_t n : a.n_values) {
      AdversaryRun r = run_adversary(kind, make, level, n);
      out << a.adversary << " vs " << a.alg << " t=" << level.to_string() << " n=" << n << ": ALG "
          << r.record.alg_cost.to_string() << ", OPT " << r.record.opt_cost.to_string() << ", identity \""
          << r.identity << "\" " << (r.identity_holds ? "holds" : "FAILS") << "\n";
      all_hold = all_hold && r.identity_holds;
      instances.push_back(r.instance);
      last_json = adversary_run_json(r, a.alg);
    }
    std::string artifact;
    if (a.common.format == "jsonl") {
      artifact = jsonl_of(instances);
    } else if (a.common.format == "csv") {
      SlackCurve curve;
      for (std::size_t n : a.n_values) {
        AdversaryRun r = run_adversary(kind, make, level, n);
        curve.points.push_back({n, r.record.opt_cost, r.record.alg_cost, r.record.eta0, r.record.eta1,
                                Slack::difference(r.record.alg_cost, r.record.opt_cost)});
      }
      artifact = slack_curve_csv(curve);
    } else {
      artifact = last_json;
    }
    emit(a.common, artifact, out);
    return all_hold ? kExitOk : kExitFail;
  }
  CompetitiveClaim claim = CompetitiveClaim::parse(a.claim, a.strict, parse_rational(a.kappa));
  SlackCurve curve = grow_slack_curve(kind, make, level, claim, a.n_values);
  for (const SlackPoint& p : curve.points) {
    out << "n=" << p.n << " ALG " << p.alg.to_string() << " OPT " << p.opt.to_string() << " slack "
        << p.slack.to_string() << "\n";
  }
  out << "slope " << (curve.slope ? to_string(*curve.slope) : std::string("undefined")) << ": "
      << (curve.unbounded ? "UNBOUNDED" : "bounded") << "\n";
  std::string artifact;
  if (a.common.format == "csv") {
    artifact = slack_curve_csv(curve);
  } else if (a.common.format == "jsonl") {
    std::vector<AnyInstance> instances;
    for (std::size_t n : a.n_values) instances.push_back(run_adversary(kind, make, level, n).instance);
    artifact = jsonl_of(instances);
  } else {
    artifact = slack_curve_json(curve, kind, a.alg, claim);
  }
  emit(a.common, artifact, out);
  bool violated = curve.unbounded;
  for (const SlackPoint& p : curve.points) violated = violated || !p.slack.within(claim.kappa);
  return violated ? kExitFail : kExitOk;
}

// pareto --------------------------------------------------------------------

std::vector<Rational> rationals(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InvalidInput("empty value list \"" + list + "\"");
  return out;
}

struct ParetoArgs {
  Common common;
  std::int64_t t = 3;
  std::string alphas = "1,2,3";
  std::string betas = "0,1,2";
  std::string gammas = "0,1/2,1";
  std::vector<std::string> algorithms;
  std::size_t exhaustive_n = 6;
  std::size_t samples = 200;
};

int do_pareto(const ParetoArgs& a, std::ostream& out) {
  ParetoConfig config;
  config.level = AsgLevel::finite(a.t);
  if (!a.algorithms.empty()) config.algorithms = a.algorithms;
  config.exhaustive_n = a.exhaustive_n;
  config.samples = a.samples;
  config.seed = a.common.seed;
  config.workers = a.common.workers;
  ParetoReport report =
      pareto_scan(claim_grid(rationals(a.alphas), rationals(a.betas), rationals(a.gammas)), config);
  for (const ParetoCell& c : report.cells) {
    out << "(" << c.claim.alpha.to_string() << ", " << c.claim.beta.to_string() << ", "
        << c.claim.gamma.to_string() << ") " << (c.pass ? "PASS via " + c.passing_algorithm : std::string("FAIL"))
        << (c.undominated ? " [undominated]" : "") << "\n";
  }
  std::string artifact;
  if (a.common.format == "csv") {
    artifact = pareto_csv(report);
  } else if (a.common.format == "jsonl") {
    std::vector<AnyInstance> witnesses;
    for (const ParetoCell& c : report.cells) {
      if (c.witness) witnesses.push_back(*c.witness);
    }
    artifact = jsonl_of(witnesses);
  } else {
    artifact = pareto_report_json(report);
  }
  emit(a.common, artifact, out);
  return kExitOk;
}

// paging-bench --------------------------------------------------------------

struct PagingArgs {
  Common common;
  std::string policy = "fbb";
  std::int64_t t = 5;
  std::int64_t pages = 0;
  std::size_t n = 500;
  std::size_t samples = 200;
  double flip = 0.2;
};

int do_paging_bench(const PagingArgs& a, std::ostream& out) {
  GeneratorConfig g;
  g.problem = ProblemKind::kPaging;
  g.t = a.t;
  g.pages = a.pages > 0 ? a.pages : 2 * a.t;
  g.n = a.n;
  g.seed = a.common.seed;
  g.corruption = Corruption::probability(a.flip);
  if (a.policy == "fbb") {
    g.min_distinct_pages = a.t + 1;
    g.min_n = static_cast<std::size_t>(a.t + 1);
    FbbReport report = fbb_experiment(g, a.samples, a.common.format == "csv", a.common.workers);
    out << "paging-bench fbb t=" << a.t << ": " << report.traces << " traces, " << report.blocks << " blocks, "
        << report.total_violations << " violations of the total bound\n";
    for (const auto& [key, counts] : report.lemma_counts) {
      out << "  " << key << ": " << counts.second << " violations in " << counts.first << " applicable blocks\n";
    }
    std::string artifact;
    if (a.common.format == "csv") {
      artifact = fbb_blocks_csv(report);
    } else if (a.common.format == "jsonl") {
      std::vector<AnyInstance> w;
      if (report.witness) w.push_back(*report.witness);
      artifact = jsonl_of(w);
    } else {
      artifact = fbb_report_json(report);
    }
    emit(a.common, artifact, out);
    bool lemmas_hold = true;
    for (const auto& [key, counts] : report.lemma_counts) lemmas_hold = lemmas_hold && counts.second == 0;
    return report.total_pass() && lemmas_hold ? kExitOk : kExitFail;
  }
  CertifyConfig config;
  config.generator = g;
  config.generator.min_n = static_cast<std::size_t>(a.t);
  config.samples = a.samples;
  config.workers = a.common.workers;
  CompetitiveClaim claim{Cost(1), Cost(a.t - 1), Cost(1), 0, true};
  ExperimentReport report = certify(a.policy, claim, config);
  out << "paging-bench " << a.policy << (a.policy == "fwz" ? "" : " (unvalidated comparison policy)")
      << " k=" << a.t << " claim " << claim.to_string() << ": " << (report.pass() ? "PASS" : "FAIL") << " ("
      << report.records.size() << " traces, " << report.check.violations << " violations)\n";
  std::string artifact;
  if (a.common.format == "csv") {
    artifact = records_csv(report);
  } else if (a.common.format == "jsonl") {
    std::vector<AnyInstance> w;
    if (const AnyInstance* inst = report.witness_instance()) w.push_back(*inst);
    artifact = jsonl_of(w);
  } else {
    artifact = experiment_report_json(report);
  }
  emit(a.common, artifact, out);
  return report.pass() ? kExitOk : kExitFail;
}

// gen -----------------------------------------------------------------------

struct GenArgs {
  Common common;
  std::string problem = "asg";
  std::string t = "2";
  std::int64_t k = 2;
  std::int64_t pages = 0;
  std::size_t n = 8;
  std::size_t count = 10;
  double flip = 0.2;
  std::int64_t mu0 = -1;
  std::int64_t mu1 = -1;
  bool exhaustive = false;
};

int do_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  if (a.common.format == "csv") throw UsageError("gen writes jsonl or json, not csv");
  GeneratorConfig g;
  g.problem = parse_problem_id(a.problem);
  g.seed = a.common.seed;
  g.n = a.n;
  g.k = a.k;
  g.corruption = corruption_from(a.flip, a.mu0, a.mu1);
  if (g.problem == ProblemKind::kAsg) {
    g.level = AsgLevel::parse(a.t);
  } else {
    g.t = AsgLevel::parse(a.t).t();
  }
  if (g.problem == ProblemKind::kPaging) g.pages = a.pages > 0 ? a.pages : 2 * g.t;
  std::vector<AnyInstance> instances;
  if (a.exhaustive) {
    if (g.problem != ProblemKind::kAsg) throw UsageError("--exhaustive applies to asg only");
    for (AsgInstance& inst : asg_exhaustive(g.level, a.n)) instances.emplace_back(std::move(inst));
  } else {
    instances = parallel_map(a.count, [&](std::size_t i) { return gen_instance(g, i); }, a.common.workers);
  }
  std::string artifact;
  if (a.common.format == "json") {
    json array = json::array();
    for (const AnyInstance& inst : instances) array.push_back(json::parse(instance_to_json_line(inst)));
    artifact = array.dump(2) + "\n";
  } else {
    artifact = jsonl_of(instances);
  }
  if (a.common.out_path.empty()) {
    out << artifact;
    err << "generated " << instances.size() << " " << a.problem << " instances\n";
  } else {
    out << "generated " << instances.size() << " " << a.problem << " instances\n";
    emit(a.common, artifact, out);
  }
  return kExitOk;
}

// verify-instances ----------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string in_path;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  std::ifstream file(a.in_path);
  if (!file) throw UsageError("cannot open " + a.in_path);
  std::vector<AnyInstance> instances = read_jsonl(file);
  json failed = json::array();
  std::vector<AnyInstance> failing;
  std::ostringstream csv;
  csv << "index,problem,pass,detail\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    EncodingVerdict v = verify_optimal_encoding(instances[i]);
    csv << i << ',' << problem_id(kind_of(instances[i])) << ',' << (v.pass ? "PASS" : "FAIL") << ",\""
        << v.detail << "\"\n";
    if (!v.pass) {
      failed.push_back({{"index", i}, {"detail", v.detail}, {"instance", json::parse(instance_to_json_line(instances[i]))}});
      failing.push_back(instances[i]);
    }
  }
  out << "verify-instances " << a.in_path << ": " << instances.size() - failing.size() << "/" << instances.size()
      << " optimal encodings" << (failing.empty() ? "" : ", first failure at index " + failed[0]["index"].dump())
      << "\n";
  std::string artifact;
  if (a.common.format == "csv") {
    artifact = csv.str();
  } else if (a.common.format == "jsonl") {
    artifact = jsonl_of(failing);
  } else {
    json report = {{"kind", "verify-instances"},
                   {"instances", instances.size()},
                   {"passed", instances.size() - failing.size()},
                   {"verdict", failing.empty() ? "PASS" : "FAIL"},
                   {"failed", failed}};
    artifact = report.dump(2) + "\n";
  }
  emit(a.common, artifact, out);
  return failing.empty() ? kExitOk : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online problems with binary predictions: certify bounds, check reductions, run adversaries"};
  app.name("predkit");
  app.require_subcommand(1);

  std::uint64_t env_seed = 1;
  try {
    env_seed = seed_from_env();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CertifyArgs certify_args;
  ReductionArgs reduction_args;
  AdversaryArgs adversary_args;
  ParetoArgs pareto_args;
  PagingArgs paging_args;
  GenArgs gen_args;
  VerifyArgs verify_args;
  for (Common* c : {&certify_args.common, &reduction_args.common, &adversary_args.common, &pareto_args.common,
                    &paging_args.common, &gen_args.common, &verify_args.common}) {
    c->seed = env_seed;
  }

  auto* certify_cmd = app.add_subcommand("certify", "Check a competitiveness claim on generated and adversarial instances");
  add_common(certify_cmd, certify_args.common);
  certify_cmd->add_option("--alg", certify_args.alg, "Algorithm id")->required();
  certify_cmd->add_option("--problem", certify_args.problem, "Problem id");
  certify_cmd->add_option("--t", certify_args.t, "ASG level (or inf), degree/overlap bound, or cache size");
  certify_cmd->add_option("--k", certify_args.k, "Colors for k-Spill");
  certify_cmd->add_option("--claim", certify_args.claim, "alpha,beta,gamma")->required();
  certify_cmd->add_flag("--strict", certify_args.strict, "Strict claim (kappa = 0)");
  certify_cmd->add_option("--kappa", certify_args.kappa, "Additive constant for non-strict claims");
  certify_cmd->add_option("--exhaustive-n", certify_args.exhaustive_n, "ASG: every (x, xhat) up to this length");
  auto* samples_opt = certify_cmd->add_option("--samples", certify_args.samples, "Random instances");
  certify_cmd->add_option("--n", certify_args.n, "Instance size for random and adversarial instances");
  certify_cmd->add_option("--adversary", certify_args.adversaries, "Adversary ids to append");
  certify_cmd->add_option("--measures", certify_args.measures, "Measure pair")->check(CLI::IsMember({"mu", "zero"}));
  certify_cmd->add_option("--flip", certify_args.flip, "Prediction flip probability");
  certify_cmd->add_option("--pages", certify_args.pages, "Paging universe size");

  auto* reduction_cmd = app.add_subcommand("check-reduction", "Check reduction conditions on seeded instances");
  add_common(reduction_cmd, reduction_args.common);
  reduction_cmd->add_option("--id", reduction_args.id, "Reduction id")->required();
  reduction_cmd->add_option("--t", reduction_args.t, "Level, bound or cache size");
  reduction_cmd->add_option("--k", reduction_args.k, "Colors for asg-to-spill");
  reduction_cmd->add_option("--samples", reduction_args.samples, "Source instances");
  reduction_cmd->add_option("--n", reduction_args.n, "Largest source size");
  reduction_cmd->add_option("--alg", reduction_args.algorithms, "Target algorithm ids (default: all)");
  reduction_cmd->add_option("--variant", reduction_args.variant, "vc-to-dom variant")
      ->check(CLI::IsMember({"strict", "asymptotic"}));
  reduction_cmd->add_option("--flip", reduction_args.flip, "Prediction flip probability");

  auto* adversary_cmd = app.add_subcommand("adversary", "Run an adaptive adversary, optionally as a slack curve");
  add_common(adversary_cmd, adversary_args.common);
  adversary_cmd->add_option("--adversary", adversary_args.adversary, "Adversary id");
  adversary_cmd->add_option("--alg", adversary_args.alg, "ASG algorithm id");
  adversary_cmd->add_option("--t", adversary_args.t, "ASG level (or inf)");
  adversary_cmd->add_option("--n", adversary_args.n_values, "Instance sizes")->delimiter(',');
  adversary_cmd->add_option("--claim", adversary_args.claim, "alpha,beta,gamma for a slack curve");
  adversary_cmd->add_flag("--strict", adversary_args.strict, "Strict claim");
  adversary_cmd->add_option("--kappa", adversary_args.kappa, "Additive constant");

  auto* pareto_cmd = app.add_subcommand("pareto", "Scan a grid of claims on ASG");
  add_common(pareto_cmd, pareto_args.common);
  pareto_cmd->add_option("--t", pareto_args.t, "ASG level");
  pareto_cmd->add_option("--alphas", pareto_args.alphas, "Comma-separated alpha values");
  pareto_cmd->add_option("--betas", pareto_args.betas, "Comma-separated beta values");
  pareto_cmd->add_option("--gammas", pareto_args.gammas, "Comma-separated gamma values");
  pareto_cmd->add_option("--alg", pareto_args.algorithms, "Algorithm ids (default: all ASG algorithms)");
  pareto_cmd->add_option("--exhaustive-n", pareto_args.exhaustive_n, "Exhaustive suite length");
  pareto_cmd->add_option("--samples", pareto_args.samples, "Random instances per algorithm");

  auto* paging_cmd = app.add_subcommand("paging-bench", "Paging experiments (fbb block lemmas, fwz bound)");
  add_common(paging_cmd, paging_args.common);
  paging_cmd->add_option("--policy", paging_args.policy, "fbb, fwz, lru or fifo")
      ->check(CLI::IsMember({"fbb", "fwz", "lru", "fifo"}));
  paging_cmd->add_option("--t", paging_args.t, "Cache size");
  paging_cmd->add_option("--pages", paging_args.pages, "Universe size (default 2t)");
  paging_cmd->add_option("--n", paging_args.n, "Largest trace length");
  paging_cmd->add_option("--samples", paging_args.samples, "Traces");
  paging_cmd->add_option("--flip", paging_args.flip, "Prediction flip probability");

  auto* gen_cmd = app.add_subcommand("gen", "Generate instances with oracle-verified x");
  add_common(gen_cmd, gen_args.common);
  gen_cmd->add_option("--problem", gen_args.problem, "Problem id");
  gen_cmd->add_option("--t", gen_args.t, "ASG level (or inf), bound or cache size");
  gen_cmd->add_option("--k", gen_args.k, "Colors for k-Spill");
  gen_cmd->add_option("--pages", gen_args.pages, "Paging universe size");
  gen_cmd->add_option("--n", gen_args.n, "Instance size");
  gen_cmd->add_option("--count", gen_args.count, "Number of instances");
  gen_cmd->add_option("--flip", gen_args.flip, "Prediction flip probability");
  gen_cmd->add_option("--mu0", gen_args.mu0, "Exact number of ones predicted 0");
  gen_cmd->add_option("--mu1", gen_args.mu1, "Exact number of zeros predicted 1");
  gen_cmd->add_flag("--exhaustive", gen_args.exhaustive, "ASG: every (x, xhat) of length n");

  auto* verify_cmd = app.add_subcommand("verify-instances", "Check that every instance's x is optimal");
  add_common(verify_cmd, verify_args.common);
  verify_cmd->add_option("--in,input", verify_args.in_path, "JSONL file")->required();

  gen_args.common.format = "jsonl";

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  certify_args.samples_given = samples_opt->count() > 0;

  try {
    if (certify_cmd->parsed()) return do_certify(certify_args, out);
    if (reduction_cmd->parsed()) return do_check_reduction(reduction_args, out);
    if (adversary_cmd->parsed()) return do_adversary(adversary_args, out);
    if (pareto_cmd->parsed()) return do_pareto(pareto_args, out);
    if (paging_cmd->parsed()) return do_paging_bench(paging_args, out);
    if (gen_cmd->parsed()) return do_gen(gen_args, out, err);
    if (verify_cmd->parsed()) return do_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace predkit::cli
