#include "predkit/serialization.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "predkit/error.hpp"

namespace predkit {

using nlohmann::json;

namespace {

json optional_int(const std::optional<std::int64_t>& value) { return value ? json(*value) : json(nullptr); }

json requests_json(const AnyInstance& instance) {
  json out = json::array();
  auto graph = [&](const std::vector<VertexArrival>& arrivals) {
    for (const VertexArrival& v : arrivals) out.push_back(v.back_edges);
  };
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, AsgInstance>) {
          for (std::size_t i = 0; i < inst.data.size(); ++i) out.push_back(nullptr);
        } else if constexpr (std::is_same_v<T, IrInstance>) {
          for (const Interval& s : inst.data.requests) out.push_back({s.left, s.right});
        } else if constexpr (std::is_same_v<T, Sat2Instance>) {
          for (const Sat2Request& r : inst.data.requests) {
            json clauses = json::array();
            for (const Clause2& c : r.clauses) {
              auto signed_var = [](const Literal& l) {
                auto v = static_cast<std::int64_t>(l.var) + 1;
                return l.negated ? -v : v;
              };
              json clause = {signed_var(c.a), signed_var(c.b)};
              if (c.kind == ClauseKind::kInterval) clause.push_back("interval");
              if (c.kind == ClauseKind::kCollision) clause.push_back("collision");
              clauses.push_back(clause);
            }
            out.push_back(clauses);
          }
        } else if constexpr (std::is_same_v<T, PagingInstance>) {
          for (PageId p : inst.data.requests) out.push_back(p);
        } else {
          graph(inst.data.requests);
        }
      },
      instance);
  return out;
}

json instance_json(const AnyInstance& instance) {
  json out;
  out["problem"] = problem_id(kind_of(instance));
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, AsgInstance>) {
          out["t_or_k"] = inst.level.is_infinite() ? json("inf") : json(inst.level.t());
        } else if constexpr (std::is_same_v<T, VcInstance>) {
          out["t_or_k"] = optional_int(inst.degree_bound);
        } else if constexpr (std::is_same_v<T, IrInstance>) {
          out["t_or_k"] = optional_int(inst.overlap_bound);
        } else if constexpr (std::is_same_v<T, SpillInstance>) {
          out["t_or_k"] = inst.k;
          out["degree_bound"] = optional_int(inst.degree_bound);
        } else if constexpr (std::is_same_v<T, PagingInstance>) {
          out["t_or_k"] = inst.cache_size;
        } else {
          out["t_or_k"] = nullptr;
        }
      },
      instance);
  out["x"] = truth_bits(instance).to_string();
  out["xhat"] = predicted_bits(instance).to_string();
  out["requests"] = requests_json(instance);
  return out;
}

std::optional<std::int64_t> read_optional_int(const json& value, const char* what) {
  if (value.is_null()) return std::nullopt;
  if (!value.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer or null");
  return value.get<std::int64_t>();
}

std::size_t read_index(const json& value) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw InvalidInput("vertex index must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

std::vector<VertexArrival> read_graph(const json& requests) {
  std::vector<VertexArrival> out;
  for (const json& r : requests) {
    if (!r.is_array()) throw InvalidInput("graph requests must be lists of earlier neighbours");
    VertexArrival v;
    for (const json& e : r) v.back_edges.push_back(read_index(e));
    out.push_back(std::move(v));
  }
  return out;
}

Literal read_literal(const json& value) {
  if (!value.is_number_integer() || value.get<std::int64_t>() == 0) {
    throw InvalidInput("literals must be nonzero signed integers");
  }
  auto v = value.get<std::int64_t>();
  return Literal{static_cast<std::size_t>((v < 0 ? -v : v) - 1), v < 0};
}

template <class Req>
PredictedInstance<Req> with_bits(const json& j, std::vector<Req> requests) {
  PredictedInstance<Req> data;
  data.x = BitString::parse(j.at("x").get<std::string>());
  data.xhat = BitString::parse(j.at("xhat").get<std::string>());
  data.requests = std::move(requests);
  data.validate_shape();
  return data;
}

AnyInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("instance must be a JSON object");
  for (const char* key : {"problem", "t_or_k", "x", "xhat", "requests"}) {
    if (!j.contains(key)) throw InvalidInput(std::string("instance is missing \"") + key + "\"");
  }
  const json& requests = j.at("requests");
  if (!requests.is_array()) throw InvalidInput("\"requests\" must be an array");
  const json& tk = j.at("t_or_k");
  switch (parse_problem_id(j.at("problem").get<std::string>())) {
    case ProblemKind::kAsg: {
      AsgLevel level = tk.is_string() ? AsgLevel::parse(tk.get<std::string>())
                                      : AsgLevel::finite(read_optional_int(tk, "t_or_k").value_or(0));
      for (const json& r : requests) {
        if (!r.is_null()) throw InvalidInput("ASG requests must be null");
      }
      return AsgInstance{level, with_bits(j, std::vector<AsgPrompt>(requests.size()))};
    }
    case ProblemKind::kVertexCover:
      return VcInstance{read_optional_int(tk, "t_or_k"), with_bits(j, read_graph(requests))};
    case ProblemKind::kDominatingSet:
      return DomInstance{with_bits(j, read_graph(requests))};
    case ProblemKind::kSpill: {
      auto k = read_optional_int(tk, "t_or_k");
      if (!k) throw InvalidInput("spill instances need t_or_k = k");
      std::optional<std::int64_t> bound;
      if (j.contains("degree_bound")) bound = read_optional_int(j.at("degree_bound"), "degree_bound");
      return SpillInstance{*k, bound, with_bits(j, read_graph(requests))};
    }
    case ProblemKind::kIntervalRejection: {
      std::vector<Interval> intervals;
      for (const json& r : requests) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
          throw InvalidInput("intervals must be [left, right] integer pairs");
        }
        intervals.push_back({r[0].get<std::int64_t>(), r[1].get<std::int64_t>()});
      }
      return IrInstance{read_optional_int(tk, "t_or_k"), with_bits(j, std::move(intervals))};
    }
    case ProblemKind::kSat2: {
      std::vector<Sat2Request> out;
      for (const json& r : requests) {
        if (!r.is_array()) throw InvalidInput("2SAT requests must be lists of clauses");
        Sat2Request request;
        for (const json& c : r) {
          if (!c.is_array() || c.size() < 2 || c.size() > 3) throw InvalidInput("clauses must be [a, b] or [a, b, tag]");
          Clause2 clause{read_literal(c[0]), read_literal(c[1]), ClauseKind::kGeneral};
          if (c.size() == 3) {
            std::string tag = c[2].get<std::string>();
            if (tag == "interval") {
              clause.kind = ClauseKind::kInterval;
            } else if (tag == "collision") {
              clause.kind = ClauseKind::kCollision;
            } else {
              throw InvalidInput("unknown clause tag \"" + tag + "\"");
            }
          }
          request.clauses.push_back(clause);
        }
        out.push_back(std::move(request));
      }
      return Sat2Instance{with_bits(j, std::move(out))};
    }
    case ProblemKind::kPaging: {
      auto size = read_optional_int(tk, "t_or_k");
      if (!size) throw InvalidInput("paging instances need t_or_k = cache size");
      std::vector<PageId> trace;
      for (const json& r : requests) {
        if (!r.is_number_integer()) throw InvalidInput("pages must be integers");
        trace.push_back(r.get<PageId>());
      }
      return PagingInstance{*size, with_bits(j, std::move(trace))};
    }
  }
  throw InvalidInput("unknown problem");
}

json claim_json(const CompetitiveClaim& claim) {
  return {{"alpha", claim.alpha.to_string()},
          {"beta", claim.beta.to_string()},
          {"gamma", claim.gamma.to_string()},
          {"kappa", to_string(claim.kappa)},
          {"strict", claim.strict}};
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

json record_json(const RunRecord& r, const CompetitiveClaim& claim) {
  return {{"instance_id", r.instance_id},
          {"alg", r.alg_cost.to_string()},
          {"opt", r.opt_cost.to_string()},
          {"eta0", to_string(r.eta0)},
          {"eta1", to_string(r.eta1)},
          {"slack", slack_of(r, claim).to_string()},
          {"decisions", r.decisions.to_string()}};
}

json trace_json(const ReductionTrace& t) {
  json out;
  out["reduction"] = t.reduction_id;
  out["variant"] = to_string(t.variant);
  out["source"] = instance_json(t.source);
  out["target"] = instance_json(t.target);
  out["source_decisions"] = t.source_decisions.to_string();
  out["target_decisions"] = t.target_decisions.to_string();
  out["alg_source"] = t.alg_source.to_string();
  out["alg_target"] = t.alg_target.to_string();
  out["opt_source"] = t.opt_source.to_string();
  out["opt_target"] = t.opt_target.to_string();
  out["a"] = to_string(t.a);
  out["b"] = to_string(t.b);
  out["target_encoding_optimal"] = t.target_encoding_optimal;
  out["measures"] = json::array();
  for (const MeasureScores& m : t.measures) {
    out["measures"].push_back({{"pair", m.pair},
                               {"source_eta0", to_string(m.source_eta0)},
                               {"source_eta1", to_string(m.source_eta1)},
                               {"target_phi0", to_string(m.target_phi0)},
                               {"target_phi1", to_string(m.target_phi1)}});
  }
  out["conditions"] = json::array();
  for (const ConditionResult& c : check_conditions(t).conditions) {
    out["conditions"].push_back({{"name", c.name}, {"pass", c.pass}, {"margin", c.margin.to_string()}});
  }
  out["groups"] = json::array();
  for (const GroupRow& g : t.groups) {
    out["groups"].push_back({{"opt_source", g.opt_source.to_string()},
                             {"alg_source", g.alg_source.to_string()},
                             {"opt_target", g.opt_target.to_string()},
                             {"alg_target", g.alg_target.to_string()}});
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string instance_to_json_line(const AnyInstance& instance) { return instance_json(instance).dump(); }

AnyInstance instance_from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

void write_jsonl(std::ostream& out, std::span<const AnyInstance> instances) {
  for (const AnyInstance& inst : instances) out << instance_to_json_line(inst) << '\n';
}

std::vector<AnyInstance> read_jsonl(std::istream& in) {
  std::vector<AnyInstance> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(instance_from_json_line(line));
    } catch (const Error& e) {
      throw InvalidInput("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string trace_to_json(const ReductionTrace& trace) { return dump(trace_json(trace)); }

std::string experiment_report_json(const ExperimentReport& report, bool include_records) {
  json out;
  out["kind"] = "certify";
  out["problem"] = report.problem;
  out["algorithm"] = report.algorithm;
  out["claim"] = claim_json(report.claim);
  out["measure_pair"] = report.measure_pair;
  out["verdict"] = verdict(report.pass());
  out["instances"] = report.records.size();
  out["violations"] = report.check.violations;
  out["tight"] = report.check.tight;
  out["max_slack"] = report.check.max_slack.to_string();
  out["witness"] = nullptr;
  if (const RunRecord* w = report.witness_record()) {
    json witness = record_json(*w, report.claim);
    witness["instance"] = instance_json(*report.witness_instance());
    out["witness"] = witness;
  }
  if (include_records) {
    out["records"] = json::array();
    for (const RunRecord& r : report.records) out["records"].push_back(record_json(r, report.claim));
  }
  return dump(out);
}

std::string reduction_report_json(const ReductionReport& report) {
  json out;
  out["kind"] = "check-reduction";
  out["reduction"] = report.reduction_id;
  out["variant"] = to_string(report.variant);
  out["algorithms"] = report.algorithms;
  out["samples"] = report.samples;
  out["applications"] = report.applications;
  out["violations"] = report.violations;
  out["rejections"] = report.rejections;
  out["rejection_reasons"] = report.rejection_reasons;
  out["failures_by_condition"] = json::object();
  for (const auto& [name, count] : report.failures_by_condition) out["failures_by_condition"][name] = count;
  out["verdict"] = verdict(report.pass());
  out["witness"] = nullptr;
  if (report.witness) {
    out["witness"] = {{"sample", report.witness->sample},
                      {"algorithm", report.witness->algorithm},
                      {"condition", report.witness->condition},
                      {"trace", trace_json(report.witness->trace)}};
  }
  return dump(out);
}

std::string pareto_report_json(const ParetoReport& report) {
  json out;
  out["kind"] = "pareto";
  out["level"] = report.level.to_string();
  out["cells"] = json::array();
  for (const ParetoCell& cell : report.cells) {
    json c;
    c["alpha"] = cell.claim.alpha.to_string();
    c["beta"] = cell.claim.beta.to_string();
    c["gamma"] = cell.claim.gamma.to_string();
    c["verdict"] = verdict(cell.pass);
    c["passing_algorithm"] = cell.pass ? json(cell.passing_algorithm) : json(nullptr);
    c["undominated"] = cell.undominated;
    c["algorithms"] = json::array();
    for (const ParetoVerdict& v : cell.verdicts) {
      c["algorithms"].push_back({{"algorithm", v.algorithm},
                                 {"verdict", verdict(v.pass)},
                                 {"max_slack", v.max_slack.to_string()},
                                 {"witness_id", v.witness_id.empty() ? json(nullptr) : json(v.witness_id)}});
    }
    c["witness"] = nullptr;
    if (cell.witness) c["witness"] = {{"algorithm", cell.witness_algorithm}, {"instance", instance_json(*cell.witness)}};
    out["cells"].push_back(c);
  }
  return dump(out);
}

std::string adversary_run_json(const AdversaryRun& run, std::string_view algorithm) {
  json out;
  out["kind"] = "adversary";
  out["adversary"] = adversary_id(run.kind);
  out["algorithm"] = algorithm;
  out["level"] = run.instance.level.to_string();
  out["n"] = run.instance.data.size();
  out["alg"] = run.record.alg_cost.to_string();
  out["opt"] = run.record.opt_cost.to_string();
  out["eta0"] = to_string(run.record.eta0);
  out["eta1"] = to_string(run.record.eta1);
  out["measure_pair"] = run.measure_pair;
  out["decisions"] = run.record.decisions.to_string();
  out["identity"] = run.identity;
  out["identity_holds"] = run.identity_holds;
  out["instance"] = instance_json(run.instance);
  return dump(out);
}

std::string slack_curve_json(const SlackCurve& curve, AdversaryKind kind, std::string_view algorithm,
                             const CompetitiveClaim& claim) {
  json out;
  out["kind"] = "slack-curve";
  out["adversary"] = adversary_id(kind);
  out["algorithm"] = algorithm;
  out["claim"] = claim_json(claim);
  out["points"] = json::array();
  for (const SlackPoint& p : curve.points) {
    out["points"].push_back({{"n", p.n},
                             {"opt", p.opt.to_string()},
                             {"alg", p.alg.to_string()},
                             {"eta0", to_string(p.eta0)},
                             {"eta1", to_string(p.eta1)},
                             {"slack", p.slack.to_string()}});
  }
  out["slope"] = curve.slope ? json(to_string(*curve.slope)) : json(nullptr);
  out["unbounded"] = curve.unbounded;
  return dump(out);
}

std::string fbb_report_json(const FbbReport& report) {
  json out;
  out["kind"] = "paging-bench";
  out["policy"] = "fbb";
  out["t"] = report.t;
  out["traces"] = report.traces;
  out["blocks"] = report.blocks;
  out["total_violations"] = report.total_violations;
  out["lemmas"] = json::array();
  for (const auto& [key, counts] : report.lemma_counts) {
    auto slash = key.find('/');
    out["lemmas"].push_back({{"lemma", key.substr(0, slash)},
                             {"attribution", key.substr(slash + 1)},
                             {"applicable", counts.first},
                             {"violations", counts.second}});
  }
  out["verdict"] = verdict(report.total_pass());
  out["witness"] = report.witness ? instance_json(*report.witness) : json(nullptr);
  return dump(out);
}

std::string slack_curve_csv(const SlackCurve& curve) {
  std::ostringstream out;
  out << "n,opt,alg,eta0,eta1,slack\n";
  for (const SlackPoint& p : curve.points) {
    out << p.n << ',' << p.opt.to_string() << ',' << p.alg.to_string() << ',' << to_string(p.eta0) << ','
        << to_string(p.eta1) << ',' << p.slack.to_string() << '\n';
  }
  return out.str();
}

std::string pareto_csv(const ParetoReport& report) {
  std::ostringstream out;
  out << "alpha,beta,gamma,verdict\n";
  for (const ParetoCell& c : report.cells) {
    out << c.claim.alpha.to_string() << ',' << c.claim.beta.to_string() << ',' << c.claim.gamma.to_string() << ','
        << verdict(c.pass) << '\n';
  }
  return out.str();
}

std::string fbb_blocks_csv(const FbbReport& report) {
  std::ostringstream out;
  out << "block,end_condition,s,d_c,d_w,lfd,fbb,mu0,mu1\n";
  std::size_t block = 0;
  for (const FbbTraceSummary& s : report.summaries) {
    for (const FbbBlockStats& b : s.blocks) {
      out << block++ << ',' << to_string(b.range.condition) << ',' << b.s << ',' << b.d_c << ',' << b.d_w << ','
          << b.lfd_global << ',' << b.fbb_faults << ',' << b.mu0 << ',' << b.mu1 << '\n';
    }
  }
  return out.str();
}

std::string records_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "instance_id,alg,opt,eta0,eta1,slack\n";
  for (const RunRecord& r : report.records) {
    out << r.instance_id << ',' << r.alg_cost.to_string() << ',' << r.opt_cost.to_string() << ','
        << to_string(r.eta0) << ',' << to_string(r.eta1) << ',' << slack_of(r, report.claim).to_string() << '\n';
  }
  return out.str();
}

}  // namespace predkit
