#include "predkit/reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "predkit/algorithms.hpp"
#include "predkit/graph.hpp"
#include "predkit/measures.hpp"
#include "predkit/oracles.hpp"
#include "predkit/paging.hpp"
#include "predkit/problems.hpp"

namespace predkit {

std::string_view to_string(ReductionVariant variant) {
  return variant == ReductionVariant::kStrict ? "strict" : "asymptotic";
}

bool ConditionReport::pass() const { return first_failure() == nullptr; }

const ConditionResult* ConditionReport::first_failure() const {
  for (const ConditionResult& c : conditions) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

ConditionReport check_conditions(const ReductionTrace& trace, ReductionVariant variant) {
  ConditionReport report;
  auto add = [&](std::string name, const Cost& lhs, const Cost& rhs) {
    Slack margin = Slack::difference(lhs, rhs);
    report.conditions.push_back({std::move(name), margin.within(0), margin});
  };
  add("O1", trace.alg_source, trace.alg_target + Cost(trace.a));
  if (variant == ReductionVariant::kStrict) {
    add("O2", trace.opt_target, trace.opt_source);
  } else {
    add("O2'", trace.opt_target, trace.opt_source + Cost(trace.b));
  }
  for (const MeasureScores& m : trace.measures) {
    add("O3[" + m.pair + "]0", Cost(m.target_phi0), Cost(m.source_eta0));
    add("O3[" + m.pair + "]1", Cost(m.target_phi1), Cost(m.source_eta1));
  }
  report.conditions.push_back(
      {"encoding", trace.target_encoding_optimal, Slack::finite(trace.target_encoding_optimal ? 0 : 1)});
  if (trace.expects_opt_equality) {
    Cost expected = trace.opt_source + Cost(variant == ReductionVariant::kAsymptotic ? trace.b : Rational(0));
    Slack margin = Slack::difference(trace.opt_target, expected);
    report.conditions.push_back({"opt_equality", trace.opt_target == expected, margin});
  }
  if (trace.expects_alg_equality) {
    Slack margin = Slack::difference(trace.alg_source, trace.alg_target);
    report.conditions.push_back({"alg_equality", trace.alg_source == trace.alg_target, margin});
  }
  return report;
}

ConditionReport check_conditions(const ReductionTrace& trace) {
  return check_conditions(trace, trace.variant);
}

namespace {

// Fills optima, measures and the encoding check. Rejects a source whose x is
// not optimal, since every reduction relies on that invariant.
void complete_trace(ReductionTrace& trace) {
  OracleResult source_opt = exact_opt(trace.source);
  trace.opt_source = source_opt.opt_cost;
  if (kind_of(trace.source) != ProblemKind::kPaging) {
    Evaluation ex = evaluate_decisions(trace.source, truth_bits(trace.source));
    if (!ex.feasible || ex.cost != trace.opt_source) {
      throw PreconditionViolation("source x is not an optimal encoding");
    }
  } else if (source_opt.witness != truth_bits(trace.source)) {
    throw PreconditionViolation("paging source x differs from lfd_labels");
  }
  trace.opt_target = exact_opt(trace.target).opt_cost;
  Evaluation target_x = evaluate_decisions(trace.target, truth_bits(trace.target));
  trace.target_encoding_optimal = target_x.feasible && target_x.cost == trace.opt_target;
  for (const MeasurePair& pair : {mu_pair(), zero_pair()}) {
    const BitString& sx = truth_bits(trace.source);
    const BitString& sxh = predicted_bits(trace.source);
    const BitString& tx = truth_bits(trace.target);
    const BitString& txh = predicted_bits(trace.target);
    trace.measures.push_back({pair.name, pair.eta0.evaluate(sx, sxh), pair.eta1.evaluate(sx, sxh),
                              pair.eta0.evaluate(tx, txh), pair.eta1.evaluate(tx, txh)});
  }
}

std::int64_t finite_level(const AsgInstance& source) {
  if (source.level.is_infinite()) throw InvalidInput("this reduction needs a finite ASG level");
  return source.level.t();
}

template <class Req>
std::vector<GroupRow> template_groups(std::int64_t t, const AsgInstance& source, const TemplateResult<Req>& r) {
  const std::size_t n = source.data.size();
  std::vector<GroupRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].opt_source = Cost(source.data.x[i]);
    rows[i].alg_source = asg_cost(t, source.data.x.slice(i, i + 1), r.source_decisions.slice(i, i + 1));
  }
  for (std::size_t j = 0; j < r.group_of.size(); ++j) {
    rows[r.group_of[j]].opt_target += Cost(r.target.x[j]);
    rows[r.group_of[j]].alg_target += Cost(r.target_decisions[j]);
  }
  return rows;
}

template <class Req, class TargetInstance>
ReductionTrace template_trace(std::string id, const AsgInstance& source, const ChallengeBlockSpec<Req>& spec,
                              const AlgorithmFactory<Req>& alg_q, TargetInstance target) {
  const std::int64_t t = finite_level(source);
  TemplateResult<Req> r = template_reduce(spec, alg_q, source.data);
  target.data = r.target;
  ReductionTrace trace;
  trace.reduction_id = std::move(id);
  trace.source = source;
  trace.target = target;
  trace.source_decisions = r.source_decisions;
  trace.target_decisions = r.target_decisions;
  trace.alg_source = asg_cost(t, source.data.x, r.source_decisions);
  trace.alg_target = evaluate_decisions(trace.target, r.target_decisions).cost;
  trace.groups = template_groups(t, source, r);
  trace.expects_opt_equality = true;
  complete_trace(trace);
  return trace;
}

}  // namespace

ChallengeBlockSpec<VertexArrival> bdvc_block_spec(std::int64_t t, std::int64_t pendants_when_wrong) {
  if (pendants_when_wrong > t) throw InvalidInput("bdvc block: more pendants than the degree bound");
  ChallengeBlockSpec<VertexArrival> spec;
  spec.challenge = [](std::size_t, const TargetSession<VertexArrival>&) { return VertexArrival{}; };
  spec.block = [pendants_when_wrong](Bit x, Bit y_prime, std::size_t i, std::size_t,
                                        BlockEmitter<VertexArrival>& out) {
    if (x == 0) return;
    std::int64_t pendants = y_prime == 1 ? 1 : pendants_when_wrong;
    for (std::int64_t j = 0; j < pendants; ++j) out.emit(VertexArrival{{i}});
  };
  return spec;
}

ChallengeBlockSpec<Interval> ir_block_spec(std::int64_t t) {
  ChallengeBlockSpec<Interval> spec;
  spec.challenge = [t](std::size_t i, const TargetSession<Interval>&) {
    auto base = static_cast<std::int64_t>(i) * t;
    return Interval{base, base + t};
  };
  spec.block = [t](Bit x, Bit y_prime, std::size_t i, std::size_t, BlockEmitter<Interval>& out) {
    if (x == 0) return;
    auto base = static_cast<std::int64_t>(i) * t;
    if (y_prime == 1) {
      out.emit(Interval{base, base + t});
      return;
    }
    for (std::int64_t j = 0; j < t; ++j) out.emit(Interval{base + j, base + j + 1});
  };
  return spec;
}

namespace {

bool contains_clique(const Graph& g, const std::vector<std::size_t>& vertices, std::int64_t k) {
  if (k <= 0) return true;
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<std::int64_t>(chosen.size()) == k) return true;
    for (std::size_t p = from; p < vertices.size(); ++p) {
      std::size_t v = vertices[p];
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return g.has_edge(u, v); })) {
        chosen.push_back(v);
        if (extend(p + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  return extend(0);
}

}  // namespace

ChallengeBlockSpec<VertexArrival> spill_block_spec(std::int64_t k, std::int64_t t) {
  ChallengeBlockSpec<VertexArrival> spec;
  spec.challenge = [](std::size_t, const TargetSession<VertexArrival>&) { return VertexArrival{}; };
  spec.block = [k, t](Bit x, Bit y_prime, std::size_t i, std::size_t n, BlockEmitter<VertexArrival>& out) {
    std::vector<std::size_t> block;  // nonfinal block vertices, as target indices
    Graph local;                     // the same vertices, for clique detection
    auto add = [&](std::vector<std::size_t> earlier_block) {
      std::vector<std::size_t> back{i};
      std::vector<std::size_t> local_back;
      for (std::size_t v : earlier_block) {
        back.push_back(block[v]);
        local_back.push_back(v);
      }
      std::size_t index = out.next_index();
      Bit y = out.emit(VertexArrival{back});
      block.push_back(index);
      local.add_vertex(local_back);
      return y;
    };
    auto all_so_far = [&] {
      std::vector<std::size_t> all(block.size());
      for (std::size_t v = 0; v < block.size(); ++v) all[v] = v;
      return all;
    };
    if (x == 1 && y_prime == 1) {
      for (std::int64_t j = 0; j < k; ++j) add(all_so_far());
    } else if (x == 1) {
      std::vector<std::size_t> colorable;
      std::int64_t spills = 0;
      while (spills < t && static_cast<std::int64_t>(colorable.size()) < k) {
        std::size_t local_index = block.size();
        if (add(colorable) == 1) {
          ++spills;
        } else {
          colorable.push_back(local_index);
        }
      }
      while (!contains_clique(local, all_so_far(), k)) add(all_so_far());
    }
    std::vector<std::size_t> final_back{i};
    if (i + 1 < n) final_back.push_back(i + 1);
    out.emit(VertexArrival{final_back});
  };
  return spec;
}

ReductionTrace red_asg_to_bdvc(const AsgInstance& source, const AlgorithmFactory<VertexArrival>& alg_q) {
  const std::int64_t t = finite_level(source);
  return template_trace("asg-to-bdvc", source, bdvc_block_spec(t, t), alg_q, VcInstance{t, {}});
}

ReductionTrace red_asg_to_bdvc_broken(const AsgInstance& source,
                                      const AlgorithmFactory<VertexArrival>& alg_q) {
  const std::int64_t t = finite_level(source);
  return template_trace("asg-to-bdvc-broken", source, bdvc_block_spec(t, t - 1), alg_q, VcInstance{t, {}});
}

ReductionTrace red_asg_to_ir(const AsgInstance& source, const AlgorithmFactory<Interval>& alg_q) {
  const std::int64_t t = finite_level(source);
  return template_trace("asg-to-ir", source, ir_block_spec(t), alg_q, IrInstance{t, {}});
}

ReductionTrace red_asg_to_spill(std::int64_t k, const AsgInstance& source,
                                const AlgorithmFactory<VertexArrival>& alg_q) {
  const std::int64_t t = finite_level(source);
  if (k < 1) throw InvalidInput("k-Spill needs k >= 1");
  if (k == 1) {
    // 1-Spill is vertex cover; the pendant construction applies unchanged.
    return template_trace("asg-to-spill", source, bdvc_block_spec(t, t), alg_q, SpillInstance{1, t, {}});
  }
  ReductionTrace trace =
      template_trace("asg-to-spill", source, spill_block_spec(k, t), alg_q, SpillInstance{k, t + k + 1, {}});
  return trace;
}

namespace {

class CoverViaAsg final : public OnlineAlgorithm<VertexArrival> {
 public:
  explicit CoverViaAsg(std::unique_ptr<OnlineAlgorithm<AsgPrompt>> alg_q) : session_(std::move(alg_q)) {}
  std::string name() const override { return "cover-via-asg"; }

  Bit decide(const VertexArrival& request, Bit prediction) override {
    Bit y_prime = session_.submit(AsgPrompt{}, prediction);
    bool forced = std::any_of(request.back_edges.begin(), request.back_edges.end(),
                              [&](std::size_t u) { return decisions_.at(u) == 0; });
    Bit y = forced ? Bit{1} : y_prime;
    decisions_.push_back(y);
    return y;
  }

  void reveal(const BitString& truth) override {
    for (std::size_t i = 0; i < truth.size(); ++i) session_.set_truth(i, truth[i]);
    session_.finish();
  }

  const TargetSession<AsgPrompt>& session() const { return session_; }

 private:
  TargetSession<AsgPrompt> session_;
  std::vector<Bit> decisions_;
};

class IntervalsViaCover final : public OnlineAlgorithm<Interval> {
 public:
  explicit IntervalsViaCover(std::unique_ptr<OnlineAlgorithm<VertexArrival>> alg_q)
      : session_(std::move(alg_q)) {}
  std::string name() const override { return "intervals-via-cover"; }

  Bit decide(const Interval& request, Bit prediction) override {
    VertexArrival v;
    for (std::size_t j = 0; j < seen_.size(); ++j) {
      if (overlaps(seen_[j], request)) v.back_edges.push_back(j);
    }
    seen_.push_back(request);
    return session_.submit(std::move(v), prediction);
  }

  void reveal(const BitString& truth) override {
    for (std::size_t i = 0; i < truth.size(); ++i) session_.set_truth(i, truth[i]);
    session_.finish();
  }

  const TargetSession<VertexArrival>& session() const { return session_; }

 private:
  TargetSession<VertexArrival> session_;
  std::vector<Interval> seen_;
};

class IntervalsViaSat2 final : public OnlineAlgorithm<Interval> {
 public:
  explicit IntervalsViaSat2(std::unique_ptr<OnlineAlgorithm<Sat2Request>> alg_q)
      : session_(std::move(alg_q)) {}
  std::string name() const override { return "intervals-via-sat2"; }

  Bit decide(const Interval& request, Bit prediction) override {
    const std::size_t i = seen_.size();
    Sat2Request clauses;
    clauses.clauses.push_back({{i, true}, {i, true}, ClauseKind::kInterval});
    bool blocked = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!overlaps(seen_[j], request)) continue;
      clauses.clauses.push_back({{j, false}, {i, false}, ClauseKind::kCollision});
      if (decisions_[j] == 0) blocked = true;
    }
    seen_.push_back(request);
    Bit y_prime = session_.submit(std::move(clauses), prediction);
    Bit y = blocked ? Bit{1} : y_prime;
    decisions_.push_back(y);
    return y;
  }

  void reveal(const BitString& truth) override {
    for (std::size_t i = 0; i < truth.size(); ++i) session_.set_truth(i, truth[i]);
    session_.finish();
  }

  const TargetSession<Sat2Request>& session() const { return session_; }

 private:
  TargetSession<Sat2Request> session_;
  std::vector<Interval> seen_;
  std::vector<Bit> decisions_;
};

class CoverViaDom final : public OnlineAlgorithm<VertexArrival> {
 public:
  CoverViaDom(ReductionVariant variant, std::unique_ptr<OnlineAlgorithm<VertexArrival>> alg_q)
      : variant_(variant), session_(std::move(alg_q)) {}
  std::string name() const override { return "cover-via-dom"; }

  Bit decide(const VertexArrival& request, Bit prediction) override {
    start();
    bool accepted = false;
    std::vector<std::size_t> back;
    if (asymptotic()) back.push_back(s1_);
    for (std::size_t j : request.back_edges) back.push_back(target_of_.at(j));
    std::size_t v = session_.size();
    accepted |= session_.submit(VertexArrival{back}, prediction) == 1;
    target_of_.push_back(v);
    if (asymptotic()) accepted |= session_.submit(VertexArrival{{s1_, v}}, 0) == 1;
    std::vector<std::size_t> earlier(request.back_edges.begin(), request.back_edges.end());
    std::sort(earlier.begin(), earlier.end());
    for (std::size_t j : earlier) {
      accepted |= session_.submit(VertexArrival{{target_of_.at(j), v}}, 0) == 1;
    }
    return accepted ? Bit{1} : Bit{0};
  }

  void reveal(const BitString& truth) override {
    start();
    if (asymptotic()) session_.set_truth(s1_, 1);
    for (std::size_t i = 0; i < truth.size(); ++i) session_.set_truth(target_of_.at(i), truth[i]);
    session_.finish();
  }

  const TargetSession<VertexArrival>& session() const { return session_; }
  const std::vector<std::size_t>& target_of() const { return target_of_; }

 private:
  bool asymptotic() const { return variant_ == ReductionVariant::kAsymptotic; }

  void start() {
    if (started_) return;
    started_ = true;
    if (!asymptotic()) return;
    s1_ = session_.size();
    session_.submit(VertexArrival{}, 1);
    std::size_t s2 = session_.size();
    session_.submit(VertexArrival{{s1_}}, 0);
    session_.submit(VertexArrival{{s1_, s2}}, 0);
  }

  ReductionVariant variant_;
  TargetSession<VertexArrival> session_;
  std::vector<std::size_t> target_of_;
  std::size_t s1_ = 0;
  bool started_ = false;
};

class MirrorAsg final : public OnlineAlgorithm<VertexArrival> {
 public:
  explicit MirrorAsg(std::unique_ptr<OnlineAlgorithm<AsgPrompt>> alg_q) : session_(std::move(alg_q)) {}
  std::string name() const override { return "mirror-asg"; }
  Bit decide(const VertexArrival&, Bit prediction) override { return session_.submit(AsgPrompt{}, prediction); }
  void reveal(const BitString& truth) override {
    for (std::size_t i = 0; i < truth.size(); ++i) session_.set_truth(i, truth[i]);
    session_.finish();
  }
  const TargetSession<AsgPrompt>& session() const { return session_; }

 private:
  TargetSession<AsgPrompt> session_;
};

class AsgStep final : public OnlineAlgorithm<AsgPrompt> {
 public:
  explicit AsgStep(std::unique_ptr<OnlineAlgorithm<AsgPrompt>> alg_q) : session_(std::move(alg_q)) {}
  std::string name() const override { return "asg-step"; }
  Bit decide(const AsgPrompt&, Bit prediction) override { return session_.submit(AsgPrompt{}, prediction); }
  void reveal(const BitString& truth) override {
    for (std::size_t i = 0; i < truth.size(); ++i) session_.set_truth(i, truth[i]);
    session_.finish();
  }
  const TargetSession<AsgPrompt>& session() const { return session_; }

 private:
  TargetSession<AsgPrompt> session_;
};

// FwZ with the associated bits taken from an ASG algorithm's guesses.
class FwzViaAsg final : public PagingPolicy {
 public:
  explicit FwzViaAsg(TargetSession<AsgPrompt>& session) : session_(session) {}
  std::string name() const override { return "fwz-via-asg"; }

  void on_hit(std::size_t, PageId page, Bit prediction) override {
    bit_[page] = session_.submit(AsgPrompt{}, prediction);
  }

  std::vector<PageId> on_fault(std::size_t, PageId page, Bit prediction, const Cache& cache) override {
    Bit y_prime = session_.submit(AsgPrompt{}, prediction);
    std::vector<PageId> victims;
    if (cache.full()) {
      for (PageId p : cache.pages()) {
        if (bit_.at(p) == 1) {
          victims.push_back(p);
          break;
        }
      }
      if (victims.empty()) victims.assign(cache.pages().begin(), cache.pages().end());
    }
    bit_[page] = y_prime;
    return victims;
  }

 private:
  TargetSession<AsgPrompt>& session_;
  std::map<PageId, Bit> bit_;
};

}  // namespace

ReductionTrace red_bdvc_to_asg(const VcInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q) {
  if (!source.degree_bound) throw InvalidInput("bdvc-to-asg needs a degree bound t");
  const std::int64_t t = *source.degree_bound;
  Graph g = Graph::from_arrivals(source.data.requests);
  require_degree_bound(g, t);
  CoverViaAsg alg(alg_q());
  BitString y = run_online(alg, source.data);
  ReductionTrace trace;
  trace.reduction_id = "bdvc-to-asg";
  trace.source = source;
  trace.target = AsgInstance{AsgLevel::finite(t), alg.session().instance()};
  trace.source_decisions = y;
  trace.target_decisions = alg.session().decisions();
  trace.alg_source = vc_check_and_cost(g, y, t).cost;
  trace.alg_target = asg_cost(t, source.data.x, trace.target_decisions);
  trace.expects_opt_equality = true;
  complete_trace(trace);
  return trace;
}

ReductionTrace red_ir_to_bdvc(const IrInstance& source, const AlgorithmFactory<VertexArrival>& alg_q) {
  validate_intervals(source.data.requests);
  std::optional<std::int64_t> t = source.overlap_bound;
  if (t && max_overlap_count(source.data.requests) > *t) {
    throw PreconditionViolation("ir-to-bdvc: overlap bound violated");
  }
  IntervalsViaCover alg(alg_q());
  BitString y = run_online(alg, source.data);
  ReductionTrace trace;
  trace.reduction_id = "ir-to-bdvc";
  trace.source = source;
  trace.target = VcInstance{t, alg.session().instance()};
  trace.source_decisions = y;
  trace.target_decisions = alg.session().decisions();
  trace.alg_source = ir_check_and_cost(source.data.requests, y, t).cost;
  trace.alg_target = evaluate_decisions(trace.target, trace.target_decisions).cost;
  trace.expects_opt_equality = true;
  trace.expects_alg_equality = true;
  complete_trace(trace);
  return trace;
}

AlgorithmFactory<Interval> intervals_via_cover(AlgorithmFactory<VertexArrival> alg_q) {
  return [alg_q] { return std::make_unique<IntervalsViaCover>(alg_q()); };
}

ReductionTrace red_ir_to_sat2(const IrInstance& source, const AlgorithmFactory<Sat2Request>& alg_q) {
  validate_intervals(source.data.requests);
  IntervalsViaSat2 alg(alg_q());
  BitString y = run_online(alg, source.data);
  ReductionTrace trace;
  trace.reduction_id = "ir-to-sat2";
  trace.source = source;
  trace.target = Sat2Instance{alg.session().instance()};
  trace.source_decisions = y;
  trace.target_decisions = alg.session().decisions();
  trace.alg_source = ir_check_and_cost(source.data.requests, y, std::nullopt).cost;
  trace.alg_target = evaluate_decisions(trace.target, trace.target_decisions).cost;
  const auto& requests = alg.session().instance().requests;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    GroupRow row;
    row.opt_source = Cost(source.data.x[i]);
    row.alg_source = Cost(y[i]);
    row.opt_target = sat2_cost(requests[i].clauses, source.data.x);
    row.alg_target = sat2_cost(requests[i].clauses, trace.target_decisions);
    trace.groups.push_back(row);
  }
  complete_trace(trace);
  return trace;
}

ReductionTrace red_vc_to_dom(ReductionVariant variant, const VcInstance& source,
                             const AlgorithmFactory<VertexArrival>& alg_q) {
  Graph g = Graph::from_arrivals(source.data.requests);
  if (variant == ReductionVariant::kStrict) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.degree(v) == 0) {
        throw PreconditionViolation("vc-to-dom (strict) requires a graph without isolated vertices");
      }
    }
  }
  CoverViaDom alg(variant, alg_q());
  BitString y = run_online(alg, source.data);
  ReductionTrace trace;
  trace.reduction_id = "vc-to-dom";
  trace.variant = variant;
  trace.source = source;
  trace.target = DomInstance{alg.session().instance()};
  trace.source_decisions = y;
  trace.target_decisions = alg.session().decisions();
  trace.alg_source = vc_check_and_cost(g, y, std::nullopt).cost;
  trace.alg_target = evaluate_decisions(trace.target, trace.target_decisions).cost;
  trace.b = variant == ReductionVariant::kAsymptotic ? 1 : 0;
  trace.expects_opt_equality = true;
  complete_trace(trace);
  return trace;
}

ReductionTrace red_vc_to_asg(const VcInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q) {
  Graph g = Graph::from_arrivals(source.data.requests);
  MirrorAsg alg(alg_q());
  BitString y = run_online(alg, source.data);
  ReductionTrace trace;
  trace.reduction_id = "vc-to-asg";
  trace.source = source;
  trace.target = AsgInstance{AsgLevel::infinite(), alg.session().instance()};
  trace.source_decisions = y;
  trace.target_decisions = alg.session().decisions();
  trace.alg_source = vc_check_and_cost(g, y, std::nullopt).cost;
  trace.alg_target = asg_inf_cost(source.data.x, trace.target_decisions);
  trace.expects_opt_equality = true;
  complete_trace(trace);
  return trace;
}

ReductionTrace red_pag_to_asg(const PagingInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q) {
  const std::int64_t t = source.cache_size;
  source.data.validate_shape();
  if (static_cast<std::int64_t>(distinct_pages(source.data.requests)) < t) {
    throw PreconditionViolation("pag-to-asg needs at least t distinct pages");
  }
  TargetSession<AsgPrompt> session(alg_q());
  FwzViaAsg policy(session);
  PagingRun run = simulate_paging(source.data.requests, source.data.xhat, t, policy);
  for (std::int64_t j = 0; j < t; ++j) session.submit(AsgPrompt{}, 1);
  BitString x_prime = lfd_labels(source.data.requests, t);
  for (std::int64_t j = 0; j < t; ++j) x_prime.push_back(1);
  for (std::size_t i = 0; i < x_prime.size(); ++i) session.set_truth(i, x_prime[i]);
  session.finish();

  ReductionTrace trace;
  trace.reduction_id = "pag-to-asg";
  trace.source = source;
  trace.target = AsgInstance{AsgLevel::finite(t), session.instance()};
  trace.source_decisions = BitString(std::vector<Bit>(run.fault_at.begin(), run.fault_at.end()));
  trace.target_decisions = session.decisions();
  trace.alg_source = Cost(run.faults);
  trace.alg_target = asg_cost(t, x_prime, trace.target_decisions);
  trace.expects_opt_equality = true;
  complete_trace(trace);
  return trace;
}

ReductionTrace red_asg_step(const AsgInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q) {
  const std::int64_t t = finite_level(source);
  AsgStep alg(alg_q());
  BitString y = run_online(alg, source.data);
  ReductionTrace trace;
  trace.reduction_id = "asg-step";
  trace.source = source;
  trace.target = AsgInstance{AsgLevel::finite(t + 1), alg.session().instance()};
  trace.source_decisions = y;
  trace.target_decisions = alg.session().decisions();
  trace.alg_source = asg_cost(t, source.data.x, y);
  trace.alg_target = asg_cost(t + 1, source.data.x, trace.target_decisions);
  trace.expects_opt_equality = true;
  complete_trace(trace);
  return trace;
}

ReductionTrace compose(const ReductionTrace& first, const ReductionTrace& second) {
  if (!(first.target == second.source)) {
    throw ConstructionError("compose: the second trace does not start from the first trace's target");
  }
  if (first.target_decisions != second.source_decisions) {
    throw ConstructionError("compose: decisions on the intermediate instance disagree");
  }
  ReductionTrace out;
  out.reduction_id = first.reduction_id + "+" + second.reduction_id;
  out.variant = (first.variant == ReductionVariant::kAsymptotic || second.variant == ReductionVariant::kAsymptotic)
                    ? ReductionVariant::kAsymptotic
                    : ReductionVariant::kStrict;
  out.source = first.source;
  out.target = second.target;
  out.source_decisions = first.source_decisions;
  out.target_decisions = second.target_decisions;
  out.alg_source = first.alg_source;
  out.alg_target = second.alg_target;
  out.opt_source = first.opt_source;
  out.opt_target = second.opt_target;
  out.a = first.a + second.a;
  out.b = first.b + second.b;
  out.target_encoding_optimal = second.target_encoding_optimal;
  for (std::size_t m = 0; m < first.measures.size() && m < second.measures.size(); ++m) {
    out.measures.push_back({first.measures[m].pair, first.measures[m].source_eta0, first.measures[m].source_eta1,
                            second.measures[m].target_phi0, second.measures[m].target_phi1});
  }
  return out;
}

std::string format_formula(const std::vector<Clause2>& clauses) {
  auto lit = [](const Literal& l) {
    return std::string(l.negated ? "¬" : "") + "v" + std::to_string(l.var + 1);
  };
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i > 0) out += "∧";
    out += "(" + lit(clauses[i].a) + "∨" + lit(clauses[i].b) + ")";
  }
  return out;
}

}  // namespace predkit
