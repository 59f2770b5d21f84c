#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "predkit/algorithm.hpp"
#include "predkit/cost.hpp"
#include "predkit/error.hpp"
#include "predkit/instance.hpp"

namespace predkit {

enum class ReductionVariant { kStrict, kAsymptotic };
std::string_view to_string(ReductionVariant variant);

struct MeasureScores {
  std::string pair;
  Rational source_eta0{0};
  Rational source_eta1{0};
  Rational target_phi0{0};
  Rational target_phi1{0};
};

// Costs attributed to one source request and the target requests it produced.
struct GroupRow {
  Cost opt_source;
  Cost alg_source;
  Cost opt_target;
  Cost alg_target;
};

struct ReductionTrace {
  std::string reduction_id;
  ReductionVariant variant = ReductionVariant::kStrict;
  AnyInstance source;
  AnyInstance target;
  BitString source_decisions;
  BitString target_decisions;
  Cost alg_source;
  Cost alg_target;
  Cost opt_source;
  Cost opt_target;
  std::vector<MeasureScores> measures;  // (mu0, mu1) first, then (Z0, Z1)
  Rational a{0};
  Rational b{0};
  bool target_encoding_optimal = true;  // x' is feasible with cost OPT_Q
  bool expects_opt_equality = false;
  bool expects_alg_equality = false;
  std::vector<GroupRow> groups;
};

struct ConditionResult {
  std::string name;
  bool pass = true;
  Slack margin;  // lhs - rhs; the condition holds iff margin <= 0
};

struct ConditionReport {
  std::vector<ConditionResult> conditions;
  bool pass() const;
  // First failing condition, or nullptr.
  const ConditionResult* first_failure() const;
};

// O1: ALG_P <= ALG_Q + a. O2 (strict): OPT_Q <= OPT_P; O2' (asymptotic):
// OPT_Q <= OPT_P + b. O3: phi_b(I_Q) <= eta_b(I_P) for every scored pair.
// Also reports the optimal-encoding check and any equality the trace expects.
ConditionReport check_conditions(const ReductionTrace& trace, ReductionVariant variant);
ConditionReport check_conditions(const ReductionTrace& trace);

// Drives a target algorithm and records the target instance it is shown.
// Truth bits are filled in later, after the source's truth is revealed.
template <class Req>
class TargetSession {
 public:
  explicit TargetSession(std::unique_ptr<OnlineAlgorithm<Req>> alg) : alg_(std::move(alg)) {}

  Bit submit(Req request, Bit prediction) {
    if (finished_) throw ConstructionError("request submitted after the target input ended");
    Bit y = alg_->decide(request, prediction);
    instance_.requests.push_back(std::move(request));
    instance_.xhat.push_back(prediction);
    instance_.x.push_back(0);
    decisions_.push_back(y);
    return y;
  }

  void set_truth(std::size_t index, Bit bit) { instance_.x.set(index, bit); }

  void finish() {
    if (finished_) return;
    finished_ = true;
    alg_->reveal(instance_.x);
  }

  std::size_t size() const { return instance_.requests.size(); }
  const PredictedInstance<Req>& instance() const { return instance_; }
  const BitString& decisions() const { return decisions_; }

 private:
  std::unique_ptr<OnlineAlgorithm<Req>> alg_;
  PredictedInstance<Req> instance_;
  BitString decisions_;
  bool finished_ = false;
};

// Lets a block builder emit requests. Every block request must be predicted 0
// and truly 0; anything else is a template violation.
template <class Req>
class BlockEmitter {
 public:
  BlockEmitter(TargetSession<Req>& session, std::vector<std::size_t>& group_of, std::size_t group)
      : session_(session), group_of_(group_of), group_(group) {}

  std::size_t next_index() const { return session_.size(); }

  Bit emit(Req request, Bit truth = 0, Bit prediction = 0) {
    if (truth != 0 || prediction != 0) {
      throw ConstructionError("template violation: block requests must be correctly predicted 0");
    }
    group_of_.push_back(group_);
    return session_.submit(std::move(request), prediction);
  }

 private:
  TargetSession<Req>& session_;
  std::vector<std::size_t>& group_of_;
  std::size_t group_;
};

template <class Req>
struct ChallengeBlockSpec {
  // The i-th challenge. Must not depend on the truth bits.
  std::function<Req(std::size_t i, const TargetSession<Req>& session)> challenge;
  // Emits the block for source request i given its truth x and the target's answer y'.
  std::function<void(Bit x, Bit y_prime, std::size_t i, std::size_t n, BlockEmitter<Req>& out)> block;
};

// The source (ASG) algorithm produced by the template: it answers each
// challenge with the target algorithm's answer and, once the truth is
// revealed, plays out the blocks.
template <class Req>
class TemplateSourceAlgorithm final : public OnlineAlgorithm<AsgPrompt> {
 public:
  TemplateSourceAlgorithm(ChallengeBlockSpec<Req> spec, std::unique_ptr<OnlineAlgorithm<Req>> alg_q)
      : spec_(std::move(spec)), session_(std::move(alg_q)) {}

  std::string name() const override { return "template"; }

  Bit decide(const AsgPrompt&, Bit prediction) override {
    std::size_t i = challenge_answers_.size();
    Bit y = session_.submit(spec_.challenge(i, session_), prediction);
    group_of_.push_back(i);
    challenge_answers_.push_back(y);
    return y;
  }

  void reveal(const BitString& truth) override {
    const std::size_t n = challenge_answers_.size();
    if (truth.size() != n) throw InvalidInput("template: truth length differs from the challenges");
    for (std::size_t i = 0; i < n; ++i) session_.set_truth(i, truth[i]);
    for (std::size_t i = 0; i < n; ++i) {
      BlockEmitter<Req> emitter(session_, group_of_, i);
      spec_.block(truth[i], challenge_answers_[i], i, n, emitter);
    }
    session_.finish();
  }

  const TargetSession<Req>& session() const { return session_; }
  const std::vector<std::size_t>& group_of() const { return group_of_; }

 private:
  ChallengeBlockSpec<Req> spec_;
  TargetSession<Req> session_;
  BitString challenge_answers_;
  std::vector<std::size_t> group_of_;
};

template <class Req>
struct TemplateResult {
  PredictedInstance<Req> target;
  BitString target_decisions;
  BitString source_decisions;
  std::vector<std::size_t> group_of;  // source request behind each target request
};

template <class Req>
TemplateResult<Req> template_reduce(const ChallengeBlockSpec<Req>& spec,
                                    const AlgorithmFactory<Req>& alg_q,
                                    const PredictedInstance<AsgPrompt>& source) {
  TemplateSourceAlgorithm<Req> alg(spec, alg_q());
  BitString y = run_online(alg, source);
  return {alg.session().instance(), alg.session().decisions(), y, alg.group_of()};
}

// Spec builders, exposed for tests and for the broken fixture.
ChallengeBlockSpec<VertexArrival> bdvc_block_spec(std::int64_t t, std::int64_t pendants_when_wrong);
ChallengeBlockSpec<Interval> ir_block_spec(std::int64_t t);
ChallengeBlockSpec<VertexArrival> spill_block_spec(std::int64_t k, std::int64_t t);

ReductionTrace red_asg_to_bdvc(const AsgInstance& source, const AlgorithmFactory<VertexArrival>& alg_q);
ReductionTrace red_asg_to_ir(const AsgInstance& source, const AlgorithmFactory<Interval>& alg_q);
ReductionTrace red_asg_to_spill(std::int64_t k, const AsgInstance& source,
                                const AlgorithmFactory<VertexArrival>& alg_q);
ReductionTrace red_bdvc_to_asg(const VcInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q);
ReductionTrace red_ir_to_bdvc(const IrInstance& source, const AlgorithmFactory<VertexArrival>& alg_q);
ReductionTrace red_ir_to_sat2(const IrInstance& source, const AlgorithmFactory<Sat2Request>& alg_q);
ReductionTrace red_vc_to_dom(ReductionVariant variant, const VcInstance& source,
                             const AlgorithmFactory<VertexArrival>& alg_q);
ReductionTrace red_vc_to_asg(const VcInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q);
ReductionTrace red_pag_to_asg(const PagingInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q);
ReductionTrace red_asg_step(const AsgInstance& source, const AlgorithmFactory<AsgPrompt>& alg_q);

// Deliberately unsound fixture: like red_asg_to_bdvc but a wrong 0-guess on a
// true 1 only draws t-1 pendants.
ReductionTrace red_asg_to_bdvc_broken(const AsgInstance& source,
                                      const AlgorithmFactory<VertexArrival>& alg_q);

// The interval algorithm obtained from a vertex cover algorithm through the
// interval-graph construction.
AlgorithmFactory<Interval> intervals_via_cover(AlgorithmFactory<VertexArrival> alg_q);

// End-to-end trace of `first` followed by `second`, where second.source must
// equal first.target and the decisions must agree.
ReductionTrace compose(const ReductionTrace& first, const ReductionTrace& second);

// Renders a formula as (l v l)(l v l)... with variables named v1, v2, ...
std::string format_formula(const std::vector<Clause2>& clauses);

}  // namespace predkit
