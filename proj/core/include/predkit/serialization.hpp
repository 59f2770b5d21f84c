#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "predkit/adversaries.hpp"
#include "predkit/harness.hpp"
#include "predkit/instance.hpp"
#include "predkit/reductions.hpp"

namespace predkit {

// JSONL instance format, one object per line:
//   {"problem": "asg"|"vc"|"ir"|"spill"|"sat2"|"dom"|"paging",
//    "t_or_k": ASG level (integer or "inf"), VC degree bound, IR overlap bound,
//              Spill k, paging cache size, or null,
//    "degree_bound": Spill only, integer or null,
//    "x": "0110", "xhat": "0100",
//    "requests": [...]}
// Requests: ASG null; graphs the list of earlier neighbours (0-based);
// intervals [left, right]; 2SAT a list of clauses [a, b] with signed 1-based
// variables (-3 is the negation of v3), optionally tagged "interval" or
// "collision" as a third entry; paging the page id.
std::string instance_to_json_line(const AnyInstance& instance);
AnyInstance instance_from_json_line(std::string_view line);
void write_jsonl(std::ostream& out, std::span<const AnyInstance> instances);
// Skips blank lines; errors name the 1-based line number.
std::vector<AnyInstance> read_jsonl(std::istream& in);

std::string trace_to_json(const ReductionTrace& trace);
std::string experiment_report_json(const ExperimentReport& report, bool include_records = false);
std::string reduction_report_json(const ReductionReport& report);
std::string pareto_report_json(const ParetoReport& report);
std::string adversary_run_json(const AdversaryRun& run, std::string_view algorithm);
std::string slack_curve_json(const SlackCurve& curve, AdversaryKind kind, std::string_view algorithm,
                             const CompetitiveClaim& claim);
std::string fbb_report_json(const FbbReport& report);

// CSV plot data.
std::string slack_curve_csv(const SlackCurve& curve);          // n,opt,alg,eta0,eta1,slack
std::string pareto_csv(const ParetoReport& report);            // alpha,beta,gamma,verdict
std::string fbb_blocks_csv(const FbbReport& report);           // block,end_condition,s,d_c,d_w,lfd,fbb,mu0,mu1
std::string records_csv(const ExperimentReport& report);       // instance_id,alg,opt,eta0,eta1,slack

}  // namespace predkit
