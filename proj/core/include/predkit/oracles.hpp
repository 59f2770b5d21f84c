#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "predkit/bits.hpp"
#include "predkit/cost.hpp"
#include "predkit/graph.hpp"
#include "predkit/instance.hpp"

namespace predkit {

enum class OracleMethod {
  kExhaustive,  // full enumeration of {0,1}^n
  kSearch,      // exact bounded search tree with iterative deepening
  kGreedy,      // earliest-finish greedy (interval rejection)
  kLfd,         // Belady (paging)
  kClosedForm,  // ASG: x is its own optimum
};
std::string_view to_string(OracleMethod method);

struct OracleResult {
  Cost opt_cost;
  BitString witness;
  OracleMethod method = OracleMethod::kExhaustive;
};

inline constexpr std::size_t kBruteForceLimit = 24;
inline constexpr std::size_t kColoringComponentLimit = 24;

// Exhaustive minimum over all y in {0,1}^n, scanning y in lexicographic order
// and keeping the first optimum, so the witness is the lexicographically
// smallest optimal vector. Throws SizeLimitExceeded above kBruteForceLimit.
// Not defined for paging.
OracleResult brute_force_opt(const AnyInstance& instance);

// Exact backtracking, per connected component. Throws SizeLimitExceeded when a
// component exceeds kColoringComponentLimit vertices.
bool k_colorable(const Graph& g, std::int64_t k);

OracleResult greedy_ir_opt(std::span<const Interval> intervals);

OracleResult search_vc_opt(const Graph& g);
OracleResult search_dom_opt(const Graph& g);
// Minimum number of vertices whose removal leaves a k-colorable graph.
OracleResult search_spill_opt(const Graph& g, std::int64_t k);

// The preferred exact oracle per problem: closed form for ASG, bounded search
// for VC/Dom/Spill, greedy for IR, exhaustive for 2SAT, LFD for paging.
OracleResult exact_opt(const AnyInstance& instance);

struct EncodingVerdict {
  bool pass = false;
  bool feasible = false;
  Cost x_cost;
  Cost opt_cost;
  std::string detail;
};

// PASS iff y = x is feasible and its cost equals the oracle optimum. For
// paging, PASS iff x equals lfd_labels.
EncodingVerdict verify_optimal_encoding(const AnyInstance& instance);

}  // namespace predkit
