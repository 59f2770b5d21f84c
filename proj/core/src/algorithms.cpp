#include "predkit/algorithms.hpp"

#include <algorithm>

#include "predkit/oracles.hpp"
#include "predkit/problems.hpp"

namespace predkit {

std::uint64_t mix64(std::uint64_t value) {
  // splitmix64 finalizer
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

Bit SafeFollowCover::decide(const VertexArrival& request, Bit prediction) {
  bool forced = std::any_of(request.back_edges.begin(), request.back_edges.end(),
                            [&](std::size_t u) { return decisions_.at(u) == 0; });
  Bit y = forced ? Bit{1} : prediction;
  decisions_.push_back(y);
  return y;
}

Bit SelfDominating::decide(const VertexArrival& request, Bit prediction) {
  bool dominated = std::any_of(request.back_edges.begin(), request.back_edges.end(),
                               [&](std::size_t u) { return decisions_.at(u) == 1; });
  Bit y = dominated ? prediction : Bit{1};
  decisions_.push_back(y);
  return y;
}

Bit GreedyColorable::decide(const VertexArrival& request, Bit) {
  std::size_t v = graph_.add_vertex(request.back_edges);
  kept_.push_back(v);
  if (k_colorable(graph_.induced(kept_), k_)) return 0;
  kept_.pop_back();
  return 1;
}

Bit GreedyKeepIntervals::decide(const Interval& request, Bit prediction) {
  bool blocked = std::any_of(kept_.begin(), kept_.end(),
                             [&](const Interval& s) { return overlaps(s, request); });
  if (blocked || (follow_ && prediction == 1)) return 1;
  kept_.push_back(request);
  return 0;
}

Bit GreedySat2::decide(const Sat2Request& request, Bit prediction) {
  std::size_t unsat[2] = {0, 0};
  for (Bit value : {Bit{0}, Bit{1}}) {
    BitString trial = assignment_;
    trial.push_back(value);
    for (const Clause2& clause : request.clauses) {
      if (!clause_satisfied(clause, trial)) ++unsat[value];
    }
  }
  Bit y = unsat[0] == unsat[1] ? prediction : (unsat[0] < unsat[1] ? Bit{0} : Bit{1});
  assignment_.push_back(y);
  return y;
}

namespace {

template <class Req>
std::vector<NamedAlgorithm<Req>> generic_algorithms(std::uint64_t seed) {
  return {
      {"ftp", ftp_factory<Req>()},
      {"always-zero", constant_factory<Req>(0)},
      {"always-one", constant_factory<Req>(1)},
      {"contrarian", contrarian_factory<Req>()},
      {"hashed", hashed_factory<Req>(seed)},
  };
}

}  // namespace

std::vector<NamedAlgorithm<AsgPrompt>> asg_algorithms(std::uint64_t seed) {
  return generic_algorithms<AsgPrompt>(seed);
}

std::vector<NamedAlgorithm<VertexArrival>> vc_algorithms(std::uint64_t seed) {
  auto out = generic_algorithms<VertexArrival>(seed);
  out.push_back({"accept-nonisolated", [] { return std::make_unique<AcceptNonIsolated>(); }});
  out.push_back({"safe-ftp", [] { return std::make_unique<SafeFollowCover>(); }});
  return out;
}

std::vector<NamedAlgorithm<VertexArrival>> dom_algorithms(std::uint64_t seed) {
  auto out = generic_algorithms<VertexArrival>(seed);
  out.push_back({"self-dominating", [] { return std::make_unique<SelfDominating>(); }});
  return out;
}

std::vector<NamedAlgorithm<VertexArrival>> spill_algorithms(std::int64_t k, std::uint64_t seed) {
  auto out = generic_algorithms<VertexArrival>(seed);
  out.push_back({"greedy-colorable", [k] { return std::make_unique<GreedyColorable>(k); }});
  return out;
}

std::vector<NamedAlgorithm<Interval>> ir_algorithms(std::uint64_t seed) {
  auto out = generic_algorithms<Interval>(seed);
  out.push_back({"greedy-keep", [] { return std::make_unique<GreedyKeepIntervals>(false); }});
  out.push_back({"safe-ftp", [] { return std::make_unique<GreedyKeepIntervals>(true); }});
  return out;
}

std::vector<NamedAlgorithm<Sat2Request>> sat2_algorithms(std::uint64_t seed) {
  auto out = generic_algorithms<Sat2Request>(seed);
  out.push_back({"greedy-sat", [] { return std::make_unique<GreedySat2>(); }});
  return out;
}

}  // namespace predkit
