#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "predkit/algorithm.hpp"
#include "predkit/graph.hpp"
#include "predkit/instance.hpp"

namespace predkit {

// y_i = xhat_i.
template <class Req>
class FollowPredictions final : public OnlineAlgorithm<Req> {
 public:
  std::string name() const override { return "ftp"; }
  Bit decide(const Req&, Bit prediction) override { return prediction; }
};

// y_i = b for a fixed b.
template <class Req>
class ConstantGuess final : public OnlineAlgorithm<Req> {
 public:
  explicit ConstantGuess(Bit bit) : bit_(bit) {}
  std::string name() const override { return bit_ ? "always-one" : "always-zero"; }
  Bit decide(const Req&, Bit) override { return bit_; }

 private:
  Bit bit_;
};

// y_i = 1 - xhat_i.
template <class Req>
class Contrarian final : public OnlineAlgorithm<Req> {
 public:
  std::string name() const override { return "contrarian"; }
  Bit decide(const Req&, Bit prediction) override { return static_cast<Bit>(1 - prediction); }
};

// A fixed pseudo-random function of (seed, step, prediction). Deterministic,
// but without structure an adversary could exploit by accident.
std::uint64_t mix64(std::uint64_t value);

template <class Req>
class HashedGuess final : public OnlineAlgorithm<Req> {
 public:
  explicit HashedGuess(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "hashed"; }
  Bit decide(const Req&, Bit prediction) override {
    std::uint64_t h = mix64(seed_ ^ mix64(step_++ * 2 + prediction));
    return static_cast<Bit>(h & 1);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t step_ = 0;
};

// Replays a fixed decision sequence, then answers `fallback`.
template <class Req>
class Scripted final : public OnlineAlgorithm<Req> {
 public:
  Scripted(BitString script, Bit fallback) : script_(std::move(script)), fallback_(fallback) {}
  std::string name() const override { return "scripted"; }
  Bit decide(const Req&, Bit) override {
    return step_ < script_.size() ? script_[step_++] : fallback_;
  }

 private:
  BitString script_;
  Bit fallback_;
  std::size_t step_ = 0;
};

template <class Req>
AlgorithmFactory<Req> ftp_factory() {
  return [] { return std::make_unique<FollowPredictions<Req>>(); };
}
template <class Req>
AlgorithmFactory<Req> constant_factory(Bit bit) {
  return [bit] { return std::make_unique<ConstantGuess<Req>>(bit); };
}
template <class Req>
AlgorithmFactory<Req> contrarian_factory() {
  return [] { return std::make_unique<Contrarian<Req>>(); };
}
template <class Req>
AlgorithmFactory<Req> hashed_factory(std::uint64_t seed) {
  return [seed] { return std::make_unique<HashedGuess<Req>>(seed); };
}
template <class Req>
AlgorithmFactory<Req> scripted_factory(BitString script, Bit fallback = 0) {
  return [script, fallback] { return std::make_unique<Scripted<Req>>(script, fallback); };
}

// Vertex cover: reject a vertex that arrives without edges, accept otherwise.
class AcceptNonIsolated final : public OnlineAlgorithm<VertexArrival> {
 public:
  std::string name() const override { return "accept-nonisolated"; }
  Bit decide(const VertexArrival& request, Bit) override { return request.back_edges.empty() ? 0 : 1; }
};

// Vertex cover: follow the prediction, but accept whenever an earlier
// neighbour was rejected, so the output is always a cover.
class SafeFollowCover final : public OnlineAlgorithm<VertexArrival> {
 public:
  std::string name() const override { return "safe-ftp"; }
  Bit decide(const VertexArrival& request, Bit prediction) override;

 private:
  std::vector<Bit> decisions_;
};

// Dominating set: follow the prediction, but accept a vertex that no earlier
// accepted vertex dominates.
class SelfDominating final : public OnlineAlgorithm<VertexArrival> {
 public:
  std::string name() const override { return "self-dominating"; }
  Bit decide(const VertexArrival& request, Bit prediction) override;

 private:
  std::vector<Bit> decisions_;
};

// k-Spill: keep a vertex iff the kept subgraph stays k-colorable.
class GreedyColorable final : public OnlineAlgorithm<VertexArrival> {
 public:
  explicit GreedyColorable(std::int64_t k) : k_(k) {}
  std::string name() const override { return "greedy-colorable"; }
  Bit decide(const VertexArrival& request, Bit prediction) override;

 private:
  std::int64_t k_;
  Graph graph_;
  std::vector<std::size_t> kept_;
};

// Interval rejection: keep an interval iff it overlaps no kept interval.
class GreedyKeepIntervals final : public OnlineAlgorithm<Interval> {
 public:
  explicit GreedyKeepIntervals(bool follow_predictions) : follow_(follow_predictions) {}
  std::string name() const override { return follow_ ? "safe-ftp" : "greedy-keep"; }
  Bit decide(const Interval& request, Bit prediction) override;

 private:
  bool follow_;
  std::vector<Interval> kept_;
};

// 2SAT: pick the value that leaves fewer of the newly revealed clauses
// unsatisfied; ties go to the prediction.
class GreedySat2 final : public OnlineAlgorithm<Sat2Request> {
 public:
  std::string name() const override { return "greedy-sat"; }
  Bit decide(const Sat2Request& request, Bit prediction) override;

 private:
  BitString assignment_;
};

// Registries of the deterministic algorithms available per problem.
std::vector<NamedAlgorithm<AsgPrompt>> asg_algorithms(std::uint64_t seed = 1);
std::vector<NamedAlgorithm<VertexArrival>> vc_algorithms(std::uint64_t seed = 1);
std::vector<NamedAlgorithm<VertexArrival>> dom_algorithms(std::uint64_t seed = 1);
std::vector<NamedAlgorithm<VertexArrival>> spill_algorithms(std::int64_t k, std::uint64_t seed = 1);
std::vector<NamedAlgorithm<Interval>> ir_algorithms(std::uint64_t seed = 1);
std::vector<NamedAlgorithm<Sat2Request>> sat2_algorithms(std::uint64_t seed = 1);

// Looks an id up in a registry. Throws InvalidInput listing the known ids.
template <class Req>
const NamedAlgorithm<Req>& find_algorithm(const std::vector<NamedAlgorithm<Req>>& registry,
                                          std::string_view id) {
  for (const auto& entry : registry) {
    if (entry.id == id) return entry;
  }
  std::string known;
  for (const auto& entry : registry) known += (known.empty() ? "" : ", ") + entry.id;
  throw InvalidInput("unknown algorithm \"" + std::string(id) + "\"; known: " + known);
}

}  // namespace predkit
