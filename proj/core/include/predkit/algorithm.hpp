#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "predkit/bits.hpp"
#include "predkit/instance.hpp"

namespace predkit {

// Deterministic online decision-maker. Decisions are irrevocable: the
// algorithm sees request i and its prediction, answers, and only then sees the
// next request. The true bits may be revealed after the last request.
template <class Req>
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual Bit decide(const Req& request, Bit prediction) = 0;
  virtual void reveal(const BitString& /*truth*/) {}
};

template <class Req>
using AlgorithmFactory = std::function<std::unique_ptr<OnlineAlgorithm<Req>>()>;

template <class Req>
struct NamedAlgorithm {
  std::string id;
  AlgorithmFactory<Req> make;
};

template <class Req>
BitString run_online(OnlineAlgorithm<Req>& alg, const PredictedInstance<Req>& instance) {
  instance.validate_shape();
  BitString y;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    y.push_back(alg.decide(instance.requests[i], instance.xhat[i]));
  }
  alg.reveal(instance.x);
  return y;
}

template <class Req>
BitString run_online(const AlgorithmFactory<Req>& make, const PredictedInstance<Req>& instance) {
  auto alg = make();
  return run_online(*alg, instance);
}

}  // namespace predkit
