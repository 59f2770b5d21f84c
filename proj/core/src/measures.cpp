#include "predkit/measures.hpp"

#include "predkit/error.hpp"

namespace predkit {

ErrorMeasure::ErrorMeasure(std::string id, Fn fn, bool claims_insertion_monotone)
    : id_(std::move(id)), fn_(std::move(fn)), claims_insertion_monotone_(claims_insertion_monotone) {}

Rational ErrorMeasure::evaluate(const BitString& x, const BitString& xhat) const {
  require_same_length(x, xhat, "error measure " + id_);
  Rational value = fn_(x, xhat);
  if (value < 0) throw InvalidInput("error measure " + id_ + " returned a negative value");
  return value;
}

std::int64_t mu0(const BitString& x, const BitString& xhat) {
  require_same_length(x, xhat, "mu0");
  std::int64_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) count += x[i] * (1 - xhat[i]);
  return count;
}

std::int64_t mu1(const BitString& x, const BitString& xhat) {
  require_same_length(x, xhat, "mu1");
  std::int64_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) count += (1 - x[i]) * xhat[i];
  return count;
}

ErrorMeasure mu0_measure() {
  return ErrorMeasure(
      "mu0", [](const BitString& x, const BitString& xhat) { return Rational(mu0(x, xhat)); }, true);
}

ErrorMeasure mu1_measure() {
  return ErrorMeasure(
      "mu1", [](const BitString& x, const BitString& xhat) { return Rational(mu1(x, xhat)); }, true);
}

ErrorMeasure zero_measure(std::string id) {
  return ErrorMeasure(
      std::move(id), [](const BitString&, const BitString&) { return Rational(0); }, true);
}

MeasurePair mu_pair() { return MeasurePair{"mu", mu0_measure(), mu1_measure()}; }

MeasurePair zero_pair() { return MeasurePair{"zero", zero_measure("Z0"), zero_measure("Z1")}; }

MonotonicityVerdict check_insertion_monotone(const ErrorMeasure& measure, const BitString& x,
                                             const BitString& xhat,
                                             std::span<const Insertion> insertions) {
  require_same_length(x, xhat, "check_insertion_monotone");
  MonotonicityVerdict verdict;
  verdict.base_value = measure.evaluate(x, xhat);
  verdict.x = x;
  verdict.xhat = xhat;
  for (const Insertion& ins : insertions) {
    if (ins.bit != ins.predicted) {
      throw InvalidInput("inserted request must be correctly predicted");
    }
    verdict.x.insert(ins.position, ins.bit);
    verdict.xhat.insert(ins.position, ins.predicted);
  }
  verdict.extended_value = measure.evaluate(verdict.x, verdict.xhat);
  verdict.pass = verdict.extended_value <= verdict.base_value;
  return verdict;
}

}  // namespace predkit
