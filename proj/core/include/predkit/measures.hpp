#pragma once

#include <functional>
#include <span>
#include <string>

#include "predkit/bits.hpp"
#include "predkit/cost.hpp"
#include "predkit/instance.hpp"

namespace predkit {

// An error measure scored on the (x, xhat) bits of an instance.
class ErrorMeasure {
 public:
  using Fn = std::function<Rational(const BitString& x, const BitString& xhat)>;

  ErrorMeasure(std::string id, Fn fn, bool claims_insertion_monotone);

  const std::string& id() const { return id_; }
  bool claims_insertion_monotone() const { return claims_insertion_monotone_; }

  // Throws InvalidInput on a length mismatch or a negative result.
  Rational evaluate(const BitString& x, const BitString& xhat) const;

  template <class Req>
  Rational operator()(const PredictedInstance<Req>& instance) const {
    instance.validate_shape();
    return evaluate(instance.x, instance.xhat);
  }

 private:
  std::string id_;
  Fn fn_;
  bool claims_insertion_monotone_;
};

// Number of positions with x=1, xhat=0.
std::int64_t mu0(const BitString& x, const BitString& xhat);
// Number of positions with x=0, xhat=1.
std::int64_t mu1(const BitString& x, const BitString& xhat);

ErrorMeasure mu0_measure();
ErrorMeasure mu1_measure();
ErrorMeasure zero_measure(std::string id = "Z");

struct MeasurePair {
  std::string name;
  ErrorMeasure eta0;
  ErrorMeasure eta1;
};

MeasurePair mu_pair();
MeasurePair zero_pair();

// A correctly predicted request inserted before position `position` of the
// current sequence. Requires bit == predicted.
struct Insertion {
  std::size_t position = 0;
  Bit bit = 0;
  Bit predicted = 0;
};

struct MonotonicityVerdict {
  bool pass = true;
  Rational base_value{0};
  Rational extended_value{0};
  // The extended instance; kept on PASS as well so callers can replay it.
  BitString x;
  BitString xhat;
};

// Applies the insertions in order and compares the measure before and after.
// Throws InvalidInput when an insertion is not correctly predicted.
MonotonicityVerdict check_insertion_monotone(const ErrorMeasure& measure, const BitString& x,
                                             const BitString& xhat,
                                             std::span<const Insertion> insertions);

}  // namespace predkit
