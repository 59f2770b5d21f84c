#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74 defines integer == rational by calling rational == integer, which
// C++20 rewrites back into the same call. These exact overloads win the
// resolution and end the recursion.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a == rational<std::int64_t>(static_cast<std::int64_t>(b));
}
}  // namespace boost

namespace predkit {

using Rational = boost::rational<std::int64_t>;

// Parses "3", "-2", "5/2" or a terminating decimal such as "2.5" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// A nonnegative exact cost, or the distinguished value Infinite.
class Cost {
 public:
  Cost() = default;
  Cost(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Cost(int value) : Cost(static_cast<std::int64_t>(value)) {}  // NOLINT
  Cost(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Cost infinite();
  // Accepts everything parse_rational accepts plus "inf".
  static Cost parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Throws std::logic_error when infinite.
  const Rational& value() const;

  std::string to_string() const;

  friend Cost operator+(const Cost& a, const Cost& b);
  Cost& operator+=(const Cost& other);
  // Scaling used in claim evaluation; Infinite * 0 = 0.
  friend Cost operator*(const Cost& a, const Cost& b);

  friend bool operator==(const Cost& a, const Cost& b);
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

 private:
  bool infinite_ = false;
  Rational value_{0};
};

// The difference between two costs, which can leave the nonnegative range or be
// +/- infinite. "Balanced" marks Infinite - Infinite: the inequality
// Infinite <= Infinite holds, so a balanced slack never violates a claim.
class Slack {
 public:
  enum class Kind { kNegativeInfinity, kBalanced, kFinite, kPositiveInfinity };

  Slack() = default;
  static Slack finite(const Rational& value);
  static Slack negative_infinity();
  static Slack positive_infinity();
  static Slack balanced();
  // lhs - rhs.
  static Slack difference(const Cost& lhs, const Cost& rhs);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  const Rational& value() const;

  // True iff the slack does not exceed the threshold.
  bool within(const Rational& threshold) const;
  std::string to_string() const;

  // Total order: -inf < balanced < finite values < +inf.
  friend bool operator==(const Slack& a, const Slack& b);
  friend std::strong_ordering operator<=>(const Slack& a, const Slack& b);

 private:
  Kind kind_ = Kind::kNegativeInfinity;
  Rational value_{0};
};

}  // namespace predkit
