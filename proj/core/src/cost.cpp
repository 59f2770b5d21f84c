#include "predkit/cost.hpp"

#include <charconv>
#include <stdexcept>

#include "predkit/error.hpp"

namespace predkit {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput("not an exact number: \"" + std::string(whole) + "\"");
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator: \"" + std::string(text) + "\"");
    return Rational(parse_int(text.substr(0, slash), text), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    if (frac.empty() || frac.size() > 12) throw InvalidInput("bad decimal: \"" + std::string(text) + "\"");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t int_part = whole.empty() ? 0 : parse_int(whole, text);
    if (frac.front() == '-' || frac.front() == '+') throw InvalidInput("bad decimal: \"" + std::string(text) + "\"");
    Rational r = Rational(int_part) + Rational(parse_int(frac, text), scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Cost::Cost(std::int64_t value) : Cost(Rational(value)) {}

Cost::Cost(const Rational& value) : value_(value) {
  if (value < 0) throw InvalidInput("cost must be nonnegative, got " + predkit::to_string(value));
}

Cost Cost::infinite() {
  Cost c;
  c.infinite_ = true;
  return c;
}

Cost Cost::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinite();
  return Cost(parse_rational(text));
}

const Rational& Cost::value() const {
  if (infinite_) throw std::logic_error("value() on an infinite cost");
  return value_;
}

std::string Cost::to_string() const { return infinite_ ? "inf" : predkit::to_string(value_); }

Cost operator+(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return Cost::infinite();
  return Cost(a.value_ + b.value_);
}

Cost& Cost::operator+=(const Cost& other) { return *this = *this + other; }

Cost operator*(const Cost& a, const Cost& b) {
  bool a_zero = a.is_finite() && a.value_ == 0;
  bool b_zero = b.is_finite() && b.value_ == 0;
  if (a_zero || b_zero) return Cost(0);
  if (a.infinite_ || b.infinite_) return Cost::infinite();
  return Cost(a.value_ * b.value_);
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Slack Slack::finite(const Rational& value) {
  Slack s;
  s.kind_ = Kind::kFinite;
  s.value_ = value;
  return s;
}

Slack Slack::negative_infinity() { return Slack(); }

Slack Slack::positive_infinity() {
  Slack s;
  s.kind_ = Kind::kPositiveInfinity;
  return s;
}

Slack Slack::balanced() {
  Slack s;
  s.kind_ = Kind::kBalanced;
  return s;
}

Slack Slack::difference(const Cost& lhs, const Cost& rhs) {
  if (lhs.is_infinite() && rhs.is_infinite()) return balanced();
  if (lhs.is_infinite()) return positive_infinity();
  if (rhs.is_infinite()) return negative_infinity();
  return finite(lhs.value() - rhs.value());
}

const Rational& Slack::value() const {
  if (kind_ != Kind::kFinite) throw std::logic_error("value() on a non-finite slack");
  return value_;
}

bool Slack::within(const Rational& threshold) const {
  switch (kind_) {
    case Kind::kNegativeInfinity:
    case Kind::kBalanced:
      return true;
    case Kind::kFinite:
      return value_ <= threshold;
    case Kind::kPositiveInfinity:
      return false;
  }
  return false;
}

std::string Slack::to_string() const {
  switch (kind_) {
    case Kind::kNegativeInfinity:
      return "-inf";
    case Kind::kBalanced:
      return "inf-inf";
    case Kind::kFinite:
      return predkit::to_string(value_);
    case Kind::kPositiveInfinity:
      return "inf";
  }
  return "?";
}

bool operator==(const Slack& a, const Slack& b) {
  return a.kind_ == b.kind_ && (a.kind_ != Slack::Kind::kFinite || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const Slack& a, const Slack& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != Slack::Kind::kFinite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace predkit
