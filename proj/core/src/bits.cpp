#include "predkit/bits.hpp"

#include <algorithm>

#include "predkit/error.hpp"

namespace predkit {
namespace {

Bit checked(Bit b) {
  if (b > 1) {
    throw InvalidInput("bit value must be 0 or 1, got " + std::to_string(b));
  }
  return b;
}

}  // namespace

BitString::BitString(std::size_t n, Bit fill) : bits_(n, checked(fill)) {}

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) checked(b);
}

BitString BitString::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidInput("bit string may only contain '0' and '1': \"" + std::string(text) + "\"");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return BitString(std::move(bits));
}

Bit BitString::at(std::size_t i) const {
  if (i >= bits_.size()) throw InvalidInput("bit index out of range");
  return bits_[i];
}

void BitString::set(std::size_t i, Bit b) {
  if (i >= bits_.size()) throw InvalidInput("bit index out of range");
  bits_[i] = checked(b);
}

void BitString::push_back(Bit b) { bits_.push_back(checked(b)); }

void BitString::insert(std::size_t position, Bit b) {
  if (position > bits_.size()) throw InvalidInput("insertion position out of range");
  bits_.insert(bits_.begin() + static_cast<std::ptrdiff_t>(position), checked(b));
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > bits_.size()) throw InvalidInput("bad slice bounds");
  return BitString(std::vector<Bit>(bits_.begin() + static_cast<std::ptrdiff_t>(begin),
                                    bits_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::size_t BitString::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Bit{1}));
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (Bit b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

void require_same_length(const BitString& a, const BitString& b, std::string_view what) {
  if (a.size() != b.size()) {
    throw InvalidInput(std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace predkit
