#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace predkit {

using Bit = std::uint8_t;

// A sequence of 0/1 values. Every mutator rejects values other than 0 and 1.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n, Bit fill = 0);
  explicit BitString(std::vector<Bit> bits);

  // Parses text such as "0110". Throws InvalidInput on any other character.
  static BitString parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  Bit at(std::size_t i) const;

  void set(std::size_t i, Bit b);
  void push_back(Bit b);
  void insert(std::size_t position, Bit b);
  void append(const BitString& other);

  BitString slice(std::size_t begin, std::size_t end) const;
  std::size_t count_ones() const;
  std::string to_string() const;
  const std::vector<Bit>& data() const { return bits_; }

  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<Bit> bits_;
};

// Throws InvalidInput unless both strings have the expected length.
void require_same_length(const BitString& a, const BitString& b, std::string_view what);

}  // namespace predkit
