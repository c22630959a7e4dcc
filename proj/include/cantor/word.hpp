#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/natset.hpp"

namespace cantor {

/// A finite binary sequence. Position i holds bit x(i); when a word is read as
/// a subset of the naturals, position i is the characteristic value of i.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t length, bool bit = false) : bits_(length, bit ? 1 : 0) {}

  /// Parses a string over {'0','1'}; any other character is InvalidInput.
  static Word from_string(std::string_view text);
  std::string to_string() const;

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool bit) { bits_.at(i) = bit ? 1 : 0; }
  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const Word& w) { bits_.insert(bits_.end(), w.bits_.begin(), w.bits_.end()); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  /// Bits in [begin, end). Throws InvalidInput when the range leaves the word.
  Word slice(std::size_t begin, std::size_t end) const;
  Word prefix(std::size_t n) const { return slice(0, n); }
  bool starts_with(const Word& p) const;

  /// Positions holding a 1, i.e. the subset of the naturals this word encodes.
  NatSet support() const;
  /// Characteristic vector of `a` restricted to [0, length).
  static Word from_support(const NatSet& a, std::size_t length);

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend Word operator+(const Word& lhs, const Word& rhs);
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Sorted, duplicate-free collection of words. Iteration order is lexicographic.
using WordSet = std::set<Word>;

/// h(x, y): the least index at which x and y differ.
/// Throws NoSplit when one word is a prefix of the other (including x == y).
std::size_t split_point(const Word& x, const Word& y);

/// H(X): all splitting points over pairs of distinct words of X.
/// All words must share one length, otherwise InvalidInput.
NatSet split_set(const WordSet& words);
NatSet split_set(std::span<const Word> words);

/// Prepends `s` to every word.
WordSet prepend_all(const Word& s, const WordSet& words);

}  // namespace cantor
