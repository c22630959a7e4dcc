#include "cantor/word.hpp"

#include <algorithm>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

Word Word::from_string(std::string_view text) {
  Word w;
  w.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidInput("word contains a character other than '0'/'1': '" +
                         std::string(text) + "'");
    }
    w.bits_.push_back(c == '1' ? 1 : 0);
  }
  return w;
}

std::string Word::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > bits_.size()) {
    throw InvalidInput("slice [" + std::to_string(begin) + "," + std::to_string(end) +
                       ") outside word of length " + std::to_string(bits_.size()));
  }
  Word w;
  w.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(begin),
                 bits_.begin() + static_cast<std::ptrdiff_t>(end));
  return w;
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.bits_.begin(), p.bits_.end(), bits_.begin());
}

NatSet Word::support() const {
  std::vector<Nat> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return NatSet(std::move(out));
}

Word Word::from_support(const NatSet& a, std::size_t length) {
  Word w(length);
  for (Nat k : a) {
    if (k >= length) {
      throw InvalidInput("element " + std::to_string(k) + " outside length " +
                         std::to_string(length));
    }
    w.bits_[k] = 1;
  }
  return w;
}

Word operator+(const Word& lhs, const Word& rhs) {
  Word w;
  w.bits_.reserve(lhs.size() + rhs.size());
  w.bits_.insert(w.bits_.end(), lhs.bits_.begin(), lhs.bits_.end());
  w.bits_.insert(w.bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
  return w;
}

std::size_t split_point(const Word& x, const Word& y) {
  auto xb = x.bits();
  auto yb = y.bits();
  std::size_t n = std::min(xb.size(), yb.size());
  auto [ix, iy] = std::mismatch(xb.begin(), xb.begin() + static_cast<std::ptrdiff_t>(n),
                                yb.begin());
  if (ix == xb.begin() + static_cast<std::ptrdiff_t>(n)) {
    throw NoSplit("no splitting point between '" + x.to_string() + "' and '" +
                  y.to_string() + "'");
  }
  return static_cast<std::size_t>(ix - xb.begin());
}

NatSet split_set(const WordSet& words) {
  if (words.empty()) return {};
  const std::size_t length = words.begin()->size();
  std::vector<Nat> out;
  // In lexicographic order, h(x, z) = min(h(x, y), h(y, z)) for x < y < z, so
  // adjacent pairs already produce every splitting point.
  const Word* prev = nullptr;
  for (const Word& w : words) {
    if (w.size() != length) {
      throw InvalidInput("split_set: words of mixed lengths (" + std::to_string(length) +
                         " and " + std::to_string(w.size()) + ")");
    }
    if (prev != nullptr) out.push_back(split_point(*prev, w));
    prev = &w;
  }
  return NatSet(std::move(out));
}

NatSet split_set(std::span<const Word> words) {
  return split_set(WordSet(words.begin(), words.end()));
}

WordSet prepend_all(const Word& s, const WordSet& words) {
  WordSet out;
  for (const Word& w : words) out.insert(out.end(), s + w);
  return out;
}

}  // namespace cantor
