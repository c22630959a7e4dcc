#include "cantor/codec.hpp"

#include <algorithm>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

Nat nat_of_slice(const Word& x, std::size_t begin, std::size_t end) {
  Nat value = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if (value >> 63) {
      throw RangeError("binary numeral of length " + std::to_string(end - begin) +
                       " exceeds 64 bits");
    }
    value = (value << 1) | (x[i] ? 1u : 0u);
  }
  return value;
}

Nat nat_of_word(const Word& s) { return nat_of_slice(s, 0, s.size()); }

Word word_of_nat(Nat m, std::size_t k) {
  Word w(k);
  for (std::size_t i = 0; i < k && i < 64; ++i) {
    w.set(k - 1 - i, ((m >> i) & 1u) != 0);
  }
  return w;
}

NatSeq encode_point(const Word& x, const PartitioningPrefix& d) {
  if (x.size() != d.horizon()) {
    throw AlignmentError("point of length " + std::to_string(x.size()) +
                         " does not match partition horizon " + std::to_string(d.horizon()));
  }
  NatSeq out(d.intervals());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = nat_of_slice(x, d.begin(n), d.end(n));
  return out;
}

Word decode_seq(const NatSeq& f, const PartitioningPrefix& d) {
  if (f.size() != d.intervals()) {
    throw AlignmentError("sequence of length " + std::to_string(f.size()) +
                         " does not match partition with " + std::to_string(d.intervals()) +
                         " intervals");
  }
  Word out;
  out.reserve(d.horizon());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const std::size_t k = d.length(n);
    for (std::size_t i = k; i-- > 0;) out.push_back(i < 64 && ((f[n] >> i) & 1u) != 0);
  }
  return out;
}

bool range_bounded(const NatSeq& f, const PartitioningPrefix& d) {
  if (f.size() != d.intervals()) return false;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (d.length(n) < 64 && (f[n] >> d.length(n)) != 0) return false;
  }
  return true;
}

BinarySlalom slalom_to_binary(const Slalom& s, const PartitioningPrefix& d) {
  BinarySlalom out{d, {}, s.width};
  const std::size_t n_cells = std::min(s.cells.size(), d.intervals());
  out.cells.resize(d.intervals());
  for (std::size_t n = 0; n < n_cells; ++n) {
    for (Nat m : s.cells[n]) out.cells[n].insert(word_of_nat(m, d.length(n)));
  }
  return out;
}

Slalom binary_to_slalom(const BinarySlalom& b) {
  Slalom out{{}, b.width};
  out.cells.reserve(b.cells.size());
  for (const WordSet& cell : b.cells) {
    std::vector<Nat> values;
    values.reserve(cell.size());
    for (const Word& w : cell) values.push_back(nat_of_word(w));
    out.cells.emplace_back(std::move(values));
  }
  return out;
}

}  // namespace cantor
