#pragma once

#include <cstddef>

#include "cantor/natset.hpp"
#include "cantor/partition.hpp"
#include "cantor/slalom.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// Value of `s` read as a big-endian binary numeral; the empty word is 0.
/// Leading zeros are allowed in any number; RangeError if the value needs
/// more than 64 bits.
Nat nat_of_word(const Word& s);
/// nat_of_word of x↾[begin, end), without copying the slice.
Nat nat_of_slice(const Word& x, std::size_t begin, std::size_t end);

/// The k low-order binary digits of m, most significant first, zero-padded.
Word word_of_nat(Nat m, std::size_t k);

/// nat_d(x): entry n is the numeral of x↾I^d_n. AlignmentError unless |x| = d(N).
NatSeq encode_point(const Word& x, const PartitioningPrefix& d);

/// bin_d(f): slice n is word_of_nat(f(n), |I^d_n|). AlignmentError unless |f| = N.
Word decode_seq(const NatSeq& f, const PartitioningPrefix& d);

/// True when f(n) < 2^{|I^d_n|} for every n, i.e. decode_seq loses nothing.
bool range_bounded(const NatSeq& f, const PartitioningPrefix& d);

/// bin_d[S]: cell n is the image of S(n) under word_of_nat(·, |I^d_n|).
/// Truncation collisions collapse into one word. Only the first N cells of S
/// are used; the width function is carried over.
BinarySlalom slalom_to_binary(const Slalom& s, const PartitioningPrefix& d);

/// nat[B]: cell n is the image of B(n) under nat_of_word.
Slalom binary_to_slalom(const BinarySlalom& b);

}  // namespace cantor
