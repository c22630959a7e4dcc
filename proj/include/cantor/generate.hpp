#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cantor/natset.hpp"
#include "cantor/partition.hpp"
#include "cantor/slalom.hpp"
#include "cantor/word.hpp"

/// Seed-stable random instance generators. Only the raw mt19937_64 stream is
/// used (its output is fixed by the standard); bounded draws are derived by
/// hand so instances do not depend on the standard library's distributions.
namespace cantor::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  Nat below(Nat n) { return next() % n; }
  /// Uniform in [lo, hi].
  Nat between(Nat lo, Nat hi) { return lo + below(hi - lo + 1); }
  /// True with probability num/den.
  bool chance(Nat num, Nat den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

Word random_word(Rng& rng, std::size_t length);

/// Partition with `intervals` intervals of lengths in [1, max_length].
PartitioningPrefix random_partition(Rng& rng, std::size_t intervals, Nat max_length);

/// Partition with interval lengths in [1, max_length] and horizon ≤ max_horizon.
PartitioningPrefix random_partition_within(Rng& rng, Nat max_horizon, Nat max_length);

/// f with f(n) < 2^{|I^d_n|}.
NatSeq random_bounded_sequence(Rng& rng, const PartitioningPrefix& d);

/// Strictly increasing sequence starting at `first`, gaps in [1, max_gap].
NatSeq random_increasing(Rng& rng, std::size_t length, Nat first, Nat max_gap);

/// Up to `max_points` words of `length` bits whose pairwise splitting points
/// all lie in `allowed`. Grown as a tree: for each allowed position in
/// increasing order, existing words may fork there with a fresh random tail.
/// With `mask`, every random bit is confined to the mask's support and forks
/// happen only inside it.
WordSet random_branching_set(Rng& rng, std::size_t length, const NatSet& allowed,
                             std::size_t max_points, const Word* mask = nullptr);

/// a with |a ∩ d(n)| ≤ χ(n) for every n ≤ N. Each interval receives a random
/// share of the remaining budget.
NatSet random_chi_witness(Rng& rng, const PartitioningPrefix& d);

/// Identity-width d-binary slalom with random cells, B(0) = ∅.
BinarySlalom random_binary_slalom(Rng& rng, const PartitioningPrefix& d);

/// a with |a ∩ f(n)| ≤ φ(n) for all n < |f|, mostly at equality. φ must be
/// nondecreasing. A few elements above f's last value are added freely.
NatSet random_boundary_witness(Rng& rng, const NatSeq& f, const WidthFunction& phi);

}  // namespace cantor::gen
