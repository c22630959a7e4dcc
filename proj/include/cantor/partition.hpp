#pragma once

#include <cstddef>
#include <vector>

#include "cantor/natset.hpp"

namespace cantor {

/// Finite prefix d(0..N) of a partitioning real: d(0) = 0 and d strictly
/// increasing. Interval n is [d(n), d(n+1)) for n < N.
class PartitioningPrefix {
 public:
  /// The empty partition (d = (0), no intervals).
  PartitioningPrefix() : points_{0} {}

  /// Validates d(0) = 0 and strict monotonicity; throws InvalidPartition.
  static PartitioningPrefix from_points(std::vector<Nat> points);

  /// Number of intervals N.
  std::size_t intervals() const noexcept { return points_.size() - 1; }
  /// Bit length d(N) covered by the intervals.
  Nat horizon() const noexcept { return points_.back(); }

  Nat point(std::size_t n) const { return points_.at(n); }
  Nat begin(std::size_t n) const { return points_.at(n); }
  Nat end(std::size_t n) const { return points_.at(n + 1); }
  Nat length(std::size_t n) const { return end(n) - begin(n); }

  const std::vector<Nat>& points() const noexcept { return points_; }

  bool operator==(const PartitioningPrefix&) const = default;

 private:
  explicit PartitioningPrefix(std::vector<Nat> points) : points_(std::move(points)) {}
  std::vector<Nat> points_;
};

/// Prefix sums of `deltas` starting at 0. Every delta must be positive.
PartitioningPrefix make_partition(const NatSeq& deltas);

}  // namespace cantor
