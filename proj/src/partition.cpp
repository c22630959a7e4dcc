#include "cantor/partition.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor {

PartitioningPrefix PartitioningPrefix::from_points(std::vector<Nat> points) {
  if (points.empty() || points.front() != 0) {
    throw InvalidPartition("partition must start at 0");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] <= points[i - 1]) {
      throw InvalidPartition("partition not strictly increasing at index " +
                             std::to_string(i));
    }
  }
  return PartitioningPrefix(std::move(points));
}

PartitioningPrefix make_partition(const NatSeq& deltas) {
  std::vector<Nat> points;
  points.reserve(deltas.size() + 1);
  points.push_back(0);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i] == 0) {
      throw InvalidPartition("interval " + std::to_string(i) + " has length 0");
    }
    points.push_back(points.back() + deltas[i]);
  }
  return PartitioningPrefix::from_points(std::move(points));
}

}  // namespace cantor
