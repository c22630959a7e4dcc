#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace cantor {

using Nat = std::uint64_t;
/// Finite prefix of an element of the Baire space.
using NatSeq = std::vector<Nat>;

/// Strictly sorted finite set of naturals.
class NatSet {
 public:
  using const_iterator = std::vector<Nat>::const_iterator;

  NatSet() = default;
  NatSet(std::initializer_list<Nat> values);
  explicit NatSet(std::vector<Nat> values);

  bool contains(Nat k) const;
  void insert(Nat k);

  /// |a ∩ [0, bound)|.
  std::size_t count_below(Nat bound) const;
  /// Elements in [lo, hi).
  NatSet restrict(Nat lo, Nat hi) const;
  /// Elements ≥ lo.
  NatSet at_least(Nat lo) const;

  bool subset_of(const NatSet& other) const;

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Nat operator[](std::size_t i) const { return values_[i]; }
  std::optional<Nat> max() const;
  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }
  const std::vector<Nat>& values() const noexcept { return values_; }

  auto operator<=>(const NatSet&) const = default;
  bool operator==(const NatSet&) const = default;

 private:
  std::vector<Nat> values_;
};

NatSet set_union(const NatSet& a, const NatSet& b);
NatSet set_difference(const NatSet& a, const NatSet& b);
NatSet set_intersection(const NatSet& a, const NatSet& b);

/// a + n = {k + n | k ∈ a}.
NatSet shift_set(const NatSet& a, Nat n);
/// {k - n | k ∈ a, k ≥ n}; the inverse of shift_set on sets above n.
NatSet unshift_set(const NatSet& a, Nat n);

/// Finite-horizon stand-in for an eventual relation: the relation holds on
/// [threshold, horizon).
struct EventualCertificate {
  Nat threshold = 0;
  Nat horizon = 0;
  bool operator==(const EventualCertificate&) const = default;
};

struct SubsetReport {
  /// Present unless the only threshold that works is the horizon itself.
  std::optional<EventualCertificate> certificate;
  /// |a \ b|.
  std::size_t excess = 0;
  /// Least k with (a ∩ [k, horizon)) ⊆ b.
  Nat threshold = 0;
};

/// Finite-horizon a ⊆* b. Every element of a and b must lie below `horizon`.
SubsetReport eventually_subset(const NatSet& a, const NatSet& b, Nat horizon);

/// ⌊√n⌋ in exact integer arithmetic.
Nat isqrt(Nat n);
/// ⌊log₂ n⌋ for n ≥ 1.
Nat floor_log2(Nat n);

}  // namespace cantor
