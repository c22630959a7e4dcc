#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/natset.hpp"
#include "cantor/partition.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// A named width bound φ: ω → ω.
class WidthFunction {
 public:
  WidthFunction(std::string name, std::function<Nat(Nat)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  /// φ(n) = n.
  static WidthFunction identity();
  /// φ(n) = ⌊√n⌋.
  static WidthFunction floor_sqrt();
  /// φ(n) = c.
  static WidthFunction constant(Nat c);
  /// φ(n) = n(n−1)/2, the number of unordered pairs below n.
  static WidthFunction pair_count();
  /// φ(n) = 0 for n ≤ 1, ⌊log₂⌊√(n−1)⌋⌋ otherwise.
  static WidthFunction chi();
  /// φ(n) = values[n]; evaluating past the table throws InvalidInput.
  static WidthFunction table(std::vector<Nat> values);
  /// 2·φ(n).
  static WidthFunction doubled(const WidthFunction& base);

  Nat operator()(Nat n) const { return fn_(n); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::function<Nat(Nat)> fn_;
};

/// φ-slalom over the naturals. Cells beyond the evaluated horizon are ignored.
struct Slalom {
  std::vector<NatSet> cells;
  WidthFunction width = WidthFunction::identity();
};

/// d-binary φ-slalom: cell n holds words of length |I^d_n|.
struct BinarySlalom {
  PartitioningPrefix partition;
  std::vector<WordSet> cells;
  WidthFunction width = WidthFunction::identity();
};

/// A point goes through a slalom on [threshold, horizon).
struct CaptureCertificate {
  Nat threshold = 0;
  Nat horizon = 0;
  bool operator==(const CaptureCertificate&) const = default;
};

struct WidthVerdict {
  std::optional<std::size_t> violation;
  std::string reason;
  bool ok() const noexcept { return !violation.has_value(); }
};

WidthVerdict check_width(const Slalom& s);
/// Also checks that every word of cell n has length |I^d_n| and that there
/// are no cells beyond the partition.
WidthVerdict check_width(const BinarySlalom& s);

/// Least k with f(n) ∈ S(n) for all n ∈ [k, |f|). A threshold equal to the
/// horizon is reported as failure (nullopt), so an empty suffix never
/// certifies capture. S needs at least |f| cells.
std::optional<CaptureCertificate> goes_through_seq(const NatSeq& f, const Slalom& s);

/// Binary analogue: compares x↾I^d_n against B(n). x must have length d(N).
std::optional<CaptureCertificate> goes_through_point(const Word& x, const BinarySlalom& b);

struct CaptureReport {
  std::map<Word, CaptureCertificate> certificates;
  /// Uncaptured points in lexicographic order.
  std::vector<Word> failures;
  bool all_captured() const noexcept { return failures.empty(); }
};

CaptureReport capture_set(const WordSet& points, const BinarySlalom& b);

}  // namespace cantor
