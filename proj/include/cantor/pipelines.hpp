#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cantor/natset.hpp"
#include "cantor/partition.hpp"
#include "cantor/slalom.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// Partition whose n-th interval has length d(n). Every entry must be positive.
PartitioningPrefix partreal(const NatSeq& d);

struct ClipResult {
  NatSeq clipped;
  /// Least j with f(n) ≤ d(n) for all n ∈ [j, M); clipped agrees with f from j on.
  Nat threshold = 0;
};

/// g ≤ d pointwise with g(n) = f(n) from the agreement index on; entries
/// before it that exceed d are replaced by 0. NotDominated when f(M−1) > d(M−1).
ClipResult clip_to_bound(const NatSeq& f, const NatSeq& d);

/// d(n) = 1 + max_f f(n). InvalidInput for an empty or ragged family.
NatSeq dominate_family(std::span<const NatSeq> family);

struct EncodedFamily {
  NatSeq bound;
  PartitioningPrefix partition;
  /// Per input sequence, in input order.
  std::vector<ClipResult> clipped;
  std::vector<Word> points;
  /// The encoded set Y.
  WordSet image;
  /// |F| − |Y|: sequences that clip to the same point.
  std::size_t collisions = 0;
};

/// Encodes a family through the partition of its own dominating bound.
EncodedFamily encode_family(std::span<const NatSeq> family);
/// Encodes a family through partreal(bound); every sequence is clipped to the bound first.
EncodedFamily encode_family(std::span<const NatSeq> family, const NatSeq& bound);

struct PulledCapture {
  Nat clip_threshold = 0;
  std::optional<Nat> capture_threshold;
  /// max(clip, capture) when the encoded point's nat-image goes through S.
  std::optional<Nat> threshold;
};

struct PullReport {
  std::vector<PulledCapture> per_sequence;
  /// Indices of sequences whose encoded image escapes S.
  std::vector<std::size_t> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Transfers capture of the encoded nat-images back to the original sequences.
PullReport pull_capture_through_encoding(const EncodedFamily& encoded, const Slalom& s);
PullReport pull_capture_through_encoding(std::span<const NatSeq> family, const Slalom& s);

/// A binary slalom capturing `points`, built for partreal(bounds[bound]).
struct CatalogSource {
  std::size_t family = 0;
  std::size_t bound = 0;
  WordSet points;
  BinarySlalom slalom;
};

struct CatalogEntry {
  Slalom slalom;
  std::size_t source = 0;
  std::size_t family = 0;
  std::size_t bound = 0;
};

struct CatalogHit {
  std::size_t bound = 0;
  Nat clip_threshold = 0;
  std::size_t source = 0;
  std::size_t family = 0;
  Nat capture_threshold = 0;
  std::size_t entry = 0;
  CaptureCertificate certificate;
};

struct CatalogMiss {
  enum class Reason { kNotDominated, kNoFamily };
  Reason reason = Reason::kNotDominated;
  std::string detail;
};

using CatalogLookup = std::variant<CatalogHit, CatalogMiss>;

/// Slaloms nat[B] for every source, deduplicated (first occurrence kept), with
/// lookup of a capturing slalom for a given sequence.
class SlalomCatalog {
 public:
  /// Validates every source: positive bounds, matching partition, and that the
  /// slalom captures its points (HypothesisFailure with the source index).
  static SlalomCatalog build(std::vector<NatSeq> bounds, std::vector<CatalogSource> sources);

  /// Tries bounds in index order: clip f, decode, find a source for that bound
  /// whose points contain the decoded word. The first success wins.
  CatalogLookup lookup(const NatSeq& f) const;

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const std::vector<CatalogSource>& sources() const noexcept { return sources_; }
  const std::vector<NatSeq>& bounds() const noexcept { return bounds_; }
  /// Catalog entry holding each source's slalom.
  std::size_t entry_of(std::size_t source) const { return entry_of_source_.at(source); }
  std::size_t duplicates() const noexcept { return sources_.size() - entries_.size(); }

 private:
  std::vector<NatSeq> bounds_;
  std::vector<PartitioningPrefix> partitions_;
  std::vector<CatalogSource> sources_;
  std::vector<CatalogEntry> entries_;
  std::vector<std::size_t> entry_of_source_;
};

struct SigmaUnion {
  /// b = ⋃ b_n.
  NatSet united;
  /// b_n = {k ∈ a_n | k ≥ f(n)}.
  std::vector<NatSet> tails;
  /// counts[n] = |b ∩ f(n)|.
  std::vector<std::size_t> counts;
  /// sum_bounds[n] = Σ_{m<n} |a_m ∩ f(n)|.
  std::vector<std::size_t> sum_bounds;
  /// Every a_m satisfies |a_m ∩ f(n)| ≤ n, so counts[n] ≤ n² must hold.
  bool square_bound_applies = false;
  std::optional<std::size_t> square_bound_violation;
};

/// Unites the tails of countably many witnesses above a strictly increasing
/// target. Needs at least |f| witnesses; excess ones are ignored.
SigmaUnion sigma_union_witness(std::span<const NatSet> witnesses, const NatSeq& f);

struct PairUnionVerdict {
  /// Both a and b pass check_rapidity_witness for φ.
  bool hypotheses_hold = false;
  /// counts[n] = |(a ∪ b) ∩ f(n)|.
  std::vector<std::size_t> counts;
  /// First n with counts[n] > 2φ(n), checked only when the hypotheses hold.
  std::optional<std::size_t> violation;
  bool ok() const noexcept { return !violation.has_value(); }
};

PairUnionVerdict pair_union_bound(const NatSet& a, const NatSet& b, const NatSeq& f,
                                  const WidthFunction& phi);

struct FailureCorrespondence {
  /// Per pool member: points that escape B.
  std::vector<std::vector<Word>> binary_failures;
  /// Per pool member: points whose nat-image escapes nat[B].
  std::vector<std::vector<Word>> sequence_failures;
  bool matches = true;
  /// Every pool member misses some point (on both sides when `matches`).
  bool escapes_pool = true;
};

/// Compares escape sets of a point set against a pool of binary slaloms with
/// escape sets of its nat-image against the translated pool.
FailureCorrespondence compare_capture_failures(const WordSet& points,
                                               const PartitioningPrefix& d,
                                               std::span<const BinarySlalom> pool);

}  // namespace cantor
