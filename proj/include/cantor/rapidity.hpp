#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cantor/cover.hpp"
#include "cantor/natset.hpp"
#include "cantor/partition.hpp"
#include "cantor/slalom.hpp"
#include "cantor/word.hpp"

namespace cantor {

struct RapidityVerdict {
  /// counts[n] = |a ∩ [0, f(n))|.
  std::vector<std::size_t> counts;
  /// First n with counts[n] > φ(n).
  std::optional<std::size_t> violation;
  bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks |a ∩ f(n)| ≤ φ(n) for every n < |f|. Throws InvalidTarget unless f
/// is strictly increasing.
RapidityVerdict check_rapidity_witness(const NatSet& a, const NatSeq& f,
                                       const WidthFunction& phi);

/// Reparameterized target g(m) = f(max{k | φ(k) ≤ m}) for m ≤ max_index.
///
/// Any a with |a ∩ g(m)| ≤ m for all m ≤ max_index then satisfies
/// |a ∩ f(n)| ≤ φ(n) whenever f(n) ≤ g(max_index). Requires φ(0) = 0 and φ
/// nondecreasing on f's domain; throws InvalidInput when φ stays ≤ max_index
/// on the whole domain (φ bounded there, or f too short to pin the maximum).
NatSeq reparam_target(const NatSeq& f, const WidthFunction& phi, Nat max_index);

/// χ(n) = 0 for n ≤ 1, ⌊log₂⌊√(n−1)⌋⌋ otherwise. Integer arithmetic only.
Nat chi(Nat n);

/// Which cover pieces feed cell m of slalom_from_cover.
enum class PieceSchedule {
  /// Pieces n with n² < m. A point of piece n is captured from m = n² + 1.
  kSquareBelow,
  /// Pieces n with n < ⌊√m⌋. A point of piece n is captured from m = (n+1)²,
  /// and |B(m)| ≤ ⌊√m⌋² ≤ m holds unconditionally under the χ hypothesis.
  kBelowFloorRoot,
};

/// First cell index from which every point of piece n is captured.
Nat capture_bound(std::size_t piece, PieceSchedule schedule);

/// Builds B(0) = ∅ and B(m) = ⋃ {x↾I^d_m | x ∈ X_n} over the pieces selected by
/// `schedule`. Verifies the hypotheses first and throws HypothesisFailure when
/// a ⊉ H(X_n) (index = n) or |a ∩ d(n)| > χ(n) (index = n).
BinarySlalom slalom_from_cover(const CoverFamily& cover, const NatSet& a,
                               const PartitioningPrefix& d,
                               PieceSchedule schedule = PieceSchedule::kSquareBelow);

/// The cover pieces Y_{k,s} = {x | x↾d(k) = s, x↾I^d_n ∈ B(n) for n ∈ [k, N)}
/// described by a binary slalom. Pieces are too large to list eagerly; they
/// are queried or enumerated on demand.
class SlalomCoverRecipe {
 public:
  explicit SlalomCoverRecipe(BinarySlalom slalom) : slalom_(std::move(slalom)) {}

  bool contains(std::size_t k, const Word& s, const Word& x) const;
  /// All members of Y_{k,s}; ResourceError when there are more than `cap`.
  WordSet enumerate(std::size_t k, const Word& s, std::size_t cap) const;

  const BinarySlalom& slalom() const noexcept { return slalom_; }

 private:
  BinarySlalom slalom_;
};

struct SlalomWitness {
  /// ⋃_m (H(B(m)) + d(m)).
  NatSet witness;
  /// counts[n] = |witness ∩ d(n)| for n ≤ N.
  std::vector<std::size_t> counts;
  SlalomCoverRecipe recipe;
};

/// Witness set for a set captured by an identity-width binary slalom. The
/// witness satisfies |a ∩ d(n)| ≤ Σ_{m<n} max(|B(m)| − 1, 0) ≤ n(n−1)/2 and
/// contains H(Y_{k,s}) for every piece of the recipe. Throws WidthViolation
/// unless check_width passes for identity width.
SlalomWitness witness_from_binary_slalom(const BinarySlalom& b);

}  // namespace cantor
