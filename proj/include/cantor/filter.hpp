#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cantor/cover.hpp"
#include "cantor/natset.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// Finite evidence that `witness` belongs to the filter of `subject`: the
/// subject is covered by the pieces and the witness contains every splitting
/// point of every piece.
struct FilterCertificate {
  WordSet subject;
  CoverFamily cover;
  NatSet witness;

  bool operator==(const FilterCertificate&) const = default;
};

/// The least witness a cover admits: ⋃ H(Y_n).
NatSet witness_of_cover(const CoverFamily& cover);

struct CertificateVerdict {
  enum class Status { kValid, kUncovered, kMissingSplit, kMisaligned };

  Status status = Status::kValid;
  /// Uncovered subject point (kUncovered).
  std::optional<Word> point;
  /// Splitting point absent from the witness, and the piece it came from.
  std::optional<Nat> split;
  std::optional<std::size_t> piece;
  std::string detail;

  bool ok() const noexcept { return status == Status::kValid; }
};

CertificateVerdict check_certificate(const FilterCertificate& c);

/// Unions of subjects, concatenation of covers, union of witnesses. All words
/// involved must share one length (AlignmentError otherwise).
FilterCertificate union_certificate(std::span<const FilterCertificate> certificates);

/// Every word of `length` bits that is 0 outside `a`, i.e. P(a) at this
/// horizon. ResourceError when |a| > max_bits; InvalidInput when a ⊄ [0, length).
WordSet powerset_points(const NatSet& a, std::size_t length, std::size_t max_bits = 20);

struct DiagonalStage {
  std::size_t stage = 0;
  Nat position = 0;
  /// 1: no member of the piece extends the prefix; 2: all extending members agree.
  int case_taken = 0;
  bool bit = false;
};

/// Two members of piece `stage` extend the constructed prefix and split at
/// `position`, so the stage has no escaping bit.
struct BlockedReport {
  std::size_t stage = 0;
  Nat position = 0;
  Word first;
  Word second;
};

struct DiagonalResult {
  std::optional<Word> point;
  std::optional<BlockedReport> blocked;
  std::vector<DiagonalStage> trace;
  std::size_t stages_run = 0;
  /// More steps were requested than `aprime` has elements.
  bool truncated = false;
};

/// Builds a point x ⊆ a escaping pieces 0..steps−1 by choosing, at the n-th
/// element of `aprime`, the bit no extending member of piece n carries.
/// Positions before the first element of `aprime` are 0; positions between
/// stages copy `a`. Stops after |aprime| stages when `steps` is larger.
DiagonalResult diagonalize(const Word& a, const NatSet& aprime, const CoverFamily& cover,
                           std::size_t steps);

/// Z_{n,s,t} at horizon `length`: s spliced onto the tails (from |t| on) of the
/// members of piece n that extend t. Requires |s| = |t| ≤ length.
WordSet eventual_closure_cover(const CoverFamily& cover, std::size_t piece, const Word& s,
                               const Word& t, std::size_t length);

/// Certificate for s⌢X from one for X; witness shifts by |s|.
FilterCertificate prepend_cover_transport(const FilterCertificate& c, const Word& s);

/// Certificate for X from one for s⌢X. Pieces become {x | s⌢x ∈ Y_n} (kept
/// even when empty) and the witness becomes {k − |s| | k ∈ a, k ≥ |s|}.
FilterCertificate unprepend_cover_transport(const FilterCertificate& c, const Word& s);

/// Groups X by length-n prefix; each prefix maps to its set of tails.
std::map<Word, WordSet> shift_decomposition(const WordSet& points, std::size_t n);

/// Certificate for X assembled from a certificate for tails: every class of
/// shift_decomposition(X, n) is transported with prepend_cover_transport and
/// the results are united. The witness is the tail witness shifted by n.
/// InvalidInput when some class has a tail outside the tail certificate's subject.
FilterCertificate shift_transport(const WordSet& points, const FilterCertificate& tails,
                                  std::size_t n);

}  // namespace cantor
