#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cantor/word.hpp"

namespace cantor {

/// A finite truncation of a countable cover ⟨Y_n⟩: explicit word sets, all of
/// one length. Pieces may overlap or be empty.
struct CoverFamily {
  std::vector<WordSet> pieces;

  bool operator==(const CoverFamily&) const = default;
};

/// Common word length of the cover, or nullopt when it holds no words.
/// Throws AlignmentError on mixed lengths.
std::optional<std::size_t> cover_length(const CoverFamily& cover);

/// Throws AlignmentError unless every word of the cover has `length` bits.
void require_aligned(const CoverFamily& cover, std::size_t length);

/// Union of all pieces.
WordSet cover_points(const CoverFamily& cover);

}  // namespace cantor
