#include "cantor/cover.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor {

std::optional<std::size_t> cover_length(const CoverFamily& cover) {
  std::optional<std::size_t> length;
  for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
    for (const Word& w : cover.pieces[i]) {
      if (!length) {
        length = w.size();
      } else if (*length != w.size()) {
        throw AlignmentError("cover piece " + std::to_string(i) + " holds a word of length " +
                             std::to_string(w.size()) + ", expected " +
                             std::to_string(*length));
      }
    }
  }
  return length;
}

void require_aligned(const CoverFamily& cover, std::size_t length) {
  for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
    for (const Word& w : cover.pieces[i]) {
      if (w.size() != length) {
        throw AlignmentError("cover piece " + std::to_string(i) + " holds a word of length " +
                             std::to_string(w.size()) + ", expected " +
                             std::to_string(length));
      }
    }
  }
}

WordSet cover_points(const CoverFamily& cover) {
  WordSet out;
  for (const WordSet& piece : cover.pieces) out.insert(piece.begin(), piece.end());
  return out;
}

}  // namespace cantor
