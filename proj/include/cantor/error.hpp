#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: bad characters in a word, mixed lengths, elements out of range.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Point and partition (or sequence and partition) disagree on length.
class AlignmentError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A target sequence that must be strictly increasing is not.
class InvalidTarget : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Two words have no splitting point (equal, or one is a prefix of the other).
class NoSplit : public Error {
 public:
  using Error::Error;
};

/// A numeral does not fit into a 64-bit natural.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class NotDominated : public Error {
 public:
  using Error::Error;
};

/// A construction's hypothesis does not hold; `index()` names where it failed.
class HypothesisFailure : public Error {
 public:
  HypothesisFailure(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class WidthViolation : public Error {
 public:
  WidthViolation(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace cantor
