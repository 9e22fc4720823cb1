#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gf2seq {

// Malformed text input: vector, operator, or sequence literals.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A support index does not fit in the configured rank word width, so the
// vector has no rank at that width.
class RankOverflowError : public std::overflow_error {
 public:
  RankOverflowError(std::uint64_t index, unsigned width)
      : std::overflow_error("support index " + std::to_string(index) +
                            " exceeds rank word width " + std::to_string(width)),
        index_(index),
        width_(width) {}

  std::uint64_t index() const { return index_; }
  unsigned width() const { return width_; }

 private:
  std::uint64_t index_;
  unsigned width_;
};

// A rule operator was zero on every scanned column. Whether it is the zero
// operator is undecided at this bound, so no witness can be produced.
class UnresolvedAtBoundError : public std::runtime_error {
 public:
  explicit UnresolvedAtBoundError(std::uint64_t bound)
      : std::runtime_error("unresolved at bound " + std::to_string(bound)), bound_(bound) {}

  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t bound_;
};

}  // namespace gf2seq
