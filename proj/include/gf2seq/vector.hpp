#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gf2seq/errors.hpp"
#include "gf2seq/gf2.hpp"

namespace gf2seq {

// Largest support index rank() admits by default; every admissible vector
// then ranks below 2^62, comfortably inside uint64.
inline constexpr unsigned kDefaultRankWidth = 62;
inline constexpr unsigned kMaxRankWidth = 64;

/*
 * A finitely supported GF(2) sequence, stored as its canonical support: the
 * strictly increasing list of 1-based positions that hold a 1. The empty
 * support is the zero sequence. Two values are equal iff their supports are
 * equal; ordering is lexicographic on the support list.
 */
class FinSupportVec {
 public:
  FinSupportVec() = default;  // zero sequence

  // Takes a strictly increasing list of 1-based indices; anything else is
  // rejected with std::invalid_argument.
  explicit FinSupportVec(std::vector<std::uint64_t> support);

  // e_n: 1 in the n-th spot, 0 elsewhere. n must be >= 1.
  static FinSupportVec basis(std::uint64_t n);

  // Accepts "{i1,i2,...,ik}" with strictly increasing positive decimal
  // indices, "{}" for the zero sequence. Whitespace around commas and braces
  // is ignored. Rejects non-increasing, repeated, or non-positive indices.
  static FinSupportVec parse(std::string_view text);

  const std::vector<std::uint64_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  std::size_t support_size() const { return support_.size(); }
  std::uint64_t max_index() const { return support_.empty() ? 0 : support_.back(); }

  // Canonical literal, e.g. "{1,3,7}" or "{}"; re-parses to an equal value.
  std::string to_string() const;

  friend bool operator==(const FinSupportVec&, const FinSupportVec&) = default;
  friend std::strong_ordering operator<=>(const FinSupportVec&, const FinSupportVec&) = default;

  friend FinSupportVec operator+(const FinSupportVec& x, const FinSupportVec& y);
  friend FinSupportVec unrank(std::uint64_t n);

 private:
  struct Unchecked {};
  FinSupportVec(Unchecked, std::vector<std::uint64_t> support) : support_(std::move(support)) {}

  std::vector<std::uint64_t> support_;
};

// Entry-wise GF(2) addition: the symmetric difference of the supports.
FinSupportVec operator+(const FinSupportVec& x, const FinSupportVec& y);

// Entry-wise scalar multiplication: 0*x = 0, 1*x = x.
FinSupportVec operator*(GF2Scalar alpha, const FinSupportVec& x);

// The discrete norm: 0 on the zero sequence, 1 on everything else.
// Exact integer, same rationale as abs_val.
inline int norm(const FinSupportVec& x) { return x.is_zero() ? 0 : 1; }

// Sum of 2^(i-1) over the support. Injective on the vectors whose support
// stays within {1..width}; throws RankOverflowError for anything wider.
std::uint64_t rank(const FinSupportVec& x, unsigned width = kDefaultRankWidth);

// Inverse of rank: the vector whose support is the set of 1-based positions
// of the set bits of n. rank(unrank(n), 64) == n for every n.
FinSupportVec unrank(std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const FinSupportVec& x);

}  // namespace gf2seq
