#pragma once

#include <string_view>

#include "gf2seq/errors.hpp"

namespace gf2seq {

// The two-element field. Addition is XOR, multiplication is AND.
class GF2Scalar {
 public:
  constexpr GF2Scalar() = default;
  explicit constexpr GF2Scalar(bool bit) : bit_(bit) {}

  static constexpr GF2Scalar zero() { return GF2Scalar(false); }
  static constexpr GF2Scalar one() { return GF2Scalar(true); }

  constexpr bool bit() const { return bit_; }

  friend constexpr GF2Scalar operator+(GF2Scalar a, GF2Scalar b) {
    return GF2Scalar(a.bit_ != b.bit_);
  }
  friend constexpr GF2Scalar operator*(GF2Scalar a, GF2Scalar b) {
    return GF2Scalar(a.bit_ && b.bit_);
  }
  constexpr GF2Scalar& operator+=(GF2Scalar o) {
    bit_ = (bit_ != o.bit_);
    return *this;
  }
  constexpr GF2Scalar& operator*=(GF2Scalar o) {
    bit_ = (bit_ && o.bit_);
    return *this;
  }

  friend constexpr bool operator==(GF2Scalar, GF2Scalar) = default;

  constexpr char to_char() const { return bit_ ? '1' : '0'; }

  // Accepts exactly "0" or "1".
  static GF2Scalar parse(std::string_view text) {
    if (text == "0") return zero();
    if (text == "1") return one();
    throw ParseError("invalid scalar literal \"" + std::string(text) + "\": expected 0 or 1");
  }

 private:
  bool bit_ = false;
};

// |0| = 0, |1| = 1. Kept as an exact integer so every downstream identity
// (homogeneity, triangle, squared norms) is an exact equality.
constexpr int abs_val(GF2Scalar a) { return a.bit() ? 1 : 0; }

}  // namespace gf2seq
