#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "gf2seq/vector.hpp"

namespace gf2seq {

inline constexpr std::uint64_t kDefaultSearchBound = 64;

/*
 * A linear operator on the sequence space, represented by its action on the
 * canonical basis: column(i) = T(e_i). Linearity then fixes T everywhere,
 * since every vector is a finite sum of basis vectors. Columns are
 * finitely supported by construction, so images always stay in the space.
 *
 * Explicit operators store finitely many columns (anything unlisted is the
 * zero column) and admit exact norm decisions. The named kinds are rules
 * with infinitely many non-zero columns.
 */
class Operator {
 public:
  enum class Kind { explicit_columns, identity, shift_left, shift_right };

  static Operator identity();     // e_i -> e_i
  static Operator shift_left();   // e_1 -> 0, e_i -> e_{i-1}
  static Operator shift_right();  // e_i -> e_{i+1}
  static Operator zero();         // explicit operator with no columns
  static Operator from_columns(std::map<std::uint64_t, FinSupportVec> columns);

  // Either one line naming a built-in (identity, shift_left, shift_right),
  // or one line per column "i -> {j1,...,jk}". Omitted columns are zero;
  // empty text is the zero operator. Duplicate column indices are rejected.
  static Operator parse(std::string_view text);

  Kind kind() const { return kind_; }

  // Stored columns of an explicit operator (empty for rule kinds).
  const std::map<std::uint64_t, FinSupportVec>& columns() const { return columns_; }

  // T(e_i); i must be >= 1.
  FinSupportVec column(std::uint64_t i) const;

  // T(x): the GF(2) sum of the columns over the support of x.
  FinSupportVec apply(const FinSupportVec& x) const;

 private:
  explicit Operator(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::map<std::uint64_t, FinSupportVec> columns_;
};

struct OperatorNormResult {
  int norm = 0;                          // 0 or 1
  std::optional<FinSupportVec> witness;  // smallest basis vector realizing the norm
  bool exact = false;                    // false only when a rule kind is zero up to the bound
};

// sup ||T x|| over unit vectors x. Any non-zero column at index i makes
// e_i a witness with ||T e_i|| = 1, so the scan over basis indices decides
// the supremum. Explicit operators are scanned over exactly their stored
// columns (exact either way); rule kinds over 1..search_bound, and an
// all-zero scan is only "zero up to bound" (exact = false).
OperatorNormResult operator_norm(const Operator& T,
                                 std::uint64_t search_bound = kDefaultSearchBound);

// A unit vector w with ||T w|| equal to the operator norm. Non-zero
// operators get the smallest basis vector with a non-zero column; the zero
// operator attains its norm everywhere, and e_1 is the deterministic pick.
// Rule kinds that look zero up to the bound throw UnresolvedAtBoundError
// rather than asserting the operator is zero.
FinSupportVec attainment_witness(const Operator& T,
                                 std::uint64_t search_bound = kDefaultSearchBound);

// True iff every column at indices 1..bound is zero.
bool is_zero_up_to(const Operator& T, std::uint64_t bound);

}  // namespace gf2seq
