#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gf2seq/vector.hpp"

namespace gf2seq {

// Metric induced by the norm: d(x,y) = ||x - y|| = ||x + y|| since every
// element is its own additive inverse. Takes only the values 0 (equal) and
// 1 (distinct): the discrete metric.
inline int distance(const FinSupportVec& x, const FinSupportVec& y) { return norm(x + y); }

// An eventually constant sequence: the listed terms, then the final term
// repeated forever. Under the discrete metric these are exactly the
// sequences that can be Cauchy, so nothing expressible is lost.
class VecSequence {
 public:
  // terms must be non-empty.
  explicit VecSequence(std::vector<FinSupportVec> terms);

  // Text form: one vector literal per line, closed by a final line "repeat".
  // Blank lines are ignored.
  static VecSequence parse(std::string_view text);

  const std::vector<FinSupportVec>& terms() const { return terms_; }

  // Term i of the represented infinite sequence (tail rule applied).
  const FinSupportVec& term(std::size_t i) const {
    return terms_[i < terms_.size() ? i : terms_.size() - 1];
  }

 private:
  std::vector<FinSupportVec> terms_;
};

struct CauchyVerdict {
  bool is_cauchy = false;
  // Least index from which every term equals the limit.
  std::optional<std::size_t> settle_index;
  std::optional<FinSupportVec> limit;
};

// Classifies seq at threshold epsilon, which must lie in (0, 1]. The metric
// takes no value strictly between 0 and 1, so every epsilon in that range
// yields the same verdict; 1/2 is the canonical choice.
CauchyVerdict analyze_cauchy(const VecSequence& seq, double epsilon);

}  // namespace gf2seq
