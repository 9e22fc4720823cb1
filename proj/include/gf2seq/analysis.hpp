#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gf2seq/vector.hpp"

namespace gf2seq {

// Harness self-check hook: swaps the vector addition used inside the axiom
// scans, so a deliberately corrupted operation provably produces failures.
struct ScanHooks {
  std::function<FinSupportVec(const FinSupportVec&, const FinSupportVec&)> add;

  FinSupportVec do_add(const FinSupportVec& x, const FinSupportVec& y) const {
    return add ? add(x, y) : x + y;
  }
};

struct ScanOptions {
  // Pair stages run exhaustively up to 4^10 pairs, triple stages up to
  // 8^6 triples; beyond that the stage falls back to seeded sampling.
  unsigned pair_exhaustive_max_p = 10;
  unsigned triple_exhaustive_max_p = 6;
  std::uint64_t sample_count = std::uint64_t{1} << 18;  // draws per sampled stage
  std::uint64_t seed = 0x5eedc0de;                      // fixed so sampled runs reproduce
  ScanHooks hooks;
};

struct Counterexample {
  std::vector<GF2Scalar> scalars;
  std::vector<FinSupportVec> vectors;

  // e.g. "alpha=1 beta=0 x={1} y={2,3}"
  std::string to_string() const;
};

struct AxiomOutcome {
  std::string axiom;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  // First few counterexamples, sorted lexicographically; each replays to a
  // failure of the same axiom.
  std::vector<Counterexample> sample_failures;

  bool passed() const { return failure_count == 0; }
};

struct AxiomFailure {
  std::string axiom;
  Counterexample inputs;
};

struct AxiomReport {
  unsigned truncation_p = 0;
  std::uint64_t checks_run = 0;
  std::vector<AxiomOutcome> outcomes;

  bool all_passed() const;
  const AxiomOutcome* outcome(std::string_view axiom) const;
  std::vector<AxiomFailure> failures() const;  // flattened recorded counterexamples
};

// Line-based text summary: one line per axiom with pass/fail, check and
// failure counts, then recorded counterexamples as vector literals.
std::string format_report(const AxiomReport& report);

// Re-evaluates one named axiom on recorded inputs; true when the axiom
// holds there. A recorded counterexample must come back false under the
// hooks that produced it.
bool replay_counterexample(const std::string& axiom, const Counterexample& inputs,
                           const ScanHooks& hooks = {});

// Scans commutativity, associativity, identity, self-inverse, scalar
// compatibility, scalar identity, and both distributive laws over all
// vectors with support within {1..p}.
AxiomReport verify_vector_space_axioms(unsigned p, const ScanOptions& options = {});

// Scans positive-definiteness, absolute homogeneity, the triangle
// inequality, and its strict form on distinct non-zero pairs.
AxiomReport verify_norm_axioms(unsigned p, const ScanOptions& options = {});

struct ParallelogramVerdict {
  FinSupportVec x, y;
  int lhs = 0;  // ||x+y||^2 + ||x-y||^2, exact; note x - y = x + y here
  int rhs = 0;  // 2||x||^2 + 2||y||^2, exact
  bool holds = false;
};

ParallelogramVerdict parallelogram_check(const FinSupportVec& x, const FinSupportVec& y);

// Every ordered pair with support within {1..p}, as materialized verdicts.
// 4^p of them, so this is guarded to p <= 8; use parallelogram_classify for
// the streaming tally at larger p.
std::vector<ParallelogramVerdict> parallelogram_scan(unsigned p);

struct ParallelogramSummary {
  unsigned truncation_p = 0;
  std::uint64_t pairs = 0;
  std::uint64_t holds_count = 0;
  std::uint64_t zero_member_pairs = 0;  // x = {} or y = {}
  std::uint64_t zero_member_holds = 0;
  std::uint64_t distinct_nonzero_pairs = 0;
  std::uint64_t distinct_nonzero_lhs2_rhs4 = 0;  // the failing shape those pairs must take
  std::uint64_t equal_nonzero_pairs = 0;
  std::uint64_t equal_nonzero_lhs0_rhs4 = 0;

  // Ground truth of the scan: the identity holds exactly on the pairs with
  // a zero member, and every failing pair fails with the expected sides.
  bool matches_zero_member_law() const;

  // The identity holds on more pairs than x = y = {} alone; the scan flags
  // this refinement of the double-zero-only reading.
  bool holds_beyond_double_zero() const { return holds_count > 1; }
};

ParallelogramSummary parallelogram_classify(unsigned p);

std::string format_summary(const ParallelogramSummary& summary);

// All vectors with exactly `weight` ones within the first `positions`
// spots, in lexicographic support order; binomial(positions, weight) of
// them, and empty when weight > positions.
std::vector<FinSupportVec> enumerate_fixed_weight(unsigned weight, unsigned positions);

// Exact binomial coefficient; 0 when m > p. Throws std::overflow_error
// instead of wrapping.
std::uint64_t binomial(unsigned p, unsigned m);

// True iff rank(unrank(n)) == n for every n in 0..n_max and the unranked
// vectors are pairwise distinct.
bool verify_countability(std::uint64_t n_max, unsigned width = kDefaultRankWidth);

// True iff d covers every vector with support within {1..p}. Under the
// discrete metric a proper subset misses some point by distance 1, so
// dense means everything. Members must not reach past position p.
bool dense_subset_check(const std::vector<FinSupportVec>& d, unsigned p);

}  // namespace gf2seq
