#include "gf2seq/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>

namespace gf2seq {

namespace {

constexpr std::size_t kMaxRecordedPerAxiom = 16;
constexpr unsigned kMaxScanP = 62;
constexpr unsigned kMaxMaterializedP = 8;   // parallelogram_scan holds 4^p verdicts
constexpr unsigned kMaxClassifyP = 14;      // 4^p streamed pair evaluations
constexpr unsigned kMaxDenseP = 24;
constexpr std::uint64_t kMaxCountabilityN = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxEnumerated = std::uint64_t{1} << 22;

using CheckFn = bool (*)(std::span<const GF2Scalar>, std::span<const FinSupportVec>,
                         const ScanHooks&);

struct AxiomDef {
  const char* name;
  unsigned scalar_arity;  // scalars enumerated exhaustively, 2^arity combos
  unsigned vector_arity;  // 1, 2 or 3
  CheckFn holds;
};

const AxiomDef kVectorSpaceAxioms[] = {
    {"add_commutativity", 0, 2,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks& h) {
       return h.do_add(v[0], v[1]) == h.do_add(v[1], v[0]);
     }},
    {"add_associativity", 0, 3,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks& h) {
       return h.do_add(h.do_add(v[0], v[1]), v[2]) == h.do_add(v[0], h.do_add(v[1], v[2]));
     }},
    {"additive_identity", 0, 1,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks& h) {
       return h.do_add(v[0], FinSupportVec{}) == v[0];
     }},
    {"self_inverse", 0, 1,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks& h) {
       return h.do_add(v[0], v[0]).is_zero();
     }},
    {"scalar_mul_compatibility", 2, 1,
     [](std::span<const GF2Scalar> s, std::span<const FinSupportVec> v, const ScanHooks&) {
       return s[0] * (s[1] * v[0]) == (s[0] * s[1]) * v[0];
     }},
    {"scalar_mul_identity", 0, 1,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks&) {
       return GF2Scalar::one() * v[0] == v[0];
     }},
    {"distributivity_over_vector_add", 1, 2,
     [](std::span<const GF2Scalar> s, std::span<const FinSupportVec> v, const ScanHooks& h) {
       return s[0] * h.do_add(v[0], v[1]) == h.do_add(s[0] * v[0], s[0] * v[1]);
     }},
    {"distributivity_over_scalar_add", 2, 1,
     [](std::span<const GF2Scalar> s, std::span<const FinSupportVec> v, const ScanHooks& h) {
       return (s[0] + s[1]) * v[0] == h.do_add(s[0] * v[0], s[1] * v[0]);
     }},
};

const AxiomDef kNormAxioms[] = {
    {"positive_definiteness", 0, 1,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks&) {
       return (norm(v[0]) == 0) == v[0].is_zero();
     }},
    {"absolute_homogeneity", 1, 1,
     [](std::span<const GF2Scalar> s, std::span<const FinSupportVec> v, const ScanHooks&) {
       return norm(s[0] * v[0]) == abs_val(s[0]) * norm(v[0]);
     }},
    {"triangle_inequality", 0, 2,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks& h) {
       return norm(h.do_add(v[0], v[1])) <= norm(v[0]) + norm(v[1]);
     }},
    {"strict_triangle_distinct_nonzero", 0, 2,
     [](std::span<const GF2Scalar>, std::span<const FinSupportVec> v, const ScanHooks& h) {
       if (v[0] == v[1] || v[0].is_zero() || v[1].is_zero()) return true;  // vacuous
       return norm(h.do_add(v[0], v[1])) == 1 && norm(v[0]) + norm(v[1]) == 2;
     }},
};

const AxiomDef* find_axiom(const std::string& name) {
  for (const AxiomDef& def : kVectorSpaceAxioms)
    if (name == def.name) return &def;
  for (const AxiomDef& def : kNormAxioms)
    if (name == def.name) return &def;
  return nullptr;
}

bool counterexample_less(const Counterexample& a, const Counterexample& b) {
  for (std::size_t i = 0; i < a.scalars.size() && i < b.scalars.size(); ++i)
    if (a.scalars[i].bit() != b.scalars[i].bit()) return !a.scalars[i].bit();
  return a.vectors < b.vectors;
}

std::vector<FinSupportVec> truncation_table(unsigned p) {
  std::vector<FinSupportVec> table;
  table.reserve(std::size_t{1} << p);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p); ++m) table.push_back(unrank(m));
  return table;
}

void check_truncation(unsigned p) {
  if (p < 1) throw std::invalid_argument("truncation p must be >= 1");
  if (p > kMaxScanP)
    throw std::invalid_argument("truncation p must be <= " + std::to_string(kMaxScanP));
}

AxiomReport run_scan(std::span<const AxiomDef> axioms, unsigned p, const ScanOptions& opt) {
  check_truncation(p);
  const std::uint64_t space = std::uint64_t{1} << p;
  const std::uint64_t mask = space - 1;

  std::vector<FinSupportVec> table;  // built lazily, only for exhaustive pair/triple stages

  AxiomReport report;
  report.truncation_p = p;

  for (std::size_t axiom_index = 0; axiom_index < axioms.size(); ++axiom_index) {
    const AxiomDef& def = axioms[axiom_index];
    AxiomOutcome outcome;
    outcome.axiom = def.name;

    std::vector<GF2Scalar> scalars(def.scalar_arity);
    const unsigned scalar_combos = 1u << def.scalar_arity;

    auto run_tuple = [&](std::span<const FinSupportVec> vectors) {
      for (unsigned c = 0; c < scalar_combos; ++c) {
        for (unsigned s = 0; s < def.scalar_arity; ++s) scalars[s] = GF2Scalar(((c >> s) & 1) != 0);
        ++outcome.checks;
        if (!def.holds(scalars, vectors, opt.hooks)) {
          ++outcome.failure_count;
          if (outcome.sample_failures.size() < kMaxRecordedPerAxiom)
            outcome.sample_failures.push_back(
                Counterexample{scalars, {vectors.begin(), vectors.end()}});
        }
      }
    };

    bool exhaustive = false;
    switch (def.vector_arity) {
      case 1:
        // a single stage costs 2^p, which stays within the pair budget
        // up to twice the pair threshold
        exhaustive = p <= 2 * opt.pair_exhaustive_max_p;
        break;
      case 2:
        exhaustive = p <= opt.pair_exhaustive_max_p;
        break;
      default:
        exhaustive = p <= opt.triple_exhaustive_max_p;
        break;
    }

    std::vector<FinSupportVec> vectors(def.vector_arity);
    if (exhaustive) {
      if (def.vector_arity == 1) {
        for (std::uint64_t m = 0; m < space; ++m) {
          vectors[0] = unrank(m);
          run_tuple(vectors);
        }
      } else {
        if (table.empty()) table = truncation_table(p);
        if (def.vector_arity == 2) {
          for (std::uint64_t a = 0; a < space; ++a)
            for (std::uint64_t b = 0; b < space; ++b) {
              vectors[0] = table[a];
              vectors[1] = table[b];
              run_tuple(vectors);
            }
        } else {
          for (std::uint64_t a = 0; a < space; ++a)
            for (std::uint64_t b = 0; b < space; ++b)
              for (std::uint64_t c = 0; c < space; ++c) {
                vectors[0] = table[a];
                vectors[1] = table[b];
                vectors[2] = table[c];
                run_tuple(vectors);
              }
        }
      }
    } else {
      // Seeded independently per axiom so one stage's draw count cannot
      // perturb another's.
      std::mt19937_64 rng(opt.seed + 0x9e3779b97f4a7c15ull * (axiom_index + 1));
      for (std::uint64_t s = 0; s < opt.sample_count; ++s) {
        for (unsigned k = 0; k < def.vector_arity; ++k) vectors[k] = unrank(rng() & mask);
        run_tuple(vectors);
      }
    }

    std::sort(outcome.sample_failures.begin(), outcome.sample_failures.end(),
              counterexample_less);
    report.checks_run += outcome.checks;
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

// Shared by the verdict constructor and the streaming classifier so both
// report identical sides for any pair.
void parallelogram_sides(const FinSupportVec& x, const FinSupportVec& y, int& lhs, int& rhs) {
  // x - y = x + y: every element is its own additive inverse, so both
  // left-hand terms are the same squared norm.
  const int sum_norm = norm(x + y);
  lhs = 2 * sum_norm * sum_norm;
  rhs = 2 * norm(x) * norm(x) + 2 * norm(y) * norm(y);
}

}  // namespace

std::string Counterexample::to_string() const {
  static constexpr const char* kScalarNames[] = {"alpha", "beta"};
  static constexpr const char* kVectorNames[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < scalars.size() && i < 2; ++i) {
    if (!out.empty()) out += ' ';
    out += kScalarNames[i];
    out += '=';
    out += scalars[i].to_char();
  }
  for (std::size_t i = 0; i < vectors.size() && i < 3; ++i) {
    if (!out.empty()) out += ' ';
    out += kVectorNames[i];
    out += '=';
    out += vectors[i].to_string();
  }
  return out;
}

bool AxiomReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const AxiomOutcome& o) { return o.passed(); });
}

const AxiomOutcome* AxiomReport::outcome(std::string_view axiom) const {
  for (const AxiomOutcome& o : outcomes)
    if (o.axiom == axiom) return &o;
  return nullptr;
}

std::vector<AxiomFailure> AxiomReport::failures() const {
  std::vector<AxiomFailure> out;
  for (const AxiomOutcome& o : outcomes)
    for (const Counterexample& c : o.sample_failures) out.push_back({o.axiom, c});
  return out;
}

std::string format_report(const AxiomReport& report) {
  std::string out = "truncation p=" + std::to_string(report.truncation_p) + ", " +
                    std::to_string(report.checks_run) + " checks\n";
  for (const AxiomOutcome& o : report.outcomes) {
    out += o.axiom;
    if (o.passed()) {
      out += ": pass (" + std::to_string(o.checks) + " checks)\n";
    } else {
      out += ": FAIL (" + std::to_string(o.checks) + " checks, " +
             std::to_string(o.failure_count) + " failures)\n";
      for (const Counterexample& c : o.sample_failures)
        out += "  counterexample: " + c.to_string() + "\n";
    }
  }
  return out;
}

bool replay_counterexample(const std::string& axiom, const Counterexample& inputs,
                           const ScanHooks& hooks) {
  const AxiomDef* def = find_axiom(axiom);
  if (def == nullptr) throw std::invalid_argument("unknown axiom \"" + axiom + "\"");
  if (inputs.scalars.size() != def->scalar_arity || inputs.vectors.size() != def->vector_arity)
    throw std::invalid_argument("counterexample arity does not match axiom \"" + axiom + "\"");
  return def->holds(inputs.scalars, inputs.vectors, hooks);
}

AxiomReport verify_vector_space_axioms(unsigned p, const ScanOptions& options) {
  return run_scan(kVectorSpaceAxioms, p, options);
}

AxiomReport verify_norm_axioms(unsigned p, const ScanOptions& options) {
  return run_scan(kNormAxioms, p, options);
}

ParallelogramVerdict parallelogram_check(const FinSupportVec& x, const FinSupportVec& y) {
  ParallelogramVerdict v;
  v.x = x;
  v.y = y;
  parallelogram_sides(x, y, v.lhs, v.rhs);
  v.holds = v.lhs == v.rhs;
  return v;
}

std::vector<ParallelogramVerdict> parallelogram_scan(unsigned p) {
  check_truncation(p);
  if (p > kMaxMaterializedP)
    throw std::invalid_argument("materialized scan is limited to p <= " +
                                std::to_string(kMaxMaterializedP) +
                                " (4^p verdicts); use parallelogram_classify");
  const std::vector<FinSupportVec> table = truncation_table(p);
  std::vector<ParallelogramVerdict> out;
  out.reserve(table.size() * table.size());
  for (const FinSupportVec& x : table)
    for (const FinSupportVec& y : table) out.push_back(parallelogram_check(x, y));
  return out;
}

bool ParallelogramSummary::matches_zero_member_law() const {
  return zero_member_holds == zero_member_pairs && holds_count == zero_member_pairs &&
         distinct_nonzero_lhs2_rhs4 == distinct_nonzero_pairs &&
         equal_nonzero_lhs0_rhs4 == equal_nonzero_pairs;
}

ParallelogramSummary parallelogram_classify(unsigned p) {
  check_truncation(p);
  if (p > kMaxClassifyP)
    throw std::invalid_argument("classification is limited to p <= " +
                                std::to_string(kMaxClassifyP) + " (4^p pair evaluations)");
  const std::vector<FinSupportVec> table = truncation_table(p);

  ParallelogramSummary summary;
  summary.truncation_p = p;
  for (std::size_t a = 0; a < table.size(); ++a) {
    const bool x_zero = table[a].is_zero();
    for (std::size_t b = 0; b < table.size(); ++b) {
      int lhs = 0, rhs = 0;
      parallelogram_sides(table[a], table[b], lhs, rhs);
      const bool holds = lhs == rhs;
      ++summary.pairs;
      if (holds) ++summary.holds_count;
      if (x_zero || table[b].is_zero()) {
        ++summary.zero_member_pairs;
        if (holds) ++summary.zero_member_holds;
      } else if (a == b) {
        ++summary.equal_nonzero_pairs;
        if (lhs == 0 && rhs == 4) ++summary.equal_nonzero_lhs0_rhs4;
      } else {
        ++summary.distinct_nonzero_pairs;
        if (lhs == 2 && rhs == 4) ++summary.distinct_nonzero_lhs2_rhs4;
      }
    }
  }
  return summary;
}

std::string format_summary(const ParallelogramSummary& s) {
  std::string out = "truncation p=" + std::to_string(s.truncation_p) + "\n";
  out += "pairs=" + std::to_string(s.pairs) + " holds=" + std::to_string(s.holds_count) +
         " fails=" + std::to_string(s.pairs - s.holds_count) + "\n";
  out += "x = {} or y = {}: " + std::to_string(s.zero_member_pairs) + " pairs, " +
         std::to_string(s.zero_member_holds) + " hold\n";
  out += "distinct non-zero: " + std::to_string(s.distinct_nonzero_pairs) + " pairs, " +
         std::to_string(s.distinct_nonzero_lhs2_rhs4) + " with lhs=2 rhs=4 (identity fails)\n";
  out += "x = y != {}: " + std::to_string(s.equal_nonzero_pairs) + " pairs, " +
         std::to_string(s.equal_nonzero_lhs0_rhs4) + " with lhs=0 rhs=4 (identity fails)\n";
  out += std::string("law (identity holds iff x = {} or y = {}): ") +
         (s.matches_zero_member_law() ? "confirmed" : "VIOLATED") + "\n";
  if (s.holds_beyond_double_zero())
    out += "note: the identity also holds when exactly one of x, y is zero, "
           "not only at x = y = {}\n";
  return out;
}

std::uint64_t binomial(unsigned p, unsigned m) {
  if (m > p) return 0;
  if (m > p - m) m = p - m;
  std::uint64_t result = 1;
  for (unsigned i = 1; i <= m; ++i) {
    // result holds C(p-m+i-1, i-1); multiplying before dividing keeps every
    // step an exact integer
    unsigned __int128 next = static_cast<unsigned __int128>(result) * (p - m + i);
    next /= i;
    if (next > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial(" + std::to_string(p) + "," + std::to_string(m) +
                                ") exceeds 64 bits");
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

std::vector<FinSupportVec> enumerate_fixed_weight(unsigned weight, unsigned positions) {
  if (weight > positions) return {};
  const std::uint64_t count = binomial(positions, weight);
  if (count > kMaxEnumerated)
    throw std::invalid_argument("enumeration would produce " + std::to_string(count) +
                                " vectors; limit is " + std::to_string(kMaxEnumerated));

  std::vector<FinSupportVec> out;
  out.reserve(count);
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint64_t> combo(weight);
  std::iota(combo.begin(), combo.end(), std::uint64_t{1});
  for (;;) {
    out.push_back(FinSupportVec(combo));
    // advance the rightmost index that still has room
    std::size_t k = weight;
    while (k > 0 && combo[k - 1] == positions - (weight - k)) --k;
    if (k == 0) break;
    ++combo[k - 1];
    for (std::size_t j = k; j < weight; ++j) combo[j] = combo[j - 1] + 1;
  }
  return out;
}

bool verify_countability(std::uint64_t n_max, unsigned width) {
  if (width < 1 || width > kMaxRankWidth)
    throw std::invalid_argument("rank width must be in 1.." + std::to_string(kMaxRankWidth));
  if (width < 64 && n_max >= (std::uint64_t{1} << width))
    throw std::invalid_argument("n_max does not fit in the rank width");
  if (n_max > kMaxCountabilityN)
    throw std::invalid_argument("countability scan is limited to n_max <= " +
                                std::to_string(kMaxCountabilityN));

  std::vector<FinSupportVec> seen;
  seen.reserve(n_max + 1);
  for (std::uint64_t n = 0;; ++n) {
    FinSupportVec v = unrank(n);
    if (rank(v, width) != n) return false;
    seen.push_back(std::move(v));
    if (n == n_max) break;
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool dense_subset_check(const std::vector<FinSupportVec>& d, unsigned p) {
  check_truncation(p);
  if (p > kMaxDenseP)
    throw std::invalid_argument("dense check is limited to p <= " + std::to_string(kMaxDenseP));
  std::vector<bool> present(std::size_t{1} << p, false);
  for (const FinSupportVec& v : d) {
    if (v.max_index() > p)
      throw std::invalid_argument("subset member " + v.to_string() + " reaches past position " +
                                  std::to_string(p));
    present[rank(v, kMaxRankWidth)] = true;
  }
  return std::find(present.begin(), present.end(), false) == present.end();
}

}  // namespace gf2seq
