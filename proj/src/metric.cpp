#include "gf2seq/metric.hpp"

#include <stdexcept>
#include <string>

namespace gf2seq {

VecSequence::VecSequence(std::vector<FinSupportVec> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("sequence needs at least one term");
}

VecSequence VecSequence::parse(std::string_view text) {
  std::vector<FinSupportVec> terms;
  bool saw_repeat = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;  // blank line
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (saw_repeat)
      throw ParseError("line " + std::to_string(line_no) + ": content after the 'repeat' line");
    if (line == "repeat") {
      saw_repeat = true;
      continue;
    }
    try {
      terms.push_back(FinSupportVec::parse(line));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (!saw_repeat) throw ParseError("sequence must end with a 'repeat' line");
  if (terms.empty()) throw ParseError("sequence needs at least one term before 'repeat'");
  return VecSequence(std::move(terms));
}

CauchyVerdict analyze_cauchy(const VecSequence& seq, double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in (0, 1]; the metric only takes values 0 and 1");

  // Distances are 0 or 1, so "Cauchy at threshold epsilon" means eventually
  // constant, and the tail rule makes every represented sequence settle.
  const auto& terms = seq.terms();
  const FinSupportVec& last = terms.back();
  std::size_t settle = terms.size() - 1;
  while (settle > 0 && terms[settle - 1] == last) --settle;

  CauchyVerdict verdict;
  verdict.is_cauchy = true;
  verdict.settle_index = settle;
  verdict.limit = last;
  return verdict;
}

}  // namespace gf2seq
