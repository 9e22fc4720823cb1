#include "gf2seq/operator.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gf2seq {

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void check_shiftable(const FinSupportVec& x) {
  if (x.max_index() == std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("shift_right would push a support index past the index type");
}

}  // namespace

Operator Operator::identity() { return Operator(Kind::identity); }
Operator Operator::shift_left() { return Operator(Kind::shift_left); }
Operator Operator::shift_right() { return Operator(Kind::shift_right); }
Operator Operator::zero() { return Operator(Kind::explicit_columns); }

Operator Operator::from_columns(std::map<std::uint64_t, FinSupportVec> columns) {
  if (columns.count(0) != 0)
    throw std::invalid_argument("column indices start at 1; got a column at 0");
  Operator op(Kind::explicit_columns);
  op.columns_ = std::move(columns);
  return op;
}

FinSupportVec Operator::column(std::uint64_t i) const {
  if (i == 0) throw std::invalid_argument("basis indices start at 1");
  switch (kind_) {
    case Kind::identity:
      return FinSupportVec::basis(i);
    case Kind::shift_right:
      if (i == std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("shift_right would push a support index past the index type");
      return FinSupportVec::basis(i + 1);
    case Kind::shift_left:
      return i == 1 ? FinSupportVec{} : FinSupportVec::basis(i - 1);
    case Kind::explicit_columns: {
      auto it = columns_.find(i);
      return it == columns_.end() ? FinSupportVec{} : it->second;
    }
  }
  throw std::logic_error("unreachable operator kind");
}

FinSupportVec Operator::apply(const FinSupportVec& x) const {
  switch (kind_) {
    case Kind::identity:
      return x;
    case Kind::shift_right: {
      check_shiftable(x);
      std::vector<std::uint64_t> shifted;
      shifted.reserve(x.support_size());
      for (std::uint64_t i : x.support()) shifted.push_back(i + 1);
      return FinSupportVec(std::move(shifted));
    }
    case Kind::shift_left: {
      std::vector<std::uint64_t> shifted;
      shifted.reserve(x.support_size());
      for (std::uint64_t i : x.support())
        if (i >= 2) shifted.push_back(i - 1);
      return FinSupportVec(std::move(shifted));
    }
    case Kind::explicit_columns: {
      FinSupportVec acc;
      for (std::uint64_t i : x.support()) {
        auto it = columns_.find(i);
        if (it != columns_.end()) acc = acc + it->second;
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable operator kind");
}

Operator Operator::parse(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (!line.empty()) lines.emplace_back(line_no, line);
  }

  if (lines.size() == 1) {
    std::string_view only = lines.front().second;
    if (only == "identity") return identity();
    if (only == "shift_left") return shift_left();
    if (only == "shift_right") return shift_right();
  }

  std::map<std::uint64_t, FinSupportVec> columns;
  for (auto [no, line] : lines) {
    if (line == "identity" || line == "shift_left" || line == "shift_right")
      throw ParseError("line " + std::to_string(no) +
                       ": built-in operator name must be the only line");
    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("line " + std::to_string(no) + ": expected \"i -> {...}\" in \"" +
                       std::string(line) + "\"");

    std::string_view index_part = trim(line.substr(0, arrow));
    std::uint64_t index = 0;
    auto [ptr, ec] =
        std::from_chars(index_part.data(), index_part.data() + index_part.size(), index);
    if (ec != std::errc() || ptr != index_part.data() + index_part.size() || index == 0)
      throw ParseError("line " + std::to_string(no) + ": invalid column index \"" +
                       std::string(index_part) + "\"");
    if (columns.count(index) != 0)
      throw ParseError("line " + std::to_string(no) + ": duplicate column index " +
                       std::to_string(index));

    try {
      columns.emplace(index, FinSupportVec::parse(line.substr(arrow + 2)));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(no) + ": " + err.what());
    }
  }
  return from_columns(std::move(columns));
}

OperatorNormResult operator_norm(const Operator& T, std::uint64_t search_bound) {
  if (search_bound < 1) throw std::invalid_argument("search bound must be >= 1");

  if (T.kind() == Operator::Kind::explicit_columns) {
    // The stored columns are the only possibly non-zero ones, so the scan
    // is exact no matter the bound.
    for (const auto& [i, col] : T.columns())
      if (!col.is_zero()) return {1, FinSupportVec::basis(i), true};
    return {0, std::nullopt, true};
  }
  for (std::uint64_t i = 1; i <= search_bound; ++i)
    if (!T.column(i).is_zero()) return {1, FinSupportVec::basis(i), true};
  return {0, std::nullopt, false};
}

FinSupportVec attainment_witness(const Operator& T, std::uint64_t search_bound) {
  OperatorNormResult result = operator_norm(T, search_bound);
  if (result.norm == 1) return *result.witness;
  if (result.exact) return FinSupportVec::basis(1);  // zero operator: any point attains
  throw UnresolvedAtBoundError(search_bound);
}

bool is_zero_up_to(const Operator& T, std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (T.kind() == Operator::Kind::explicit_columns) {
    for (const auto& [i, col] : T.columns())
      if (i <= bound && !col.is_zero()) return false;
    return true;
  }
  // Rule kinds have a non-zero column at index 1 or 2, so this terminates
  // after at most two probes.
  for (std::uint64_t i = 1; i <= bound; ++i)
    if (!T.column(i).is_zero()) return false;
  return true;
}

}  // namespace gf2seq
