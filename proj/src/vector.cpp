#include "gf2seq/vector.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace gf2seq {

namespace {

bool strictly_increasing_positive(const std::vector<std::uint64_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

// The run of characters at pos, for error messages.
std::string token_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "<end of input>";
  std::size_t end = pos;
  while (end < text.size() && end - pos < 16 && !std::isspace(static_cast<unsigned char>(text[end])))
    ++end;
  return "\"" + std::string(text.substr(pos, end - pos)) + "\"";
}

std::uint64_t parse_index(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("index out of range at " + token_at(text, pos));
  if (ec != std::errc() || ptr == text.data() + pos)
    throw ParseError("expected index at " + token_at(text, pos));
  pos = static_cast<std::size_t>(ptr - text.data());
  if (value == 0) throw ParseError("non-positive index 0 in vector literal");
  return value;
}

}  // namespace

FinSupportVec::FinSupportVec(std::vector<std::uint64_t> support) : support_(std::move(support)) {
  if (!strictly_increasing_positive(support_))
    throw std::invalid_argument("support must be a strictly increasing list of indices >= 1");
}

FinSupportVec FinSupportVec::basis(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("invalid basis index 0; indices start at 1");
  return FinSupportVec(Unchecked{}, {n});
}

FinSupportVec operator+(const FinSupportVec& x, const FinSupportVec& y) {
  std::vector<std::uint64_t> out;
  out.reserve(x.support_.size() + y.support_.size());
  std::set_symmetric_difference(x.support_.begin(), x.support_.end(), y.support_.begin(),
                                y.support_.end(), std::back_inserter(out));
  return FinSupportVec(FinSupportVec::Unchecked{}, std::move(out));
}

FinSupportVec operator*(GF2Scalar alpha, const FinSupportVec& x) {
  return alpha.bit() ? x : FinSupportVec{};
}

std::uint64_t rank(const FinSupportVec& x, unsigned width) {
  if (width < 1 || width > kMaxRankWidth)
    throw std::invalid_argument("rank width must be in 1.." + std::to_string(kMaxRankWidth));
  std::uint64_t r = 0;
  for (std::uint64_t i : x.support()) {
    if (i > width) throw RankOverflowError(i, width);
    r |= std::uint64_t{1} << (i - 1);
  }
  return r;
}

FinSupportVec unrank(std::uint64_t n) {
  std::vector<std::uint64_t> support;
  support.reserve(static_cast<std::size_t>(std::popcount(n)));
  while (n != 0) {
    support.push_back(static_cast<std::uint64_t>(std::countr_zero(n)) + 1);
    n &= n - 1;  // clear lowest set bit
  }
  return FinSupportVec(FinSupportVec::Unchecked{}, std::move(support));
}

FinSupportVec FinSupportVec::parse(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '{')
    throw ParseError("vector literal must start with '{', got " + token_at(text, pos));
  ++pos;
  skip_ws(text, pos);

  std::vector<std::uint64_t> support;
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    for (;;) {
      std::uint64_t index = parse_index(text, pos);
      if (!support.empty() && index <= support.back())
        throw ParseError("indices must be strictly increasing: " + std::to_string(index) +
                         " after " + std::to_string(support.back()));
      support.push_back(index);
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or '}' at " + token_at(text, pos));
    }
  }
  skip_ws(text, pos);
  if (pos != text.size())
    throw ParseError("unexpected trailing characters at " + token_at(text, pos));
  return FinSupportVec(Unchecked{}, std::move(support));
}

std::string FinSupportVec::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(support_[i]);
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const FinSupportVec& x) { return os << x.to_string(); }

}  // namespace gf2seq
