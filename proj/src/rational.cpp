#include "ultratree/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "ultratree/error.hpp"

namespace ultratree {

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / (g == 0 ? 1 : g);
  den_ = denominator / (g == 0 ? 1 : g);
}

namespace {

std::uint64_t parse_unsigned(std::string_view digits, std::string_view whole) {
  std::uint64_t value = 0;
  if (digits.empty()) throw Error(ErrorCode::ParseError, "empty number in rational '" + std::string(whole) + "'");
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size())
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (!s.empty() && s.front() == '-')
    throw Error(ErrorCode::ParseError, "negative rational '" + std::string(text) + "'");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_unsigned(s, text));
  const std::uint64_t p = parse_unsigned(trim(s.substr(0, slash)), text);
  const std::uint64_t q = parse_unsigned(trim(s.substr(slash + 1)), text);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ultratree
