#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ultratree {

/// Exact non-negative rational number, always stored in lowest terms with a
/// positive denominator. Only the operations the metric code needs are
/// provided: comparison, max, parsing and printing.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::uint64_t integer) noexcept : num_(integer) {}  // NOLINT(implicit)
  Rational(std::uint64_t numerator, std::uint64_t denominator);

  constexpr std::uint64_t numerator() const noexcept { return num_; }
  constexpr std::uint64_t denominator() const noexcept { return den_; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Accepts "p", "p/q" (q > 0) with optional surrounding whitespace.
  /// Throws Error{ParseError} on anything else, including negative values.
  static Rational parse(std::string_view text);

  /// Shortest exact form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;

  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    using wide = unsigned __int128;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ultratree

template <>
struct std::hash<ultratree::Rational> {
  std::size_t operator()(const ultratree::Rational& r) const noexcept {
    return std::hash<std::uint64_t>{}(r.numerator() * 0x9E3779B97F4A7C15ull ^ r.denominator());
  }
};
