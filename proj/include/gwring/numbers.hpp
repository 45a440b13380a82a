#pragma once

// Exact scalar types shared by every ring: half-integers, their two-point
// compactification, and rationals.

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include <boost/rational.hpp>

namespace gwring {

// Compare against Rational(0), never a bare int: with boost 1.74 under C++20 the
// mixed rational/int operator== recurses until the stack runs out.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

/// A number in (1/2)Z stored as twice its value.
struct HalfInt {
  std::int64_t twice = 0;

  static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt{t}; }
  static constexpr HalfInt from_int(std::int64_t k) { return HalfInt{2 * k}; }

  /// True for elements of Z + 1/2.
  constexpr bool is_proper() const { return (twice & 1) != 0; }
  constexpr bool is_integer() const { return (twice & 1) == 0; }

  /// Ordinary floor and ceiling of the value.
  std::int64_t floor() const;
  std::int64_t ceil() const;

  Rational to_rational() const { return Rational(twice, 2); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
  constexpr HalfInt operator-() const { return HalfInt{-twice}; }

  constexpr auto operator<=>(const HalfInt&) const = default;
};

/// Parses "k" or "k/2".
HalfInt parse_half_int(const std::string& text);
std::string to_string(HalfInt h);
std::ostream& operator<<(std::ostream& os, HalfInt h);

/// Compare an integer with a half-integer.
constexpr bool operator<(std::int64_t k, HalfInt h) { return 2 * k < h.twice; }
constexpr bool operator<(HalfInt h, std::int64_t k) { return h.twice < 2 * k; }

/// Z/2 extended by -inf and +inf.
class ExtHalfInt {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  constexpr ExtHalfInt() = default;
  constexpr ExtHalfInt(HalfInt v) : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static constexpr ExtHalfInt neg_inf() { return ExtHalfInt(Kind::NegInf); }
  static constexpr ExtHalfInt pos_inf() { return ExtHalfInt(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  /// Only meaningful when finite.
  constexpr HalfInt value() const { return value_; }

  /// Strict comparisons against integers, used for support computations.
  bool below(std::int64_t k) const;  // *this < k
  bool above(std::int64_t k) const;  // *this > k

  constexpr auto operator<=>(const ExtHalfInt&) const = default;

 private:
  constexpr explicit ExtHalfInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::NegInf;
  HalfInt value_{};
};

std::string to_string(const ExtHalfInt& e);
std::ostream& operator<<(std::ostream& os, const ExtHalfInt& e);

/// Parses "-inf", "inf", or a half-integer.
ExtHalfInt parse_ext_half_int(const std::string& text);

/// Parses "p", "p/q" (optionally negative) into a reduced rational.
Rational parse_rational(const std::string& text);

}  // namespace gwring

template <>
struct std::hash<gwring::HalfInt> {
  std::size_t operator()(gwring::HalfInt h) const noexcept {
    return std::hash<std::int64_t>{}(h.twice);
  }
};
