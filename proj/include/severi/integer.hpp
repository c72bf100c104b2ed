#pragma once

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace severi {

/// Raised whenever an exact integer operation would leave the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact signed integer backed by a 128-bit word. Every operation is checked:
/// results that do not fit throw OverflowError instead of wrapping.
class Integer {
 public:
  __extension__ using rep = __int128;

  constexpr Integer() = default;
  template <std::integral T>
  constexpr Integer(T v) : v_(static_cast<rep>(v)) {}  // NOLINT(google-explicit-constructor)

  static constexpr Integer from_rep(rep v) {
    Integer r;
    r.v_ = v;
    return r;
  }
  constexpr rep raw() const { return v_; }

  std::int64_t to_i64() const {
    if (v_ > std::numeric_limits<std::int64_t>::max() ||
        v_ < std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("integer does not fit in 64 bits: " + to_string());
    }
    return static_cast<std::int64_t>(v_);
  }

  std::string to_string() const {
    if (v_ == 0) return "0";
    bool neg = v_ < 0;
    // work on the negative magnitude so the minimum value is handled
    rep x = neg ? v_ : -v_;
    std::string s;
    while (x != 0) {
      s.insert(s.begin(), static_cast<char>('0' - static_cast<int>(x % 10)));
      x /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
  }

  friend Integer operator+(Integer a, Integer b) {
    rep r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("integer addition overflow");
    return from_rep(r);
  }
  friend Integer operator-(Integer a, Integer b) {
    rep r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("integer subtraction overflow");
    return from_rep(r);
  }
  friend Integer operator*(Integer a, Integer b) {
    rep r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("integer multiplication overflow");
    return from_rep(r);
  }
  /// Truncating division, like the built-in integer types.
  friend Integer operator/(Integer a, Integer b) {
    if (b.v_ == 0) throw std::domain_error("integer division by zero");
    if (b.v_ == -1) return -a;
    return from_rep(a.v_ / b.v_);
  }
  friend Integer operator%(Integer a, Integer b) {
    if (b.v_ == 0) throw std::domain_error("integer division by zero");
    if (b.v_ == -1) return Integer{};
    return from_rep(a.v_ % b.v_);
  }
  Integer operator-() const {
    if (v_ == std::numeric_limits<rep>::min()) throw OverflowError("integer negation overflow");
    return from_rep(-v_);
  }
  Integer operator+() const { return *this; }

  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }
  Integer& operator/=(Integer o) { return *this = *this / o; }
  Integer& operator%=(Integer o) { return *this = *this % o; }

  friend constexpr bool operator==(Integer a, Integer b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.to_string(); }

 private:
  rep v_ = 0;
};

inline Integer abs(Integer x) { return x < 0 ? -x : x; }

constexpr bool is_zero(Integer x) { return x == Integer{}; }

// Generic exact-integer helpers. They work for Integer and for the built-in
// signed integral types.

template <typename Scalar>
Scalar int_abs(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

/// Non-negative gcd; gcd(0, 0) = 0.
template <typename Scalar>
Scalar gcd(Scalar a, Scalar b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != Scalar(0)) {
    Scalar t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar old_r = a, r = b;
  Scalar old_s = 1, s = 0;
  Scalar old_t = 0, t = 1;
  while (r != Scalar(0)) {
    Scalar q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, Scalar(old_r - q * r));
    std::tie(old_s, s) = std::make_tuple(s, Scalar(old_s - q * s));
    std::tie(old_t, t) = std::make_tuple(t, Scalar(old_t - q * t));
  }
  if (old_r < Scalar(0)) return {Scalar(-old_r), Scalar(-old_s), Scalar(-old_t)};
  return {old_r, old_s, old_t};
}

/// Floor division (rounds toward negative infinity).
template <typename Scalar>
Scalar floor_div(Scalar a, Scalar b) {
  Scalar q = a / b;
  if ((a % b != Scalar(0)) && ((a < Scalar(0)) != (b < Scalar(0)))) q = q - Scalar(1);
  return q;
}

/// Remainder in [0, |b|).
template <typename Scalar>
Scalar floor_mod(Scalar a, Scalar b) {
  Scalar r = a % b;
  if (r < Scalar(0)) r = r + int_abs(b);
  return r;
}

// Checked arithmetic for 64-bit geometry code.
namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit addition overflow");
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit subtraction overflow");
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiplication overflow");
  return r;
}

}  // namespace checked

}  // namespace severi

namespace Eigen {

template <>
struct NumTraits<severi::Integer> : GenericNumTraits<severi::Integer> {
  using Real = severi::Integer;
  using NonInteger = double;
  using Literal = severi::Integer;
  using Nested = severi::Integer;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };

  static inline severi::Integer epsilon() { return 0; }
  static inline severi::Integer dummy_precision() { return 0; }
  static inline severi::Integer highest() {
    return severi::Integer::from_rep(std::numeric_limits<severi::Integer::rep>::max());
  }
  static inline severi::Integer lowest() {
    return severi::Integer::from_rep(std::numeric_limits<severi::Integer::rep>::min());
  }
  static inline int digits10() { return 38; }
};

}  // namespace Eigen
