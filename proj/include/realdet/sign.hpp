#pragma once

#include <cstdint>
#include <iosfwd>

namespace realdet {

/// An element of the multiplicative group {+1, -1}.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  static constexpr Sign negative_if(bool negative) { return negative ? minus() : plus(); }

  /// Accepts exactly +1 or -1; anything else throws Error{InvalidArgument}.
  static Sign from_int(long long value);

  constexpr bool is_plus() const { return value_ > 0; }
  constexpr bool is_minus() const { return value_ < 0; }
  constexpr int to_int() const { return value_; }

  /// Raises the sign to an integer power. Negative exponents are fine since
  /// every element is its own inverse.
  constexpr Sign pow(long long exponent) const {
    return (is_minus() && (exponent % 2 != 0)) ? minus() : plus();
  }

  constexpr Sign operator-() const { return Sign(static_cast<std::int8_t>(-value_)); }
  constexpr Sign& operator*=(Sign other) {
    value_ = static_cast<std::int8_t>(value_ * other.value_);
    return *this;
  }
  friend constexpr Sign operator*(Sign a, Sign b) { return a *= b; }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  constexpr explicit Sign(int v) : value_(static_cast<std::int8_t>(v)) {}
  std::int8_t value_ = 1;
};

std::ostream& operator<<(std::ostream& os, Sign s);

/// Parity of an integer as 0 or 1, correct for negative values.
constexpr int parity(long long n) { return static_cast<int>(((n % 2) + 2) % 2); }

/// Non-negative residue of n modulo m (m > 0).
constexpr long long mod_floor(long long n, long long m) { return ((n % m) + m) % m; }

}  // namespace realdet
