#pragma once

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace haken {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational numerator / 2^exponent, kept in canonical form: the
/// numerator is odd, or zero with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of arithmetic
  explicit Dyadic(BigInt value) : num_(std::move(value)) {}
  Dyadic(BigInt numerator, unsigned exponent);

  /// 2^k for any integer k.
  static Dyadic pow2(int k);
  /// Parses the canonical rendering "a/2^k" (non-canonical input is normalized).
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }
  bool is_integer() const noexcept { return exp_ == 0; }
  int sign() const noexcept { return num_.sign(); }

  /// Multiplies by 2^k.
  Dyadic scaled(int k) const;

  /// Canonical "a/2^k", e.g. "-1/2^2", "0/2^0", "2/2^0".
  std::string to_string() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d);

 private:
  void normalize();

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace haken
