#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tamari {

// Signed arbitrary-precision integer. Magnitude is little-endian base 2^32.
// Zero is canonically sign 0 with no limbs.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }

  BigInt operator-() const;
  BigInt operator+(const BigInt& other) const;
  BigInt operator-(const BigInt& other) const;
  BigInt operator*(const BigInt& other) const;

  BigInt& operator+=(const BigInt& other) { return *this = *this + other; }
  BigInt& operator-=(const BigInt& other) { return *this = *this - other; }
  BigInt& operator*=(const BigInt& other) { return *this = *this * other; }

  // Division of the magnitude by a small positive divisor; the quotient
  // carries the sign of the dividend, the remainder is the magnitude
  // remainder. Intended for exact divisions (caller checks the remainder)
  // and decimal printing.
  std::pair<BigInt, std::uint64_t> divrem(std::uint64_t divisor) const;

  bool operator==(const BigInt& other) const = default;
  std::strong_ordering operator<=>(const BigInt& other) const;

  std::string to_string() const;

  // Value as long long; throws if out of range (test convenience).
  long long to_i64() const;

 private:
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  void trim();

  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;
};

}  // namespace tamari
