#include "tamari/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamari {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // Avoids overflow on LLONG_MIN.
  auto mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1
                       : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
    carry = sum >> 32;
  }
  if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow;
    if (i < b.size()) diff -= b[i];
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(diff));
  }
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::operator+(const BigInt& other) const {
  if (sign_ == 0) return other;
  if (other.sign_ == 0) return *this;
  BigInt out;
  if (sign_ == other.sign_) {
    out.sign_ = sign_;
    out.limbs_ = add_mag(limbs_, other.limbs_);
  } else {
    int c = cmp_mag(limbs_, other.limbs_);
    if (c == 0) return BigInt{};
    const BigInt& big = c > 0 ? *this : other;
    const BigInt& small = c > 0 ? other : *this;
    out.sign_ = big.sign_;
    out.limbs_ = sub_mag(big.limbs_, small.limbs_);
  }
  out.trim();
  return out;
}

BigInt BigInt::operator-(const BigInt& other) const { return *this + (-other); }

BigInt BigInt::operator*(const BigInt& other) const {
  if (sign_ == 0 || other.sign_ == 0) return BigInt{};
  BigInt out;
  out.sign_ = sign_ * other.sign_;
  out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[i]) * other.limbs_[j] +
                              out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = static_cast<std::uint64_t>(cur >> 32);
    }
    std::size_t k = i + other.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out.limbs_[k] + (carry & 0xffffffffu);
      out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = (carry >> 32) + (cur >> 32);
      ++k;
    }
  }
  out.trim();
  return out;
}

std::pair<BigInt, std::uint64_t> BigInt::divrem(std::uint64_t divisor) const {
  if (divisor == 0) throw std::invalid_argument("BigInt: division by zero");
  BigInt quotient;
  quotient.limbs_.assign(limbs_.size(), 0);
  unsigned __int128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    rem = (rem << 32) | limbs_[i];
    quotient.limbs_[i] = static_cast<std::uint32_t>(rem / divisor);
    rem %= divisor;
  }
  quotient.sign_ = sign_;
  quotient.trim();
  return {std::move(quotient), static_cast<std::uint64_t>(rem)};
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
  if (sign_ != other.sign_) return sign_ <=> other.sign_;
  int c = cmp_mag(limbs_, other.limbs_);
  if (sign_ < 0) c = -c;
  return c <=> 0;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string digits;
  BigInt cur = *this;
  cur.sign_ = 1;
  while (!cur.is_zero()) {
    auto [q, r] = cur.divrem(1000000000ull);
    cur = q;
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + r % 10));
      r /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

long long BigInt::to_i64() const {
  constexpr long long kMax = 0x7fffffffffffffffll;
  if (*this > BigInt(kMax) || *this < BigInt(-kMax - 1)) {
    throw std::overflow_error("BigInt: value does not fit in long long");
  }
  unsigned long long mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  if (sign_ < 0) return -static_cast<long long>(mag - 1) - 1;
  return static_cast<long long>(mag);
}

}  // namespace tamari
