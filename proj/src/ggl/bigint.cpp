#include "ggl/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ggl {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint::BigUint(u64 v) {
  if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sum = static_cast<u128>(limbs_[i]) + carry;
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<u64>(sum);
    carry = static_cast<u64>(sum >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (*this < rhs) throw std::underflow_error("BigUint subtraction underflow");
  u64 borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sub = static_cast<u128>(i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) + borrow;
    if (static_cast<u128>(limbs_[i]) >= sub) {
      limbs_[i] = static_cast<u64>(static_cast<u128>(limbs_[i]) - sub);
      borrow = 0;
    } else {
      limbs_[i] = static_cast<u64>((static_cast<u128>(1) << 64) + limbs_[i] - sub);
      borrow = 1;
    }
  }
  trim();
  return *this;
}

BigUint& BigUint::mul_small(u64 m) {
  if (m == 0 || is_zero()) {
    limbs_.clear();
    return *this;
  }
  u64 carry = 0;
  for (auto& limb : limbs_) {
    u128 prod = static_cast<u128>(limb) * m + carry;
    limb = static_cast<u64>(prod);
    carry = static_cast<u64>(prod >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
  BigUint out = *this;
  out += rhs;
  return out;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
  BigUint out = *this;
  out -= rhs;
  return out;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigUint{};
  BigUint out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      u128 acc = static_cast<u128>(limbs_[i]) * rhs.limbs_[j] + out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<u64>(acc);
      carry = static_cast<u64>(acc >> 64);
    }
    out.limbs_[i + rhs.limbs_.size()] += carry;
  }
  out.trim();
  return out;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigUint BigUint::pow(u64 base, unsigned exp) {
  BigUint out{1};
  for (unsigned i = 0; i < exp; ++i) out.mul_small(base);
  return out;
}

double BigUint::ln() const {
  if (is_zero()) throw std::domain_error("ln of zero");
  const std::size_t top = limbs_.size() - 1;
  double mantissa = static_cast<double>(limbs_[top]);
  if (top >= 1) mantissa += static_cast<double>(limbs_[top - 1]) * 0x1.0p-64;
  if (top >= 2) mantissa += static_cast<double>(limbs_[top - 2]) * 0x1.0p-128;
  constexpr double kLn2 = 0.6931471805599453094;
  return std::log(mantissa) + 64.0 * static_cast<double>(top) * kLn2;
}

double BigUint::to_double() const {
  if (is_zero()) return 0.0;
  double ln_v = ln();
  if (ln_v > std::log(std::numeric_limits<double>::max()))
    return std::numeric_limits<double>::infinity();
  const std::size_t top = limbs_.size() - 1;
  double mantissa = static_cast<double>(limbs_[top]);
  if (top >= 1) mantissa += static_cast<double>(limbs_[top - 1]) * 0x1.0p-64;
  return std::ldexp(mantissa, static_cast<int>(64 * top));
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  constexpr u64 kChunk = 10'000'000'000'000'000'000ULL;  // 10^19
  std::vector<u64> digits;  // base-10^19 chunks, little-endian
  std::vector<u64> work = limbs_;
  while (!work.empty()) {
    u128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      u128 cur = (rem << 64) | work[i];
      work[i] = static_cast<u64>(cur / kChunk);
      rem = cur % kChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    digits.push_back(static_cast<u64>(rem));
  }
  std::string out = std::to_string(digits.back());
  for (std::size_t i = digits.size() - 1; i-- > 0;) {
    std::string part = std::to_string(digits[i]);
    out += std::string(19 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace ggl
