#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ggl {

// Arbitrary-precision unsigned integer, sized for exact word counts.
// (2k-1)^n leaves the 64-bit range near n = 40 already for k = 2; the
// counting pipelines go well past that.  Little-endian base-2^64 limbs.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
  BigUint& mul_small(std::uint64_t m);
  BigUint operator+(const BigUint& rhs) const;
  BigUint operator-(const BigUint& rhs) const;
  BigUint operator*(const BigUint& rhs) const;

  std::strong_ordering operator<=>(const BigUint& rhs) const;
  bool operator==(const BigUint& rhs) const = default;

  static BigUint pow(std::uint64_t base, unsigned exp);

  // Natural log; relative error well under 1e-12. Throws on zero.
  double ln() const;
  // Lossy; +inf when out of double range.
  double to_double() const;
  std::string to_decimal() const;

  // Fits in uint64? (used by small-scale shortcuts)
  bool fits_u64() const { return limbs_.size() <= 1; }
  std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

}  // namespace ggl
