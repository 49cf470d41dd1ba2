#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hal {

// Arbitrary-precision signed integer, sign + magnitude with 32-bit limbs.
// All matrix and Smith normal form computations run on exact integers or
// exact rationals built from this type; the repository contains no floating
// point arithmetic.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return sign_ > 0 && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_neg() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated division (rounds toward zero), remainder has the dividend's sign.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
  BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
  BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt gcd(BigInt a, BigInt b);  // non-negative

  // Value reduced modulo m (m > 0), result in [0, m).
  std::uint64_t mod_u64(std::uint64_t m) const;

  // Fits in int64? (for fast paths and diagnostics)
  bool fits_i64() const;
  std::int64_t to_i64() const;  // valid only if fits_i64()

  std::string str() const;

 private:
  int sign_ = 0;                     // -1, 0, +1
  std::vector<std::uint32_t> limbs_; // little endian, no trailing zeros

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b, int sign);
  static BigInt sub_mag(const BigInt& a, const BigInt& b, int sign);  // |a|>=|b|
};

}  // namespace hal
