#include "hal/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace hal {

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v)
                          : ~static_cast<std::uint64_t>(v) + 1;
  while (m) {
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b, int sign) {
  BigInt r;
  r.sign_ = sign;
  const auto &x = a.limbs_, &y = b.limbs_;
  size_t n = std::max(x.size(), y.size());
  r.limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
  r.trim();
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b, int sign) {
  BigInt r;
  r.sign_ = sign;
  r.limbs_ = a.limbs_;
  std::int64_t borrow = 0;
  for (size_t i = 0; i < r.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(r.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? b.limbs_[i] : 0);
    if (d < 0) {
      d += (std::int64_t(1) << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  assert(borrow == 0);
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.sign_ == b.sign_) return BigInt::add_mag(a, b, a.sign_);
  int c = BigInt::cmp_mag(a, b);
  if (c == 0) return BigInt();
  return c > 0 ? BigInt::sub_mag(a, b, a.sign_) : BigInt::sub_mag(b, a, b.sign_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a.limbs_[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] + carry + ai * b.limbs_[j];
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  int c = cmp_mag(a, b);
  if (c < 0) {
    q = BigInt();
    r = a;
    return;
  }
  // Schoolbook long division on 32-bit limbs (Knuth D, simplified via
  // normalization to a single-limb aware loop).
  const size_t n = b.limbs_.size();
  if (n == 1) {
    std::uint64_t d = b.limbs_[0];
    BigInt qq;
    qq.limbs_.resize(a.limbs_.size());
    std::uint64_t rem = 0;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a.limbs_[i];
      qq.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    qq.sign_ = 1;
    qq.trim();
    q = qq;
    q.sign_ = qq.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r = BigInt(static_cast<std::int64_t>(rem));
    if (!r.is_zero()) r.sign_ = a.sign_;
    return;
  }
  // Normalize so the top limb of the divisor has its high bit set.
  int shift = 0;
  {
    std::uint32_t top = b.limbs_.back();
    while (!(top & 0x80000000u)) {
      top <<= 1;
      ++shift;
    }
  }
  auto shl = [&](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out(v.size() + 1, 0);
    for (size_t i = 0; i < v.size(); ++i) {
      out[i] |= static_cast<std::uint32_t>((std::uint64_t(v[i]) << shift) & 0xffffffffu);
      if (shift)
        out[i + 1] |= static_cast<std::uint32_t>(std::uint64_t(v[i]) >> (32 - shift));
    }
    return out;
  };
  std::vector<std::uint32_t> u = shl(a.limbs_);
  std::vector<std::uint32_t> v = shl(b.limbs_);
  while (!v.empty() && v.back() == 0) v.pop_back();
  const size_t m = u.size() - v.size();
  std::vector<std::uint32_t> quot(m + 1, 0);
  const std::uint64_t BASE = std::uint64_t(1) << 32;
  for (size_t j = m + 1; j-- > 0;) {
    std::uint64_t numer = (std::uint64_t(j + v.size() < u.size() ? u[j + v.size()] : 0) << 32) |
                          u[j + v.size() - 1];
    std::uint64_t qhat = numer / v.back();
    std::uint64_t rhat = numer % v.back();
    while (qhat >= BASE ||
           (v.size() >= 2 &&
            qhat * v[v.size() - 2] > ((rhat << 32) | u[j + v.size() - 2]))) {
      --qhat;
      rhat += v.back();
      if (rhat >= BASE) break;
    }
    // u[j .. j+n] -= qhat * v
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      std::int64_t d = static_cast<std::int64_t>(u[i + j]) -
                       static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
      if (d < 0) {
        d += static_cast<std::int64_t>(BASE);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<std::uint32_t>(d);
    }
    std::int64_t top = static_cast<std::int64_t>(j + v.size() < u.size() ? u[j + v.size()] : 0) -
                       static_cast<std::int64_t>(carry) - borrow;
    if (top < 0) {
      // qhat was one too large: add back.
      --qhat;
      std::uint64_t c2 = 0;
      for (size_t i = 0; i < v.size(); ++i) {
        std::uint64_t s = std::uint64_t(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      top += static_cast<std::int64_t>(c2);
    }
    if (j + v.size() < u.size()) u[j + v.size()] = static_cast<std::uint32_t>(top);
    quot[j] = static_cast<std::uint32_t>(qhat);
  }
  BigInt qq, rr;
  qq.limbs_ = quot;
  qq.sign_ = 1;
  qq.trim();
  // Denormalize the remainder.
  std::vector<std::uint32_t> rem(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    std::uint64_t cur = u[i] >> shift;
    if (shift && i + 1 < u.size())
      cur |= (std::uint64_t(u[i + 1]) << (32 - shift)) & 0xffffffffu;
    rem[i] = static_cast<std::uint32_t>(cur);
  }
  rr.limbs_ = rem;
  rr.sign_ = 1;
  rr.trim();
  q = qq;
  if (!q.is_zero()) q.sign_ = a.sign_ * b.sign_;
  r = rr;
  if (!r.is_zero()) r.sign_ = a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a, b);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  std::uint64_t r = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    __uint128_t cur = (static_cast<__uint128_t>(r) << 32) | limbs_[i];
    r = static_cast<std::uint64_t>(cur % m);
  }
  if (sign_ < 0 && r != 0) r = m - r;
  return r;
}

bool BigInt::fits_i64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t m = (std::uint64_t(limbs_[1]) << 32) | limbs_[0];
  if (sign_ > 0) return m <= 0x7fffffffffffffffull;
  return m <= 0x8000000000000000ull;
}

std::int64_t BigInt::to_i64() const {
  std::uint64_t m = 0;
  if (limbs_.size() >= 1) m |= limbs_[0];
  if (limbs_.size() >= 2) m |= std::uint64_t(limbs_[1]) << 32;
  return sign_ >= 0 ? static_cast<std::int64_t>(m)
                    : -static_cast<std::int64_t>(m);
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  BigInt t = abs();
  std::string digits;
  const BigInt ten(10);
  while (!t.is_zero()) {
    BigInt q, r;
    divmod(t, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    t = q;
  }
  if (sign_ < 0) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  size_t i = 0;
  int sg = 1;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    if (s[i] == '-') sg = -1;
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
  const BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * ten + BigInt(s[i] - '0');
  }
  if (sg < 0) r = -r;
  return r;
}

}  // namespace hal
