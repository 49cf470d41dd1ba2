#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hal {

// Element of the prime field F_p with a runtime modulus. Each element carries
// its modulus; p == 0 marks an unbound small literal (0 or 1) that binds to a
// modulus on first contact with a bound element. Mixing distinct moduli is a
// program error.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  explicit Fp(std::uint64_t literal) : v(literal), p(0) {}
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  static std::uint64_t common(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) throw std::domain_error("Fp: modulus mismatch");
    return a.p ? a.p : b.p;
  }
  Fp bound(std::uint64_t m) const { return p ? *this : Fp(v % m, m); }

  bool is_zero() const { return v == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t m = common(a, b);
    if (!m) return Fp(a.v + b.v);
    Fp x = a.bound(m), y = b.bound(m);
    std::uint64_t s = x.v + y.v;
    if (s >= m) s -= m;
    return Fp(s, m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t m = common(a, b);
    if (!m) {
      if (a.v < b.v) throw std::domain_error("Fp: unbound negative literal");
      return Fp(a.v - b.v);
    }
    Fp x = a.bound(m), y = b.bound(m);
    return Fp(x.v >= y.v ? x.v - y.v : x.v + m - y.v, m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t m = common(a, b);
    if (!m) return Fp(a.v * b.v);
    Fp x = a.bound(m), y = b.bound(m);
    return Fp(static_cast<std::uint64_t>((__uint128_t)x.v * y.v % m), m);
  }
  Fp operator-() const {
    if (!p) {
      if (v == 0) return Fp();
      throw std::domain_error("Fp: unbound negate");
    }
    return Fp(v ? p - v : 0, p);
  }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

  Fp inv() const {
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    if (!p) {
      if (v == 1) return Fp(std::uint64_t(1));
      throw std::domain_error("Fp: unbound inverse");
    }
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(v);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(t), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) throw std::domain_error("Fp: modulus mismatch");
    std::uint64_t m = a.p ? a.p : b.p;
    if (!m) return a.v == b.v;
    return a.bound(m).v == b.bound(m).v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v); }
};

}  // namespace hal
