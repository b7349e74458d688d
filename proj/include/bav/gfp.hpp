#pragma once

#include <cstdint>
#include <string>

#include "bav/error.hpp"

namespace bav {

// Element of GF(p), p an odd-or-even prime < 2^31. Each element carries its
// modulus so cross-field mixing is caught immediately.
struct GFp {
  uint32_t v = 0;
  uint32_t p = 0;

  GFp() = default;
  GFp(uint32_t value, uint32_t prime) : v(value % prime), p(prime) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }

  static void check(const GFp& a, const GFp& b) {
    if (a.p == 0 || b.p == 0 || a.p != b.p)
      throw Error(Err::ContextMismatch, "GF(p) modulus mismatch");
  }

  friend GFp operator+(const GFp& a, const GFp& b) {
    check(a, b);
    uint64_t r = uint64_t(a.v) + b.v;
    if (r >= a.p) r -= a.p;
    return GFp(uint32_t(r), a.p);
  }
  friend GFp operator-(const GFp& a, const GFp& b) {
    check(a, b);
    uint64_t r = uint64_t(a.v) + a.p - b.v;
    if (r >= a.p) r -= a.p;
    return GFp(uint32_t(r), a.p);
  }
  friend GFp operator*(const GFp& a, const GFp& b) {
    check(a, b);
    return GFp(uint32_t((uint64_t(a.v) * b.v) % a.p), a.p);
  }
  friend GFp operator/(const GFp& a, const GFp& b) {
    check(a, b);
    return a * b.inverse();
  }
  GFp operator-() const {
    if (p == 0) throw Error(Err::ContextMismatch, "unattached GF(p) element");
    return GFp(v == 0 ? 0 : p - v, p);
  }
  GFp& operator+=(const GFp& o) { *this = *this + o; return *this; }
  GFp& operator-=(const GFp& o) { *this = *this - o; return *this; }
  GFp& operator*=(const GFp& o) { *this = *this * o; return *this; }

  GFp inverse() const {
    if (v == 0) throw Error(Err::DivisionByZero, "GF(p) division by zero");
    // extended Euclid on (v, p)
    int64_t a = v, m = p, x0 = 1, x1 = 0;
    while (m != 0) {
      int64_t q = a / m;
      int64_t tmp = a - q * m; a = m; m = tmp;
      tmp = x0 - q * x1; x0 = x1; x1 = tmp;
    }
    x0 %= int64_t(p);
    if (x0 < 0) x0 += p;
    return GFp(uint32_t(x0), p);
  }

  friend bool operator==(const GFp& a, const GFp& b) { return a.v == b.v && a.p == b.p; }
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v); }
};

}  // namespace bav
