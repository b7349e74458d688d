#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "bav/error.hpp"

namespace bav {

// Exact rational, always canonical: reduced fraction, positive denominator.
// Backed by GMP; arithmetic on canonical operands stays canonical.
struct Rat {
  mpq_class v;

  Rat() : v(0) {}
  Rat(long n) : v(n) {}
  Rat(long num, long den) {
    if (den == 0) throw Error(Err::DivisionByZero, "zero denominator");
    v = mpq_class(num, den);
    v.canonicalize();
  }
  explicit Rat(const mpz_class& n) : v(n) {}

  static Rat raw(mpq_class q) {  // q must already be canonical
    Rat r;
    r.v = std::move(q);
    return r;
  }

  bool is_zero() const { return sgn(v) == 0; }
  bool is_one() const { return v == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) { return raw(a.v + b.v); }
  friend Rat operator-(const Rat& a, const Rat& b) { return raw(a.v - b.v); }
  friend Rat operator*(const Rat& a, const Rat& b) { return raw(a.v * b.v); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Error(Err::DivisionByZero, "rational division by zero");
    return raw(a.v / b.v);
  }
  Rat operator-() const { return raw(-v); }
  Rat& operator+=(const Rat& o) { v += o.v; return *this; }
  Rat& operator-=(const Rat& o) { v -= o.v; return *this; }
  Rat& operator*=(const Rat& o) { v *= o.v; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v < b.v; }

  // Always "num/den" with den > 0, e.g. "5/6", "-3/1".
  std::string str() const {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
  }

  // Accepts "a/b" or bare "a".
  static Rat parse(const std::string& s) {
    auto bad = [&] { return Error(Err::Parse, "bad rational '" + s + "'"); };
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
      num = s.substr(0, pos);
      den = s.substr(pos + 1);
    }
    mpz_class n, d;
    if (num.empty() || den.empty()) throw bad();
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) throw bad();
    if (d == 0) throw Error(Err::DivisionByZero, "zero denominator in '" + s + "'");
    mpq_class q(n);
    q /= mpq_class(d);
    return raw(std::move(q));
  }
};

}  // namespace bav
