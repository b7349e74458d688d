#pragma once

#include <string>
#include <utility>

#include "bav/error.hpp"
#include "bav/poly.hpp"

namespace bav {

// Element of Q(q): reduced fraction of polynomials in q with monic
// denominator. That normalization makes the representation unique.
struct RatFunc {
  Poly num;
  Poly den;  // monic, coprime to num; zero element is 0/1

  RatFunc() : den(Poly::constant(Rat(1))) {}
  RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  static RatFunc from_rat(const Rat& a) {
    RatFunc r;
    r.num = Poly::constant(a);
    return r;
  }
  static RatFunc q_power(long k) {  // q^k, any sign
    RatFunc r;
    if (k >= 0)
      r.num = Poly::monomial(Rat(1), int(k));
    else {
      r.num = Poly::constant(Rat(1));
      r.den = Poly::monomial(Rat(1), int(-k));
    }
    return r;
  }

  void reduce() {
    if (den.is_zero()) throw Error(Err::DivisionByZero, "zero denominator in Q(q)");
    if (num.is_zero()) {
      den = Poly::constant(Rat(1));
      return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.deg() > 0) {
      num = Poly::divrem(num, g).first;
      den = Poly::divrem(den, g).first;
    }
    Rat lc = den.lead();
    if (!lc.is_one()) {
      Rat inv = Rat(1) / lc;
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return den.deg() == 0 && den.lead().is_one() && num == den; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(Err::DivisionByZero, "Q(q) division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
  }
  RatFunc operator-() const {
    RatFunc r;
    r.num = -num;
    r.den = den;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const {  // debug aid: "c0+c1*q+..."/"..."
    auto poly_str = [](const Poly& p) {
      if (p.is_zero()) return std::string("0");
      std::string out;
      for (int i = 0; i <= p.deg(); ++i) {
        Rat ci = p.coeff(i);
        if (ci.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += ci.str();
        if (i > 0) out += "*q^" + std::to_string(i);
      }
      return out;
    };
    return "(" + poly_str(num) + ")/(" + poly_str(den) + ")";
  }
};

}  // namespace bav
