#pragma once

#include <utility>
#include <vector>

#include "bav/error.hpp"
#include "bav/rational.hpp"

namespace bav {

// Dense univariate polynomial over Q, coefficients ascending in the variable.
// Normalized: no trailing zero coefficients; the zero polynomial is empty.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }
  static Poly monomial(const Rat& a, int deg) {
    std::vector<Rat> v(size_t(deg) + 1);
    v.back() = a;
    return Poly(std::move(v));
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }  // -1 for zero
  Rat lead() const { return c.empty() ? Rat() : c.back(); }
  Rat coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : Rat(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c.size()) r[i] += a.c[i];
      if (i < b.c.size()) r[i] += b.c[i];
    }
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c.size()) r[i] += a.c[i];
      if (i < b.c.size()) r[i] -= b.c[i];
    }
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<Rat> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = -c[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  Poly scaled(const Rat& k) const {
    std::vector<Rat> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] * k;
    return Poly(std::move(r));
  }

  // Euclidean division: a = q*b + r, deg r < deg b.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
    Poly r = a;
    std::vector<Rat> q;
    if (a.deg() >= b.deg()) q.resize(size_t(a.deg() - b.deg()) + 1);
    while (!r.is_zero() && r.deg() >= b.deg()) {
      int shift = r.deg() - b.deg();
      Rat f = r.lead() / b.lead();
      q[size_t(shift)] = f;
      for (size_t i = 0; i < b.c.size(); ++i)
        r.c[size_t(shift) + i] -= f * b.c[i];
      r.trim();
    }
    return {Poly(std::move(q)), std::move(r)};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / lead());
  }

  static Poly gcd(Poly a, Poly b) {  // monic gcd; gcd(0,0) = 0
    while (!b.is_zero()) {
      Poly r = divrem(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

}  // namespace bav
