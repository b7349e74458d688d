#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "bav/error.hpp"
#include "bav/gfp.hpp"
#include "bav/ratfunc.hpp"
#include "bav/rational.hpp"

namespace bav {

// Field contexts. Generic code is templated on the context type K and works
// with values of type K::Elem; the context mints zero/one and constants.

struct Rationals {
  using Elem = Rat;
  Elem zero() const { return Rat(); }
  Elem one() const { return Rat(1); }
  Elem from_int(long n) const { return Rat(n); }
  long characteristic() const { return 0; }
  std::string token() const { return "q"; }
};

struct PrimeField {
  uint32_t p;

  explicit PrimeField(uint32_t prime) : p(prime) {
    if (p < 2 || p >= (uint32_t(1) << 31))
      throw Error(Err::BadPrime, "modulus out of range: " + std::to_string(p));
    for (uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error(Err::BadPrime, std::to_string(p) + " is not prime");
  }

  using Elem = GFp;
  Elem zero() const { return GFp(0, p); }
  Elem one() const { return GFp(1, p); }
  Elem from_int(long n) const {
    long r = n % long(p);
    if (r < 0) r += p;
    return GFp(uint32_t(r), p);
  }
  long characteristic() const { return long(p); }
  std::string token() const { return "gf" + std::to_string(p); }
};

struct RationalFunctions {
  using Elem = RatFunc;
  Elem zero() const { return RatFunc(); }
  Elem one() const { return RatFunc::from_rat(Rat(1)); }
  Elem from_int(long n) const { return RatFunc::from_rat(Rat(n)); }
  Elem q() const { return RatFunc::q_power(1); }
  Elem q_power(long k) const { return RatFunc::q_power(k); }
  long characteristic() const { return 0; }
  std::string token() const { return "fq"; }
};

using FieldVariant = std::variant<Rationals, PrimeField, RationalFunctions>;

// Tokens: "q" = rationals, "gf<p>" = GF(p), "fq" = Q(q).
inline FieldVariant parse_field_token(const std::string& tok) {
  if (tok == "q") return Rationals{};
  if (tok == "fq") return RationalFunctions{};
  if (tok.size() > 2 && tok.compare(0, 2, "gf") == 0) {
    uint64_t p = 0;
    for (size_t i = 2; i < tok.size(); ++i) {
      char c = tok[i];
      if (c < '0' || c > '9') throw Error(Err::Parse, "bad field token '" + tok + "'");
      p = p * 10 + uint64_t(c - '0');
      if (p >= (uint64_t(1) << 31)) throw Error(Err::BadPrime, "modulus too large in '" + tok + "'");
    }
    return PrimeField(uint32_t(p));
  }
  throw Error(Err::Parse, "unknown field token '" + tok + "'");
}

}  // namespace bav
