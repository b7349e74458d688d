#pragma once

#include <cstdint>
#include <random>

#include "bav/fields.hpp"
#include "bav/linalg.hpp"

namespace bav {

// Seeded generator with hand-rolled bounded sampling. std::mt19937_64 output
// is fully specified, and skipping the std distributions keeps byte-identical
// results across standard libraries.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t next() { return eng(); }

  uint64_t below(uint64_t n) {  // uniform in [0, n)
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = eng();
    } while (x >= limit);
    return x % n;
  }

  long range(long lo, long hi) {  // uniform inclusive
    return lo + long(below(uint64_t(hi - lo + 1)));
  }
};

// Scalar sampling conventions, pinned for reproducibility:
//   rationals        numerator in [-6,6], denominator in [1,4]
//   GF(p)            uniform residue
//   Q(q)             nonzero draws are monomials q^k, k in [-3,3];
//                    general draws are small integer constants
inline Rat random_elem(const Rationals&, Rng& rng) {
  return Rat(rng.range(-6, 6), rng.range(1, 4));
}
inline Rat random_nonzero(const Rationals&, Rng& rng) {
  long num = rng.range(-6, 5);
  if (num >= 0) ++num;  // skip zero
  return Rat(num, rng.range(1, 4));
}

inline GFp random_elem(const PrimeField& k, Rng& rng) {
  return GFp(uint32_t(rng.below(k.p)), k.p);
}
inline GFp random_nonzero(const PrimeField& k, Rng& rng) {
  return GFp(uint32_t(1 + rng.below(k.p - 1)), k.p);
}

inline RatFunc random_elem(const RationalFunctions& k, Rng& rng) {
  return k.from_int(rng.range(-6, 6));
}
inline RatFunc random_nonzero(const RationalFunctions& k, Rng& rng) {
  return k.q_power(rng.range(-3, 3));
}

// Random invertible matrix by bounded rejection on the seeded stream.
template <class K>
Mat<K> random_invertible(const K& k, Rng& rng, int n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat<K> m = mat_zero(k, n, n);
    for (auto& e : m.a) e = random_elem(k, rng);
    if (is_invertible(k, m)) return m;
  }
  throw Error(Err::Internal, "no invertible sample after bounded retries");
}

}  // namespace bav
