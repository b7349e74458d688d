#pragma once

#include <array>
#include <map>
#include <vector>

#include "bav/billiard.hpp"
#include "bav/fields.hpp"

namespace bav {

// Sparse trivariate polynomials, used only to build the two named families.
template <class K>
struct TriPoly {
  std::map<std::array<int, 3>, typename K::Elem> terms;  // exponents (a,b,c) -> coeff
};

template <class K>
TriPoly<K> tp_term(const typename K::Elem& c, int a, int b, int d) {
  TriPoly<K> p;
  if (!c.is_zero()) p.terms[{a, b, d}] = c;
  return p;
}

template <class K>
TriPoly<K> tp_add(const TriPoly<K>& x, const TriPoly<K>& y) {
  TriPoly<K> out = x;
  for (const auto& [e, c] : y.terms) {
    auto it = out.terms.find(e);
    if (it == out.terms.end()) {
      out.terms[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

template <class K>
TriPoly<K> tp_mul(const K& k, const TriPoly<K>& x, const TriPoly<K>& y) {
  TriPoly<K> out;
  for (const auto& [ex, cx] : x.terms)
    for (const auto& [ey, cy] : y.terms) {
      std::array<int, 3> e{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]};
      auto it = out.terms.find(e);
      if (it == out.terms.end())
        out.terms[e] = cx * cy;
      else
        it->second += cx * cy;
    }
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
  (void)k;
  return out;
}

namespace detail {

// Express each polynomial in the basis formed by the boundary path from
// corner 2 to corner 3, giving coordinate vectors in F^(N+1).
template <class K>
ConcreteBilliardArray<K> tripoly_to_cba(const K& k, const DeltaGrid& g,
                                        const std::vector<TriPoly<K>>& polys) {
  std::map<std::array<int, 3>, int> mono;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms) {
      (void)c;
      mono.emplace(e, 0);
    }
  int row = 0;
  for (auto& [e, idx] : mono) {
    (void)e;
    idx = row++;
  }
  int n = g.N + 1;
  auto path = g.corner_path(2, 3);
  Mat<K> A = mat_zero(k, row, n);
  for (int j = 0; j < n; ++j)
    for (const auto& [e, c] : polys[size_t(g.index(path[size_t(j)]))].terms)
      A.at(mono.at(e), j) = c;
  ConcreteBilliardArray<K> cba{g, {}};
  cba.vecs.reserve(polys.size());
  for (const auto& p : polys) {
    Vec<K> rhs = vec_zero(k, row);
    for (const auto& [e, c] : p.terms) rhs[size_t(mono.at(e))] = c;
    auto sol = solve(k, A, rhs);
    if (!sol) throw Error(Err::Internal, "family polynomial escapes the boundary span");
    cba.vecs.push_back(std::move(*sol));
  }
  return cba;
}

}  // namespace detail

/*
 * Polynomial family: location (r,s,t) carries (x-y)^r (y-z)^s (z-x)^t. Black
 * sums vanish identically, so the whole scalar table is 1 and the value
 * function is constantly 1. Needs characteristic 0 or > N.
 */
template <class K>
ConcreteBilliardArray<K> poly_family_cba(const K& k, int N) {
  if (k.characteristic() != 0 && k.characteristic() <= N)
    throw Error(Err::BadCharacteristic, "need characteristic 0 or above the diameter");
  DeltaGrid g(N);
  TriPoly<K> xy = tp_add(tp_term<K>(k.one(), 1, 0, 0), tp_term<K>(-k.one(), 0, 1, 0));
  TriPoly<K> yz = tp_add(tp_term<K>(k.one(), 0, 1, 0), tp_term<K>(-k.one(), 0, 0, 1));
  TriPoly<K> zx = tp_add(tp_term<K>(k.one(), 0, 0, 1), tp_term<K>(-k.one(), 1, 0, 0));
  std::vector<TriPoly<K>> polys;
  polys.reserve(size_t(g.size()));
  for (const Loc& l : g.locations()) {
    TriPoly<K> p = tp_term<K>(k.one(), 0, 0, 0);
    for (int i = 0; i < l.r; ++i) p = tp_mul(k, p, xy);
    for (int i = 0; i < l.s; ++i) p = tp_mul(k, p, yz);
    for (int i = 0; i < l.t; ++i) p = tp_mul(k, p, zx);
    polys.push_back(std::move(p));
  }
  return detail::tripoly_to_cba(k, g, polys);
}

/*
 * q-Pochhammer family: location (r,s,t) carries
 *   (x xbar, y; q)_r (y ybar, z; q)_s (z zbar, x; q)_t
 * where (a,b;q)_n = (a-b)(a-bq)...(a-bq^(n-1)) and xbar ybar zbar = q^(N-1).
 * Its value function is constantly q.
 */
template <class K>
ConcreteBilliardArray<K> q_family_cba(const K& k, int N, const typename K::Elem& q,
                                      const typename K::Elem& xbar,
                                      const typename K::Elem& ybar,
                                      const typename K::Elem& zbar) {
  if (q.is_zero() || q == k.one()) throw Error(Err::BadQ, "q must differ from 0 and 1");
  typename K::Elem qpow = k.one();
  for (int i = 0; i < N - 1; ++i) qpow = qpow * q;
  if (!(xbar * ybar * zbar == qpow))
    throw Error(Err::ConstraintViolation, "xbar*ybar*zbar must equal q^(N-1)");
  DeltaGrid g(N);
  std::vector<TriPoly<K>> polys;
  polys.reserve(size_t(g.size()));
  for (const Loc& l : g.locations()) {
    TriPoly<K> p = tp_term<K>(k.one(), 0, 0, 0);
    typename K::Elem qj = k.one();
    for (int j = 0; j < l.r; ++j, qj = qj * q)
      p = tp_mul(k, p, tp_add(tp_term<K>(xbar, 1, 0, 0), tp_term<K>(-qj, 0, 1, 0)));
    qj = k.one();
    for (int j = 0; j < l.s; ++j, qj = qj * q)
      p = tp_mul(k, p, tp_add(tp_term<K>(ybar, 0, 1, 0), tp_term<K>(-qj, 0, 0, 1)));
    qj = k.one();
    for (int j = 0; j < l.t; ++j, qj = qj * q)
      p = tp_mul(k, p, tp_add(tp_term<K>(zbar, 0, 0, 1), tp_term<K>(-qj, 1, 0, 0)));
    polys.push_back(std::move(p));
  }
  return detail::tripoly_to_cba(k, g, polys);
}

// Default instance over Q(q): xbar = ybar = 1, zbar = q^(N-1).
inline ConcreteBilliardArray<RationalFunctions> q_family_cba(const RationalFunctions& k, int N) {
  return q_family_cba<RationalFunctions>(k, N, k.q(), k.one(), k.one(), k.q_power(N - 1));
}

}  // namespace bav
