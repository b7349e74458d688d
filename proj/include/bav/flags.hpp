#pragma once

#include <vector>

#include "bav/linalg.hpp"

namespace bav {

// Flag on F^(N+1): U_0 < U_1 < ... < U_N with dim U_i = i+1, U_N the whole
// space. Components are stored explicitly in canonical echelon form.
template <class K>
struct Flag {
  int N = 0;
  std::vector<Subspace<K>> U;

  int ambient() const { return N + 1; }

  friend bool operator==(const Flag& a, const Flag& b) { return a.N == b.N && a.U == b.U; }
  friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }
};

template <class K>
Flag<K> make_flag(const K& k, std::vector<Subspace<K>> components) {
  if (components.empty()) throw Error(Err::AmbientMismatch, "empty flag");
  int N = int(components.size()) - 1;
  for (int i = 0; i <= N; ++i) {
    if (components[size_t(i)].ambient != N + 1)
      throw Error(Err::AmbientMismatch, "flag component ambient mismatch");
    if (components[size_t(i)].dim() != i + 1)
      throw Error(Err::AmbientMismatch, "flag component dimension mismatch");
    if (i > 0 && !subspace_leq(k, components[size_t(i - 1)], components[size_t(i)]))
      throw Error(Err::AmbientMismatch, "flag components not nested");
  }
  Flag<K> f;
  f.N = N;
  f.U = std::move(components);
  return f;
}

// Induced flag of an ordered decomposition into lines: U_i = V_0 + ... + V_i.
template <class K>
Flag<K> flag_from_decomposition(const K& k, const std::vector<Subspace<K>>& parts) {
  if (parts.empty()) throw Error(Err::NotADecomposition, "empty decomposition");
  int n = parts.front().ambient;
  if (int(parts.size()) != n) throw Error(Err::NotADecomposition, "part count != ambient dimension");
  for (const auto& p : parts)
    if (p.dim() != 1 || p.ambient != n)
      throw Error(Err::NotADecomposition, "parts must be lines of the ambient space");
  if (!is_direct_sum(k, parts)) throw Error(Err::NotADecomposition, "sum of parts not direct");
  std::vector<Subspace<K>> comps;
  Subspace<K> acc = parts.front();
  comps.push_back(acc);
  for (size_t i = 1; i < parts.size(); ++i) {
    acc = subspace_sum(k, acc, parts[i]);
    comps.push_back(acc);
  }
  return make_flag(k, std::move(comps));
}

template <class K>
struct FlagTriple {
  Flag<K> f1, f2, f3;

  friend bool operator==(const FlagTriple& a, const FlagTriple& b) {
    return a.f1 == b.f1 && a.f2 == b.f2 && a.f3 == b.f3;
  }
  friend bool operator!=(const FlagTriple& a, const FlagTriple& b) { return !(a == b); }
};

// Opposite: U_i cap U'_j = 0 whenever i+j < N. Nesting makes the antidiagonal
// i+j = N-1 decisive, so only that band is computed.
template <class K>
bool are_opposite(const K& k, const Flag<K>& f, const Flag<K>& g) {
  if (f.N != g.N) throw Error(Err::AmbientMismatch, "flag diameter mismatch");
  for (int i = 0; i + 1 <= f.N; ++i) {
    int j = f.N - 1 - i;
    if (subspace_intersect(k, f.U[size_t(i)], g.U[size_t(j)]).dim() != 0) return false;
  }
  return true;
}

template <class K>
Subspace<K> triple_intersection(const K& k, const FlagTriple<K>& t, int r, int s, int t3) {
  int N = t.f1.N;
  return subspace_intersect(
      k, t.f1.U[size_t(N - r)],
      subspace_intersect(k, t.f2.U[size_t(N - s)], t.f3.U[size_t(N - t3)]));
}

// Totally opposite: the triple intersection at (r,s,t) vanishes for all
// r+s+t > N. The shell r+s+t = N+1 is decisive by nesting.
template <class K>
bool are_totally_opposite(const K& k, const FlagTriple<K>& t) {
  int N = t.f1.N;
  if (t.f2.N != N || t.f3.N != N) throw Error(Err::AmbientMismatch, "flag diameter mismatch");
  for (int r = 0; r <= N; ++r)
    for (int s = 0; s <= N; ++s) {
      int u = N + 1 - r - s;
      if (u < 0 || u > N) continue;
      if (triple_intersection(k, t, r, s, u).dim() != 0) return false;
    }
  return true;
}

}  // namespace bav
