#pragma once

#include <vector>

#include "bav/labelling.hpp"
#include "bav/rng.hpp"

namespace bav {

// Draw order is pinned (values in location order, then basis row-major) so a
// seed fully determines the output on every platform.

template <class K>
ValueFunction<K> random_value_function(const K& k, Rng& rng, int domain_diameter) {
  ValueFunction<K> vf{DeltaGrid(domain_diameter), {}};
  vf.values.reserve(size_t(vf.domain.size()));
  for (int i = 0; i < vf.domain.size(); ++i) vf.values.push_back(random_nonzero(k, rng));
  return vf;
}

template <class K>
EdgeLabelling<K> random_labelling(const K& k, Rng& rng, int N) {
  if (N < 2) return unit_labelling(k, N);
  return labelling_from_values(k, random_value_function(k, rng, N - 2));
}

template <class K>
std::vector<Vec<K>> random_boundary_basis(const K& k, Rng& rng, int N) {
  Mat<K> m = random_invertible(k, rng, N + 1);
  std::vector<Vec<K>> cols;
  cols.reserve(size_t(N) + 1);
  for (int j = 0; j <= N; ++j) {
    Vec<K> c = vec_zero(k, N + 1);
    for (int i = 0; i <= N; ++i) c[size_t(i)] = m.at(i, j);
    cols.push_back(std::move(c));
  }
  return cols;
}

template <class K>
ConcreteBilliardArray<K> random_cba(const K& k, Rng& rng, int N) {
  EdgeLabelling<K> el = random_labelling(k, rng, N);
  return reconstruct_cba(k, el, random_boundary_basis(k, rng, N));
}

}  // namespace bav
