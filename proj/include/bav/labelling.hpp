#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bav/billiard.hpp"
#include "bav/grid.hpp"
#include "bav/linalg.hpp"

namespace bav {

/*
 * Edge labellings on Delta_N: a nonzero scalar beta_{lambda,mu} per directed
 * edge with beta_{lambda,mu} beta_{mu,lambda} = 1 and product 1 around every
 * black clique. The scalar tables of concrete arrays are exactly these, and
 * the product around a white clique (clockwise) recovers the value function.
 */

template <class K>
struct EdgeLabelling {
  DeltaGrid grid;
  std::map<std::pair<int, int>, typename K::Elem> beta;  // by directed grid-index pair

  const typename K::Elem& at(int i, int j) const {
    auto it = beta.find({i, j});
    if (it == beta.end()) throw Error(Err::NotAdjacent, "no label for edge");
    return it->second;
  }
  const typename K::Elem& at(const Loc& a, const Loc& b) const {
    return at(grid.index(a), grid.index(b));
  }

  friend bool operator==(const EdgeLabelling& a, const EdgeLabelling& b) {
    return a.grid.N == b.grid.N && a.beta == b.beta;
  }
  friend bool operator!=(const EdgeLabelling& a, const EdgeLabelling& b) { return !(a == b); }
};

template <class K>
EdgeLabelling<K> make_edge_labelling(const K& k, const DeltaGrid& grid,
                                     std::map<std::pair<int, int>, typename K::Elem> beta) {
  EdgeLabelling<K> el{grid, std::move(beta)};
  int n = grid.size();
  for (int i = 0; i < n; ++i)
    for (int j : grid.neighbors(i)) {
      auto it = el.beta.find({i, j});
      if (it == el.beta.end()) throw Error(Err::ConstraintViolation, "missing edge label");
      if (it->second.is_zero()) throw Error(Err::ConstraintViolation, "zero edge label");
    }
  if (int(el.beta.size()) != [&] {
        int cnt = 0;
        for (int i = 0; i < n; ++i) cnt += int(grid.neighbors(i).size());
        return cnt;
      }())
    throw Error(Err::ConstraintViolation, "label on a non-edge");
  for (int i = 0; i < n; ++i)
    for (int j : grid.neighbors(i))
      if (!(el.at(i, j) * el.at(j, i) == k.one()))
        throw Error(Err::ConstraintViolation, "labels not reciprocal");
  for (const Clique& c : grid.cliques(false)) {
    int a = grid.index(c.locs[0]), b = grid.index(c.locs[1]), d = grid.index(c.locs[2]);
    if (!(el.at(a, b) * el.at(b, d) * el.at(d, a) == k.one()))
      throw Error(Err::ConstraintViolation, "black clique product is not 1");
  }
  return el;
}

template <class K>
EdgeLabelling<K> edge_labelling_from_cba(const K& k, const ConcreteBilliardArray<K>& cba) {
  TransitionTable<K> t = transition_scalars(k, cba);
  return make_edge_labelling(k, cba.grid, std::move(t.entry));
}

// 3x3 matrix of clique coefficients, unit diagonal. It has rank 1 exactly
// when the reciprocal and clique-product axioms hold on this clique.
template <class K>
Mat<K> coefficient_matrix(const K& k, const EdgeLabelling<K>& el, const Clique& c) {
  Mat<K> m = mat_identity(k, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) m.at(i, j) = el.at(c.locs[size_t(i)], c.locs[size_t(j)]);
  return m;
}

// Product of labels along a walk; a single vertex gives 1.
template <class K>
typename K::Elem walk_value(const K& k, const EdgeLabelling<K>& el, const std::vector<Loc>& walk) {
  if (walk.empty()) throw Error(Err::NotAWalk, "empty walk");
  typename K::Elem v = k.one();
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!el.grid.adjacent(walk[i], walk[i + 1])) throw Error(Err::NotAWalk, "step not an edge");
    v = v * el.at(walk[i], walk[i + 1]);
  }
  return v;
}

// Sum of walk values over all geodesics from a to b. Computed by the
// recursion gs(a,b) = sum over first steps, memoized; tests enumerate the
// geodesics directly as a cross-check.
template <class K>
class GeodesicSums {
 public:
  GeodesicSums(const K& k, const EdgeLabelling<K>& el) : k_(k), el_(el) {}

  typename K::Elem sum(const Loc& a, const Loc& b) {
    const DeltaGrid& g = el_.grid;
    auto key = std::make_pair(g.index(a), g.index(b));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    typename K::Elem v = k_.zero();
    if (a == b) {
      v = k_.one();
    } else {
      int d = DeltaGrid::distance(a, b);
      for (int ni : g.neighbors(g.index(a))) {
        const Loc& n = g.locations()[size_t(ni)];
        if (DeltaGrid::distance(n, b) == d - 1) v = v + el_.at(a, n) * sum(n, b);
      }
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  const K& k_;
  const EdgeLabelling<K>& el_;
  std::map<std::pair<int, int>, typename K::Elem> memo_;
};

template <class K>
typename K::Elem geodesic_sum(const K& k, const EdgeLabelling<K>& el, const Loc& a, const Loc& b) {
  return GeodesicSums<K>(k, el).sum(a, b);
}

template <class K>
ValueFunction<K> labelling_value_function(const K& k, const EdgeLabelling<K>& el) {
  if (el.grid.N < 2) throw Error(Err::DiameterTooSmall, "no white cliques below diameter 2");
  ValueFunction<K> vf{DeltaGrid(el.grid.N - 2), {}};
  vf.values.reserve(size_t(vf.domain.size()));
  for (const Clique& c : el.grid.cliques(true))
    vf.values.push_back(el.at(c.locs[0], c.locs[1]) * el.at(c.locs[1], c.locs[2]) *
                        el.at(c.locs[2], c.locs[0]));
  (void)k;
  return vf;
}

namespace detail {

template <class K>
std::vector<Vec<K>> check_boundary_seed(const K& k, const DeltaGrid& g,
                                        const std::vector<Vec<K>>& v) {
  if (int(v.size()) != g.N + 1) throw Error(Err::BadArgument, "need N+1 boundary vectors");
  for (const auto& u : v)
    if (int(u.size()) != g.N + 1) throw Error(Err::AmbientMismatch, "boundary vector length");
  (void)k;
  return v;
}

}  // namespace detail

/*
 * Rebuild a concrete array from a labelling and vectors v_0..v_N placed on
 * the boundary path from corner 2 to corner 3 (v_i at (0,N-i,i)):
 *
 *   B_(r,s,t) = (-1)^r * sum_{i=t}^{r+t} gs((r,s,t),(0,N-i,i)) v_i
 *
 * The result satisfies the array axioms exactly when the v_i are independent.
 */
template <class K>
ConcreteBilliardArray<K> reconstruct_cba(const K& k, const EdgeLabelling<K>& el,
                                         const std::vector<Vec<K>>& v) {
  const DeltaGrid& g = el.grid;
  detail::check_boundary_seed(k, g, v);
  GeodesicSums<K> gs(k, el);
  ConcreteBilliardArray<K> cba{g, std::vector<Vec<K>>(size_t(g.size()), vec_zero(k, g.N + 1))};
  for (const Loc& l : g.locations()) {
    Vec<K> acc = vec_zero(k, g.N + 1);
    for (int i = l.t; i <= l.r + l.t; ++i) {
      Loc li{0, g.N - i, i};
      acc = vec_add<K>(acc, vec_scale<K>(gs.sum(l, li), v[size_t(i)]));
    }
    if (l.r % 2 == 1) acc = vec_neg<K>(acc);
    cba.at(l) = std::move(acc);
  }
  return cba;
}

// Same array via the two-term recursion up the rows; agreement with the
// closed form above is a tested identity.
template <class K>
ConcreteBilliardArray<K> reconstruct_cba_recursive(const K& k, const EdgeLabelling<K>& el,
                                                   const std::vector<Vec<K>>& v) {
  const DeltaGrid& g = el.grid;
  detail::check_boundary_seed(k, g, v);
  ConcreteBilliardArray<K> cba{g, std::vector<Vec<K>>(size_t(g.size()), vec_zero(k, g.N + 1))};
  for (int t = 0; t <= g.N; ++t) cba.at(Loc{0, g.N - t, t}) = v[size_t(t)];
  for (int r = 1; r <= g.N; ++r)
    for (int s = 0; s + r <= g.N; ++s) {
      Loc l{r, s, g.N - r - s};
      Loc mu{r - 1, s + 1, l.t};
      Loc nu{r - 1, s, l.t + 1};
      Vec<K> a = vec_scale<K>(el.at(l, mu), cba.at(mu));
      Vec<K> b = vec_scale<K>(el.at(l, nu), cba.at(nu));
      cba.at(l) = vec_neg<K>(vec_add<K>(a, b));
    }
  return cba;
}

/*
 * Orientation and enclosure for simple cycles, in the planar embedding
 * (x,y) = (s,r). Clockwise means negative doubled signed area. Enclosure of
 * a white clique is decided by casting a horizontal ray from its centroid;
 * with coordinates tripled the centroid lands at (3s+2, 3r+2) while cycle
 * vertices sit on multiples of 3, so the ray never meets a vertex and the
 * centroid never lies on the cycle.
 */
inline int cycle_orientation(const std::vector<Loc>& cycle) {
  int64_t a2 = DeltaGrid::cycle_doubled_area(cycle);
  if (a2 == 0) throw Error(Err::BadArgument, "degenerate cycle");
  return a2 < 0 ? 1 : -1;  // +1 means clockwise
}

inline bool point_in_cycle(const std::vector<Loc>& cycle, int64_t cx3, int64_t cy3) {
  size_t n = cycle.size();
  int crossings = 0;
  for (size_t i = 0; i < n; ++i) {
    auto [xa, ya] = DeltaGrid::embed(cycle[i]);
    auto [xb, yb] = DeltaGrid::embed(cycle[(i + 1) % n]);
    int64_t x1 = 3 * int64_t(xa), y1 = 3 * int64_t(ya);
    int64_t x2 = 3 * int64_t(xb), y2 = 3 * int64_t(yb);
    if ((y1 > cy3) == (y2 > cy3)) continue;
    // intersection x = x1 + (cy3-y1)(x2-x1)/(y2-y1); compare against cx3
    int64_t lhs = (x1 - cx3) * (y2 - y1) + (cy3 - y1) * (x2 - x1);
    if (y2 - y1 < 0) lhs = -lhs;
    if (lhs > 0) ++crossings;
  }
  return crossings % 2 == 1;
}

inline std::vector<Clique> enclosed_white_cliques(const DeltaGrid& g,
                                                  const std::vector<Loc>& cycle) {
  std::vector<Clique> out;
  for (const Clique& c : g.cliques(true)) {
    int64_t cx3 = 3 * int64_t(c.base.s) + 2;
    int64_t cy3 = 3 * int64_t(c.base.r) + 2;
    if (point_in_cycle(cycle, cx3, cy3)) out.push_back(c);
  }
  return out;
}

// The labelling with every label 1; valid on any diameter.
template <class K>
EdgeLabelling<K> unit_labelling(const K& k, int N) {
  DeltaGrid g(N);
  std::map<std::pair<int, int>, typename K::Elem> beta;
  for (int i = 0; i < g.size(); ++i)
    for (int j : g.neighbors(i)) beta[{i, j}] = k.one();
  return make_edge_labelling(k, g, std::move(beta));
}

/*
 * Free construction: a value function psi on Delta_{N-2} plus arbitrary
 * nonzero values on a chosen spanning tree determine a unique labelling.
 * Each non-tree edge closes a simple cycle with the tree; its label is fixed
 * by requiring the cycle's value to equal the product of the enclosed white
 * values, oriented clockwise.
 */
template <class K>
EdgeLabelling<K> labelling_from_values(
    const K& k, const ValueFunction<K>& psi, const std::vector<std::pair<Loc, Loc>>& tree,
    const std::map<std::pair<int, int>, typename K::Elem>* tree_values = nullptr) {
  int N = psi.domain.N + 2;
  DeltaGrid g(N);
  if (N < 2) throw Error(Err::DiameterTooSmall, "need diameter >= 2");
  for (const auto& x : psi.values)
    if (x.is_zero()) throw Error(Err::ConstraintViolation, "value function must be nonzero");
  if (!is_spanning_tree(g, tree)) throw Error(Err::NotASpanningTree, "bad tree edge set");
  std::map<std::pair<int, int>, typename K::Elem> beta;
  for (const auto& [a, b] : tree) {
    int ia = g.index(a), ib = g.index(b);
    typename K::Elem v = k.one();
    if (tree_values) {
      auto it = tree_values->find({ia, ib});
      auto rit = tree_values->find({ib, ia});
      if (it != tree_values->end() && rit != tree_values->end()) {
        if (!(it->second * rit->second == k.one()))
          throw Error(Err::InconsistentTreeValues, "both directions given, not reciprocal");
        v = it->second;
      } else if (it != tree_values->end()) {
        v = it->second;
      } else if (rit != tree_values->end()) {
        if (rit->second.is_zero()) throw Error(Err::InconsistentTreeValues, "zero tree value");
        v = k.one() / rit->second;
      }
      if (v.is_zero()) throw Error(Err::InconsistentTreeValues, "zero tree value");
    }
    beta[{ia, ib}] = v;
    beta[{ib, ia}] = k.one() / v;
  }
  if (tree_values)
    for (const auto& [key, val] : *tree_values) {
      (void)val;
      if (beta.find(key) == beta.end())
        throw Error(Err::InconsistentTreeValues, "value on a non-tree edge");
    }
  for (int i = 0; i < g.size(); ++i) {
    const Loc& lam = g.locations()[size_t(i)];
    for (int j : g.neighbors(i)) {
      if (j < i || beta.count({i, j})) continue;
      const Loc& mu = g.locations()[size_t(j)];
      std::vector<Loc> path = tree_path(g, tree, mu, lam);  // mu = path[0], lam = path[n-1]
      std::vector<Loc> cycle;
      cycle.push_back(lam);
      for (size_t p = 0; p + 1 < path.size(); ++p) cycle.push_back(path[p]);
      int eps = cycle_orientation(cycle);
      typename K::Elem c = k.one();
      for (const Clique& w : enclosed_white_cliques(g, cycle)) c = c * psi.at(w.base);
      typename K::Elem d = k.one();
      for (size_t p = 0; p + 1 < path.size(); ++p)
        d = d * beta.at({g.index(path[p]), g.index(path[p + 1])});
      typename K::Elem ceps = eps == 1 ? c : k.one() / c;
      typename K::Elem blm = ceps / d;
      beta[{i, j}] = blm;
      beta[{j, i}] = k.one() / blm;
    }
  }
  return make_edge_labelling(k, g, std::move(beta));
}

template <class K>
EdgeLabelling<K> labelling_from_values(
    const K& k, const ValueFunction<K>& psi,
    const std::map<std::pair<int, int>, typename K::Elem>* tree_values = nullptr) {
  DeltaGrid g(psi.domain.N + 2);
  return labelling_from_values(k, psi, g.canonical_spanning_tree(), tree_values);
}

// Similarity of labellings: beta'_{lambda,mu} = beta_{lambda,mu} k_mu / k_lambda
// for some nonzero k. Witness built from walk-value ratios along tree paths
// from the poset root, then checked on every edge.
template <class K>
std::optional<std::vector<typename K::Elem>> are_similar_labellings(const K& k,
                                                                    const EdgeLabelling<K>& a,
                                                                    const EdgeLabelling<K>& b) {
  if (a.grid.N != b.grid.N) return std::nullopt;
  const DeltaGrid& g = a.grid;
  auto tree = g.canonical_spanning_tree();
  Loc root{0, 0, g.N};
  std::vector<typename K::Elem> kappa;
  kappa.reserve(size_t(g.size()));
  for (const Loc& l : g.locations()) {
    std::vector<Loc> path = tree_path(g, tree, root, l);
    kappa.push_back(walk_value(k, b, path) / walk_value(k, a, path));
  }
  for (int i = 0; i < g.size(); ++i)
    for (int j : g.neighbors(i))
      if (!(b.at(i, j) == a.at(i, j) * kappa[size_t(j)] / kappa[size_t(i)])) return std::nullopt;
  return kappa;
}

}  // namespace bav
