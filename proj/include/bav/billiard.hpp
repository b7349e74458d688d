#pragma once

#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bav/flags.hpp"
#include "bav/grid.hpp"
#include "bav/linalg.hpp"

namespace bav {

/*
 * Billiard Arrays on Delta_N over F^(N+1).
 *
 * Concrete arrays assign a nonzero vector to each location; lines must be
 * linearly independent and black 3-cliques linearly dependent. Abstract
 * arrays keep only the 1-dimensional cells; each cell is held by its
 * canonical generator (first nonzero coordinate 1), so equal arrays compare
 * equal componentwise.
 */

template <class K>
struct ConcreteBilliardArray {
  DeltaGrid grid;
  std::vector<Vec<K>> vecs;  // by grid index, each of length N+1

  const Vec<K>& at(const Loc& l) const { return vecs[size_t(grid.index(l))]; }
  Vec<K>& at(const Loc& l) { return vecs[size_t(grid.index(l))]; }
  int ambient() const { return grid.N + 1; }
};

template <class K>
struct BilliardArray {
  DeltaGrid grid;
  std::vector<Vec<K>> gens;  // canonical generators, by grid index

  const Vec<K>& gen(const Loc& l) const { return gens[size_t(grid.index(l))]; }
  int ambient() const { return grid.N + 1; }

  friend bool operator==(const BilliardArray& a, const BilliardArray& b) {
    return a.grid.N == b.grid.N && a.gens == b.gens;
  }
  friend bool operator!=(const BilliardArray& a, const BilliardArray& b) { return !(a == b); }
};

template <class K>
Subspace<K> cell(const K& k, const BilliardArray<K>& ba, const Loc& l) {
  return line_of(k, ba.gen(l));
}

template <class K>
int first_nonzero(const Vec<K>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return int(i);
  return -1;
}

template <class K>
Vec<K> normalized_generator(const K& k, const Vec<K>& v) {
  int p = first_nonzero<K>(v);
  if (p < 0) throw Error(Err::ZeroVector, "cannot normalize zero vector");
  return vec_scale<K>(k.one() / v[size_t(p)], v);
}

struct Violation {
  std::string kind;  // "zero-vector" | "line-dependent" | "black-clique-independent"
  std::vector<Loc> where;
};

namespace detail {

template <class K>
bool line_ok(const K& k, const ConcreteBilliardArray<K>& cba, const std::vector<Loc>& line) {
  std::vector<Vec<K>> rows;
  rows.reserve(line.size());
  for (const Loc& l : line) rows.push_back(cba.at(l));
  return rank(k, mat_from_rows(k, cba.ambient(), rows)) == int(line.size());
}

template <class K>
bool black_clique_ok(const K& k, const ConcreteBilliardArray<K>& cba, const Clique& c) {
  std::vector<Vec<K>> rows{cba.at(c.locs[0]), cba.at(c.locs[1]), cba.at(c.locs[2])};
  return rank(k, mat_from_rows(k, cba.ambient(), rows)) <= 2;
}

/*
 * Rational-function fast paths. Elimination over Q(q) is dominated by
 * polynomial gcds, so independence is certified by specializing q at a
 * rational point (specialization never raises the rank: full rank at any
 * valid point settles it), and dependence is settled by a division-free
 * Cramer identity. Inconclusive evaluations fall back to exact elimination,
 * so the results stay exact.
 */

inline std::optional<Rat> eval_at(const RatFunc& f, const Rat& c) {
  auto horner = [&](const Poly& p) {
    Rat acc(0);
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * c + p.c[i];
    return acc;
  };
  Rat d = horner(f.den);
  if (d.is_zero()) return std::nullopt;
  return horner(f.num) / d;
}

inline bool line_ok(const RationalFunctions& k, const ConcreteBilliardArray<RationalFunctions>& cba,
                    const std::vector<Loc>& line) {
  Rationals kq;
  for (long ci : {2, 3, 5, -2, 7}) {
    Rat c(ci);
    Mat<Rationals> m = mat_zero(kq, int(line.size()), cba.ambient());
    bool defined = true;
    for (size_t i = 0; i < line.size() && defined; ++i) {
      const Vec<RationalFunctions>& v = cba.at(line[i]);
      for (int j = 0; j < cba.ambient(); ++j) {
        auto e = eval_at(v[size_t(j)], c);
        if (!e) {
          defined = false;
          break;
        }
        m.at(int(i), j) = *e;
      }
    }
    if (defined && rank(kq, m) == int(line.size())) return true;
  }
  std::vector<Vec<RationalFunctions>> rows;
  rows.reserve(line.size());
  for (const Loc& l : line) rows.push_back(cba.at(l));
  return rank(k, mat_from_rows(k, cba.ambient(), rows)) == int(line.size());
}

inline bool black_clique_ok(const RationalFunctions&,
                            const ConcreteBilliardArray<RationalFunctions>& cba, const Clique& c) {
  const Vec<RationalFunctions>& u = cba.at(c.locs[0]);
  const Vec<RationalFunctions>& v = cba.at(c.locs[1]);
  const Vec<RationalFunctions>& w = cba.at(c.locs[2]);
  int n = cba.ambient();
  int pi = -1, pj = -1;
  RatFunc m;
  for (int i = 0; i < n && pi < 0; ++i)
    for (int j = i + 1; j < n; ++j) {
      m = u[size_t(i)] * v[size_t(j)] - u[size_t(j)] * v[size_t(i)];
      if (!m.is_zero()) {
        pi = i;
        pj = j;
        break;
      }
    }
  if (pi < 0) return true;  // u and v are parallel, so a dependency exists
  RatFunc a = w[size_t(pi)] * v[size_t(pj)] - w[size_t(pj)] * v[size_t(pi)];
  RatFunc b = u[size_t(pi)] * w[size_t(pj)] - u[size_t(pj)] * w[size_t(pi)];
  for (int l = 0; l < n; ++l)
    if (!(m * w[size_t(l)] == a * u[size_t(l)] + b * v[size_t(l)])) return false;
  return true;
}

template <class F>
std::vector<bool> run_checks(const std::vector<F>& checks, int threads) {
  std::vector<bool> ok(checks.size());
  if (threads <= 1 || checks.size() < 2) {
    for (size_t i = 0; i < checks.size(); ++i) ok[i] = checks[i]();
    return ok;
  }
  int nthreads = std::min<int>(threads, int(checks.size()));
  std::vector<std::future<void>> futs;
  std::vector<char> res(checks.size());
  for (int w = 0; w < nthreads; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (size_t i = size_t(w); i < checks.size(); i += size_t(nthreads))
        res[i] = checks[i]() ? 1 : 0;
    }));
  }
  for (auto& f : futs) f.get();
  for (size_t i = 0; i < checks.size(); ++i) ok[i] = res[i] != 0;
  return ok;
}

}  // namespace detail

// Axiom check; empty result means valid. Checks are independent, so they can
// fan out over threads; the violation order stays deterministic.
template <class K>
std::vector<Violation> verify_concrete(const K& k, const ConcreteBilliardArray<K>& cba,
                                       int threads = 1) {
  std::vector<Violation> out;
  for (const Loc& l : cba.grid.locations())
    if (vec_is_zero<K>(cba.at(l))) out.push_back({"zero-vector", {l}});

  std::vector<std::vector<Loc>> line_list;
  for (int eta = 1; eta <= 3; ++eta)
    for (auto& line : cba.grid.lines(eta)) line_list.push_back(line);
  std::vector<Clique> clique_list = cba.grid.cliques(false);

  std::vector<std::function<bool()>> checks;
  for (const auto& line : line_list)
    checks.push_back([&k, &cba, &line] { return detail::line_ok(k, cba, line); });
  for (const auto& c : clique_list)
    checks.push_back([&k, &cba, &c] { return detail::black_clique_ok(k, cba, c); });
  std::vector<bool> ok = detail::run_checks(checks, threads);

  for (size_t i = 0; i < line_list.size(); ++i)
    if (!ok[i]) out.push_back({"line-dependent", line_list[i]});
  for (size_t i = 0; i < clique_list.size(); ++i)
    if (!ok[line_list.size() + i])
      out.push_back({"black-clique-independent",
                     {clique_list[i].locs[0], clique_list[i].locs[1], clique_list[i].locs[2]}});
  return out;
}

template <class K>
std::vector<Violation> verify_billiard(const K& k, const BilliardArray<K>& ba, int threads = 1) {
  ConcreteBilliardArray<K> cba{ba.grid, ba.gens};
  return verify_concrete(k, cba, threads);
}

template <class K>
BilliardArray<K> billiard_from_concrete(const K& k, const ConcreteBilliardArray<K>& cba) {
  BilliardArray<K> ba{cba.grid, {}};
  ba.gens.reserve(cba.vecs.size());
  for (const auto& v : cba.vecs) {
    if (vec_is_zero<K>(v)) throw Error(Err::InvalidArray, "zero vector in concrete array");
    ba.gens.push_back(normalized_generator(k, v));
  }
  return ba;
}

// Lift with chosen scales (all nonzero); default lift takes the canonical
// generators themselves.
template <class K>
ConcreteBilliardArray<K> concrete_from_billiard(
    const K& k, const BilliardArray<K>& ba,
    const std::vector<typename K::Elem>* scales = nullptr) {
  ConcreteBilliardArray<K> cba{ba.grid, {}};
  cba.vecs.reserve(ba.gens.size());
  for (size_t i = 0; i < ba.gens.size(); ++i) {
    if (scales) {
      const auto& c = (*scales)[i];
      if (c.is_zero()) throw Error(Err::InvalidArray, "zero scale");
      cba.vecs.push_back(vec_scale<K>(c, ba.gens[i]));
    } else {
      cba.vecs.push_back(ba.gens[i]);
    }
  }
  (void)k;
  return cba;
}

// Extension to the poset: B_mu = sum of cells over the upset of mu in Delta_N.
template <class K>
Subspace<K> extend(const K& k, const BilliardArray<K>& ba, const Loc& mu) {
  if (!ba.grid.in_poset(mu)) throw Error(Err::OutOfPoset, mu.str());
  std::vector<Vec<K>> rows;
  for (const Loc& l : ba.grid.upset(mu)) rows.push_back(ba.gen(l));
  return span(k, ba.ambient(), rows);
}

// B-flag [eta]: component n is spanned by the balls within distance n of the
// eta-corner, i.e. the extension at the eta-corner of Delta_{N-n}.
template <class K>
Flag<K> b_flag(const K& k, const BilliardArray<K>& ba, int eta) {
  std::vector<Subspace<K>> comps;
  for (int n = 0; n <= ba.grid.N; ++n)
    comps.push_back(extend(k, ba, unit_loc(eta, ba.grid.N - n)));
  return make_flag(k, std::move(comps));
}

// B-decomposition [eta,xi]: cells along the boundary path [eta,xi].
template <class K>
std::vector<Subspace<K>> b_decomposition(const K& k, const BilliardArray<K>& ba, int eta, int xi) {
  std::vector<Subspace<K>> out;
  for (const Loc& l : ba.grid.corner_path(eta, xi)) out.push_back(cell(k, ba, l));
  return out;
}

template <class K>
std::vector<Vec<K>> b_basis(const K& k, const ConcreteBilliardArray<K>& cba, int eta, int xi) {
  (void)k;
  std::vector<Vec<K>> out;
  for (const Loc& l : cba.grid.corner_path(eta, xi)) out.push_back(cba.at(l));
  return out;
}

template <class K>
FlagTriple<K> flags_from_billiard(const K& k, const BilliardArray<K>& ba) {
  return FlagTriple<K>{b_flag(k, ba, 1), b_flag(k, ba, 2), b_flag(k, ba, 3)};
}

// Inverse direction of the bijection: cells are the deep triple
// intersections of a totally opposite flag triple.
template <class K>
BilliardArray<K> billiard_from_flags(const K& k, const FlagTriple<K>& t) {
  if (!are_totally_opposite(k, t)) throw Error(Err::NotTotallyOpposite, "flag triple");
  int N = t.f1.N;
  DeltaGrid grid(N);
  BilliardArray<K> ba{grid, {}};
  ba.gens.reserve(size_t(grid.size()));
  for (const Loc& l : grid.locations()) {
    Subspace<K> s = triple_intersection(k, t, l.r, l.s, l.t);
    if (s.dim() != 1) throw Error(Err::NotTotallyOpposite, "triple intersection not a line at " + l.str());
    ba.gens.push_back(s.basis.row(0));
  }
  return ba;
}

// Abrace on a black clique: vectors u,v,w in the three cells, not all zero,
// u+v+w = 0. Unique once one nonzero member is fixed.
template <class K>
struct Abrace {
  Clique clique;
  Vec<K> u, v, w;
};

namespace detail {

// Solve u + x*g1 + y*g2 = 0 for scalars (x, y).
template <class K>
std::pair<typename K::Elem, typename K::Elem> dependency_coeffs(const K& k, const Vec<K>& u,
                                                                const Vec<K>& g1,
                                                                const Vec<K>& g2) {
  int n = int(u.size());
  Mat<K> A = mat_zero(k, n, 2);
  for (int i = 0; i < n; ++i) {
    A.at(i, 0) = g1[size_t(i)];
    A.at(i, 1) = g2[size_t(i)];
  }
  auto sol = solve(k, A, vec_neg<K>(u));
  if (!sol) throw Error(Err::InvalidArray, "black clique carries no dependency");
  return {(*sol)[0], (*sol)[1]};
}

template <class K>
void require_in_cell(const K& k, const BilliardArray<K>& ba, const Loc& l, const Vec<K>& u) {
  if (int(u.size()) != ba.ambient()) throw Error(Err::AmbientMismatch, "vector length");
  if (!subspace_contains(k, cell(k, ba, l), u))
    throw Error(Err::NotInSubspace, "vector not in cell at " + l.str());
}

}  // namespace detail

template <class K>
Abrace<K> abrace_through(const K& k, const BilliardArray<K>& ba, const Clique& clique,
                         const Vec<K>& u) {
  if (clique.white) throw Error(Err::BadArgument, "abrace requires a black clique");
  if (vec_is_zero<K>(u)) throw Error(Err::ZeroVector, "abrace seed is zero");
  detail::require_in_cell(k, ba, clique.locs[0], u);
  auto [b, c] = detail::dependency_coeffs(k, u, ba.gen(clique.locs[1]), ba.gen(clique.locs[2]));
  return Abrace<K>{clique, u, vec_scale<K>(b, ba.gen(clique.locs[1])),
                   vec_scale<K>(c, ba.gen(clique.locs[2]))};
}

// Transition map between adjacent cells: u in B_lambda maps to the partner v
// in B_mu of the brace through u on the completing black clique.
template <class K>
Vec<K> transition_apply(const K& k, const BilliardArray<K>& ba, const Loc& lambda, const Loc& mu,
                        const Vec<K>& u) {
  Clique c = ba.grid.black_clique_of_edge(lambda, mu);  // throws NotAdjacent
  detail::require_in_cell(k, ba, lambda, u);
  if (vec_is_zero<K>(u)) return vec_zero(k, ba.ambient());
  int nu_pos = 0;
  for (int i = 0; i < 3; ++i)
    if (c.locs[size_t(i)] != lambda && c.locs[size_t(i)] != mu) nu_pos = i;
  auto [x, y] = detail::dependency_coeffs(k, u, ba.gen(mu), ba.gen(c.locs[size_t(nu_pos)]));
  (void)y;
  return vec_scale<K>(x, ba.gen(mu));
}

// Off-grid convention used by the module formulas: the map is zero.
template <class K>
Vec<K> transition_apply_or_zero(const K& k, const BilliardArray<K>& ba, const Loc& lambda,
                                const Loc& mu, const Vec<K>& u) {
  if (!ba.grid.contains(lambda) || !ba.grid.contains(mu)) return vec_zero(k, ba.ambient());
  return transition_apply(k, ba, lambda, mu, u);
}

// Scalar table of a concrete array: entries defined by the dependency
// a*B_lambda + b*B_mu + c*B_nu = 0 on each black clique, via the six ratios.
template <class K>
struct TransitionTable {
  std::map<std::pair<int, int>, typename K::Elem> entry;  // directed edge by grid index

  const typename K::Elem& at(int i, int j) const {
    auto it = entry.find({i, j});
    if (it == entry.end()) throw Error(Err::NotAdjacent, "no transition entry");
    return it->second;
  }
};

template <class K>
TransitionTable<K> transition_scalars(const K& k, const ConcreteBilliardArray<K>& cba) {
  TransitionTable<K> table;
  const DeltaGrid& g = cba.grid;
  for (const Clique& c : g.cliques(false)) {
    Mat<K> m = mat_from_rows(k, cba.ambient(),
                             {cba.at(c.locs[0]), cba.at(c.locs[1]), cba.at(c.locs[2])});
    Mat<K> ker = kernel(k, mat_transpose(k, m));
    if (ker.rows != 1) throw Error(Err::InvalidArray, "black clique dependency not unique");
    auto a = ker.at(0, 0), b = ker.at(0, 1), cc = ker.at(0, 2);
    if (a.is_zero() || b.is_zero() || cc.is_zero())
      throw Error(Err::InvalidArray, "degenerate black clique dependency");
    int il = g.index(c.locs[0]), im = g.index(c.locs[1]), in = g.index(c.locs[2]);
    table.entry[{il, im}] = b / a;
    table.entry[{im, in}] = cc / b;
    table.entry[{in, il}] = a / cc;
    table.entry[{im, il}] = a / b;
    table.entry[{in, im}] = b / cc;
    table.entry[{il, in}] = cc / a;
  }
  return table;
}

// Value function on Delta_{N-2}: nonzero scalars, one per white clique.
template <class K>
struct ValueFunction {
  DeltaGrid domain;  // Delta_{N-2}
  std::vector<typename K::Elem> values;

  const typename K::Elem& at(const Loc& l) const { return values[size_t(domain.index(l))]; }

  friend bool operator==(const ValueFunction& a, const ValueFunction& b) {
    return a.domain.N == b.domain.N && a.values == b.values;
  }
  friend bool operator!=(const ValueFunction& a, const ValueFunction& b) { return !(a == b); }
};

template <class K>
ValueFunction<K> constant_value_function(const K& k, int domain_diameter,
                                         const typename K::Elem& v) {
  if (v.is_zero()) throw Error(Err::BadArgument, "value functions are nonzero");
  ValueFunction<K> vf{DeltaGrid(domain_diameter), {}};
  vf.values.assign(size_t(vf.domain.size()), v);
  (void)k;
  return vf;
}

// Clockwise B-value of one white clique, computed by chasing a generator
// around the cycle with the transition maps.
template <class K>
typename K::Elem white_clique_value(const K& k, const BilliardArray<K>& ba, const Clique& c) {
  if (!c.white) throw Error(Err::BadArgument, "white clique expected");
  const Vec<K>& g = ba.gen(c.locs[0]);
  Vec<K> v = transition_apply(k, ba, c.locs[0], c.locs[1], g);
  v = transition_apply(k, ba, c.locs[1], c.locs[2], v);
  v = transition_apply(k, ba, c.locs[2], c.locs[0], v);
  int p = first_nonzero<K>(g);
  return v[size_t(p)] / g[size_t(p)];
}

template <class K>
ValueFunction<K> value_function(const K& k, const BilliardArray<K>& ba) {
  if (ba.grid.N < 2) throw Error(Err::DiameterTooSmall, "no white cliques below diameter 2");
  ValueFunction<K> vf{DeltaGrid(ba.grid.N - 2), {}};
  vf.values.reserve(size_t(vf.domain.size()));
  for (const Clique& c : ba.grid.cliques(true)) vf.values.push_back(white_clique_value(k, ba, c));
  return vf;
}

template <class K>
ValueFunction<K> value_function(const K& k, const ConcreteBilliardArray<K>& cba) {
  return value_function(k, billiard_from_concrete(k, cba));
}

/*
 * Equivalence predicates. All return a witness on success.
 *   associates: per-location nonzero scales kappa_lambda
 *   relatives: one global nonzero scale
 *   isomorphic (concrete): the unique sigma with sigma*B_lambda = B'_lambda
 *   isomorphic (abstract): invertible sigma matching all cells as subspaces
 *   similar: the corresponding abstract arrays are isomorphic
 */

template <class K>
std::optional<std::vector<typename K::Elem>> are_associates(const K& k,
                                                            const ConcreteBilliardArray<K>& a,
                                                            const ConcreteBilliardArray<K>& b) {
  if (a.grid.N != b.grid.N) return std::nullopt;
  std::vector<typename K::Elem> kappa;
  for (size_t i = 0; i < a.vecs.size(); ++i) {
    int p = first_nonzero<K>(a.vecs[i]);
    int pb = first_nonzero<K>(b.vecs[i]);
    if (p < 0 || p != pb) return std::nullopt;
    auto c = b.vecs[i][size_t(p)] / a.vecs[i][size_t(p)];
    if (b.vecs[i] != vec_scale<K>(c, a.vecs[i])) return std::nullopt;
    kappa.push_back(c);
  }
  (void)k;
  return kappa;
}

template <class K>
std::optional<typename K::Elem> are_relatives(const K& k, const ConcreteBilliardArray<K>& a,
                                              const ConcreteBilliardArray<K>& b) {
  auto kappa = are_associates(k, a, b);
  if (!kappa) return std::nullopt;
  for (const auto& c : *kappa)
    if (!(c == kappa->front())) return std::nullopt;
  return kappa->front();
}

template <class K>
std::optional<Mat<K>> cba_isomorphism(const K& k, const ConcreteBilliardArray<K>& a,
                                      const ConcreteBilliardArray<K>& b) {
  if (a.grid.N != b.grid.N) return std::nullopt;
  int n = a.ambient();
  // boundary [2,3] vectors form a basis for a valid array; sigma is forced
  Mat<K> ga = mat_zero(k, n, n), gb = mat_zero(k, n, n);
  auto path = a.grid.corner_path(2, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ga.at(j, i) = a.at(path[size_t(i)])[size_t(j)];
      gb.at(j, i) = b.at(path[size_t(i)])[size_t(j)];
    }
  Mat<K> sigma;
  try {
    sigma = mat_mul(k, gb, inverse(k, ga));
  } catch (const Error&) {
    return std::nullopt;
  }
  for (const Loc& l : a.grid.locations())
    if (mat_vec(k, sigma, a.at(l)) != b.at(l)) return std::nullopt;
  if (!is_invertible(k, sigma)) return std::nullopt;
  return sigma;
}

// Null space of the collinearity constraints sigma*gen_lambda || gen'_lambda,
// returned as matrices. For valid arrays this space has dimension 0 or 1.
template <class K>
std::vector<Mat<K>> ba_isomorphism_space(const K& k, const BilliardArray<K>& a,
                                         const BilliardArray<K>& b) {
  if (a.grid.N != b.grid.N) throw Error(Err::GridMismatch, "diameter mismatch");
  int n = a.ambient();
  std::vector<Vec<K>> rows;
  for (const Loc& l : a.grid.locations()) {
    const Vec<K>& g = a.gen(l);
    const Vec<K>& h = b.gen(l);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec<K> row = vec_zero(k, n * n);
        for (int m = 0; m < n; ++m) {
          row[size_t(i * n + m)] += g[size_t(m)] * h[size_t(j)];
          row[size_t(j * n + m)] -= g[size_t(m)] * h[size_t(i)];
        }
        rows.push_back(std::move(row));
      }
  }
  Mat<K> ker = kernel(k, mat_from_rows(k, n * n, rows));
  std::vector<Mat<K>> out;
  for (int r = 0; r < ker.rows; ++r) {
    Mat<K> m = mat_zero(k, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = ker.at(r, i * n + j);
    out.push_back(std::move(m));
  }
  return out;
}

template <class K>
std::optional<Mat<K>> ba_isomorphism(const K& k, const BilliardArray<K>& a,
                                     const BilliardArray<K>& b) {
  std::vector<Mat<K>> space = ba_isomorphism_space(k, a, b);
  for (const auto& m : space) {
    if (!is_invertible(k, m)) continue;
    bool maps = true;
    for (const Loc& l : a.grid.locations()) {
      Vec<K> img = mat_vec(k, m, a.gen(l));
      if (vec_is_zero<K>(img) || normalized_generator(k, img) != b.gen(l)) {
        maps = false;
        break;
      }
    }
    if (maps) return m;
  }
  for (size_t i = 0; i + 1 < space.size(); ++i)  // rare: try simple combinations
    for (size_t j = i + 1; j < space.size(); ++j) {
      Mat<K> m = mat_add(space[i], space[j]);
      if (is_invertible(k, m)) return m;
    }
  return std::nullopt;
}

template <class K>
std::optional<Mat<K>> are_similar(const K& k, const ConcreteBilliardArray<K>& a,
                                  const ConcreteBilliardArray<K>& b) {
  return ba_isomorphism(k, billiard_from_concrete(k, a), billiard_from_concrete(k, b));
}

}  // namespace bav
