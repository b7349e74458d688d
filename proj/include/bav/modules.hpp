#pragma once

#include <string>
#include <vector>

#include "bav/billiard.hpp"
#include "bav/flags.hpp"

namespace bav {

/*
 * Module structures induced by an array. With all white values 1 (and
 * characteristic not 2) the three decompositions [2,3], [3,1], [1,2] carry
 * the equitable sl2 generators; with all white values q^-2 they carry the
 * equitable Uq(sl2) generators. X acts on component i of [2,3] by 2i-N
 * (resp. q^(N-2i)), and cyclically for Y on [3,1] and Z on [1,2].
 */

enum class Flavor { Sl2, Uq };

template <class K>
struct ModuleOps {
  int N = 0;
  Flavor flavor = Flavor::Sl2;
  typename K::Elem q;  // unused for Sl2
  Mat<K> X, Y, Z;
  Mat<K> nux, nuy, nuz;
};

namespace detail {

template <class K>
typename K::Elem elem_pow(const K& k, const typename K::Elem& x, long e) {
  typename K::Elem b = x;
  if (e < 0) {
    b = k.one() / x;
    e = -e;
  }
  typename K::Elem r = k.one();
  for (long i = 0; i < e; ++i) r = r * b;
  return r;
}

template <class K>
Mat<K> operator_from_decomposition(const K& k, const ConcreteBilliardArray<K>& cba, int eta,
                                   int xi, const std::vector<typename K::Elem>& eig) {
  int n = cba.ambient();
  Mat<K> C = mat_zero(k, n, n);
  auto path = cba.grid.corner_path(eta, xi);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C.at(j, i) = cba.at(path[size_t(i)])[size_t(j)];
  Mat<K> D = mat_zero(k, n, n);
  for (int i = 0; i < n; ++i) D.at(i, i) = eig[size_t(i)];
  Mat<K> Cinv;
  try {
    Cinv = inverse(k, C);
  } catch (const Error&) {
    throw Error(Err::InvalidArray, "decomposition is not a basis");
  }
  return mat_mul(k, mat_mul(k, C, D), Cinv);
}

template <class K>
void require_value_function(const K& k, const ConcreteBilliardArray<K>& cba,
                            const typename K::Elem& target) {
  if (cba.grid.N < 2) return;
  BilliardArray<K> ba = billiard_from_concrete(k, cba);
  ValueFunction<K> vf = value_function(k, ba);
  for (const auto& v : vf.values)
    if (!(v == target))
      throw Error(Err::WrongValueFunction, "white values must all equal the flavor constant");
}

}  // namespace detail

template <class K>
ModuleOps<K> build_module(const K& k, const ConcreteBilliardArray<K>& cba, Flavor flavor,
                          const typename K::Elem& q) {
  int N = cba.grid.N;
  ModuleOps<K> m;
  m.N = N;
  m.flavor = flavor;
  m.q = q;
  std::vector<typename K::Elem> eig;
  eig.reserve(size_t(N) + 1);
  if (flavor == Flavor::Sl2) {
    if (k.characteristic() == 2) throw Error(Err::BadCharacteristic, "characteristic 2");
    detail::require_value_function(k, cba, k.one());
    for (int i = 0; i <= N; ++i) eig.push_back(k.from_int(2 * i - N));
  } else {
    if (q.is_zero() || q * q == k.one())
      throw Error(Err::BadQ, "need q nonzero with q^2 != 1");
    detail::require_value_function(k, cba, k.one() / (q * q));
    for (int i = 0; i <= N; ++i) eig.push_back(detail::elem_pow(k, q, N - 2 * i));
  }
  m.X = detail::operator_from_decomposition(k, cba, 2, 3, eig);
  m.Y = detail::operator_from_decomposition(k, cba, 3, 1, eig);
  m.Z = detail::operator_from_decomposition(k, cba, 1, 2, eig);
  int n = N + 1;
  Mat<K> I = mat_identity(k, n);
  if (flavor == Flavor::Sl2) {
    typename K::Elem mhalf = -(k.one() / k.from_int(2));
    m.nux = mat_scale<K>(mhalf, mat_add(m.Y, m.Z));
    m.nuy = mat_scale<K>(mhalf, mat_add(m.Z, m.X));
    m.nuz = mat_scale<K>(mhalf, mat_add(m.X, m.Y));
  } else {
    m.nux = mat_scale<K>(q, mat_sub(I, mat_mul(k, m.Y, m.Z)));
    m.nuy = mat_scale<K>(q, mat_sub(I, mat_mul(k, m.Z, m.X)));
    m.nuz = mat_scale<K>(q, mat_sub(I, mat_mul(k, m.X, m.Y)));
  }
  return m;
}

template <class K>
ModuleOps<K> build_module(const K& k, const BilliardArray<K>& ba, Flavor flavor,
                          const typename K::Elem& q) {
  return build_module(k, concrete_from_billiard(k, ba), flavor, q);
}

// Defining relations of the flavor, as whole-of-End(V) identities. Returns
// the names of any that fail.
template <class K>
std::vector<std::string> check_relations(const K& k, const ModuleOps<K>& m) {
  std::vector<std::string> bad;
  int n = m.N + 1;
  Mat<K> I = mat_identity(k, n);
  auto comm = [&](const Mat<K>& A, const Mat<K>& B) {
    return mat_sub(mat_mul(k, A, B), mat_mul(k, B, A));
  };
  if (m.flavor == Flavor::Sl2) {
    typename K::Elem two = k.from_int(2);
    auto rel = [&](const Mat<K>& A, const Mat<K>& B) {
      return comm(A, B) == mat_add(mat_scale<K>(two, A), mat_scale<K>(two, B));
    };
    if (!rel(m.X, m.Y)) bad.push_back("bracket-xy");
    if (!rel(m.Y, m.Z)) bad.push_back("bracket-yz");
    if (!rel(m.Z, m.X)) bad.push_back("bracket-zx");
    typename K::Elem mhalf = -(k.one() / two);
    if (!(m.nux == mat_scale<K>(mhalf, mat_add(m.Y, m.Z)))) bad.push_back("nu-x-def");
    if (!(m.nuy == mat_scale<K>(mhalf, mat_add(m.Z, m.X)))) bad.push_back("nu-y-def");
    if (!(m.nuz == mat_scale<K>(mhalf, mat_add(m.X, m.Y)))) bad.push_back("nu-z-def");
  } else {
    const typename K::Elem& q = m.q;
    typename K::Elem qi = k.one() / q;
    auto rel = [&](const Mat<K>& A, const Mat<K>& B) {
      Mat<K> lhs = mat_sub(mat_scale<K>(q, mat_mul(k, A, B)), mat_scale<K>(qi, mat_mul(k, B, A)));
      return lhs == mat_scale<K>(q - qi, I);
    };
    if (!rel(m.X, m.Y)) bad.push_back("equitable-xy");
    if (!rel(m.Y, m.Z)) bad.push_back("equitable-yz");
    if (!rel(m.Z, m.X)) bad.push_back("equitable-zx");
    if (!is_invertible(k, m.X)) bad.push_back("x-invertible");
    if (!is_invertible(k, m.Y)) bad.push_back("y-invertible");
    if (!is_invertible(k, m.Z)) bad.push_back("z-invertible");
    if (!(m.nux == mat_scale<K>(qi, mat_sub(I, mat_mul(k, m.Z, m.Y))))) bad.push_back("nu-x-alt");
    if (!(m.nuy == mat_scale<K>(qi, mat_sub(I, mat_mul(k, m.X, m.Z))))) bad.push_back("nu-y-alt");
    if (!(m.nuz == mat_scale<K>(qi, mat_sub(I, mat_mul(k, m.Y, m.X))))) bad.push_back("nu-z-alt");
  }
  return bad;
}

/*
 * Location-by-location identities tying the operators to the transition
 * maps. Transitions to locations outside the grid are zero maps here; in
 * every such case they carry a vanishing coefficient.
 */
template <class K>
std::vector<std::string> local_action_check(const K& k, const ConcreteBilliardArray<K>& cba,
                                            const ModuleOps<K>& m) {
  std::vector<std::string> bad;
  int N = m.N;
  BilliardArray<K> ba = billiard_from_concrete(k, cba);
  Loc alpha{1, -1, 0}, beta{0, 1, -1}, gamma{-1, 0, 1};
  auto T = [&](const Loc& from, const Loc& to, const Vec<K>& u) {
    return transition_apply_or_zero(k, ba, from, to, u);
  };
  auto op = [&](const Mat<K>& M, const Vec<K>& u) { return mat_vec(k, M, u); };
  auto shifted = [&](const Mat<K>& M, const typename K::Elem& c, const Vec<K>& u) {
    return vec_sub<K>(op(M, u), vec_scale<K>(c, u));  // (M - cI)u
  };
  auto chk = [&](bool ok, const std::string& name, const Loc& l) {
    if (!ok) bad.push_back(name + "@" + l.str());
  };

  for (const Loc& l : cba.grid.locations()) {
    const Vec<K>& g = cba.at(l);
    int r = l.r, s = l.s, t = l.t;
    if (m.flavor == Flavor::Sl2) {
      auto c = [&](long v) { return k.from_int(v); };
      chk(shifted(m.X, c(N - 2 * s), g) == vec_scale<K>(c(2 * r), T(l, l - alpha, g)),
          "x-lower", l);
      chk(shifted(m.X, c(2 * t - N), g) == vec_scale<K>(c(-2 * r), T(l, l + gamma, g)),
          "x-raise", l);
      chk(shifted(m.Y, c(N - 2 * t), g) == vec_scale<K>(c(2 * s), T(l, l - beta, g)),
          "y-lower", l);
      chk(shifted(m.Y, c(2 * r - N), g) == vec_scale<K>(c(-2 * s), T(l, l + alpha, g)),
          "y-raise", l);
      chk(shifted(m.Z, c(N - 2 * r), g) == vec_scale<K>(c(2 * t), T(l, l - gamma, g)),
          "z-lower", l);
      chk(shifted(m.Z, c(2 * s - N), g) == vec_scale<K>(c(-2 * t), T(l, l + beta, g)),
          "z-raise", l);
      chk(op(m.nux, g) == vec_sub<K>(vec_scale<K>(c(s), T(l, l + alpha, g)),
                                     vec_scale<K>(c(t), T(l, l - gamma, g))),
          "nu-x", l);
      chk(op(m.nuy, g) == vec_sub<K>(vec_scale<K>(c(t), T(l, l + beta, g)),
                                     vec_scale<K>(c(r), T(l, l - alpha, g))),
          "nu-y", l);
      chk(op(m.nuz, g) == vec_sub<K>(vec_scale<K>(c(r), T(l, l + gamma, g)),
                                     vec_scale<K>(c(s), T(l, l - beta, g))),
          "nu-z", l);
      // two expressions for the commutator action, per generator pair
      auto twoview = [&](const Mat<K>& A, const Mat<K>& B, long ca, long cb, long cc,
                         const std::string& name) {
        Vec<K> lhs = vec_sub<K>(op(A, op(B, g)), vec_scale<K>(c(2), op(B, g)));
        Vec<K> mid = vec_add<K>(vec_add<K>(vec_scale<K>(c(ca), op(A, g)),
                                           vec_scale<K>(c(cb), op(B, g))),
                                vec_scale<K>(c((N + 2) * cc), g));
        Vec<K> rhs = vec_add<K>(op(B, op(A, g)), vec_scale<K>(c(2), op(A, g)));
        chk(lhs == mid && mid == rhs, name, l);
      };
      twoview(m.X, m.Y, 2 * r - N, N - 2 * s, 2 * t - N, "views-xy");
      twoview(m.Y, m.Z, 2 * s - N, N - 2 * t, 2 * r - N, "views-yz");
      twoview(m.Z, m.X, 2 * t - N, N - 2 * r, 2 * s - N, "views-zx");
      if (r >= 1)
        chk(shifted(m.Z, c(N - 2 * r + 2), shifted(m.X, c(2 * t - N), g)) ==
                vec_scale<K>(c(-4 * r * (t + 1)), g),
            "compose-zx", l);
      if (r == 0) chk(op(m.X, g) == vec_scale<K>(c(2 * t - N), g), "corner-x", l);
      if (s == 0) chk(op(m.Y, g) == vec_scale<K>(c(2 * r - N), g), "corner-y", l);
      if (t == 0) chk(op(m.Z, g) == vec_scale<K>(c(2 * s - N), g), "corner-z", l);
    } else {
      auto qp = [&](long e) { return detail::elem_pow(k, m.q, e); };
      chk(shifted(m.X, qp(2 * s - N), g) ==
              vec_scale<K>(qp(2 * s - N) - qp(N - 2 * t), T(l, l - alpha, g)),
          "x-lower", l);
      chk(shifted(m.X, qp(N - 2 * t), g) ==
              vec_scale<K>(qp(N - 2 * t) - qp(2 * s - N), T(l, l + gamma, g)),
          "x-raise", l);
      chk(shifted(m.Y, qp(2 * t - N), g) ==
              vec_scale<K>(qp(2 * t - N) - qp(N - 2 * r), T(l, l - beta, g)),
          "y-lower", l);
      chk(shifted(m.Y, qp(N - 2 * r), g) ==
              vec_scale<K>(qp(N - 2 * r) - qp(2 * t - N), T(l, l + alpha, g)),
          "y-raise", l);
      chk(shifted(m.Z, qp(2 * r - N), g) ==
              vec_scale<K>(qp(2 * r - N) - qp(N - 2 * s), T(l, l - gamma, g)),
          "z-lower", l);
      chk(shifted(m.Z, qp(N - 2 * s), g) ==
              vec_scale<K>(qp(N - 2 * s) - qp(2 * r - N), T(l, l + beta, g)),
          "z-raise", l);
      chk(op(m.nux, g) ==
              vec_sub<K>(vec_scale<K>(qp(t - 2 * s - 1) * (qp(t) - qp(-t)), T(l, l - gamma, g)),
                         vec_scale<K>(qp(2 * t - s + 1) * (qp(s) - qp(-s)), T(l, l + alpha, g))),
          "nu-x", l);
      chk(op(m.nuy, g) ==
              vec_sub<K>(vec_scale<K>(qp(r - 2 * t - 1) * (qp(r) - qp(-r)), T(l, l - alpha, g)),
                         vec_scale<K>(qp(2 * r - t + 1) * (qp(t) - qp(-t)), T(l, l + beta, g))),
          "nu-y", l);
      chk(op(m.nuz, g) ==
              vec_sub<K>(vec_scale<K>(qp(s - 2 * r - 1) * (qp(s) - qp(-s)), T(l, l - beta, g)),
                         vec_scale<K>(qp(2 * s - r + 1) * (qp(r) - qp(-r)), T(l, l + gamma, g))),
          "nu-z", l);
      auto twoview = [&](const Mat<K>& A, const Mat<K>& B, long e1, long e2, long e3, long e4,
                         const std::string& name) {
        // q(I - AB) = -q^(e1)(A - q^(e2) I) - q^(e3)(B - q^(e4) I) = q^-1(I - BA)
        Vec<K> lhs = vec_scale<K>(m.q, vec_sub<K>(g, op(A, op(B, g))));
        Vec<K> mid = vec_sub<K>(vec_scale<K>(-qp(e1), shifted(A, qp(e2), g)),
                                vec_scale<K>(qp(e3), shifted(B, qp(e4), g)));
        Vec<K> rhs = vec_scale<K>(qp(-1), vec_sub<K>(g, op(B, op(A, g))));
        chk(lhs == mid && mid == rhs, name, l);
      };
      twoview(m.X, m.Y, N - 2 * r + 1, N - 2 * t, 2 * s - N - 1, 2 * t - N, "views-xy");
      twoview(m.Y, m.Z, N - 2 * s + 1, N - 2 * r, 2 * t - N - 1, 2 * r - N, "views-yz");
      twoview(m.Z, m.X, N - 2 * t + 1, N - 2 * s, 2 * r - N - 1, 2 * s - N, "views-zx");
      if (r >= 1)
        chk(shifted(m.Z, qp(2 * r - 2 - N), shifted(m.X, qp(N - 2 * t), g)) ==
                vec_scale<K>((qp(2 * r - 2 - N) - qp(N - 2 * s)) * (qp(N - 2 * t) - qp(2 * s - N)),
                             g),
            "compose-zx", l);
      if (r == 0) chk(op(m.X, g) == vec_scale<K>(qp(N - 2 * t), g), "corner-x", l);
      if (s == 0) chk(op(m.Y, g) == vec_scale<K>(qp(N - 2 * r), g), "corner-y", l);
      if (t == 0) chk(op(m.Z, g) == vec_scale<K>(qp(N - 2 * s), g), "corner-z", l);
    }
  }

  // action on braces through each black clique, seeded by the stored vector
  for (const Clique& c : cba.grid.cliques(false)) {
    int r = c.base.r, s = c.base.s, t = c.base.t;
    Abrace<K> br = abrace_through(k, ba, c, cba.at(c.locs[0]));
    bool ok;
    if (m.flavor == Flavor::Sl2) {
      auto cc = [&](long v) { return k.from_int(v); };
      ok = op(m.X, br.u) == vec_add<K>(vec_scale<K>(cc(N - 2 * t), br.v),
                                       vec_scale<K>(cc(2 * s - N), br.w)) &&
           op(m.Y, br.v) == vec_add<K>(vec_scale<K>(cc(N - 2 * r), br.w),
                                       vec_scale<K>(cc(2 * t - N), br.u)) &&
           op(m.Z, br.w) == vec_add<K>(vec_scale<K>(cc(N - 2 * s), br.u),
                                       vec_scale<K>(cc(2 * r - N), br.v));
    } else {
      auto qp = [&](long e) { return detail::elem_pow(k, m.q, e); };
      ok = op(m.X, br.u) == vec_neg<K>(vec_add<K>(vec_scale<K>(qp(N - 2 * t), br.v),
                                                  vec_scale<K>(qp(2 * s - N), br.w))) &&
           op(m.Y, br.v) == vec_neg<K>(vec_add<K>(vec_scale<K>(qp(N - 2 * r), br.w),
                                                  vec_scale<K>(qp(2 * t - N), br.u))) &&
           op(m.Z, br.w) == vec_neg<K>(vec_add<K>(vec_scale<K>(qp(N - 2 * s), br.u),
                                                  vec_scale<K>(qp(2 * r - N), br.v)));
    }
    if (!ok) bad.push_back("brace-action@" + c.base.str());
  }
  return bad;
}

template <class K>
Flag<K> nu_flag(const K& k, const Mat<K>& nu, int N) {
  std::vector<Subspace<K>> comps;
  comps.reserve(size_t(N) + 1);
  for (int i = 0; i <= N; ++i) comps.push_back(column_space(k, mat_pow(k, nu, N - i)));
  return make_flag(k, std::move(comps));
}

// The three flags swept out by the nilpotent elements; they coincide with
// the flags of the source array when the eigenvalues stay distinct.
template <class K>
FlagTriple<K> nu_flags(const K& k, const ModuleOps<K>& m) {
  return FlagTriple<K>{nu_flag(k, m.nux, m.N), nu_flag(k, m.nuy, m.N), nu_flag(k, m.nuz, m.N)};
}

template <class K>
bool nu_nilpotent(const K& k, const ModuleOps<K>& m) {
  int n = m.N + 1;
  Mat<K> zero = mat_zero(k, n, n);
  return mat_pow(k, m.nux, n) == zero && mat_pow(k, m.nuy, n) == zero &&
         mat_pow(k, m.nuz, n) == zero;
}

namespace detail {

template <class K>
Subspace<K> invariant_closure(const K& k, const ModuleOps<K>& m, const Vec<K>& v) {
  int n = m.N + 1;
  Subspace<K> S = span(k, n, {v});
  for (;;) {
    std::vector<Vec<K>> rows;
    for (int i = 0; i < S.basis.rows; ++i) {
      Vec<K> b = S.basis.row(i);
      rows.push_back(b);
      rows.push_back(mat_vec(k, m.X, b));
      rows.push_back(mat_vec(k, m.Y, b));
      rows.push_back(mat_vec(k, m.Z, b));
    }
    Subspace<K> grown = span(k, n, rows);
    if (grown.dim() == S.dim()) return S;
    S = grown;
  }
}

}  // namespace detail

/*
 * Irreducibility test by eigenvector closure. Any proper invariant subspace
 * contains an eigenvector of X whose eigenvalue lies in the candidate set
 * below (X is diagonalizable with spectrum inside it, for both flavors and
 * for the block sums used as reducible controls). So the module is
 * irreducible iff every candidate eigenvector generates everything.
 */
template <class K>
bool check_irreducible(const K& k, const ModuleOps<K>& m) {
  int n = m.N + 1;
  if (n == 1) return true;
  bool saw_eigenvector = false;
  for (long j = -m.N; j <= m.N; ++j) {
    typename K::Elem theta =
        m.flavor == Flavor::Sl2 ? k.from_int(j) : detail::elem_pow(k, m.q, j);
    Mat<K> shift = m.X;
    for (int i = 0; i < n; ++i) shift.at(i, i) = shift.at(i, i) - theta;
    Mat<K> ker = kernel(k, shift);
    for (int r = 0; r < ker.rows; ++r) {
      saw_eigenvector = true;
      if (detail::invariant_closure(k, m, ker.row(r)).dim() < n) return false;
    }
  }
  if (!saw_eigenvector)
    throw Error(Err::Internal, "no eigenvector among the candidate eigenvalues");
  return true;
}

}  // namespace bav
