#pragma once

#include <optional>
#include <vector>

#include "bav/error.hpp"
#include "bav/fields.hpp"

namespace bav {

template <class K>
using Vec = std::vector<typename K::Elem>;

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<typename K::Elem> a;  // row-major

  typename K::Elem& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const typename K::Elem& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  Vec<K> row(int i) const {
    return Vec<K>(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols);
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

template <class K>
Mat<K> mat_zero(const K& k, int rows, int cols) {
  Mat<K> m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(size_t(rows) * cols, k.zero());
  return m;
}

template <class K>
Mat<K> mat_identity(const K& k, int n) {
  Mat<K> m = mat_zero(k, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

template <class K>
Vec<K> vec_zero(const K& k, int n) {
  return Vec<K>(size_t(n), k.zero());
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

template <class K>
Vec<K> vec_add(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

template <class K>
Vec<K> vec_scale(const typename K::Elem& c, const Vec<K>& x) {
  Vec<K> r = x;
  for (auto& e : r) e = c * e;
  return r;
}

template <class K>
Vec<K> vec_neg(const Vec<K>& x) {
  Vec<K> r = x;
  for (auto& e : r) e = -e;
  return r;
}

template <class K>
Mat<K> mat_from_rows(const K& k, int cols, const std::vector<Vec<K>>& rows) {
  Mat<K> m = mat_zero(k, int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols) throw Error(Err::AmbientMismatch, "ragged rows");
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][size_t(j)];
  }
  return m;
}

template <class K>
Mat<K> mat_add(const Mat<K>& x, const Mat<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error(Err::AmbientMismatch, "shape mismatch in add");
  Mat<K> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

template <class K>
Mat<K> mat_sub(const Mat<K>& x, const Mat<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error(Err::AmbientMismatch, "shape mismatch in sub");
  Mat<K> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

template <class K>
Mat<K> mat_scale(const typename K::Elem& c, const Mat<K>& x) {
  Mat<K> r = x;
  for (auto& e : r.a) e = c * e;
  return r;
}

template <class K>
Mat<K> mat_mul(const K& k, const Mat<K>& x, const Mat<K>& y) {
  if (x.cols != y.rows) throw Error(Err::AmbientMismatch, "shape mismatch in mul");
  Mat<K> r = mat_zero(k, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      const auto& xi = x.at(i, l);
      if (xi.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xi * y.at(l, j);
    }
  return r;
}

template <class K>
Vec<K> mat_vec(const K& k, const Mat<K>& m, const Vec<K>& v) {
  if (m.cols != int(v.size())) throw Error(Err::AmbientMismatch, "shape mismatch in mat*vec");
  Vec<K> r = vec_zero(k, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) r[size_t(i)] += m.at(i, j) * v[size_t(j)];
  return r;
}

template <class K>
Mat<K> mat_transpose(const K& k, const Mat<K>& m) {
  Mat<K> r = mat_zero(k, m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

template <class K>
Mat<K> mat_pow(const K& k, Mat<K> m, int e) {
  Mat<K> r = mat_identity(k, m.rows);
  while (e > 0) {
    if (e & 1) r = mat_mul(k, r, m);
    m = mat_mul(k, m, m);
    e >>= 1;
  }
  return r;
}

// In-place reduced row echelon form. Returns the pivot columns in order.
template <class K>
std::vector<int> rref(const K& k, Mat<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    auto inv = k.one() / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) = inv * m.at(row, j);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      auto f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
int rank(const K& k, Mat<K> m) {
  return int(rref(k, m).size());
}

// Basis of the right null space {x : m x = 0}, rows in reduced echelon form.
template <class K>
Mat<K> kernel(const K& k, Mat<K> m) {
  std::vector<int> piv = rref(k, m);
  std::vector<bool> is_pivot(size_t(m.cols), false);
  for (int c : piv) is_pivot[size_t(c)] = true;
  std::vector<Vec<K>> rows;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[size_t(free)]) continue;
    Vec<K> x = vec_zero(k, m.cols);
    x[size_t(free)] = k.one();
    for (size_t r = 0; r < piv.size(); ++r)
      x[size_t(piv[r])] = -m.at(int(r), free);
    rows.push_back(std::move(x));
  }
  Mat<K> out = mat_from_rows(k, m.cols, rows);
  rref(k, out);
  return out;
}

// One solution of A x = b, if any.
template <class K>
std::optional<Vec<K>> solve(const K& k, const Mat<K>& A, const Vec<K>& b) {
  if (A.rows != int(b.size())) throw Error(Err::AmbientMismatch, "shape mismatch in solve");
  Mat<K> aug = mat_zero(k, A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[size_t(i)];
  }
  std::vector<int> piv = rref(k, aug);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;  // inconsistent
  Vec<K> x = vec_zero(k, A.cols);
  for (size_t r = 0; r < piv.size(); ++r) x[size_t(piv[r])] = aug.at(int(r), A.cols);
  return x;
}

template <class K>
Mat<K> inverse(const K& k, const Mat<K>& m) {
  if (m.rows != m.cols) throw Error(Err::AmbientMismatch, "inverse of non-square");
  int n = m.rows;
  Mat<K> aug = mat_zero(k, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = k.one();
  }
  std::vector<int> piv = rref(k, aug);
  if (int(piv.size()) != n || piv.back() != n - 1)
    throw Error(Err::Singular, "matrix not invertible");
  Mat<K> r = mat_zero(k, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

template <class K>
bool is_invertible(const K& k, const Mat<K>& m) {
  return m.rows == m.cols && rank(k, m) == m.rows;
}

// Subspace of F^ambient in canonical form: basis rows are the reduced row
// echelon form with no zero rows, so equal subspaces have identical data.
template <class K>
struct Subspace {
  int ambient = 0;
  Mat<K> basis;

  int dim() const { return basis.rows; }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient == y.ambient && x.basis == y.basis;
  }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
};

template <class K>
Subspace<K> zero_subspace(const K& k, int ambient) {
  Subspace<K> s;
  s.ambient = ambient;
  s.basis = mat_zero(k, 0, ambient);
  return s;
}

template <class K>
Subspace<K> span(const K& k, int ambient, const std::vector<Vec<K>>& vectors) {
  Mat<K> m = mat_from_rows(k, ambient, vectors);
  std::vector<int> piv = rref(k, m);
  Subspace<K> s;
  s.ambient = ambient;
  s.basis = mat_zero(k, int(piv.size()), ambient);
  for (int i = 0; i < int(piv.size()); ++i)
    for (int j = 0; j < ambient; ++j) s.basis.at(i, j) = m.at(i, j);
  return s;
}

template <class K>
Subspace<K> full_subspace(const K& k, int ambient) {
  Subspace<K> s;
  s.ambient = ambient;
  s.basis = mat_identity(k, ambient);
  return s;
}

// Span of one vector, i.e. the canonical line through it.
template <class K>
Subspace<K> line_of(const K& k, const Vec<K>& v) {
  if (vec_is_zero<K>(v)) throw Error(Err::ZeroVector, "line through zero vector");
  return span(k, int(v.size()), {v});
}

template <class K>
void check_ambient(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient != b.ambient) throw Error(Err::AmbientMismatch, "subspace ambient mismatch");
}

template <class K>
Subspace<K> subspace_sum(const K& k, const Subspace<K>& a, const Subspace<K>& b) {
  check_ambient(a, b);
  std::vector<Vec<K>> rows;
  for (int i = 0; i < a.basis.rows; ++i) rows.push_back(a.basis.row(i));
  for (int i = 0; i < b.basis.rows; ++i) rows.push_back(b.basis.row(i));
  return span(k, a.ambient, rows);
}

// Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry an
// intersection basis in the right half.
template <class K>
Subspace<K> subspace_intersect(const K& k, const Subspace<K>& a, const Subspace<K>& b) {
  check_ambient(a, b);
  int n = a.ambient;
  Mat<K> m = mat_zero(k, a.basis.rows + b.basis.rows, 2 * n);
  for (int i = 0; i < a.basis.rows; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = a.basis.at(i, j);
      m.at(i, n + j) = a.basis.at(i, j);
    }
  for (int i = 0; i < b.basis.rows; ++i)
    for (int j = 0; j < n; ++j) m.at(a.basis.rows + i, j) = b.basis.at(i, j);
  rref(k, m);
  std::vector<Vec<K>> rows;
  for (int i = 0; i < m.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!m.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec<K> v = vec_zero(k, n);
    for (int j = 0; j < n; ++j) v[size_t(j)] = m.at(i, n + j);
    if (!vec_is_zero<K>(v)) rows.push_back(std::move(v));
  }
  return span(k, n, rows);
}

template <class K>
bool is_direct_sum(const K& k, const std::vector<Subspace<K>>& parts) {
  if (parts.empty()) return true;
  int n = parts.front().ambient;
  int total = 0;
  std::vector<Vec<K>> rows;
  for (const auto& p : parts) {
    if (p.ambient != n) throw Error(Err::AmbientMismatch, "subspace ambient mismatch");
    total += p.dim();
    for (int i = 0; i < p.basis.rows; ++i) rows.push_back(p.basis.row(i));
  }
  return span(k, n, rows).dim() == total;
}

template <class K>
bool subspace_contains(const K& k, const Subspace<K>& s, const Vec<K>& v) {
  (void)k;
  if (int(v.size()) != s.ambient) throw Error(Err::AmbientMismatch, "vector/subspace mismatch");
  Vec<K> r = v;
  for (int i = 0; i < s.basis.rows; ++i) {
    int pc = -1;
    for (int j = 0; j < s.ambient; ++j)
      if (!s.basis.at(i, j).is_zero()) { pc = j; break; }
    if (pc < 0) continue;
    if (r[size_t(pc)].is_zero()) continue;
    auto f = r[size_t(pc)];
    for (int j = 0; j < s.ambient; ++j) r[size_t(j)] -= f * s.basis.at(i, j);
  }
  return vec_is_zero<K>(r);
}

template <class K>
bool subspace_leq(const K& k, const Subspace<K>& a, const Subspace<K>& b) {
  check_ambient(a, b);
  for (int i = 0; i < a.basis.rows; ++i)
    if (!subspace_contains(k, b, a.basis.row(i))) return false;
  return true;
}

// Row space of a matrix (image of the map x -> x^T m acting on rows), i.e.
// the span of m's rows; used for operator images via transpose.
template <class K>
Subspace<K> row_space(const K& k, const Mat<K>& m) {
  std::vector<Vec<K>> rows;
  for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
  return span(k, m.cols, rows);
}

// Image (column space) of m, returned as a subspace of F^rows.
template <class K>
Subspace<K> column_space(const K& k, const Mat<K>& m) {
  return row_space(k, mat_transpose(k, m));
}

}  // namespace bav
