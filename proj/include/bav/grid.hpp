#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bav/error.hpp"

namespace bav {

// Location (r,s,t) with r+s+t = N inside Delta_N, or rank r+s+t <= N when
// used as a poset element of Delta_{<=N}.
struct Loc {
  int r = 0, s = 0, t = 0;

  int sum() const { return r + s + t; }
  int coord(int eta) const {
    switch (eta) {
      case 1: return r;
      case 2: return s;
      case 3: return t;
    }
    throw Error(Err::BadAxes, "axis must be 1, 2 or 3");
  }

  friend bool operator==(const Loc& a, const Loc& b) {
    return a.r == b.r && a.s == b.s && a.t == b.t;
  }
  friend bool operator!=(const Loc& a, const Loc& b) { return !(a == b); }
  friend bool operator<(const Loc& a, const Loc& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.s != b.s) return a.s < b.s;
    return a.t < b.t;
  }
  friend Loc operator+(const Loc& a, const Loc& b) {
    return Loc{a.r + b.r, a.s + b.s, a.t + b.t};
  }
  friend Loc operator-(const Loc& a, const Loc& b) {
    return Loc{a.r - b.r, a.s - b.s, a.t - b.t};
  }

  std::string str() const {
    return std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t);
  }
};

inline Loc unit_loc(int eta, int n = 1) {
  switch (eta) {
    case 1: return Loc{n, 0, 0};
    case 2: return Loc{0, n, 0};
    case 3: return Loc{0, 0, n};
  }
  throw Error(Err::BadAxes, "axis must be 1, 2 or 3");
}

struct Clique {
  bool white = false;
  Loc base;                  // in Delta_{N-1} (black) or Delta_{N-2} (white)
  std::array<Loc, 3> locs;   // canonical order; for white this runs clockwise
};

inline Clique black_clique_at(const Loc& base) {
  return Clique{false, base,
                {Loc{base.r + 1, base.s, base.t}, Loc{base.r, base.s + 1, base.t},
                 Loc{base.r, base.s, base.t + 1}}};
}

inline Clique white_clique_at(const Loc& base) {
  return Clique{true, base,
                {Loc{base.r, base.s + 1, base.t + 1}, Loc{base.r + 1, base.s, base.t + 1},
                 Loc{base.r + 1, base.s + 1, base.t}}};
}

struct DeltaGrid {
  int N = 0;

  explicit DeltaGrid(int diameter) : N(diameter) {
    if (N < 0) throw Error(Err::BadDiameter, "negative diameter");
    for (int r = 0; r <= N; ++r)
      for (int s = 0; s + r <= N; ++s) locs_.push_back(Loc{r, s, N - r - s});
    adj_.resize(locs_.size());
    for (size_t i = 0; i < locs_.size(); ++i)
      for (size_t j = 0; j < locs_.size(); ++j)
        if (i != j && distance(locs_[i], locs_[j]) == 1) adj_[i].push_back(int(j));
  }

  const std::vector<Loc>& locations() const { return locs_; }
  int size() const { return int(locs_.size()); }

  bool contains(const Loc& l) const {
    return l.r >= 0 && l.s >= 0 && l.t >= 0 && l.sum() == N;
  }
  int index(const Loc& l) const {
    if (!contains(l)) throw Error(Err::GridMismatch, "location " + l.str() + " not in grid");
    // locations are enumerated r ascending, then s ascending
    int off = l.r * (N + 1) - l.r * (l.r - 1) / 2;
    return off + l.s;
  }

  const std::vector<int>& neighbors(int idx) const { return adj_[size_t(idx)]; }
  bool adjacent(const Loc& a, const Loc& b) const {
    return contains(a) && contains(b) && distance(a, b) == 1;
  }

  static int distance(const Loc& a, const Loc& b) {
    int dr = std::abs(a.r - b.r), ds = std::abs(a.s - b.s), dt = std::abs(a.t - b.t);
    return std::max({dr, ds, dt});
  }

  static bool collinear(const Loc& a, const Loc& b) {
    return a.r == b.r || a.s == b.s || a.t == b.t;
  }

  // Sorted coordinate gaps d1 <= d2 <= d3; d1 + d2 = d3 and d3 = distance.
  static std::array<int, 3> gaps(const Loc& a, const Loc& b) {
    std::array<int, 3> d = {std::abs(a.r - b.r), std::abs(a.s - b.s), std::abs(a.t - b.t)};
    std::sort(d.begin(), d.end());
    return d;
  }

  static int64_t binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    int64_t r = 1;
    for (int i = 1; i <= m; ++i) r = r * (n - m + i) / i;
    return r;
  }

  static int64_t geodesic_count(const Loc& a, const Loc& b) {
    auto d = gaps(a, b);
    return binomial(d[0] + d[1], d[0]);
  }

  std::vector<std::vector<Loc>> geodesic_paths(const Loc& a, const Loc& b) const {
    if (!contains(a) || !contains(b)) throw Error(Err::GridMismatch, "endpoints not in grid");
    std::vector<std::vector<Loc>> out;
    std::vector<Loc> cur{a};
    walk_geodesics(a, b, cur, out);
    return out;
  }

  // The eta-line through a location, ordered so the eta != 1 cases follow the
  // same cyclic pattern as the 1-line listing (N-i, i-j, j), 0 <= j <= i.
  std::vector<Loc> line_through(const Loc& l, int eta) const {
    int c = l.coord(eta);
    int i = N - c;
    std::vector<Loc> out;
    out.reserve(size_t(i) + 1);
    for (int j = 0; j <= i; ++j) {
      switch (eta) {
        case 1: out.push_back(Loc{c, i - j, j}); break;
        case 2: out.push_back(Loc{j, c, i - j}); break;
        case 3: out.push_back(Loc{i - j, j, c}); break;
        default: throw Error(Err::BadAxes, "axis must be 1, 2 or 3");
      }
    }
    return out;
  }

  // All N+1 eta-lines; the line at index i has cardinality i+1.
  std::vector<std::vector<Loc>> lines(int eta) const {
    std::vector<std::vector<Loc>> out;
    out.reserve(size_t(N) + 1);
    for (int i = 0; i <= N; ++i) {
      Loc anchor;
      switch (eta) {
        case 1: anchor = Loc{N - i, i, 0}; break;
        case 2: anchor = Loc{0, N - i, i}; break;
        case 3: anchor = Loc{i, 0, N - i}; break;
        default: throw Error(Err::BadAxes, "axis must be 1, 2 or 3");
      }
      out.push_back(line_through(anchor, eta));
    }
    return out;
  }

  std::vector<Clique> cliques(bool white) const {
    std::vector<Clique> out;
    int base_sum = white ? N - 2 : N - 1;
    if (base_sum < 0) return out;
    for (int r = 0; r <= base_sum; ++r)
      for (int s = 0; s + r <= base_sum; ++s) {
        Loc base{r, s, base_sum - r - s};
        out.push_back(white ? white_clique_at(base) : black_clique_at(base));
      }
    return out;
  }

  // Every edge lies in exactly one black 3-clique.
  Clique black_clique_of_edge(const Loc& a, const Loc& b) const {
    if (!adjacent(a, b)) throw Error(Err::NotAdjacent, a.str() + " / " + b.str());
    Loc base{std::min(a.r, b.r), std::min(a.s, b.s), std::min(a.t, b.t)};
    return black_clique_at(base);
  }

  // ... and in at most one white 3-clique.
  std::optional<Clique> white_clique_of_edge(const Loc& a, const Loc& b) const {
    if (!adjacent(a, b)) throw Error(Err::NotAdjacent, a.str() + " / " + b.str());
    Loc base{std::min(a.r, b.r), std::min(a.s, b.s), std::min(a.t, b.t)};
    if (a.r == b.r) base.r -= 1;
    else if (a.s == b.s) base.s -= 1;
    else base.t -= 1;
    if (base.r < 0 || base.s < 0 || base.t < 0) return std::nullopt;
    return white_clique_at(base);
  }

  Loc corner(int eta) const { return unit_loc(eta, N); }

  std::vector<Loc> boundary(int eta) const {
    std::vector<Loc> out;
    for (const Loc& l : locs_)
      if (l.coord(eta) == 0) out.push_back(l);
    return out;
  }

  // The boundary geodesic [eta, xi] from the eta-corner to the xi-corner.
  std::vector<Loc> corner_path(int eta, int xi) const {
    if (eta == xi) throw Error(Err::BadAxes, "corner path needs distinct axes");
    std::vector<Loc> out;
    out.reserve(size_t(N) + 1);
    for (int i = 0; i <= N; ++i) {
      Loc l;
      if (eta == 1 && xi == 2) l = Loc{N - i, i, 0};
      else if (eta == 2 && xi == 1) l = Loc{i, N - i, 0};
      else if (eta == 2 && xi == 3) l = Loc{0, N - i, i};
      else if (eta == 3 && xi == 2) l = Loc{0, i, N - i};
      else if (eta == 3 && xi == 1) l = Loc{i, 0, N - i};
      else if (eta == 1 && xi == 3) l = Loc{N - i, 0, i};
      else throw Error(Err::BadAxes, "axis must be 1, 2 or 3");
      out.push_back(l);
    }
    return out;
  }

  // Poset Delta_{<=N}: coordinatewise order, meet = min, join = max if it
  // stays inside the poset.
  static bool poset_leq(const Loc& a, const Loc& b) {
    return a.r <= b.r && a.s <= b.s && a.t <= b.t;
  }
  static Loc meet(const Loc& a, const Loc& b) {
    return Loc{std::min(a.r, b.r), std::min(a.s, b.s), std::min(a.t, b.t)};
  }
  std::optional<Loc> join(const Loc& a, const Loc& b) const {
    Loc j{std::max(a.r, b.r), std::max(a.s, b.s), std::max(a.t, b.t)};
    if (j.sum() > N) return std::nullopt;
    return j;
  }

  bool in_poset(const Loc& l) const {
    return l.r >= 0 && l.s >= 0 && l.t >= 0 && l.sum() <= N;
  }

  std::vector<Loc> upset(const Loc& mu) const {
    if (!in_poset(mu)) throw Error(Err::OutOfPoset, mu.str());
    std::vector<Loc> out;
    for (const Loc& l : locs_)
      if (poset_leq(mu, l)) out.push_back(l);
    return out;
  }

  std::vector<Loc> flag_of_corners(int eta) const {
    std::vector<Loc> out;
    for (int n = 0; n <= N; ++n) out.push_back(unit_loc(eta, n));
    return out;
  }

  // A set is eta-geodesic iff distinct members have distinct eta-coordinates.
  static bool eta_geodesic(const std::vector<Loc>& set, int eta) {
    std::vector<int> seen;
    for (const Loc& l : set) {
      int c = l.coord(eta);
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
      seen.push_back(c);
    }
    return true;
  }

  // Canonical spanning tree: walk toward the 1-boundary along -alpha, then
  // slide along the 1-boundary toward the root (0,0,N).
  std::vector<std::pair<Loc, Loc>> canonical_spanning_tree() const {
    std::vector<std::pair<Loc, Loc>> edges;
    for (const Loc& l : locs_) {
      if (l.r >= 1)
        edges.emplace_back(l, Loc{l.r - 1, l.s + 1, l.t});
      else if (l.s >= 1)
        edges.emplace_back(l, Loc{0, l.s - 1, l.t + 1});
    }
    return edges;
  }

  // Planar embedding (r,s,t) -> (x,y) = (s,r). Under it the canonical white
  // clique order runs clockwise (doubled signed area -1).
  static std::pair<int, int> embed(const Loc& l) { return {l.s, l.r}; }

  // Doubled shoelace area of a closed cycle (first location repeated or not).
  static int64_t cycle_doubled_area(const std::vector<Loc>& cycle) {
    int64_t acc = 0;
    size_t n = cycle.size();
    if (n < 3) return 0;
    for (size_t i = 0; i < n; ++i) {
      auto [x0, y0] = embed(cycle[i]);
      auto [x1, y1] = embed(cycle[(i + 1) % n]);
      acc += int64_t(x0) * y1 - int64_t(x1) * y0;
    }
    return acc;
  }

 private:
  std::vector<Loc> locs_;
  std::vector<std::vector<int>> adj_;

  void walk_geodesics(const Loc& cur, const Loc& goal, std::vector<Loc>& path,
                      std::vector<std::vector<Loc>>& out) const {
    if (cur == goal) {
      out.push_back(path);
      return;
    }
    int d = distance(cur, goal);
    for (int nb : adj_[size_t(index(cur))]) {
      const Loc& next = locs_[size_t(nb)];
      if (distance(next, goal) != d - 1) continue;
      path.push_back(next);
      walk_geodesics(next, goal, path, out);
      path.pop_back();
    }
  }
};

// Spanning-tree utilities shared by the labelling construction.

inline bool is_spanning_tree(const DeltaGrid& g, const std::vector<std::pair<Loc, Loc>>& edges) {
  int n = g.size();
  if (int(edges.size()) != n - 1) return false;
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[size_t(i)] = i;
  auto find = [&](int x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  };
  for (const auto& [a, b] : edges) {
    if (!g.adjacent(a, b)) return false;
    int ra = find(g.index(a)), rb = find(g.index(b));
    if (ra == rb) return false;
    parent[size_t(ra)] = rb;
  }
  return true;
}

// Unique path between two locations using only tree edges; includes both
// endpoints. BFS over the tree adjacency.
inline std::vector<Loc> tree_path(const DeltaGrid& g,
                                  const std::vector<std::pair<Loc, Loc>>& edges,
                                  const Loc& from, const Loc& to) {
  int n = g.size();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [a, b] : edges) {
    adj[size_t(g.index(a))].push_back(g.index(b));
    adj[size_t(g.index(b))].push_back(g.index(a));
  }
  std::vector<int> prev(size_t(n), -2);
  std::vector<int> queue{g.index(from)};
  prev[size_t(g.index(from))] = -1;
  for (size_t h = 0; h < queue.size(); ++h) {
    int cur = queue[h];
    if (cur == g.index(to)) break;
    for (int nb : adj[size_t(cur)])
      if (prev[size_t(nb)] == -2) {
        prev[size_t(nb)] = cur;
        queue.push_back(nb);
      }
  }
  if (prev[size_t(g.index(to))] == -2)
    throw Error(Err::NotASpanningTree, "tree does not connect endpoints");
  std::vector<Loc> path;
  for (int cur = g.index(to); cur != -1; cur = prev[size_t(cur)])
    path.push_back(g.locations()[size_t(cur)]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace bav
