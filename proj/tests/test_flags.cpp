#include <catch2/catch_amalgamated.hpp>

#include <bav/bav.hpp>

using namespace bav;

namespace {

template <class K>
Flag<K> coordinate_flag(const K& k, int n, bool reversed) {
  std::vector<Subspace<K>> comps;
  std::vector<Vec<K>> gens;
  for (int i = 0; i <= n; ++i) {
    Vec<K> e = vec_zero(k, n + 1);
    e[size_t(reversed ? n - i : i)] = k.one();
    gens.push_back(e);
    comps.push_back(span(k, n + 1, gens));
  }
  return make_flag(k, comps);
}

// The definition applied over the full index range, not just the decisive band.
template <class K>
bool opposite_full_range(const K& k, const Flag<K>& f, const Flag<K>& g) {
  for (int i = 0; i <= f.N; ++i)
    for (int j = 0; j <= f.N; ++j)
      if (i + j < f.N && subspace_intersect(k, f.U[size_t(i)], g.U[size_t(j)]).dim() != 0)
        return false;
  return true;
}

template <class K>
bool totally_opposite_full_range(const K& k, const FlagTriple<K>& t) {
  int n = t.f1.N;
  for (int r = 0; r <= n; ++r)
    for (int s = 0; s <= n; ++s)
      for (int u = 0; u <= n; ++u)
        if (r + s + u > n && triple_intersection(k, t, r, s, u).dim() != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("flag construction validates shape") {
  Rationals k;
  auto f = coordinate_flag(k, 3, false);
  CHECK(f.N == 3);
  CHECK(f.U.back().dim() == 4);

  // non-nested components are rejected
  CHECK_THROWS_AS(make_flag(k, std::vector<Subspace<Rationals>>{}), Error);
  auto comps = f.U;
  std::swap(comps[1], comps[2]);
  CHECK_THROWS_AS(make_flag(k, comps), Error);
}

TEST_CASE("opposite flags: decisive band equals the full definition") {
  PrimeField k(11);
  Rng rng(3);
  for (int n = 1; n <= 4; ++n) {
    auto fwd = coordinate_flag(k, n, false);
    auto rev = coordinate_flag(k, n, true);
    CHECK(are_opposite(k, fwd, rev));
    CHECK_FALSE(are_opposite(k, fwd, fwd));

    for (int trial = 0; trial < 6; ++trial) {
      Mat<PrimeField> m = random_invertible(k, rng, n + 1);
      std::vector<Subspace<PrimeField>> comps;
      std::vector<Vec<PrimeField>> gens;
      for (int i = 0; i <= n; ++i) {
        gens.push_back(m.row(i));
        comps.push_back(span(k, n + 1, gens));
      }
      auto g = make_flag(k, comps);
      CHECK(are_opposite(k, fwd, g) == opposite_full_range(k, fwd, g));
      CHECK(are_opposite(k, g, fwd) == are_opposite(k, fwd, g));
    }
  }
}

TEST_CASE("flag triples from arrays are totally opposite") {
  PrimeField k(101);
  Rng rng(11);
  for (int n = 1; n <= 4; ++n) {
    auto cba = random_cba(k, rng, n);
    auto ba = billiard_from_concrete(k, cba);
    auto t = flags_from_billiard(k, ba);
    CHECK(are_totally_opposite(k, t));
    CHECK(totally_opposite_full_range(k, t));
    CHECK(are_opposite(k, t.f1, t.f2));
    CHECK(are_opposite(k, t.f2, t.f3));
    CHECK(are_opposite(k, t.f3, t.f1));
  }

  // the three distinct lines of the projective line over GF(2) are mutually
  // in general position
  PrimeField k2(2);
  auto e0 = coordinate_flag(k2, 1, false);
  auto e1 = coordinate_flag(k2, 1, true);
  Vec<PrimeField> diag{k2.one(), k2.one()};
  std::vector<Subspace<PrimeField>> comps{line_of(k2, diag), full_subspace(k2, 2)};
  auto d = make_flag(k2, comps);
  FlagTriple<PrimeField> t{e0, e1, d};
  CHECK(are_opposite(k2, e0, e1));
  CHECK(are_opposite(k2, e1, d));
  CHECK(are_opposite(k2, d, e0));
  CHECK(are_totally_opposite(k2, t));

  // but a repeated flag is never totally opposite
  FlagTriple<PrimeField> bad{e0, e1, e1};
  CHECK_FALSE(are_totally_opposite(k2, bad));
}

TEST_CASE("dimension laws for opposite pairs and totally opposite triples") {
  for (const char* tok : {"q", "gf101", "fq"}) {
    auto fv = parse_field_token(tok);
    std::visit(
        [&](const auto& k) {
          Rng rng(17);
          for (int n = 1; n <= 4; ++n) {
            auto cba = random_cba(k, rng, n);
            auto t = flags_from_billiard(k, billiard_from_concrete(k, cba));
            // pairwise: dim(U_r cap U'_s) = r + s - N + 1 when nonnegative
            for (int r = 0; r <= n; ++r)
              for (int s = 0; s <= n; ++s) {
                int expect = std::max(r + s - n + 1, 0);
                CHECK(subspace_intersect(k, t.f1.U[size_t(r)], t.f2.U[size_t(s)]).dim() ==
                      expect);
              }
            // triple: dim = N - r - s - t + 1 when nonnegative
            for (int r = 0; r <= n; ++r)
              for (int s = 0; r + s <= n; ++s)
                for (int u = 0; r + s + u <= n + 1; ++u) {
                  if (u > n) continue;
                  int expect = std::max(n - r - s - u + 1, 0);
                  CHECK(triple_intersection(k, t, r, s, u).dim() == expect);
                }
          }
        },
        fv);
  }
}

TEST_CASE("decompositions of lines induce flags") {
  Rationals k;
  std::vector<Subspace<Rationals>> lines;
  for (int i = 0; i < 3; ++i) {
    Vec<Rationals> v = vec_zero(k, 3);
    v[size_t(i)] = k.one();
    if (i > 0) v[0] = k.from_int(i);
    lines.push_back(line_of(k, v));
  }
  auto f = flag_from_decomposition(k, lines);
  CHECK(f.N == 2);
  CHECK(f.U[0] == lines[0]);

  // dependent parts are rejected
  auto bad = lines;
  bad[2] = lines[0];
  CHECK_THROWS_AS(flag_from_decomposition(k, bad), Error);
}
