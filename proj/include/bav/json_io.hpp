#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bav/billiard.hpp"
#include "bav/fields.hpp"
#include "bav/flags.hpp"
#include "bav/labelling.hpp"
#include "bav/modules.hpp"

namespace bav {

using json = nlohmann::json;

/*
 * JSON document formats. Every document carries {"bav":1, "field":<token>}.
 * Scalars: rationals as "a/b" strings, GF(p) as integers in [0,p), rational
 * functions as {"num":[...],"den":[...]} with "a/b" coefficients ascending
 * in q and monic denominator. Objects keyed by location strings "r,s,t"
 * serialize in sorted key order, so output is byte-deterministic.
 */

inline json scalar_to_json(const Rationals&, const Rat& v) { return v.str(); }

inline Rat scalar_from_json(const Rationals&, const json& j) {
  if (!j.is_string()) throw Error(Err::Parse, "rational scalar must be a string");
  return Rat::parse(j.get<std::string>());
}

inline json scalar_to_json(const PrimeField&, const GFp& v) { return v.v; }

inline GFp scalar_from_json(const PrimeField& k, const json& j) {
  if (!j.is_number_integer()) throw Error(Err::Parse, "prime field scalar must be an integer");
  long long v = j.get<long long>();
  if (v < 0 || v >= (long long)k.p) throw Error(Err::Parse, "scalar out of field range");
  return GFp(uint32_t(v), k.p);
}

inline json scalar_to_json(const RationalFunctions&, const RatFunc& v) {
  json num = json::array(), den = json::array();
  for (const Rat& c : v.num.c) num.push_back(c.str());
  for (const Rat& c : v.den.c) den.push_back(c.str());
  return json{{"num", num}, {"den", den}};
}

inline RatFunc scalar_from_json(const RationalFunctions&, const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error(Err::Parse, "rational function scalar must have num/den");
  auto read_poly = [](const json& arr) {
    if (!arr.is_array()) throw Error(Err::Parse, "polynomial must be an array");
    Poly p;
    for (const auto& c : arr) {
      if (!c.is_string()) throw Error(Err::Parse, "polynomial coefficient must be a string");
      p.c.push_back(Rat::parse(c.get<std::string>()));
    }
    p.trim();
    return p;
  };
  return RatFunc(read_poly(j.at("num")), read_poly(j.at("den")));
}

inline json loc_to_json(const Loc& l) { return json::array({l.r, l.s, l.t}); }

inline Loc loc_from_key(const std::string& key) {
  int v[3] = {0, 0, 0};
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t next = i < 2 ? key.find(',', pos) : key.size();
    if (next == std::string::npos) throw Error(Err::Parse, "bad location key '" + key + "'");
    try {
      v[i] = std::stoi(key.substr(pos, next - pos));
    } catch (const std::exception&) {
      throw Error(Err::Parse, "bad location key '" + key + "'");
    }
    pos = next + 1;
  }
  return Loc{v[0], v[1], v[2]};
}

namespace detail {

template <class K>
json vec_to_json(const K& k, const Vec<K>& v) {
  json arr = json::array();
  for (const auto& e : v) arr.push_back(scalar_to_json(k, e));
  return arr;
}

template <class K>
Vec<K> vec_from_json(const K& k, const json& j) {
  if (!j.is_array()) throw Error(Err::Parse, "vector must be an array");
  Vec<K> v;
  for (const auto& e : j) v.push_back(scalar_from_json(k, e));
  return v;
}

template <class K>
json mat_to_json(const K& k, const Mat<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) rows.push_back(vec_to_json(k, m.row(i)));
  return rows;
}

inline void check_header(const json& j, const std::string& token) {
  if (!j.is_object()) throw Error(Err::Parse, "document must be an object");
  if (!j.contains("bav") || !(j.at("bav") == 1))
    throw Error(Err::Parse, "missing or unsupported schema version");
  if (!j.contains("field") || !j.at("field").is_string())
    throw Error(Err::Parse, "missing field token");
  if (j.at("field").get<std::string>() != token)
    throw Error(Err::ContextMismatch, "document field is " + j.at("field").get<std::string>() +
                                          ", expected " + token);
}

inline int read_diameter(const json& j) {
  if (!j.contains("diameter") || !j.at("diameter").is_number_integer())
    throw Error(Err::Parse, "missing diameter");
  return j.at("diameter").get<int>();
}

}  // namespace detail

inline std::string json_field_token(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.at("field").is_string())
    throw Error(Err::Parse, "missing field token");
  return j.at("field").get<std::string>();
}

template <class K>
json cba_to_json(const K& k, const ConcreteBilliardArray<K>& a) {
  json vecs = json::object();
  for (const Loc& l : a.grid.locations()) vecs[l.str()] = detail::vec_to_json(k, a.at(l));
  return json{{"bav", 1}, {"field", k.token()}, {"diameter", a.grid.N}, {"vectors", vecs}};
}

template <class K>
ConcreteBilliardArray<K> cba_from_json(const K& k, const json& j) {
  detail::check_header(j, k.token());
  DeltaGrid g(detail::read_diameter(j));
  if (!j.contains("vectors") || !j.at("vectors").is_object())
    throw Error(Err::Parse, "missing vectors");
  ConcreteBilliardArray<K> a{g, std::vector<Vec<K>>(size_t(g.size()), vec_zero(k, g.N + 1))};
  const json& vecs = j.at("vectors");
  if (int(vecs.size()) != g.size()) throw Error(Err::Parse, "wrong number of vectors");
  for (auto it = vecs.begin(); it != vecs.end(); ++it) {
    Vec<K> v = detail::vec_from_json(k, it.value());
    if (int(v.size()) != g.N + 1) throw Error(Err::Parse, "wrong vector length");
    a.at(loc_from_key(it.key())) = std::move(v);
  }
  return a;
}

template <class K>
json ba_to_json(const K& k, const BilliardArray<K>& a) {
  json subs = json::object();
  for (const Loc& l : a.grid.locations()) subs[l.str()] = detail::vec_to_json(k, a.gen(l));
  return json{{"bav", 1}, {"field", k.token()}, {"diameter", a.grid.N}, {"subspaces", subs}};
}

template <class K>
BilliardArray<K> ba_from_json(const K& k, const json& j) {
  detail::check_header(j, k.token());
  DeltaGrid g(detail::read_diameter(j));
  if (!j.contains("subspaces") || !j.at("subspaces").is_object())
    throw Error(Err::Parse, "missing subspaces");
  BilliardArray<K> a{g, std::vector<Vec<K>>(size_t(g.size()), vec_zero(k, g.N + 1))};
  const json& subs = j.at("subspaces");
  if (int(subs.size()) != g.size()) throw Error(Err::Parse, "wrong number of subspaces");
  for (auto it = subs.begin(); it != subs.end(); ++it) {
    Vec<K> v = detail::vec_from_json(k, it.value());
    if (int(v.size()) != g.N + 1) throw Error(Err::Parse, "wrong generator length");
    a.gens[size_t(g.index(loc_from_key(it.key())))] = normalized_generator(k, v);
  }
  return a;
}

// Labellings store one direction per edge, keyed "a>b" with a the
// lexicographically larger endpoint; the reverse label is implied.
template <class K>
json labelling_to_json(const K& k, const EdgeLabelling<K>& el) {
  json labels = json::object();
  const DeltaGrid& g = el.grid;
  for (int i = 0; i < g.size(); ++i)
    for (int j2 : g.neighbors(i)) {
      const Loc& a = g.locations()[size_t(i)];
      const Loc& b = g.locations()[size_t(j2)];
      if (b < a) labels[a.str() + ">" + b.str()] = scalar_to_json(k, el.at(i, j2));
    }
  return json{{"bav", 1}, {"field", k.token()}, {"diameter", g.N}, {"labels", labels}};
}

template <class K>
EdgeLabelling<K> labelling_from_json(const K& k, const json& j) {
  detail::check_header(j, k.token());
  DeltaGrid g(detail::read_diameter(j));
  if (!j.contains("labels") || !j.at("labels").is_object())
    throw Error(Err::Parse, "missing labels");
  std::map<std::pair<int, int>, typename K::Elem> beta;
  for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it) {
    const std::string& key = it.key();
    size_t sep = key.find('>');
    if (sep == std::string::npos) throw Error(Err::Parse, "bad edge key '" + key + "'");
    Loc a = loc_from_key(key.substr(0, sep));
    Loc b = loc_from_key(key.substr(sep + 1));
    typename K::Elem v = scalar_from_json(k, it.value());
    if (v.is_zero()) throw Error(Err::ConstraintViolation, "zero edge label");
    beta[{g.index(a), g.index(b)}] = v;
    beta[{g.index(b), g.index(a)}] = k.one() / v;
  }
  return make_edge_labelling(k, g, std::move(beta));
}

// Value function over Delta_M; "diameter" is the domain diameter M (the
// labellings it classifies live on Delta_(M+2)).
template <class K>
json vf_to_json(const K& k, const ValueFunction<K>& vf) {
  json values = json::object();
  for (const Loc& l : vf.domain.locations()) values[l.str()] = scalar_to_json(k, vf.at(l));
  return json{{"bav", 1}, {"field", k.token()}, {"diameter", vf.domain.N}, {"values", values}};
}

template <class K>
ValueFunction<K> vf_from_json(const K& k, const json& j) {
  detail::check_header(j, k.token());
  DeltaGrid g(detail::read_diameter(j));
  if (!j.contains("values") || !j.at("values").is_object())
    throw Error(Err::Parse, "missing values");
  ValueFunction<K> vf{g, std::vector<typename K::Elem>(size_t(g.size()), k.zero())};
  const json& values = j.at("values");
  if (int(values.size()) != g.size()) throw Error(Err::Parse, "wrong number of values");
  for (auto it = values.begin(); it != values.end(); ++it) {
    typename K::Elem v = scalar_from_json(k, it.value());
    if (v.is_zero()) throw Error(Err::ConstraintViolation, "value function must be nonzero");
    vf.values[size_t(g.index(loc_from_key(it.key())))] = v;
  }
  return vf;
}

template <class K>
json flag_to_json(const K& k, const Flag<K>& f) {
  json comps = json::array();
  for (const auto& u : f.U) comps.push_back(detail::mat_to_json(k, u.basis));
  return comps;
}

template <class K>
Flag<K> flag_from_json(const K& k, int N, const json& j) {
  if (!j.is_array()) throw Error(Err::Parse, "flag must be an array");
  std::vector<Subspace<K>> comps;
  for (const auto& mj : j) {
    if (!mj.is_array()) throw Error(Err::Parse, "flag component must be a matrix");
    std::vector<Vec<K>> rows;
    for (const auto& rj : mj) {
      Vec<K> r = detail::vec_from_json(k, rj);
      if (int(r.size()) != N + 1) throw Error(Err::Parse, "wrong basis row length");
      rows.push_back(std::move(r));
    }
    comps.push_back(span(k, N + 1, rows));
  }
  return make_flag(k, std::move(comps));
}

template <class K>
json flags_to_json(const K& k, const FlagTriple<K>& t) {
  return json{{"bav", 1},
              {"field", k.token()},
              {"diameter", t.f1.N},
              {"f1", flag_to_json(k, t.f1)},
              {"f2", flag_to_json(k, t.f2)},
              {"f3", flag_to_json(k, t.f3)}};
}

template <class K>
FlagTriple<K> flags_from_json(const K& k, const json& j) {
  detail::check_header(j, k.token());
  int N = detail::read_diameter(j);
  for (const char* key : {"f1", "f2", "f3"})
    if (!j.contains(key)) throw Error(Err::Parse, std::string("missing ") + key);
  return FlagTriple<K>{flag_from_json(k, N, j.at("f1")), flag_from_json(k, N, j.at("f2")),
                       flag_from_json(k, N, j.at("f3"))};
}

template <class K>
json module_to_json(const K& k, const ModuleOps<K>& m) {
  json out{{"bav", 1},
           {"field", k.token()},
           {"diameter", m.N},
           {"flavor", m.flavor == Flavor::Sl2 ? "sl2" : "uq"},
           {"X", detail::mat_to_json(k, m.X)},
           {"Y", detail::mat_to_json(k, m.Y)},
           {"Z", detail::mat_to_json(k, m.Z)},
           {"nu_x", detail::mat_to_json(k, m.nux)},
           {"nu_y", detail::mat_to_json(k, m.nuy)},
           {"nu_z", detail::mat_to_json(k, m.nuz)}};
  if (m.flavor == Flavor::Uq) out["q"] = scalar_to_json(k, m.q);
  return out;
}

inline json violations_to_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json where = json::array();
    for (const Loc& l : v.where) where.push_back(loc_to_json(l));
    arr.push_back(json{{"kind", v.kind}, {"where", where}});
  }
  return arr;
}

}  // namespace bav
