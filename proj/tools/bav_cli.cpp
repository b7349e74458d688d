#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include <bav/bav.hpp>

namespace {

using bav::json;

// Usage-class errors (bad flags, malformed input, wrong field) exit 2;
// semantic failures (axiom violations, failed round-trips) exit 1.
int exit_code_for(bav::Err e) {
  switch (e) {
    case bav::Err::Parse:
    case bav::Err::BadArgument:
    case bav::Err::BadPrime:
    case bav::Err::BadAxes:
    case bav::Err::BadDiameter:
    case bav::Err::DiameterTooSmall:
    case bav::Err::ContextMismatch:
    case bav::Err::AmbientMismatch:
    case bav::Err::GridMismatch:
    case bav::Err::BadQ:
    case bav::Err::BadCharacteristic:
    case bav::Err::NotAdjacent:
    case bav::Err::OutOfPoset:
    case bav::Err::NotAWalk:
      return 2;
    default:
      return 1;
  }
}

json read_input(const std::string& path) {
  try {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw bav::Error(bav::Err::Parse, "cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw bav::Error(bav::Err::Parse, e.what());
  }
}

void write_output(const std::string& path, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw bav::Error(bav::Err::Parse, "cannot open " + path);
  out << text;
}

bav::FieldVariant field_of_document(const json& j) {
  return bav::parse_field_token(bav::json_field_token(j));
}

// --q literals: rationals take "a/b", prime fields an integer, and the
// rational-function field an integer exponent e meaning q^e.
bav::Rat parse_q_literal(const bav::Rationals&, const std::string& s) { return bav::Rat::parse(s); }

bav::GFp parse_q_literal(const bav::PrimeField& k, const std::string& s) {
  try {
    return k.from_int(std::stol(s));
  } catch (const std::exception&) {
    throw bav::Error(bav::Err::Parse, "expected an integer for --q over " + k.token());
  }
}

bav::RatFunc parse_q_literal(const bav::RationalFunctions& k, const std::string& s) {
  try {
    return k.q_power(std::stol(s));
  } catch (const std::exception&) {
    throw bav::Error(bav::Err::Parse, "expected an integer exponent for --q over " + k.token());
  }
}

template <class K>
typename K::Elem default_uq_q(const K& k) {
  if constexpr (std::is_same_v<K, bav::RationalFunctions>)
    return k.q();
  else
    throw bav::Error(bav::Err::BadArgument, "--q is required for --flavor uq over " + k.token());
}

template <class K>
std::vector<bav::Vec<K>> identity_columns(const K& k, int n) {
  bav::Mat<K> id = bav::mat_identity(k, n);
  std::vector<bav::Vec<K>> cols;
  cols.reserve(size_t(n));
  for (int i = 0; i < n; ++i) cols.push_back(id.row(i));
  return cols;
}

template <class K>
bav::ConcreteBilliardArray<K> synthesize_cba(const K& k, int n, const typename K::Elem& value,
                                             std::optional<uint64_t> seed) {
  bav::EdgeLabelling<K> el =
      n < 2 ? bav::unit_labelling(k, n)
            : bav::labelling_from_values(k, bav::constant_value_function(k, n - 2, value));
  std::vector<bav::Vec<K>> basis;
  if (seed) {
    bav::Rng rng(*seed);
    basis = bav::random_boundary_basis(k, rng, n);
  } else {
    basis = identity_columns(k, n + 1);
  }
  return bav::reconstruct_cba(k, el, basis);
}

struct GenOpts {
  int n = 0;
  std::string field = "q";
  uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOpts& o) {
  return std::visit(
      [&](const auto& k) {
        bav::Rng rng(o.seed);
        auto cba = bav::random_cba(k, rng, o.n);
        json j = bav::cba_to_json(k, cba);
        j["meta"] = json{{"seed", o.seed}};
        write_output(o.out, j);
        return 0;
      },
      bav::parse_field_token(o.field));
}

struct VerifyOpts {
  std::string in;
  int threads = 1;
};

int run_verify(const VerifyOpts& o) {
  json j = read_input(o.in);
  bool concrete = j.contains("vectors");
  if (!concrete && !j.contains("subspaces"))
    throw bav::Error(bav::Err::Parse, "expected a billiard array document");
  return std::visit(
      [&](const auto& k) {
        std::vector<bav::Violation> vs;
        if (concrete)
          vs = bav::verify_concrete(k, bav::cba_from_json(k, j), o.threads);
        else
          vs = bav::verify_billiard(k, bav::ba_from_json(k, j));
        json report{{"bav", 1}, {"ok", vs.empty()}, {"violations", bav::violations_to_json(vs)}};
        write_output("", report);
        return vs.empty() ? 0 : 1;
      },
      field_of_document(j));
}

struct IoOpts {
  std::string in, out;
};

template <class K>
bav::BilliardArray<K> load_billiard(const K& k, const json& j) {
  if (j.contains("vectors")) return bav::billiard_from_concrete(k, bav::cba_from_json(k, j));
  if (j.contains("subspaces")) return bav::ba_from_json(k, j);
  throw bav::Error(bav::Err::Parse, "expected a billiard array document");
}

int run_values(const IoOpts& o) {
  json j = read_input(o.in);
  return std::visit(
      [&](const auto& k) {
        auto ba = load_billiard(k, j);
        write_output(o.out, bav::vf_to_json(k, bav::value_function(k, ba)));
        return 0;
      },
      field_of_document(j));
}

struct FromValuesOpts {
  std::string in, out;
  std::optional<uint64_t> seed;
};

int run_from_values(const FromValuesOpts& o) {
  json j = read_input(o.in);
  return std::visit(
      [&](const auto& k) {
        auto vf = bav::vf_from_json(k, j);
        auto el = bav::labelling_from_values(k, vf);
        using CtxT = std::decay_t<decltype(k)>;
        std::vector<bav::Vec<CtxT>> basis;
        if (o.seed) {
          bav::Rng rng(*o.seed);
          basis = bav::random_boundary_basis(k, rng, el.grid.N);
        } else {
          basis = identity_columns(k, el.grid.N + 1);
        }
        write_output(o.out, bav::cba_to_json(k, bav::reconstruct_cba(k, el, basis)));
        return 0;
      },
      field_of_document(j));
}

int run_flags(const IoOpts& o) {
  json j = read_input(o.in);
  return std::visit(
      [&](const auto& k) {
        auto ba = load_billiard(k, j);
        write_output(o.out, bav::flags_to_json(k, bav::flags_from_billiard(k, ba)));
        return 0;
      },
      field_of_document(j));
}

struct RoundtripOpts {
  std::string in;
  int n = 3;
  std::string field = "q";
  uint64_t seed = 0;
};

int run_roundtrip(const RoundtripOpts& o) {
  json j;
  bav::FieldVariant fv = o.in.empty() ? bav::parse_field_token(o.field) : [&] {
    j = read_input(o.in);
    return field_of_document(j);
  }();
  return std::visit(
      [&](const auto& k) {
        auto ba = [&] {
          if (!o.in.empty()) return load_billiard(k, j);
          bav::Rng rng(o.seed);
          return bav::billiard_from_concrete(k, bav::random_cba(k, rng, o.n));
        }();
        auto fl = bav::flags_from_billiard(k, ba);
        bool flags_ok = bav::billiard_from_flags(k, fl) == ba;
        bool flags_rev_ok = bav::flags_from_billiard(k, bav::billiard_from_flags(k, fl)) == fl;
        bool classify_ok = true;
        if (ba.grid.N >= 2) {
          auto vf = bav::value_function(k, ba);
          auto el = bav::labelling_from_values(k, vf);
          using CtxT = std::decay_t<decltype(k)>;
          std::vector<bav::Vec<CtxT>> basis = identity_columns(k, ba.grid.N + 1);
          auto rebuilt = bav::reconstruct_cba(k, el, basis);
          classify_ok = bav::value_function(k, rebuilt) == vf;
        }
        bool ok = flags_ok && flags_rev_ok && classify_ok;
        json report{{"bav", 1},
                    {"ok", ok},
                    {"checks",
                     json{{"flags", flags_ok},
                          {"flags_reverse", flags_rev_ok},
                          {"classification", classify_ok}}}};
        write_output("", report);
        return ok ? 0 : 1;
      },
      fv);
}

struct ModuleOpts {
  std::string flavor;
  std::string in, out;
  int n = -1;
  std::string field;
  std::string q_literal;
  std::optional<uint64_t> seed;
  bool check = false;
};

template <class K>
int run_module_on(const K& k, const ModuleOpts& o, const json* input) {
  bav::Flavor flavor = o.flavor == "sl2" ? bav::Flavor::Sl2 : bav::Flavor::Uq;
  typename K::Elem q = k.zero();
  if (flavor == bav::Flavor::Uq)
    q = o.q_literal.empty() ? default_uq_q(k) : parse_q_literal(k, o.q_literal);

  bav::ConcreteBilliardArray<K> cba = [&] {
    if (input) return bav::cba_from_json(k, *input);
    if (o.n < 0)
      throw bav::Error(bav::Err::BadArgument, "module needs --in or --n");
    typename K::Elem target =
        flavor == bav::Flavor::Sl2 ? k.one() : k.one() / (q * q);
    return synthesize_cba(k, o.n, target, o.seed);
  }();

  auto m = bav::build_module(k, cba, flavor, q);
  json out = bav::module_to_json(k, m);
  bool ok = true;
  if (o.check) {
    auto rel = bav::check_relations(k, m);
    auto local = bav::local_action_check(k, cba, m);
    bool nil = bav::nu_nilpotent(k, m);
    bool flags_match =
        bav::nu_flags(k, m) == bav::flags_from_billiard(k, bav::billiard_from_concrete(k, cba));
    ok = rel.empty() && local.empty() && nil && flags_match;
    json checks{{"relations", json::array()},
                {"local_actions", json::array()},
                {"nu_nilpotent", nil},
                {"nu_flags_match", flags_match}};
    for (const auto& r : rel) checks["relations"].push_back(r);
    for (const auto& l : local) checks["local_actions"].push_back(l);
    try {
      checks["irreducible"] = bav::check_irreducible(k, m);
    } catch (const bav::Error&) {
      checks["irreducible"] = nullptr;
    }
    out["checks"] = checks;
    out["ok"] = ok;
  }
  write_output(o.out, out);
  return ok ? 0 : 1;
}

int run_module(const ModuleOpts& o) {
  if (!o.in.empty()) {
    json j = read_input(o.in);
    if (!j.contains("vectors"))
      throw bav::Error(bav::Err::Parse, "module expects a concrete billiard array");
    return std::visit([&](const auto& k) { return run_module_on(k, o, &j); },
                      field_of_document(j));
  }
  std::string tok = o.field.empty() ? (o.flavor == "sl2" ? "q" : "fq") : o.field;
  return std::visit([&](const auto& k) { return run_module_on(k, o, nullptr); },
                    bav::parse_field_token(tok));
}

struct ExamplesOpts {
  std::string which;
  int n = 3;
  std::string out;
};

int run_examples(const ExamplesOpts& o) {
  if (o.which == "poly") {
    bav::Rationals k;
    write_output(o.out, bav::cba_to_json(k, bav::poly_family_cba(k, o.n)));
    return 0;
  }
  bav::RationalFunctions k;
  write_output(o.out, bav::cba_to_json(k, bav::q_family_cba(k, o.n)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"billiard arrays over exact fields"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* cgen = app.add_subcommand("gen", "generate a random concrete billiard array");
  cgen->add_option("--n", gen.n, "grid diameter")->required();
  cgen->add_option("--field", gen.field, "field token: q, gf<p>, fq");
  cgen->add_option("--seed", gen.seed, "rng seed");
  cgen->add_option("--out", gen.out, "output path (default stdout)");

  VerifyOpts verify;
  auto* cverify = app.add_subcommand("verify", "check the billiard array axioms");
  cverify->add_option("--in", verify.in, "input path (default stdin)");
  cverify->add_option("--threads", verify.threads, "parallel verification workers");

  IoOpts values;
  auto* cvalues = app.add_subcommand("values", "compute the value function of an array");
  cvalues->add_option("--in", values.in, "input path (default stdin)");
  cvalues->add_option("--out", values.out, "output path (default stdout)");

  FromValuesOpts fromv;
  auto* cfromv = app.add_subcommand("from-values", "build an array with a given value function");
  cfromv->add_option("--in", fromv.in, "value function input path (default stdin)");
  cfromv->add_option("--out", fromv.out, "output path (default stdout)");
  uint64_t fromv_seed = 0;
  auto* fromv_seed_opt = cfromv->add_option("--seed", fromv_seed, "randomize the boundary basis");

  IoOpts flags;
  auto* cflags = app.add_subcommand("flags", "compute the induced flag triple");
  cflags->add_option("--in", flags.in, "input path (default stdin)");
  cflags->add_option("--out", flags.out, "output path (default stdout)");

  RoundtripOpts rt;
  auto* crt = app.add_subcommand("roundtrip", "exercise the flag and classification bijections");
  crt->add_option("--in", rt.in, "input path (omit to generate)");
  crt->add_option("--n", rt.n, "grid diameter when generating");
  crt->add_option("--field", rt.field, "field token when generating");
  crt->add_option("--seed", rt.seed, "rng seed when generating");

  ModuleOpts mod;
  auto* cmod = app.add_subcommand("module", "build the induced module operators");
  cmod->add_option("--flavor", mod.flavor, "sl2 or uq")
      ->required()
      ->check(CLI::IsMember({"sl2", "uq"}));
  cmod->add_option("--in", mod.in, "concrete array input path");
  cmod->add_option("--n", mod.n, "diameter for a synthesized array");
  cmod->add_option("--field", mod.field, "field token for a synthesized array");
  cmod->add_option("--q", mod.q_literal, "deformation parameter literal");
  uint64_t mod_seed = 0;
  auto* mod_seed_opt = cmod->add_option("--seed", mod_seed, "randomize the synthesized basis");
  cmod->add_flag("--check", mod.check, "verify relations and local actions");
  cmod->add_option("--out", mod.out, "output path (default stdout)");

  ExamplesOpts ex;
  auto* cex = app.add_subcommand("examples", "emit a classical example array");
  cex->add_option("--which", ex.which, "poly or q")
      ->required()
      ->check(CLI::IsMember({"poly", "q"}));
  cex->add_option("--n", ex.n, "grid diameter");
  cex->add_option("--out", ex.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cgen) return run_gen(gen);
    if (*cverify) return run_verify(verify);
    if (*cvalues) return run_values(values);
    if (*cfromv) {
      if (*fromv_seed_opt) fromv.seed = fromv_seed;
      return run_from_values(fromv);
    }
    if (*cflags) return run_flags(flags);
    if (*crt) return run_roundtrip(rt);
    if (*cmod) {
      if (*mod_seed_opt) mod.seed = mod_seed;
      return run_module(mod);
    }
    if (*cex) return run_examples(ex);
  } catch (const bav::Error& e) {
    int rc = exit_code_for(e.code);
    if (rc == 1) {
      json report{{"bav", 1}, {"ok", false}, {"error", e.what()}};
      std::cout << report.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
