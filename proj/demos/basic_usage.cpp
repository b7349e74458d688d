// End-to-end tour: build an array over GF(101), inspect its invariants,
// rebuild it from boundary data, and attach the induced module.

#include <bav/bav.hpp>

#include <iostream>

using namespace bav;

int main() {
  PrimeField k(101);
  Rng rng(42);
  int n = 3;

  auto cba = random_cba(k, rng, n);
  std::cout << "array on the diameter-" << n << " grid, " << cba.grid.size()
            << " cells, ambient dimension " << cba.ambient() << "\n";
  std::cout << "violations: " << verify_concrete(k, cba).size() << "\n";

  auto psi = value_function(k, cba);
  std::cout << "value function:";
  for (const Loc& l : psi.domain.locations())
    std::cout << " psi(" << l.str() << ")=" << psi.at(l).v;
  std::cout << "\n";

  // boundary values + white-clique values determine the array up to scaling
  auto el = edge_labelling_from_cba(k, cba);
  std::vector<Vec<PrimeField>> boundary;
  for (const Loc& l : cba.grid.corner_path(2, 3)) boundary.push_back(cba.at(l));
  auto rebuilt = reconstruct_cba(k, el, boundary);
  bool same_lines = true;
  for (const Loc& l : cba.grid.locations())
    same_lines = same_lines && line_of(k, rebuilt.at(l)) == line_of(k, cba.at(l));
  std::cout << "reconstruction from one boundary spans the same lines: "
            << (same_lines ? "yes" : "no") << "\n";

  // the array is equivalent to a totally opposite triple of flags
  auto ba = billiard_from_concrete(k, cba);
  auto flags = flags_from_billiard(k, ba);
  std::cout << "round trip through flags returns the array: "
            << (billiard_from_flags(k, flags) == ba ? "yes" : "no") << "\n";

  // arrays with unit value function induce an sl2 action
  auto unit = reconstruct_cba(k, labelling_from_values(k, constant_value_function(k, n - 2, k.one())),
                              boundary);
  auto m = build_module(k, unit, Flavor::Sl2, k.one());
  std::cout << "sl2 relations violated: " << check_relations(k, m).size() << "\n";
  std::cout << "local actions violated: " << local_action_check(k, unit, m).size() << "\n";
  std::cout << "nilpotent parts recover the flags: "
            << (nu_flags(k, m) == flags_from_billiard(k, billiard_from_concrete(k, unit)) ? "yes"
                                                                                          : "no")
            << "\n";

  std::cout << "document:\n" << cba_to_json(k, cba).dump(2) << "\n";
  return 0;
}
