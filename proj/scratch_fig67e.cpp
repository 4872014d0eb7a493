// Dev scratch: print full decision traces for Fig. 6 candidate shapes.
#include <iostream>
#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
using namespace pipedreams;

int main() {
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  long shown = 0;
  for (int t = 0; t <= 6; ++t)
    for (const auto& s : enumerate_shapes(5, t)) {
      if (s.t != t) continue;
      auto geo = make_geometry(s);
      if (geo->crossable_cells().size() > 12) continue;
      if (!is_sortable(*geo, omega)) continue;
      std::vector<SweepDecision> dec;
      const PipeDream dream = sweep_insert(geo, omega, pi, &dec);
      auto pair_is = [&](const SweepDecision& d, int a, int b) {
        return (d.west == a && d.south == b) || (d.west == b && d.south == a);
      };
      if (dec.empty() || !(pair_is(dec[0], 4, 5) && !dec[0].cross)) continue;
      std::string sig;
      for (auto& d : dec)
        if (pair_is(d, 1, 2) || pair_is(d, 1, 3)) {
          sig += d.cross ? 'X' : 'C';
          sig += std::to_string(d.west) + std::to_string(d.south);
          if (d.last_point) sig += '!';
          sig += ' ';
        }
      if (sig != "X12 C13 C21 X13! ") continue;
      if (++shown > 6) continue;
      std::cout << s.id() << " cells=" << geo->cells().size() << " ndec=" << dec.size() << " :";
      for (auto& d : dec)
        std::cout << (d.cross ? " X(" : " C(") << d.west << d.south << (d.last_point ? "!" : "")
                  << ")";
      std::cout << "\n";
    }
  std::cout << "total=" << shown << "\n";
  return 0;
}
