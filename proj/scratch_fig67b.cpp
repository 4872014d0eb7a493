// Dev scratch: relaxed Fig. 6 search under the canonical sweep order.
#include <iostream>
#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
using namespace pipedreams;

int main() {
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  long hits = 0;
  for (int t = 0; t <= 6; ++t)
    for (const auto& s : enumerate_shapes(5, t)) {
      if (s.t != t) continue;
      auto geo = make_geometry(s);
      if (geo->crossable_cells().size() > 12) continue;
      if (!is_sortable(*geo, omega)) continue;
      std::vector<SweepDecision> dec;
      sweep_insert(geo, omega, pi, &dec);
      if (dec.empty()) continue;
      auto pair_is = [](const SweepDecision& d, int a, int b) {
        return (d.west == a && d.south == b) || (d.west == b && d.south == a);
      };
      if (!(pair_is(dec[0], 4, 5) && !dec[0].cross)) continue;
      std::vector<int> narrated;  // indices of decisions on {1,2} or {1,3}
      for (size_t i = 0; i < dec.size(); ++i)
        if (pair_is(dec[i], 1, 2) || pair_is(dec[i], 1, 3)) narrated.push_back((int)i);
      if (narrated.size() != 3) continue;
      const auto& a = dec[narrated[0]];
      const auto& b = dec[narrated[1]];
      const auto& c = dec[narrated[2]];
      if (!(pair_is(a, 1, 2) && a.cross && !a.last_point)) continue;
      if (!(pair_is(b, 1, 3) && !b.cross)) continue;
      if (!(pair_is(c, 1, 3) && c.cross && c.last_point)) continue;
      bool others_contact = true;
      for (size_t i = 1; i < dec.size(); ++i)
        if ((int)i != narrated[0] && (int)i != narrated[2] && dec[i].cross)
          others_contact = false;
      if (!others_contact) continue;
      ++hits;
      if (hits <= 15) {
        std::cout << s.id() << " cells=" << geo->cells().size() << " ndec=" << dec.size()
                  << " narrated@(" << narrated[0] << "," << narrated[1] << "," << narrated[2]
                  << ") last_is_final=" << (narrated[2] == (int)dec.size() - 1) << " seq:";
        for (auto& d : dec)
          std::cout << (d.cross ? " X(" : " C(") << d.west << d.south
                    << (d.last_point ? "!" : "") << ")";
        std::cout << "\n";
      }
    }
  std::cout << "hits=" << hits << "\n";
  return 0;
}
