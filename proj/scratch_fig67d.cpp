// Dev scratch: full five-step decision traces matching Fig. 6 narration.
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
      const PipeDream dream = sweep_insert(geo, omega, pi, &dec);
      auto is = [&](int k, int a, int b, bool cross, bool last) {
        return ((dec[k].west == a && dec[k].south == b) ||
                (dec[k].west == b && dec[k].south == a)) &&
               dec[k].cross == cross && dec[k].last_point == last;
      };
      if (dec.size() == 5 && is(0, 4, 5, false, false) && is(1, 1, 2, true, false) &&
          is(2, 1, 3, false, false) && is(3, 2, 1, false, false) && is(4, 1, 3, true, true)) {
        ++hits;
        if (hits <= 12)
          std::cout << s.id() << " cells=" << geo->cells().size()
                    << " crossings=" << dream.crossing_count() << "\n" << ascii_render(dream);
      }
    }
  std::cout << "hits=" << hits << "\n";
  return 0;
}
