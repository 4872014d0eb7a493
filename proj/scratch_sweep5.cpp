// Dev scratch: find shapes + cell assignments realizing the Fig. 6 trace
// under SOME linear extension of the SW->NE cell order.
#include <algorithm>
#include <iostream>
#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
using namespace pipedreams;

int main() {
  long found = 0;
  for (int t = 0; t <= 8; ++t)
    for (const auto& s0 : enumerate_shapes(5, t)) {
      if (s0.t != t) continue;
      auto geo = make_geometry(s0);
      const auto& cross = geo->crossable_cells();
      if (cross.size() < 5 || cross.size() > 12) continue;
      std::vector<int> d1, d2, d4, all;
      for (int c : cross) {
        all.push_back(c);
        if (geo->diag(c) == 1) d1.push_back(c);
        if (geo->diag(c) == 2) d2.push_back(c);
        if (geo->diag(c) == 4) d4.push_back(c);
      }
      if (d2.size() != 2 || d1.empty() || d4.empty()) continue;
      auto sw_of = [&](int a, int b) {  // a strictly SW-or-equal-coord of b, a != b
        const Point pa = geo->cell(a), pb = geo->cell(b);
        return !(pa == pb) && pa.x <= pb.x && pa.y <= pb.y;
      };
      // c3 = SW diag-2 cell, c5 = NE one.
      int c3 = d2[0], c5 = d2[1];
      if (geo->cell(c5).x < geo->cell(c3).x) std::swap(c3, c5);
      for (int c1 : d4)
        for (int c2 : d1)
          for (int c4 : all) {
            if (c4 == c1 || c4 == c2 || c4 == c3 || c4 == c5) continue;
            std::vector<int> pat{c1, c2, c3, c4, c5};
            std::set<int> patset(pat.begin(), pat.end());
            if (patset.size() != 5) continue;
            bool ok = true;
            for (int k = 0; k < 5 && ok; ++k) {
              // no crossable outside the already-swept prefix is strictly SW of pat[k]
              std::set<int> swept(pat.begin(), pat.begin() + k);
              for (int e : all)
                if (!swept.count(e) && e != pat[k] && sw_of(e, pat[k])) ok = false;
            }
            if (!ok) continue;
            ++found;
            if (found <= 12) {
              std::cout << s0.id() << " cells=" << geo->cells().size() << " pattern:";
              for (int c : pat)
                std::cout << " (" << geo->cell(c).x << "," << geo->cell(c).y << ")d"
                          << geo->diag(c);
              std::cout << " extras=" << all.size() - 5 << "\n";
            }
          }
    }
  std::cout << "assignments found: " << found << "\n";
  return 0;
}
