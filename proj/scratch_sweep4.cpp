// Dev scratch: print decision sequences that start contact(4,5), cross(1,2).
#include <algorithm>
#include <iostream>
#include <sstream>
#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
using namespace pipedreams;

int main() {
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  const char* names[] = {"colmajor", "rowmajor", "adiag-x-asc", "adiag-x-desc"};
  for (int mode = 0; mode < 4; ++mode) {
    long hits = 0;
    for (int t = 0; t <= 6; ++t)
      for (const auto& s0 : enumerate_shapes(5, t)) {
        if (s0.t != t) continue;
        auto geo = make_geometry(s0);
        if (geo->crossable_cells().size() > 10 || geo->crossable_cells().size() < 4) continue;
        if (!is_sortable(*geo, omega)) continue;
        std::vector<int> order = geo->crossable_cells();
        auto key = [&](int c) {
          const Point p = geo->cell(c);
          switch (mode) {
            case 0: return std::pair<int, int>(p.x, p.y);
            case 1: return std::pair<int, int>(p.y, p.x);
            case 2: return std::pair<int, int>(p.x + p.y, p.x);
            default: return std::pair<int, int>(p.x + p.y, -p.x);
          }
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
        std::vector<int> letters;
        for (int c : order) letters.push_back(geo->diag(c));
        const int m = (int)letters.size();
        std::vector<Permutation> suffix(m + 1, Permutation::identity(5));
        for (int k = m - 1; k >= 0; --k) {
          Permutation sw = Permutation::identity(5).after_swap(letters[k]).compose(suffix[k + 1]);
          suffix[k] = (length(sw) > length(suffix[k + 1])) ? sw : suffix[k + 1];
        }
        const auto opos = omega.positions();
        const auto ppos = pi.positions();
        Permutation front = Permutation::identity(5);
        std::ostringstream seq;
        int step = 0;
        bool ok12 = false;
        for (int k = 0; k < m; ++k) {
          const int d = letters[k];
          const int p = front(d), q = front(d + 1);
          bool cross = false, last = false;
          if (opos[p - 1] > opos[q - 1]) {
            if (ppos[p - 1] > ppos[q - 1]) cross = true;
            else if (!bruhat_leq(front.inverse().compose(omega), suffix[k + 1]))
              cross = last = true;
          }
          if (cross) front = front.after_swap(d);
          ++step;
          seq << (cross ? " X" : " C") << "(" << p << "," << q << (last ? ";last" : "") << ")";
          if (step == 1 && !cross && ((p == 4 && q == 5) || (p == 5 && q == 4))) ok12 = true;
          if (step == 2 && !(ok12 && cross && ((p == 1 && q == 2) || (p == 2 && q == 1))))
            ok12 = false;
        }
        if (!(front == omega)) continue;
        if (ok12 && hits < 10) {
          std::cout << names[mode] << " " << s0.id() << " :" << seq.str() << "\n";
          ++hits;
        }
      }
    std::cout << names[mode] << " candidates=" << hits << "\n";
  }
  return 0;
}
