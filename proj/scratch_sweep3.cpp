// Dev scratch: Fig. 6/7 search, decisions 1,2,3,5 pinned, tail contacts free.
#include <algorithm>
#include <iostream>
#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
using namespace pipedreams;

int main() {
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  const char* names[] = {"colmajor", "rowmajor", "adiag-x-asc", "adiag-x-desc"};
  for (int mode = 0; mode < 4; ++mode) {
    long hits = 0;
    for (int t = 0; t <= 8; ++t) {
      for (const auto& s0 : enumerate_shapes(5, t)) {
        if (s0.t != t) continue;
        auto geo = make_geometry(s0);
        if (geo->crossable_cells().size() > 12 || geo->crossable_cells().size() < 5) continue;
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
        struct D { int a, b; bool cross, last; };
        std::vector<D> decs;
        for (int k = 0; k < m; ++k) {
          const int d = letters[k];
          const int p = front(d), q = front(d + 1);
          D dec{p, q, false, false};
          if (opos[p - 1] > opos[q - 1]) {
            if (ppos[p - 1] > ppos[q - 1]) dec.cross = true;
            else if (!bruhat_leq(front.inverse().compose(omega), suffix[k + 1]))
              dec.cross = dec.last = true;
          }
          if (dec.cross) front = front.after_swap(d);
          decs.push_back(dec);
        }
        if (!(front == omega)) continue;
        auto is = [&](int k, int x, int y) {
          return (decs[k].a == x && decs[k].b == y) || (decs[k].a == y && decs[k].b == x);
        };
        if (decs.size() < 5) continue;
        bool ok = is(0, 4, 5) && !decs[0].cross && is(1, 1, 2) && decs[1].cross &&
                  !decs[1].last && is(2, 1, 3) && !decs[2].cross && !decs[3].cross &&
                  is(4, 1, 3) && decs[4].cross && decs[4].last;
        for (size_t k = 5; k < decs.size() && ok; ++k)
          if (decs[k].cross) ok = false;
        if (ok) {
          ++hits;
          if (hits <= 8)
            std::cout << names[mode] << ": " << s0.id() << " cells=" << geo->cells().size()
                      << " ndec=" << decs.size() << " step4=(" << decs[3].a << "," << decs[3].b
                      << ")\n";
        }
      }
    }
    std::cout << names[mode] << " hits=" << hits << "\n";
  }
  return 0;
}
