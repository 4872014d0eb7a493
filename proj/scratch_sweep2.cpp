// Dev scratch: Fig. 6/7 search with steps counted over ALL cells.
#include <algorithm>
#include <iostream>

#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"

using namespace pipedreams;

struct Ev {
  int cell;
  bool two_pipe;
  int a, b;  // front pair when two_pipe
  bool cross, last;
};

int main() {
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  const char* names[] = {"colmajor", "rowmajor", "adiag-x-asc", "adiag-x-desc"};
  for (int mode = 0; mode < 4; ++mode) {
    int exact5 = 0, trailing = 0;
    for (const auto& s : enumerate_shapes(5, 5)) {
      auto geo = make_geometry(s);
      const int n = 5;
      if (geo->crossable_cells().size() > 12) continue;
      if (!is_sortable(*geo, omega)) continue;
      std::vector<int> order(geo->cells().size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
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
      // suffix Demazure over crossable cells in this order
      std::vector<int> letters;
      std::vector<int> kidx(order.size(), -1);
      for (int i = 0; i < (int)order.size(); ++i)
        if (geo->crossable(order[i])) {
          kidx[i] = (int)letters.size();
          letters.push_back(geo->diag(order[i]));
        }
      const int m = (int)letters.size();
      std::vector<Permutation> suffix(m + 1, Permutation::identity(n));
      for (int k = m - 1; k >= 0; --k) {
        Permutation sw = Permutation::identity(n).after_swap(letters[k]).compose(suffix[k + 1]);
        suffix[k] = (length(sw) > length(suffix[k + 1])) ? sw : suffix[k + 1];
      }
      const auto opos = omega.positions();
      const auto ppos = pi.positions();
      Permutation front = Permutation::identity(n);
      std::vector<Ev> evs;
      bool bad = false;
      for (int i = 0; i < (int)order.size() && !bad; ++i) {
        const int c = order[i];
        if (!geo->crossable(c)) {
          evs.push_back({c, false, 0, 0, false, false});
          continue;
        }
        const int d = geo->diag(c);
        const int p = front(d), q = front(d + 1);
        Ev ev{c, true, p, q, false, false};
        if (opos[p - 1] > opos[q - 1]) {
          if (ppos[p - 1] > ppos[q - 1]) ev.cross = true;
          else if (!bruhat_leq(front.inverse().compose(omega), suffix[kidx[i] + 1]))
            ev.cross = ev.last = true;
        }
        if (ev.cross) front = front.after_swap(d);
        evs.push_back(ev);
      }
      if (bad || !(front == omega)) continue;
      auto pairis = [&](const Ev& e, int x, int y) {
        return e.two_pipe && ((e.a == x && e.b == y) || (e.a == y && e.b == x));
      };
      if (evs.size() < 5) continue;
      const bool head = pairis(evs[0], 4, 5) && !evs[0].cross && pairis(evs[1], 1, 2) &&
                        evs[1].cross && !evs[1].last && pairis(evs[2], 1, 3) && !evs[2].cross &&
                        !evs[3].cross && pairis(evs[4], 1, 3) && evs[4].cross && evs[4].last;
      if (!head) continue;
      bool only_boring_tail = true;
      for (size_t i = 5; i < evs.size(); ++i)
        if (evs[i].two_pipe) only_boring_tail = false;
      if (evs.size() == 5) {
        ++exact5;
        std::cout << names[mode] << " EXACT5: " << s.id() << " step4"
                  << (evs[3].two_pipe ? " 2pipe" : " 1pipe") << "\n";
      } else if (only_boring_tail) {
        ++trailing;
        if (trailing <= 6)
          std::cout << names[mode] << " TRAIL(" << evs.size() << " cells): " << s.id()
                    << " step4" << (evs[3].two_pipe ? " 2pipe" : " 1pipe") << "\n";
      }
    }
    std::cout << names[mode] << " exact5=" << exact5 << " trailing=" << trailing << "\n";
  }
  return 0;
}
