// Dev scratch: which narrated-pair subsequences are realizable at all?
#include <iostream>
#include <map>
#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
using namespace pipedreams;

int main(int argc, char** argv) {
  const bool adiag = argc > 1 && std::string(argv[1]) == "adiag";
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  std::map<std::string, int> patterns;
  std::map<std::string, std::string> exemplar;
  for (int t = 0; t <= 6; ++t)
    for (const auto& s : enumerate_shapes(5, t)) {
      if (s.t != t) continue;
      auto geo = make_geometry(s);
      if (geo->crossable_cells().size() > 12) continue;
      if (!is_sortable(*geo, omega)) continue;
      // canonical column-major decisions come from sweep_insert; adiag mode
      // reorders crossable cells by antidiagonal level.
      std::vector<int> order = geo->crossable_cells();
      if (adiag)
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          const Point pa = geo->cell(a), pb = geo->cell(b);
          return std::pair(pa.x + pa.y, pa.x) < std::pair(pb.x + pb.y, pb.x);
        });
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
      std::string sig;
      bool first45contact = false;
      int step = 0;
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
        if (step == 1)
          first45contact = !cross && ((p == 4 && q == 5) || (p == 5 && q == 4));
        const bool rel = (p == 1 && q == 2) || (p == 2 && q == 1) || (p == 1 && q == 3) ||
                         (p == 3 && q == 1);
        if (rel) {
          sig += cross ? 'X' : 'C';
          sig += std::to_string(p) + std::to_string(q);
          if (last) sig += '!';
          sig += ' ';
        }
      }
      if (!(front == omega)) continue;
      if (!first45contact) continue;
      if (++patterns[sig] == 1) exemplar[sig] = s.id();
    }
  for (auto& [sig, count] : patterns)
    std::cout << count << "  [" << sig << "]  e.g. " << exemplar[sig] << "\n";
  return 0;
}
