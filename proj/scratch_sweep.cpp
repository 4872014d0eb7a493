// Dev scratch: sweep decisions under alternative SW->NE refinements, to find
// the Fig. 6/7 instance and pick the canonical sweep order.
#include <algorithm>
#include <iostream>

#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"

using namespace pipedreams;

struct Dec {
  int west, south;
  bool cross, last;
};

// Sweep with an arbitrary linear extension of the SW->NE cell order,
// restricted to crossable cells (forced cells are contacts).
static std::vector<Dec> sweep_order(const ShapeGeometry& geo, const Permutation& omega,
                                    const Permutation& pi, const std::vector<int>& order,
                                    std::string* filling_out) {
  const int n = geo.n();
  std::vector<int> letters;
  for (int c : order) letters.push_back(geo.diag(c));
  const int m = (int)letters.size();
  std::vector<Permutation> suffix(m + 1, Permutation::identity(n));
  for (int k = m - 1; k >= 0; --k) {
    Permutation swapped = Permutation::identity(n).after_swap(letters[k]).compose(suffix[k + 1]);
    suffix[k] = (length(swapped) > length(suffix[k + 1])) ? swapped : suffix[k + 1];
  }
  const auto omega_pos = omega.positions();
  const auto pi_pos = pi.positions();
  std::string filling(geo.cells().size(), 'C');
  Permutation front = Permutation::identity(n);
  std::vector<Dec> decs;
  for (int k = 0; k < m; ++k) {
    const int d = letters[k];
    const int p = front(d), q = front(d + 1);
    Dec dec{p, q, false, false};
    if (omega_pos[p - 1] > omega_pos[q - 1]) {
      if (pi_pos[p - 1] > pi_pos[q - 1]) dec.cross = true;
      else if (!bruhat_leq(front.inverse().compose(omega), suffix[k + 1]))
        dec.cross = dec.last = true;
    }
    if (dec.cross) {
      filling[order[k]] = 'X';
      front = front.after_swap(d);
    }
    decs.push_back(dec);
  }
  if (!(front == omega)) throw InternalInconsistency("wrong exit");
  if (filling_out) *filling_out = filling;
  return decs;
}

int main() {
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  const char* names[] = {"colmajor", "rowmajor", "adiag-x-asc", "adiag-x-desc"};
  for (int mode = 0; mode < 4; ++mode) {
    int found = 0;
    for (const auto& s : enumerate_shapes(5, 5)) {
      auto geo = make_geometry(s);
      if (geo->crossable_cells().size() > 12 || geo->crossable_cells().size() < 4) continue;
      if (!is_sortable(*geo, omega)) continue;
      std::vector<int> order = geo->crossable_cells();  // canonical (x, y)
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
      std::string filling;
      const auto decs = sweep_order(*geo, omega, pi, order, &filling);
      auto is = [&](int k, int a, int b) {
        return (decs[k].west == a && decs[k].south == b) ||
               (decs[k].west == b && decs[k].south == a);
      };
      if (decs.size() == 5 && is(0, 4, 5) && !decs[0].cross && is(1, 1, 2) && decs[1].cross &&
          !decs[1].last && is(2, 1, 3) && !decs[2].cross && !decs[3].cross && is(4, 1, 3) &&
          decs[4].cross && decs[4].last) {
        if (found < 6)
          std::cout << names[mode] << ": " << s.id() << " cells=" << geo->cells().size()
                    << " step4=(" << decs[3].west << "," << decs[3].south << ")"
                    << " filling=" << filling << "\n";
        ++found;
      }
    }
    std::cout << names[mode] << " total: " << found << "\n";
  }
  return 0;
}
