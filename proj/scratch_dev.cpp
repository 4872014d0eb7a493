// Temporary development scratch: sanity checks + searches used to freeze
// paper-instance constants into the test suite. Not part of the build.
#include <iostream>

#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
#include "pipedreams/verify.hpp"

using namespace pipedreams;

static void shape_a_checks() {
  Shape a{2, "SS", 0, "EE"};
  auto geo = make_geometry(a);
  std::cout << "Shape-A cells:";
  for (auto c : geo->cells()) std::cout << " (" << c.x << "," << c.y << ")";
  std::cout << "\nword:";
  for (int d : geo->word()) std::cout << " " << d;
  std::cout << "\nsortable 21: " << is_sortable(*geo, Permutation(std::vector<int>{2, 1}))
            << " complete: " << is_complete(*geo) << "\n";

  // all contacts -> 12 ; cross at (0,-1) -> 21 ; cross at (0,-2) -> invalid
  auto idx = [&](int x, int y) { return geo->cell_index({x, y}); };
  std::string all_c(geo->cells().size(), 'C');
  auto d1 = PipeDream::create(geo, all_c);
  std::cout << "all-contacts exit: " << d1.exit().str() << "\n";
  std::string f2 = all_c;
  f2[idx(0, -1)] = 'X';
  auto d2 = PipeDream::create(geo, f2);
  std::cout << "cross(0,-1) exit: " << d2.exit().str() << "\n";
  std::string f3 = all_c;
  f3[idx(0, -2)] = 'X';
  try {
    PipeDream::create(geo, f3);
    std::cout << "cross(0,-2): NO ERROR (bad)\n";
  } catch (const InvalidFilling& e) {
    std::cout << "cross(0,-2): InvalidFilling: " << e.what() << "\n";
  }
  std::cout << "Pi(21) size: " << enumerate_pipe_dreams(geo, Permutation(std::vector<int>{2, 1})).size()
            << ", Pi(12) size: " << enumerate_pipe_dreams(geo, Permutation(std::vector<int>{1, 2})).size()
            << "\n";
  auto cg = d1.contact_graph(false);
  std::cout << "12-dream plain arcs:";
  for (auto [x, y] : cg.arcs) std::cout << " " << x << "->" << y;
  std::cout << "\n";
  std::cout << ascii_render(d2);
}

// Every filling of crossable cells yields a valid two-strands-per-crossable
// dream (subword-complex correspondence), checked over small shapes.
static void strand_structure_probe() {
  long shapes = 0, dreams = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_shapes(n, n)) {
      auto geo = make_geometry(s);
      if (geo->crossable_cells().size() > 10) continue;
      ++shapes;
      for_each_dream(geo, [&](const PipeDream& d) {
        ++dreams;
        for (int c = 0; c < (int)geo->cells().size(); ++c) {
          const int expect = geo->crossable(c) ? 2 : 1;
          if (d.strand_count(c) != expect)
            throw InternalInconsistency("strand structure violated at " + s.id());
        }
      });
    }
  std::cout << "strand structure ok over " << shapes << " shapes, " << dreams << " dreams\n";
}

// Figs. 6-7: find shapes whose canonical sweep for omega=23145, pi=21345
// produces decisions contact(4,5), cross(1,2), contact(1,3), contact(*,*),
// cross(1,3 at the last point), with exactly five two-pipe cells.
static void fig67_search() {
  const Permutation omega(std::vector<int>{2, 3, 1, 4, 5});
  const Permutation pi(std::vector<int>{2, 1, 3, 4, 5});
  int found = 0;
  for (int t = 0; t <= 5 && found < 12; ++t)
    for (const auto& s : enumerate_shapes(5, t)) {
      if (s.t != t) continue;
      auto geo = make_geometry(s);
      if (geo->crossable_cells().size() != 5) continue;
      if (!is_sortable(*geo, omega)) continue;
      std::vector<SweepDecision> dec;
      sweep_insert(geo, omega, pi, &dec);
      auto pairs_match = [&](int k, int a, int b) {
        return (dec[k].west == a && dec[k].south == b) ||
               (dec[k].west == b && dec[k].south == a);
      };
      if (dec.size() == 5 && pairs_match(0, 4, 5) && !dec[0].cross && pairs_match(1, 1, 2) &&
          dec[1].cross && !dec[1].last_point && pairs_match(2, 1, 3) && !dec[2].cross &&
          !dec[3].cross && pairs_match(4, 1, 3) && dec[4].cross && dec[4].last_point) {
        ++found;
        std::cout << "fig67 candidate: " << s.id() << " cells=" << geo->cells().size()
                  << " dec3=(" << dec[3].west << "," << dec[3].south << ")\n";
      }
    }
  std::cout << "fig67 candidates found: " << found << "\n";
}

// Fig. 5: shape with omega=321 whose Sigma contains P1 with lin={132} and P2
// with lin={231}, joined by an increasing flip, incomparable in acyclic order.
static void fig5_search() {
  const Permutation omega(std::vector<int>{3, 2, 1});
  const Permutation p132(std::vector<int>{1, 3, 2});
  const Permutation p231(std::vector<int>{2, 3, 1});
  int found = 0;
  for (int t = 0; t <= 3 && found < 8; ++t)
    for (const auto& s : enumerate_shapes(3, t)) {
      if (s.t != t) continue;
      auto geo = make_geometry(s);
      if (!is_sortable(*geo, omega)) continue;
      auto sigma = strongly_acyclic_subset(geo, omega);
      const PipeDream* p1 = nullptr;
      const PipeDream* p2 = nullptr;
      for (const auto& d : sigma) {
        const auto lin = d.linear_extensions();
        if (lin == std::vector<Permutation>{p132}) p1 = &d;
        if (lin == std::vector<Permutation>{p231}) p2 = &d;
      }
      if (!p1 || !p2) continue;
      bool flip_joins = false;
      for (int c : p1->flippable_contacts())
        if (p1->is_increasing(c) && p1->flip(c) == *p2) flip_joins = true;
      if (!flip_joins) continue;
      if (acyclic_leq(*p1, *p2)) continue;
      ++found;
      std::cout << "fig5 candidate: " << s.id() << " p1=" << p1->filling()
                << " p2=" << p2->filling() << " cells=" << geo->cells().size() << "\n";
    }
  std::cout << "fig5 candidates found: " << found << "\n";
}

static void fig4_search() {
  auto witness = find_acyclic_not_strongly(5);
  if (!witness) {
    std::cout << "fig4: no witness up to n=5 (bad)\n";
    return;
  }
  std::cout << "fig4 witness: shape=" << witness->shape.id() << " omega=" << witness->omega.str()
            << " filling=" << witness->filling
            << " complete=" << is_complete(witness->shape) << "\n";
  auto geo = make_geometry(witness->shape);
  auto d = PipeDream::create(geo, witness->filling);
  std::cout << "  acyclic=" << d.is_acyclic() << " strongly=" << d.is_strongly_acyclic() << "\n";
  auto w2 = find_acyclic_not_strongly(2);
  std::cout << "fig4 nmax=2 witness exists: " << (w2 ? "yes (bad)" : "no") << "\n";
}

// Fig. 2: a non-reduced pipe dream with exit 51324 on the triangular 5-shape.
static void fig2_search() {
  Shape tri{5, "SSSSS", 0, "EEEEE"};
  auto geo = make_geometry(tri);
  const Permutation omega(std::vector<int>{5, 1, 3, 2, 4});
  std::string first;
  for_each_dream(geo, [&](const PipeDream& d) {
    if (!first.empty()) return;
    if (d.exit() == omega && !d.is_reduced()) first = d.filling();
  });
  if (first.empty()) {
    std::cout << "fig2: none found\n";
    return;
  }
  auto d = PipeDream::create(geo, first);
  auto r = d.reduce();
  std::cout << "fig2 non-reduced filling=" << first << " reduced=" << r.filling()
            << " exit=" << r.exit().str() << " crossings=" << r.crossing_count() << "\n";
}

// Triangular n=3, omega=132 flip graph: expected 2 vertices, 1 arc.
static void small_flip_graph() {
  Shape tri{3, "SSS", 0, "EEE"};
  auto geo = make_geometry(tri);
  auto g = flip_graph(geo, Permutation(std::vector<int>{1, 3, 2}));
  std::cout << "tri3 omega=132: |Pi|=" << g.nodes.size() << " arcs=" << g.arcs.size() << "\n";
  for (auto [a, b] : g.arcs)
    std::cout << "  " << g.nodes[a].filling() << " -> " << g.nodes[b].filling() << "\n";
}

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  try {
    if (which == "all" || which == "shapea") shape_a_checks();
    if (which == "all" || which == "strands") strand_structure_probe();
    if (which == "all" || which == "fig67") fig67_search();
    if (which == "all" || which == "fig5") fig5_search();
    if (which == "all" || which == "fig2") fig2_search();
    if (which == "all" || which == "flipg") small_flip_graph();
    if (which == "all" || which == "fig4") fig4_search();
  } catch (const std::exception& e) {
    std::cout << "EXCEPTION: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
