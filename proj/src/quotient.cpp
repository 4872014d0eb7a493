#include "pipedreams/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pipedreams/errors.hpp"

namespace pipedreams {

namespace {

void require_insert_preconditions(const ShapeGeometry& geo, const Permutation& omega,
                                  const Permutation& pi) {
  if (omega.size() != geo.n() || pi.size() != geo.n())
    throw SizeMismatch("insertion: permutation size does not match the shape");
  if (!is_sortable(geo, omega))
    throw NotSortable("exit permutation " + omega.str() + " is not sortable on the shape");
  if (!weak_leq(pi, omega))
    throw NotBelow(pi.str() + " is not below " + omega.str() + " in the weak order");
}

// Demazure product of the word suffixes, rightmost first: suffix[k] is the
// product of letters k..m-1, computed by left Demazure multiplication.
std::vector<Permutation> suffix_demazure(const std::vector<int>& letters, int n) {
  const int m = static_cast<int>(letters.size());
  std::vector<Permutation> suffix(m + 1, Permutation::identity(n));
  for (int k = m - 1; k >= 0; --k) {
    const Permutation& rest = suffix[k + 1];
    Permutation swapped = Permutation::identity(n).after_swap(letters[k]).compose(rest);
    suffix[k] = (length(swapped) > length(rest)) ? swapped : rest;
  }
  return suffix;
}

}  // namespace

PipeDream sweep_insert(const GeometryPtr& geo, const Permutation& omega, const Permutation& pi,
                       std::vector<SweepDecision>* decisions) {
  require_insert_preconditions(*geo, omega, pi);
  const int n = geo->n();
  const auto& crossable = geo->crossable_cells();
  const auto suffix = suffix_demazure(geo->word(), n);
  const auto omega_pos = omega.positions();
  const auto pi_pos = pi.positions();

  std::string filling(geo->cells().size(), 'C');
  Permutation front = Permutation::identity(n);
  for (int k = 0; k < static_cast<int>(crossable.size()); ++k) {
    const int cell = crossable[k];
    const int d = geo->diag(cell);
    const int p = front(d);      // arrives horizontally
    const int q = front(d + 1);  // arrives vertically
    SweepDecision dec{cell, p, q, false, false};
    if (omega_pos[p - 1] > omega_pos[q - 1]) {
      if (pi_pos[p - 1] > pi_pos[q - 1]) {
        dec.cross = true;
      } else {
        // Contact is possible only when the remaining cells can still write
        // the rest of omega; otherwise this is the last crossing point.
        const Permutation rest_target = front.inverse().compose(omega);
        if (!bruhat_leq(rest_target, suffix[k + 1])) dec.cross = dec.last_point = true;
      }
    }
    if (dec.cross) {
      filling[cell] = 'X';
      front = front.after_swap(d);
    }
    if (decisions) decisions->push_back(dec);
  }
  if (!(front == omega))
    throw InternalInconsistency("sweep did not produce the requested exit permutation");
  PipeDream dream = PipeDream::create(geo, std::move(filling));
  if (!(dream.exit() == omega))
    throw InternalInconsistency("sweep front disagrees with the traced exit");
  return dream;
}

namespace {

// Route of one inserted pipe. The pipe completes the pending W->N turns
// inside its zone in SW->NE order and otherwise hugs the northwest: at a cell
// nobody has claimed yet it turns north whenever its exit and remaining
// completions stay reachable, and runs straight only when forced. Committed
// tiles of earlier pipes are followed as laid.
class PipeRouter {
 public:
  PipeRouter(const ShapeGeometry& geo, const std::string& filling,
             const std::vector<int>& targets, ShapeGeometry::Portal exit)
      : geo_(geo), filling_(filling), targets_(targets), exit_(exit) {}

  struct Step {
    int cell;
    bool enter_north;
    bool turn;
  };

  std::vector<Step> route(ShapeGeometry::Portal entry) {
    std::vector<Step> steps;
    int cell = entry.cell;
    bool north = entry.north;
    std::size_t done = 0;
    const int guard_max = 2 * static_cast<int>(geo_.cells().size()) + 2;
    for (int guard = 0;; ++guard) {
      if (guard > guard_max) throw InternalInconsistency("inserted pipe did not terminate");
      bool turn;
      switch (action(cell, north, done)) {
        case Action::Turn: turn = true; break;
        case Action::Straight: turn = false; break;
        default: throw InternalInconsistency("inserted pipe has no legal move");
      }
      if (!feasible(cell, north, turn, done))
        throw InternalInconsistency("inserted pipe cannot reach its exit");
      steps.push_back({cell, north, turn});
      if (turn && north && done < targets_.size() && cell == targets_[done]) ++done;
      const bool out_north = turn ? !north : north;
      if (cell == exit_.cell && out_north == exit_.north && done == targets_.size()) break;
      const int next = neighbor(cell, out_north);
      if (next < 0) throw InternalInconsistency("inserted pipe left the shape");
      cell = next;
      north = out_north;
    }
    return steps;
  }

 private:
  enum class Action { Turn, Straight, Stuck };

  int neighbor(int cell, bool out_north) const {
    const Point at = geo_.cell(cell);
    return geo_.cell_index(out_north ? Point{at.x, at.y + 1} : Point{at.x + 1, at.y});
  }

  bool is_target(int cell, std::size_t done) const {
    return done < targets_.size() && targets_[done] == cell;
  }

  // The decision at a cell; Turn means leaving through the other direction.
  Action action(int cell, bool north, std::size_t done) {
    const int d = geo_.diag(cell);
    const char committed = filling_[cell];
    if (north) {
      if (is_target(cell, done)) return Action::Turn;  // complete a pending W->N half
      if (d == 0) return Action::Turn;                 // forced along the NW boundary
      if (committed == 'C') return Action::Stuck;      // S->E half already consumed
      return Action::Straight;
    }
    if (is_target(cell, done)) return Action::Stuck;  // completions arrive from the south
    if (d == geo_.n()) return Action::Turn;           // forced along the SE boundary
    if (committed == 'X') return Action::Straight;
    if (committed == 'C') return Action::Stuck;  // W->N half already consumed
    return feasible(cell, north, true, done) ? Action::Turn : Action::Straight;
  }

  // Can the pipe still reach its exit after leaving `cell` as stated, meeting
  // the remaining completions in order? Free cells keep both options here.
  bool feasible(int cell, bool north, bool turn, std::size_t done) {
    if (turn && north && is_target(cell, done)) ++done;
    const bool out_north = turn ? !north : north;
    if (cell == exit_.cell && out_north == exit_.north && done == targets_.size()) return true;
    const int next = neighbor(cell, out_north);
    if (next < 0) return false;
    return reachable(next, out_north, done);
  }

  bool reachable(int cell, bool north, std::size_t done) {
    const auto key = std::tuple<int, bool, std::size_t>{cell, north, done};
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = false;  // cycles are impossible on monotone paths; placeholder
    bool ok = false;
    const int d = geo_.diag(cell);
    const char committed = filling_[cell];
    if (north) {
      if (is_target(cell, done)) ok = feasible(cell, north, true, done);
      else if (d == 0) ok = feasible(cell, north, true, done);
      else if (committed != 'C') ok = feasible(cell, north, false, done);
    } else if (!is_target(cell, done)) {
      if (d == geo_.n()) ok = feasible(cell, north, true, done);
      else if (committed == 'X') ok = feasible(cell, north, false, done);
      else if (committed != 'C')
        ok = feasible(cell, north, true, done) || feasible(cell, north, false, done);
    }
    memo_[key] = ok;
    return ok;
  }

  const ShapeGeometry& geo_;
  const std::string& filling_;
  const std::vector<int>& targets_;
  ShapeGeometry::Portal exit_;
  std::map<std::tuple<int, bool, std::size_t>, bool> memo_;
};

}  // namespace

PipeDream pipe_insert(const GeometryPtr& geo, const Permutation& omega, const Permutation& pi) {
  require_insert_preconditions(*geo, omega, pi);
  const int n = geo->n();
  const int ncells = static_cast<int>(geo->cells().size());
  const auto omega_pos = omega.positions();

  std::string filling(ncells, '?');
  std::set<int> open;  // crossable cells holding a W->N turn awaiting its S->E half
  auto put = [&](int cell, char tile) {
    if (filling[cell] != '?' && filling[cell] != tile)
      throw InternalInconsistency("insertion assigned conflicting tiles to a cell");
    filling[cell] = tile;
  };

  for (int i = 1; i <= n; ++i) {
    const int pipe = pi(i);
    const auto entry = geo->entry(pipe);
    const auto exit = geo->exit_portal(omega_pos[pipe - 1]);
    const Point sw = geo->cell(entry.cell);
    const Point ne = {geo->cell(exit.cell).x + 1, geo->cell(exit.cell).y + 1};
    const Zone zone{pipe, sw, ne};

    std::vector<int> targets;
    for (int c : open)
      if (zone.contains_cell(geo->cell(c))) targets.push_back(c);
    // Canonical cell order is (x, y); completions must be met SW to NE along
    // the pipe, strictly increasing in both coordinates.
    for (size_t j = 1; j < targets.size(); ++j) {
      const Point a = geo->cell(targets[j - 1]), b = geo->cell(targets[j]);
      if (!(a.x < b.x && a.y < b.y))
        throw InternalInconsistency("pending turns in a zone do not form a SW-NE chain");
    }

    PipeRouter router(*geo, filling, targets, exit);
    for (const auto& step : router.route(entry)) {
      put(step.cell, step.turn ? 'C' : 'X');
      if (step.turn && !step.enter_north && geo->crossable(step.cell))
        open.insert(step.cell);
      if (step.turn && step.enter_north) open.erase(step.cell);
    }
  }

  if (!open.empty())
    throw InternalInconsistency("a pending W->N turn was never completed");
  if (filling.find('?') != std::string::npos)
    throw InternalInconsistency("insertion left a cell unassigned");
  PipeDream dream = PipeDream::create(geo, std::move(filling));
  if (!(dream.exit() == omega))
    throw InternalInconsistency("insertion produced the wrong exit permutation");
  return dream;
}

PipeDream ins(const GeometryPtr& geo, const Permutation& omega, const Permutation& pi) {
  return sweep_insert(geo, omega, pi);
}

// Seed used by the flip-closure enumeration in pipedream.cpp.
PipeDream insertion_seed(const GeometryPtr& geo, const Permutation& omega) {
  return ins(geo, omega, omega);
}

namespace {

// Pairs (p,q), p<q, with a path q -> p in the extended contact graph; these
// are exactly the inversions of min(lin(P)).
PairSet reversed_pairs(const PipeDream& dream) {
  const auto reach = dream.contact_graph(true).closure();
  PairSet out;
  for (int p = 1; p <= dream.geo().n(); ++p)
    for (int q = p + 1; q <= dream.geo().n(); ++q)
      if ((reach[q - 1] >> (p - 1)) & 1u) out.emplace(p, q);
  return out;
}

// Pairs (p,q), p<q, with a path p -> q; the noninversions of max(lin(P)).
PairSet straight_pairs(const PipeDream& dream) {
  const auto reach = dream.contact_graph(true).closure();
  PairSet out;
  for (int p = 1; p <= dream.geo().n(); ++p)
    for (int q = p + 1; q <= dream.geo().n(); ++q)
      if ((reach[p - 1] >> (q - 1)) & 1u) out.emplace(p, q);
  return out;
}

PairSet all_pairs(int n) {
  PairSet out;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) out.emplace(p, q);
  return out;
}

}  // namespace

std::vector<CongruenceClass> congruence_classes(const GeometryPtr& geo, const Permutation& omega,
                                                int cap) {
  std::vector<CongruenceClass> classes;
  for (auto& dream : strongly_acyclic_subset(geo, omega, cap)) {
    CongruenceClass cls{dream, dream.linear_extensions(), {}, {}};
    const int n = geo->n();
    cls.min = permutation_from_inversions(reversed_pairs(dream), n);
    PairSet max_inv = all_pairs(n);
    for (const auto& pr : straight_pairs(dream)) max_inv.erase(pr);
    cls.max = permutation_from_inversions(max_inv, n);
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.pass; });
}

json VerificationReport::to_json() const {
  json j;
  j["shape"] = shape_id;
  j["omega"] = omega;
  j["pass"] = all_pass();
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json item;
    item["claim"] = c.claim;
    item["pass"] = c.pass;
    if (!c.pass) item["witness"] = c.witness;
    j["checks"].push_back(std::move(item));
  }
  return j;
}

VerificationReport check_classes(const GeometryPtr& geo, const Permutation& omega,
                                 const std::vector<CongruenceClass>& classes) {
  VerificationReport report{geo->shape().id(), omega.str(), {}};
  const std::set<Permutation> box = interval(omega);

  CheckItem partition{"classes-partition-interval", true, nullptr};
  std::map<Permutation, int> owner;
  for (size_t i = 0; i < classes.size() && partition.pass; ++i)
    for (const auto& member : classes[i].members) {
      if (!box.count(member)) {
        partition.pass = false;
        partition.witness = {{"outside", member.str()}};
        break;
      }
      if (!owner.emplace(member, static_cast<int>(i)).second) {
        partition.pass = false;
        partition.witness = {{"duplicated", member.str()}};
        break;
      }
    }
  if (partition.pass && owner.size() != box.size()) {
    for (const auto& w : box)
      if (!owner.count(w)) {
        partition.witness = {{"uncovered", w.str()}};
        break;
      }
    partition.pass = false;
  }
  report.checks.push_back(partition);

  CheckItem intervals{"classes-are-intervals-with-minmax-characterization", true, nullptr};
  for (const auto& cls : classes) {
    const Permutation char_min = permutation_from_inversions(reversed_pairs(cls.dream), geo->n());
    PairSet max_inv = all_pairs(geo->n());
    for (const auto& pr : straight_pairs(cls.dream)) max_inv.erase(pr);
    const Permutation char_max = permutation_from_inversions(max_inv, geo->n());
    std::vector<Permutation> boxed;
    for (const auto& w : box)
      if (weak_leq(char_min, w) && weak_leq(w, char_max)) boxed.push_back(w);
    std::vector<Permutation> members = cls.members;
    std::sort(members.begin(), members.end());
    if (!(char_min == cls.min) || !(char_max == cls.max) || boxed != members) {
      intervals.pass = false;
      intervals.witness = {{"class_of", cls.dream.filling()},
                           {"min", char_min.str()},
                           {"max", char_max.str()}};
      break;
    }
  }
  report.checks.push_back(intervals);

  if (!partition.pass || !intervals.pass) return report;

  CheckItem monotone{"projections-order-preserving", true, nullptr};
  std::vector<Permutation> elements(box.begin(), box.end());
  for (size_t i = 0; i < elements.size() && monotone.pass; ++i)
    for (size_t j = 0; j < elements.size(); ++j) {
      if (i == j || !weak_leq(elements[i], elements[j])) continue;
      const auto& ci = classes[owner.at(elements[i])];
      const auto& cj = classes[owner.at(elements[j])];
      if (!weak_leq(ci.max, cj.max) || !weak_leq(ci.min, cj.min)) {
        monotone.pass = false;
        monotone.witness = {{"pi", elements[i].str()}, {"pi_prime", elements[j].str()}};
        break;
      }
    }
  report.checks.push_back(monotone);

  CheckItem compat{"congruence-compatible-with-meet-and-join", true, nullptr};
  for (size_t i = 0; i < elements.size() && compat.pass; ++i)
    for (size_t j = 0; j < elements.size(); ++j) {
      const auto& x = elements[i];
      const auto& y = elements[j];
      const auto& xc = classes[owner.at(x)];
      const auto& yc = classes[owner.at(y)];
      if (owner.at(weak_meet(x, y)) != owner.at(weak_meet(xc.min, yc.min)) ||
          owner.at(weak_join(x, y)) != owner.at(weak_join(xc.max, yc.max))) {
        compat.pass = false;
        compat.witness = {{"x", x.str()}, {"y", y.str()}};
        break;
      }
    }
  report.checks.push_back(compat);
  return report;
}

VerificationReport check_congruence(const GeometryPtr& geo, const Permutation& omega) {
  return check_classes(geo, omega, congruence_classes(geo, omega));
}

namespace {

void require_same_context(const PipeDream& lhs, const PipeDream& rhs) {
  if (!(lhs.geo().shape() == rhs.geo().shape()) || !(lhs.exit() == rhs.exit()))
    throw DifferentContext("pipe dreams live on different shapes or exits");
}

}  // namespace

bool acyclic_leq(const PipeDream& lhs, const PipeDream& rhs) {
  require_same_context(lhs, rhs);
  const PairSet a = reversed_pairs(lhs);
  const PairSet b = reversed_pairs(rhs);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool AcyclicLeqChecks::agree() const {
  return some_lin_pair == min_leq && min_leq == max_leq && max_leq == no_conflict &&
         no_conflict == reversed_subset && reversed_subset == straight_subset;
}

AcyclicLeqChecks acyclic_leq_checks(const PipeDream& lhs, const PipeDream& rhs) {
  require_same_context(lhs, rhs);
  AcyclicLeqChecks checks{};
  const auto lin_l = lhs.linear_extensions();
  const auto lin_r = rhs.linear_extensions();
  checks.some_lin_pair = false;
  for (const auto& a : lin_l)
    for (const auto& b : lin_r)
      if (weak_leq(a, b)) checks.some_lin_pair = true;

  const int n = lhs.geo().n();
  const PairSet rev_l = reversed_pairs(lhs), rev_r = reversed_pairs(rhs);
  const PairSet str_l = straight_pairs(lhs), str_r = straight_pairs(rhs);
  const Permutation min_l = permutation_from_inversions(rev_l, n);
  const Permutation min_r = permutation_from_inversions(rev_r, n);
  PairSet maxinv_l = all_pairs(n), maxinv_r = all_pairs(n);
  for (const auto& pr : str_l) maxinv_l.erase(pr);
  for (const auto& pr : str_r) maxinv_r.erase(pr);
  checks.min_leq = weak_leq(min_l, min_r);
  checks.max_leq = weak_leq(permutation_from_inversions(maxinv_l, n),
                            permutation_from_inversions(maxinv_r, n));
  checks.no_conflict = true;
  for (const auto& pr : rev_l)
    if (str_r.count(pr)) checks.no_conflict = false;
  checks.reversed_subset = std::includes(rev_r.begin(), rev_r.end(), rev_l.begin(), rev_l.end());
  checks.straight_subset =
      std::includes(str_l.begin(), str_l.end(), str_r.begin(), str_r.end());
  return checks;
}

std::vector<PipeDream> acyclic_covers(const PipeDream& dream) {
  const GeometryPtr geo = dream.geo_ptr();
  const Permutation omega = dream.exit();
  std::vector<PipeDream> covers;
  std::set<std::string> seen{dream.filling()};
  for (const auto& pi : dream.linear_extensions())
    for (const auto& up : weak_covers_up(pi)) {
      if (!weak_leq(up, omega)) continue;
      PipeDream image = ins(geo, omega, up);
      if (seen.insert(image.filling()).second) covers.push_back(std::move(image));
    }
  return covers;
}

PipeDream acyclic_meet(const PipeDream& lhs, const PipeDream& rhs) {
  require_same_context(lhs, rhs);
  const int n = lhs.geo().n();
  PairSet maxinv_l = all_pairs(n), maxinv_r = all_pairs(n);
  for (const auto& pr : straight_pairs(lhs)) maxinv_l.erase(pr);
  for (const auto& pr : straight_pairs(rhs)) maxinv_r.erase(pr);
  const Permutation top_l = permutation_from_inversions(maxinv_l, n);
  const Permutation top_r = permutation_from_inversions(maxinv_r, n);
  return ins(lhs.geo_ptr(), lhs.exit(), weak_meet(top_l, top_r));
}

PipeDream acyclic_join(const PipeDream& lhs, const PipeDream& rhs) {
  require_same_context(lhs, rhs);
  const int n = lhs.geo().n();
  const Permutation bot_l = permutation_from_inversions(reversed_pairs(lhs), n);
  const Permutation bot_r = permutation_from_inversions(reversed_pairs(rhs), n);
  return ins(lhs.geo_ptr(), lhs.exit(), weak_join(bot_l, bot_r));
}

std::string lattice_dot(const GeometryPtr& geo, const Permutation& omega, int cap) {
  const auto classes = congruence_classes(geo, omega, cap);
  std::ostringstream os;
  os << "digraph acyclic_order {\n  rankdir=BT;\n";
  for (size_t i = 0; i < classes.size(); ++i)
    os << "  P" << i << " [label=\"" << classes[i].min.str() << ".." << classes[i].max.str()
       << "\"];\n";
  std::map<std::string, int> index;
  for (size_t i = 0; i < classes.size(); ++i)
    index[classes[i].dream.filling()] = static_cast<int>(i);
  for (size_t i = 0; i < classes.size(); ++i)
    for (const auto& cover : acyclic_covers(classes[i].dream))
      os << "  P" << i << " -> P" << index.at(cover.filling()) << ";\n";
  os << "}\n";
  return os.str();
}

VerificationReport verify_complete_shape(const GeometryPtr& geo, int cap) {
  if (!is_complete(*geo))
    throw NotComplete("the longest permutation is not sortable on shape " + geo->shape().id());
  VerificationReport report{geo->shape().id(), "*", {}};
  CheckItem paths{"noninversions-have-contact-paths", true, nullptr};
  CheckItem acyclic{"acyclic-implies-strongly-acyclic", true, nullptr};
  CheckItem coords{"complete-shape-coordinate-bounds", true, nullptr};

  const int n = geo->n();
  if (geo->start_path().count('E') > geo->shape().t + 1) {
    coords.pass = false;
    coords.witness = {{"clause", "|start|_E <= t+1"}};
  }
  for_each_dream(
      geo,
      [&](const PipeDream& dream) {
        if (!dream.is_reduced()) return;
        const auto reach = dream.contact_graph(false).closure();
        if (paths.pass)
          for (auto [p, q] : noninversions(dream.exit()))
            if (!((reach[p - 1] >> (q - 1)) & 1u)) {
              paths.pass = false;
              paths.witness = {{"omega", dream.exit().str()},
                               {"filling", dream.filling()},
                               {"pair", {p, q}}};
              break;
            }
        if (acyclic.pass && dream.is_acyclic() && !dream.is_strongly_acyclic()) {
          acyclic.pass = false;
          acyclic.witness = {{"omega", dream.exit().str()}, {"filling", dream.filling()}};
        }
        if (coords.pass) {
          const auto omega = dream.exit();
          const auto xe_first = dream.start_end_coords(omega(1)).second.x;
          const auto ye_last = dream.start_end_coords(omega(n)).second.y;
          const auto xs_last = dream.start_end_coords(n).first.x;
          const auto ys_first = dream.start_end_coords(1).first.y;
          const int east = geo->start_path().count('E');
          for (int p = 1; p <= n && coords.pass; ++p) {
            const auto [s, e] = dream.start_end_coords(p);
            const bool ok = s.x <= xs_last && xs_last < xe_first && xe_first <= e.x &&
                            s.y <= ys_first && ys_first < ye_last && ye_last <= e.y;
            if (!ok) {
              coords.pass = false;
              coords.witness = {{"omega", dream.exit().str()},
                                {"filling", dream.filling()},
                                {"pipe", p}};
            }
          }
          if (coords.pass && !(xs_last <= east && east <= xe_first && ys_first <= 0 &&
                               0 <= ye_last)) {
            coords.pass = false;
            coords.witness = {{"omega", dream.exit().str()}, {"filling", dream.filling()}};
          }
        }
      },
      cap);
  report.checks.push_back(paths);
  report.checks.push_back(acyclic);
  report.checks.push_back(coords);
  return report;
}

std::optional<AcyclicWitness> find_acyclic_not_strongly(int nmax, int cap) {
  if (nmax < 2) throw Error("find_acyclic_not_strongly: nmax >= 2 required");
  for (int n = 2; n <= nmax; ++n) {
    std::vector<Shape> shapes = enumerate_shapes(n, n);
    std::stable_sort(shapes.begin(), shapes.end(), [](const Shape& a, const Shape& b) {
      return cells(a).size() < cells(b).size();
    });
    for (const auto& shape : shapes) {
      const GeometryPtr geo = make_geometry(shape);
      if (static_cast<int>(geo->crossable_cells().size()) > (cap < 0 ? enumeration_cap() : cap))
        continue;
      std::optional<AcyclicWitness> found;
      for_each_dream(
          geo,
          [&](const PipeDream& dream) {
            if (found || !dream.is_reduced()) return;
            if (dream.is_acyclic() && !dream.is_strongly_acyclic())
              found = AcyclicWitness{shape, dream.exit(), dream.filling()};
          },
          cap);
      if (found) return found;
    }
  }
  return std::nullopt;
}

json shape_to_json(const Shape& shape) {
  return json{{"n", shape.n}, {"start", shape.start}, {"t", shape.t}, {"end", shape.end}};
}

Shape shape_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("start") || !j.contains("t") ||
      !j.contains("end") || !j["n"].is_number_integer() || !j["start"].is_string() ||
      !j["t"].is_number_integer() || !j["end"].is_string())
    throw Error("shape JSON must be {\"n\":int,\"start\":str,\"t\":int,\"end\":str}");
  return Shape{j["n"].get<int>(), j["start"].get<std::string>(), j["t"].get<int>(),
               j["end"].get<std::string>()};
}

json dream_to_json(const PipeDream& dream) {
  json j;
  j["shape"] = shape_to_json(dream.geo().shape());
  j["cells"] = json::array();
  for (size_t c = 0; c < dream.geo().cells().size(); ++c) {
    const Point at = dream.geo().cell(static_cast<int>(c));
    j["cells"].push_back(json{{"x", at.x},
                              {"y", at.y},
                              {"t", std::string(1, dream.filling()[c])}});
  }
  return j;
}

PipeDream dream_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("cells") || !j["cells"].is_array())
    throw Error("pipe dream JSON must be {\"shape\":{...},\"cells\":[{\"x\",\"y\",\"t\"},...]}");
  const Shape shape = shape_from_json(j["shape"]);
  const ShapeDiagnostics diag = validate(shape);
  if (!diag.valid) throw InvalidShape(diag.first_violation);
  const GeometryPtr geo = make_geometry(shape);
  std::string filling(geo->cells().size(), '?');
  for (const auto& entry : j["cells"]) {
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") ||
        !entry.contains("t") || !entry["t"].is_string())
      throw Error("pipe dream cell entries must be {\"x\":int,\"y\":int,\"t\":\"X\"|\"C\"}");
    const std::string t = entry["t"].get<std::string>();
    if (t != "X" && t != "C") throw Error("cell tile must be \"X\" or \"C\"");
    const int cell = geo->cell_index({entry["x"].get<int>(), entry["y"].get<int>()});
    if (cell < 0) throw Error("cell entry lies outside the shape");
    if (filling[cell] != '?') throw Error("cell entry duplicated");
    filling[cell] = t[0];
  }
  if (filling.find('?') != std::string::npos)
    throw Error("every cell of the shape must appear exactly once");
  return PipeDream::create(geo, std::move(filling));
}

json permutation_to_json(const Permutation& w) {
  json j = json::array();
  for (int v : w.word()) j.push_back(v);
  return j;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw Error("permutation JSON must be an array of integers");
  std::vector<int> word;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error("permutation JSON must be an array of integers");
    word.push_back(v.get<int>());
  }
  return Permutation(word);
}

}  // namespace pipedreams
