#include "pipedreams/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pipedreams/errors.hpp"

namespace pipedreams {

namespace {

class Recorder {
 public:
  Recorder(SuiteReport& report, int witness_cap) : report_(report), cap_(witness_cap) {}

  void record(const std::string& claim, bool pass, const json& witness) {
    auto& summary = slot(claim);
    ++summary.checked;
    if (!pass) {
      ++summary.failures;
      if (static_cast<int>(summary.witnesses.size()) < cap_) summary.witnesses.push_back(witness);
    }
  }

 private:
  ClaimSummary& slot(const std::string& claim) {
    for (auto& c : report_.claims)
      if (c.claim == claim) return c;
    report_.claims.push_back({claim, 0, 0, {}});
    return report_.claims.back();
  }
  SuiteReport& report_;
  int cap_;
};

json instance_id(const ShapeGeometry& geo, const Permutation& omega) {
  return json{{"shape", geo.shape().id()}, {"omega", omega.str()}};
}

bool wants(const std::string& suite, const char* name) {
  return suite == "all" || suite == name;
}

// Reduced dreams bucketed by exit permutation, built in one filling sweep.
std::map<Permutation, std::vector<PipeDream>> dreams_by_exit(const GeometryPtr& geo, int cap) {
  std::map<Permutation, std::vector<PipeDream>> buckets;
  for_each_dream(
      geo, [&](const PipeDream& d) { if (d.is_reduced()) buckets[d.exit()].push_back(d); }, cap);
  return buckets;
}

void check_partition(Recorder& rec, const GeometryPtr& geo, const Permutation& omega,
                     const std::vector<PipeDream>& sigma) {
  const json id = instance_id(*geo, omega);
  const std::set<Permutation> box = interval(omega);
  std::map<Permutation, int> owner;
  bool disjoint = true, inside = true;
  for (size_t i = 0; i < sigma.size(); ++i)
    for (const auto& pi : sigma[i].linear_extensions()) {
      if (!owner.emplace(pi, static_cast<int>(i)).second) disjoint = false;
      if (!box.count(pi)) inside = false;
    }
  rec.record("partition/classes-pairwise-disjoint", disjoint, id);
  rec.record("partition/classes-inside-interval", inside, id);
  rec.record("partition/classes-cover-interval", owner.size() == box.size(), id);
}

void check_congruence_suite(Recorder& rec, const GeometryPtr& geo, const Permutation& omega,
                            int cap) {
  const VerificationReport report = check_classes(geo, omega, congruence_classes(geo, omega, cap));
  for (const auto& item : report.checks) {
    json witness = instance_id(*geo, omega);
    if (!item.pass) witness["detail"] = item.witness;
    rec.record("congruence/" + item.claim, item.pass, witness);
  }
}

void check_lattice(Recorder& rec, const GeometryPtr& geo, const Permutation& omega,
                   const std::vector<PipeDream>& sigma) {
  const json id = instance_id(*geo, omega);
  const int count = static_cast<int>(sigma.size());

  // Characterizations of the acyclic order agree on every ordered pair.
  bool agree = true;
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const auto checks = acyclic_leq_checks(sigma[i], sigma[j]);
      if (!checks.agree()) agree = false;
      leq[i][j] = acyclic_leq(sigma[i], sigma[j]);
      if (leq[i][j] != checks.reversed_subset) agree = false;
    }
  rec.record("lattice/characterizations-agree", agree, id);

  // Partial order sanity on the production comparator.
  bool order_ok = true;
  for (int i = 0; i < count; ++i) {
    if (!leq[i][i]) order_ok = false;
    for (int j = 0; j < count; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) order_ok = false;
      for (int k = 0; k < count; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) order_ok = false;
    }
  }
  rec.record("lattice/acyclic-leq-is-partial-order", order_ok, id);

  std::map<std::string, int> index;
  for (int i = 0; i < count; ++i) index[sigma[i].filling()] = i;

  // Hasse covers equal weak order covers across distinct classes.
  std::vector<std::set<int>> hasse(count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < count && direct; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) direct = false;
      if (direct) hasse[i].insert(j);
    }
  bool covers_ok = true;
  for (int i = 0; i < count; ++i) {
    std::set<int> via_weak;
    for (const auto& cover : acyclic_covers(sigma[i])) via_weak.insert(index.at(cover.filling()));
    if (via_weak != hasse[i]) covers_ok = false;
  }
  rec.record("lattice/covers-equal-cross-class-weak-covers", covers_ok, id);

  // Meet and join are greatest lower / least upper bounds, hence the order
  // is a lattice; the literal laws follow and are asserted directly too.
  bool bounds_ok = true, laws_ok = true;
  std::vector<std::vector<int>> meet(count, std::vector<int>(count));
  std::vector<std::vector<int>> join(count, std::vector<int>(count));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const int m = index.at(acyclic_meet(sigma[i], sigma[j]).filling());
      const int v = index.at(acyclic_join(sigma[i], sigma[j]).filling());
      meet[i][j] = m;
      join[i][j] = v;
      if (!leq[m][i] || !leq[m][j] || !leq[i][v] || !leq[j][v]) bounds_ok = false;
      for (int k = 0; k < count; ++k) {
        if (leq[k][i] && leq[k][j] && !leq[k][m]) bounds_ok = false;
        if (leq[i][k] && leq[j][k] && !leq[v][k]) bounds_ok = false;
      }
    }
  for (int i = 0; i < count && laws_ok; ++i)
    for (int j = 0; j < count; ++j) {
      if (meet[i][j] != meet[j][i] || join[i][j] != join[j][i]) laws_ok = false;
      if (meet[i][join[i][j]] != i || join[i][meet[i][j]] != i) laws_ok = false;
      if (meet[i][i] != i || join[i][i] != i) laws_ok = false;
    }
  for (int i = 0; i < count && laws_ok; ++i)
    for (int j = 0; j < count && laws_ok; ++j)
      for (int k = 0; k < count; ++k) {
        if (meet[meet[i][j]][k] != meet[i][meet[j][k]] ||
            join[join[i][j]][k] != join[i][join[j][k]]) {
          laws_ok = false;
          break;
        }
      }
  rec.record("lattice/meet-join-are-glb-lub", bounds_ok, id);
  rec.record("lattice/meet-join-lattice-laws", laws_ok, id);
}

void check_insertion(Recorder& rec, const GeometryPtr& geo, const Permutation& omega,
                     const std::vector<PipeDream>& sigma) {
  const json id = instance_id(*geo, omega);
  std::map<std::string, int> index;
  for (size_t i = 0; i < sigma.size(); ++i) index[sigma[i].filling()] = static_cast<int>(i);

  bool algos_agree = true, member_ok = true, unique_ok = true, monotone_ok = true,
       surjective = true;
  std::set<int> images;
  for (const auto& pi : interval(omega)) {
    const PipeDream swept = sweep_insert(geo, omega, pi);
    const PipeDream routed = pipe_insert(geo, omega, pi);
    if (!(swept == routed)) algos_agree = false;
    const auto it = index.find(swept.filling());
    if (it == index.end()) {
      member_ok = false;
      continue;
    }
    images.insert(it->second);
    const auto lin = sigma[it->second].linear_extensions();
    if (!std::binary_search(lin.begin(), lin.end(), pi)) member_ok = false;
    // Uniqueness: no other strongly acyclic dream carries pi.
    for (size_t j = 0; j < sigma.size(); ++j) {
      if (static_cast<int>(j) == it->second) continue;
      const auto other = sigma[j].linear_extensions();
      if (std::binary_search(other.begin(), other.end(), pi)) unique_ok = false;
    }
    // Weak order covers map to the identity or one increasing flip.
    for (const auto& up : weak_covers_up(pi)) {
      if (!weak_leq(up, omega)) continue;
      const PipeDream above = sweep_insert(geo, omega, up);
      if (above == swept) continue;
      bool one_flip = false;
      for (int c : swept.flippable_contacts())
        if (swept.is_increasing(c) && swept.flip(c) == above) one_flip = true;
      if (!one_flip) monotone_ok = false;
    }
  }
  surjective = images.size() == sigma.size();
  rec.record("insertion/sweep-equals-pipe-insert", algos_agree, id);
  rec.record("insertion/pi-in-lin-of-image", member_ok, id);
  rec.record("insertion/image-class-unique", unique_ok, id);
  rec.record("insertion/covers-map-to-increasing-flips", monotone_ok, id);
  rec.record("insertion/surjective-onto-strongly-acyclic", surjective, id);
}

void check_flips(Recorder& rec, const GeometryPtr& geo, const Permutation& omega,
                 const std::vector<PipeDream>& pi_set) {
  const json id = instance_id(*geo, omega);
  const auto by_flips = enumerate_by_flips(geo, omega);
  bool same = by_flips.size() == pi_set.size();
  for (size_t i = 0; same && i < by_flips.size(); ++i)
    if (!(by_flips[i] == pi_set[i])) same = false;
  rec.record("flips/filling-and-flip-closure-enumerations-coincide", same, id);

  int sources = 0, sinks = 0;
  bool flip_sane = true;
  for (const auto& dream : pi_set) {
    int in_deg = 0, out_deg = 0;
    for (int c : dream.flippable_contacts()) {
      const int x = dream.crossing_cells(dream.west_pipe(c), dream.south_pipe(c)).front();
      const PipeDream other = dream.flip(c);
      // Involution: flipping the contact created at the old crossing restores
      // the dream, with the opposite direction.
      if (!(other.flip(x) == dream) || other.is_increasing(x) == dream.is_increasing(c))
        flip_sane = false;
      dream.is_increasing(c) ? ++out_deg : ++in_deg;
    }
    if (in_deg == 0) ++sources;
    if (out_deg == 0) ++sinks;
  }
  rec.record("flips/unique-source-and-sink", sources == 1 && sinks == 1, id);
  rec.record("flips/flip-is-involution", flip_sane, id);
}

void check_lemmas(Recorder& rec, const GeometryPtr& geo, const PipeDream& dream) {
  const json id = json{{"shape", geo->shape().id()},
                       {"omega", dream.exit().str()},
                       {"filling", dream.filling()}};
  const int n = geo->n();
  const auto omega_pos = dream.exit().positions();

  // Start and end coordinates (Lemma 1.2).
  bool coords_ok = true;
  for (int p = 1; p <= n; ++p) {
    const auto [s, e] = dream.start_end_coords(p);
    const bool starts_horizontally = !geo->entry(p).north;
    const bool ends_vertically = geo->exit_portal(omega_pos[p - 1]).north;
    if (s.x - s.y != (starts_horizontally ? p : p - 1)) coords_ok = false;
    if (e.x - e.y != (ends_vertically ? omega_pos[p - 1] : omega_pos[p - 1] - 1))
      coords_ok = false;
  }
  rec.record("lemmas/start-end-coordinates", coords_ok, id);

  // Zones contain trajectories; start monotonicity along the start path.
  bool zones_ok = true;
  for (int p = 1; p <= n; ++p) {
    const Zone z = dream.zone(p);
    if (!(z.sw.x < z.ne.x && z.sw.y < z.ne.y)) zones_ok = false;
    for (const auto& visit : dream.traces()[p - 1])
      if (!z.contains_cell(geo->cell(visit.cell))) zones_ok = false;
    if (p > 1) {
      const auto prev = dream.start_end_coords(p - 1).first;
      const auto cur = dream.start_end_coords(p).first;
      if (!(prev.x <= cur.x && prev.y >= cur.y)) zones_ok = false;
    }
  }
  rec.record("lemmas/zones-contain-trajectories", zones_ok, id);

  if (!dream.is_reduced()) return;

  // Elbows: (cell, strand) pairs; the W->N elbow of a cell sits NW of the
  // S->E elbow of the same cell.
  struct Elbow {
    int pipe;
    Point at;
    bool wn;  // west-to-north strand
  };
  std::vector<Elbow> elbows;
  for (int c = 0; c < static_cast<int>(geo->cells().size()); ++c) {
    if (dream.tile(c) != Tile::Contact) continue;
    if (dream.west_pipe(c) != 0) elbows.push_back({dream.west_pipe(c), geo->cell(c), true});
    if (dream.south_pipe(c) != 0) elbows.push_back({dream.south_pipe(c), geo->cell(c), false});
  }
  const auto reach = dream.contact_graph(false).closure();
  auto reaches = [&](int a, int b) { return a == b || ((reach[a - 1] >> (b - 1)) & 1u); };
  auto weakly_nw = [](const Elbow& a, const Elbow& b) {
    // Inside one cell, the W->N strand hugs the NW corner, the S->E strand
    // the SE corner.
    if (a.at == b.at) return a.wn && !b.wn;
    return a.at.x <= b.at.x && a.at.y >= b.at.y;
  };

  bool rect_ok = true;
  for (const auto& ep : elbows)
    for (const auto& eq : elbows) {
      if (ep.pipe == eq.pipe || !weakly_nw(ep, eq)) continue;
      const Point corner1{ep.at.x, eq.at.y}, corner2{eq.at.x, ep.at.y};
      bool applies = geo->cell_index(corner1) >= 0 && geo->cell_index(corner2) >= 0;
      if (!applies) {
        // Case 2: both elbows NE of one cell and SW of another.
        for (const auto& lo : geo->cells()) {
          if (!(lo.x <= ep.at.x && lo.y <= eq.at.y)) continue;
          for (const auto& hi : geo->cells())
            if (hi.x >= eq.at.x && hi.y >= ep.at.y) applies = true;
          if (applies) break;
        }
      }
      if (!applies && dream.zone(eq.pipe).contains_cell(ep.at)) applies = true;  // case 3
      if (applies && !reaches(ep.pipe, eq.pipe)) rect_ok = false;
    }
  rec.record("lemmas/elbow-rectangles-imply-paths", rect_ok, id);

  // Three reversed pipes sharing a p-r contact (Lemma 1.3).
  bool three_ok = true;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int r = q + 1; r <= n; ++r) {
        if (!(omega_pos[r - 1] < omega_pos[q - 1] && omega_pos[q - 1] < omega_pos[p - 1]))
          continue;
        bool contact_pr = false;
        for (int c = 0; c < static_cast<int>(geo->cells().size()); ++c)
          if (dream.tile(c) == Tile::Contact &&
              ((dream.west_pipe(c) == p && dream.south_pipe(c) == r) ||
               (dream.west_pipe(c) == r && dream.south_pipe(c) == p)))
            contact_pr = true;
        if (!contact_pr) continue;
        const bool below = reaches(q, p) && reaches(q, r);
        const bool above = reaches(p, q) && reaches(r, q);
        if (!below && !above) three_ok = false;
      }
  rec.record("lemmas/three-reversed-pipes", three_ok, id);

  // Reducedness bijection: crossings count the exit inversions.
  rec.record("lemmas/crossings-equal-length-of-exit",
             dream.crossing_count() == length(dream.exit()), id);
}

void check_complete(Recorder& rec, const GeometryPtr& geo, int cap) {
  const VerificationReport report = verify_complete_shape(geo, cap);
  for (const auto& item : report.checks) {
    json witness = json{{"shape", geo->shape().id()}};
    if (!item.pass) witness["detail"] = item.witness;
    rec.record("complete/" + item.claim, item.pass, witness);
  }
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimSummary& c) { return c.failures == 0; });
}

json SuiteReport::to_json() const {
  json j;
  j["suite"] = options.suite;
  j["n"] = options.n;
  j["max_t"] = options.max_t;
  j["pass"] = all_pass();
  j["shapes"] = shapes_seen;
  j["shapes_skipped"] = shapes_skipped;
  j["claims"] = json::array();
  for (const auto& c : claims) {
    json item;
    item["claim"] = c.claim;
    item["checked"] = c.checked;
    item["failures"] = c.failures;
    if (!c.witnesses.empty()) item["witnesses"] = c.witnesses;
    j["claims"].push_back(std::move(item));
  }
  j["notes"] = notes;
  return j;
}

bool known_suite(const std::string& name) {
  static const char* names[] = {"partition", "congruence", "lattice", "insertion",
                                "flips",     "complete",   "lemmas",  "all"};
  return std::any_of(std::begin(names), std::end(names),
                     [&name](const char* s) { return name == s; });
}

SuiteReport run_suite(const SuiteOptions& options) {
  if (!known_suite(options.suite)) throw Error("unknown suite: " + options.suite);
  SuiteOptions opt = options;
  if (opt.max_t < 0) opt.max_t = opt.n;
  SuiteReport report;
  report.options = opt;
  Recorder rec(report, opt.witness_cap);

  long skipped_incomplete = 0;
  for (int n = 1; n <= opt.n; ++n)
    for (const auto& shape : enumerate_shapes(n, opt.max_t)) {
      const GeometryPtr geo = make_geometry(shape);
      if (static_cast<int>(geo->crossable_cells().size()) > opt.cell_cap) {
        ++report.shapes_skipped;
        continue;
      }
      ++report.shapes_seen;
      const int cap = opt.cell_cap;
      const bool small = geo->cells().size() <= 8;

      if (wants(opt.suite, "complete")) {
        if (is_complete(*geo)) check_complete(rec, geo, cap);
        else ++skipped_incomplete;
      }

      const bool need_buckets = wants(opt.suite, "partition") || wants(opt.suite, "congruence") ||
                                wants(opt.suite, "lattice") || wants(opt.suite, "insertion") ||
                                wants(opt.suite, "flips") ||
                                (wants(opt.suite, "lemmas") && small);
      if (!need_buckets) continue;
      for (auto& [omega, dreams] : dreams_by_exit(geo, cap)) {
        std::vector<PipeDream> sigma;
        for (const auto& d : dreams)
          if (d.is_strongly_acyclic()) sigma.push_back(d);
        if (wants(opt.suite, "partition")) check_partition(rec, geo, omega, sigma);
        if (wants(opt.suite, "congruence")) check_congruence_suite(rec, geo, omega, cap);
        if (wants(opt.suite, "lattice")) check_lattice(rec, geo, omega, sigma);
        if (wants(opt.suite, "insertion")) check_insertion(rec, geo, omega, sigma);
        if (wants(opt.suite, "flips")) check_flips(rec, geo, omega, dreams);
        if (wants(opt.suite, "lemmas") && small)
          for (const auto& d : dreams) check_lemmas(rec, geo, d);
      }
    }
  if (skipped_incomplete > 0) {
    std::ostringstream os;
    os << skipped_incomplete << " non-complete shape(s) skipped by the complete suite";
    report.notes.push_back(os.str());
  }
  return report;
}

}  // namespace pipedreams
