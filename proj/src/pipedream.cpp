#include "pipedreams/pipedream.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "pipedreams/errors.hpp"

namespace pipedreams {

std::vector<std::uint32_t> ContactGraph::closure() const {
  std::vector<std::uint32_t> reach(n, 0);
  for (auto [a, b] : arcs) reach[a - 1] |= 1u << (b - 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      std::uint32_t acc = reach[a];
      for (int b = 0; b < n; ++b)
        if (reach[a] & (1u << b)) acc |= reach[b];
      if (acc != reach[a]) {
        reach[a] = acc;
        changed = true;
      }
    }
  }
  return reach;
}

bool ContactGraph::is_acyclic() const {
  const auto reach = closure();
  for (int a = 0; a < n; ++a)
    if (reach[a] & (1u << a)) return false;
  return true;
}

bool ContactGraph::reaches(int a, int b) const {
  return (closure()[a - 1] >> (b - 1)) & 1u;
}

std::vector<Permutation> ContactGraph::topological_orders() const {
  std::vector<std::uint32_t> succ(n, 0);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : arcs) {
    if (!(succ[a - 1] & (1u << (b - 1)))) {
      succ[a - 1] |= 1u << (b - 1);
      ++indeg[b - 1];
    }
  }
  std::vector<Permutation> orders;
  std::vector<int> word;
  std::vector<bool> used(n, false);
  std::function<void()> go = [&] {
    if (static_cast<int>(word.size()) == n) {
      orders.push_back(Permutation(word));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || indeg[v] != 0) continue;
      used[v] = true;
      for (int b = 0; b < n; ++b)
        if (succ[v] & (1u << b)) --indeg[b];
      word.push_back(v + 1);
      go();
      word.pop_back();
      for (int b = 0; b < n; ++b)
        if (succ[v] & (1u << b)) ++indeg[b];
      used[v] = false;
    }
  };
  go();
  return orders;
}

std::string ContactGraph::dot(const std::set<Pair>* plain_arcs) const {
  std::ostringstream os;
  os << "digraph " << (extended ? "extended_contact" : "contact") << " {\n";
  for (int v = 1; v <= n; ++v) os << "  " << v << ";\n";
  for (auto [a, b] : arcs) {
    os << "  " << a << " -> " << b;
    if (plain_arcs && !plain_arcs->count({a, b})) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

PipeDream PipeDream::create(GeometryPtr geo, std::string filling) {
  const auto& g = *geo;
  const int ncells = static_cast<int>(g.cells().size());
  if (static_cast<int>(filling.size()) != ncells)
    throw Error("filling length does not match the cell count");
  for (char c : filling)
    if (c != 'X' && c != 'C') throw Error("filling must use only 'X' and 'C'");

  PipeDream dream;
  dream.geo_ = std::move(geo);
  dream.filling_ = std::move(filling);
  dream.west_.assign(ncells, 0);
  dream.south_.assign(ncells, 0);
  dream.traces_.assign(g.n(), {});

  std::vector<int> exit_word(g.n(), 0);
  for (int p = 1; p <= g.n(); ++p) {
    auto portal = g.entry(p);
    int cell = portal.cell;
    bool north = portal.north;
    auto& trace = dream.traces_[p - 1];
    for (int guard = 0; guard <= 2 * ncells; ++guard) {
      if (guard == 2 * ncells) throw InternalInconsistency("pipe trace did not terminate");
      trace.push_back({cell, north});
      int& slot = north ? dream.south_[cell] : dream.west_[cell];
      if (slot != 0) throw InternalInconsistency("two pipes share a strand");
      slot = p;
      const bool out_north = (dream.tile(cell) == Tile::Cross) ? north : !north;
      const Point c = g.cell(cell);
      const Point next = out_north ? Point{c.x, c.y + 1} : Point{c.x + 1, c.y};
      const int next_cell = g.cell_index(next);
      if (next_cell >= 0) {
        cell = next_cell;
        north = out_north;
        continue;
      }
      const int step = g.exit_step(cell, out_north);
      if (step == 0) {
        std::ostringstream os;
        os << "pipe " << p << " leaves the shape " << (out_north ? "north" : "east")
           << " of cell (" << c.x << "," << c.y << ")";
        throw InvalidFilling(os.str());
      }
      if (exit_word[step - 1] != 0) throw InternalInconsistency("two pipes share an exit step");
      exit_word[step - 1] = p;
      break;
    }
  }
  dream.exit_ = Permutation(exit_word);
  return dream;
}

int PipeDream::crossing_count() const {
  int count = 0;
  for (size_t c = 0; c < filling_.size(); ++c)
    if (tile(static_cast<int>(c)) == Tile::Cross && strand_count(static_cast<int>(c)) == 2)
      ++count;
  return count;
}

std::vector<int> PipeDream::crossing_cells(int a, int b) const {
  if (a > b) std::swap(a, b);
  std::vector<int> cells;
  for (const auto& visit : traces_[a - 1]) {
    const int c = visit.cell;
    if (tile(c) != Tile::Cross) continue;
    const int other = visit.heading_north ? west_[c] : south_[c];
    if (other == b) cells.push_back(c);
  }
  return cells;
}

bool PipeDream::is_reduced() const {
  std::map<Pair, int> crossings;
  for (int c = 0; c < static_cast<int>(filling_.size()); ++c) {
    if (tile(c) != Tile::Cross || strand_count(c) != 2) continue;
    int a = west_[c], b = south_[c];
    if (a > b) std::swap(a, b);
    if (++crossings[{a, b}] > 1) return false;
  }
  return true;
}

PipeDream PipeDream::reduce() const {
  PipeDream cur = *this;
  for (;;) {
    const int n = cur.geo_->n();
    Pair offender{0, 0};
    for (int a = 1; a <= n && offender.first == 0; ++a)
      for (int b = a + 1; b <= n && offender.first == 0; ++b)
        if (cur.crossing_cells(a, b).size() >= 2) offender = {a, b};
    if (offender.first == 0) return cur;
    const auto cells = cur.crossing_cells(offender.first, offender.second);
    std::string filling = cur.filling_;
    filling[cells[0]] = 'C';
    filling[cells[1]] = 'C';
    cur = create(cur.geo_, std::move(filling));
  }
}

std::pair<Point, Point> PipeDream::start_end_coords(int pipe) const {
  const auto& trace = traces_[pipe - 1];
  const Point first = geo_->cell(trace.front().cell);
  const Point last = geo_->cell(trace.back().cell);
  return {first, {last.x + 1, last.y + 1}};
}

Zone PipeDream::zone(int pipe) const {
  auto [sw, ne] = start_end_coords(pipe);
  return {pipe, sw, ne};
}

std::vector<Zone> PipeDream::zones() const {
  std::vector<Zone> zs;
  for (int p = 1; p <= geo_->n(); ++p) zs.push_back(zone(p));
  return zs;
}

ContactGraph PipeDream::contact_graph(bool extended) const {
  ContactGraph g;
  g.n = geo_->n();
  g.extended = extended;
  for (int c = 0; c < static_cast<int>(filling_.size()); ++c)
    if (tile(c) == Tile::Contact && strand_count(c) == 2) g.arcs.emplace(west_[c], south_[c]);
  if (extended)
    for (auto [a, b] : noninversions(exit_)) g.arcs.emplace(a, b);
  return g;
}

bool PipeDream::is_acyclic() const { return contact_graph(false).is_acyclic(); }

bool PipeDream::is_strongly_acyclic() const { return contact_graph(true).is_acyclic(); }

std::vector<Permutation> PipeDream::linear_extensions() const {
  const ContactGraph ext = contact_graph(true);
  if (!ext.is_acyclic()) throw CyclicGraph("pipe dream is not strongly acyclic");
  auto orders = ext.topological_orders();
  // Cross-check: topological orders of the plain graph lying below the exit.
  std::vector<Permutation> below;
  for (auto& p : contact_graph(false).topological_orders())
    if (weak_leq(p, exit_)) below.push_back(p);
  if (orders != below)
    throw InternalInconsistency("linear extension characterizations disagree");
  return orders;
}

std::vector<int> PipeDream::flippable_contacts() const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(filling_.size()); ++c) {
    if (tile(c) != Tile::Contact || strand_count(c) != 2) continue;
    if (!crossing_cells(west_[c], south_[c]).empty()) out.push_back(c);
  }
  return out;
}

PipeDream PipeDream::flip(int cell) const {
  if (tile(cell) != Tile::Contact || strand_count(cell) != 2)
    throw NotFlippable("cell does not hold a two-strand contact");
  const auto crossings = crossing_cells(west_[cell], south_[cell]);
  if (crossings.empty()) throw NotFlippable("the two pipes of the contact never cross");
  if (crossings.size() > 1) throw NotFlippable("flip requires a reduced pipe dream");
  std::string filling = filling_;
  filling[cell] = 'X';
  filling[crossings[0]] = 'C';
  return create(geo_, std::move(filling));
}

bool PipeDream::is_increasing(int cell) const {
  if (tile(cell) != Tile::Contact || strand_count(cell) != 2)
    throw NotFlippable("cell does not hold a two-strand contact");
  const auto crossings = crossing_cells(west_[cell], south_[cell]);
  if (crossings.size() != 1) throw NotFlippable("the two pipes of the contact never cross");
  const Point c = geo_->cell(cell);
  const Point x = geo_->cell(crossings[0]);
  if (c.x < x.x && c.y < x.y) return true;
  if (c.x > x.x && c.y > x.y) return false;
  throw InternalInconsistency("contact and crossing are not comparable");
}

int enumeration_cap() {
  if (const char* env = std::getenv("PIPEDREAM_MAX_CELLS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

void for_each_dream(const GeometryPtr& geo, const std::function<void(const PipeDream&)>& fn,
                    int cap) {
  if (cap < 0) cap = enumeration_cap();
  const auto& crossable = geo->crossable_cells();
  const int k = static_cast<int>(crossable.size());
  if (k > cap) {
    std::ostringstream os;
    os << "enumeration over " << k << " crossable cells exceeds the cap of " << cap
       << " (set PIPEDREAM_MAX_CELLS to raise it)";
    throw Error(os.str());
  }
  std::string filling(geo->cells().size(), 'C');
  // Lexicographic filling order with 'C' < 'X': the first crossable cell in
  // canonical order is the most significant digit.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (int j = 0; j < k; ++j)
      filling[crossable[j]] = (mask >> (k - 1 - j)) & 1 ? 'X' : 'C';
    fn(PipeDream::create(geo, filling));
  }
}

std::vector<PipeDream> enumerate_pipe_dreams(const GeometryPtr& geo, const Permutation& omega,
                                             int cap) {
  if (omega.size() != geo->n()) throw SizeMismatch("enumerate: size mismatch");
  std::vector<PipeDream> out;
  for_each_dream(
      geo,
      [&](const PipeDream& d) {
        if (d.exit() == omega && d.is_reduced()) out.push_back(d);
      },
      cap);
  return out;
}

std::vector<PipeDream> strongly_acyclic_subset(const GeometryPtr& geo, const Permutation& omega,
                                               int cap) {
  std::vector<PipeDream> out;
  for (auto& d : enumerate_pipe_dreams(geo, omega, cap))
    if (d.is_strongly_acyclic()) out.push_back(std::move(d));
  return out;
}

std::string ascii_render(const PipeDream& dream) {
  const auto& g = dream.geo();
  int ymin = g.cells().front().y, ymax = ymin;
  for (const auto& c : g.cells()) {
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
  }
  std::ostringstream os;
  for (int y = ymax; y >= ymin; --y) {
    for (int x = 0; x < g.x_end(); ++x) {
      const int cell = g.cell_index({x, y});
      if (cell < 0) os << "·";
      else os << (dream.tile(cell) == Tile::Cross ? 'X' : '%');
    }
    os << '\n';
  }
  return os.str();
}

std::string svg_render(const PipeDream& dream) {
  const auto& g = dream.geo();
  const int scale = 24;
  int ymin = g.cells().front().y, ymax = ymin + 1;
  for (const auto& c : g.cells()) {
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y + 1);
  }
  const int width = g.x_end() * scale;
  const int height = (ymax - ymin) * scale;
  auto px = [&](double x) { return x * scale; };
  auto py = [&](double y) { return (ymax - y) * scale; };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#17becf", "#7f7f7f", "#bcbd22"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  for (const auto& c : g.cells())
    os << "  <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y + 1) << "\" width=\"" << scale
       << "\" height=\"" << scale << "\" fill=\"#f7f3e8\" stroke=\"#999\"/>\n";
  for (int p = 1; p <= g.n(); ++p) {
    const auto& trace = dream.traces()[p - 1];
    std::ostringstream pts;
    auto emit = [&](double x, double y) { pts << px(x) << ',' << py(y) << ' '; };
    for (size_t i = 0; i < trace.size(); ++i) {
      const Point c = g.cell(trace[i].cell);
      if (i == 0) {
        if (trace[i].heading_north) emit(c.x + 0.5, c.y);
        else emit(c.x, c.y + 0.5);
      }
      emit(c.x + 0.5, c.y + 0.5);
      if (i + 1 == trace.size()) {
        const bool in_north = trace[i].heading_north;
        const bool out_north =
            (dream.tile(trace[i].cell) == Tile::Cross) ? in_north : !in_north;
        if (out_north) emit(c.x + 0.5, c.y + 1);
        else emit(c.x + 1, c.y + 0.5);
      }
    }
    os << "  <polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
       << palette[(p - 1) % 9] << "\" stroke-width=\"3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

// Dreams sorted by filling string; used by every public enumeration output.
void sort_canonical(std::vector<PipeDream>& dreams) {
  std::sort(dreams.begin(), dreams.end(),
            [](const PipeDream& a, const PipeDream& b) { return a.filling() < b.filling(); });
}

}  // namespace

// Defined in quotient.cpp: the insertion seed always exists for sortable
// omega and is strongly acyclic.
PipeDream insertion_seed(const GeometryPtr& geo, const Permutation& omega);

std::vector<PipeDream> enumerate_by_flips(const GeometryPtr& geo, const Permutation& omega) {
  std::vector<PipeDream> nodes;
  std::set<std::string> seen;
  std::vector<PipeDream> stack;
  PipeDream seed = insertion_seed(geo, omega);
  seen.insert(seed.filling());
  stack.push_back(seed);
  while (!stack.empty()) {
    PipeDream cur = std::move(stack.back());
    stack.pop_back();
    for (int c : cur.flippable_contacts()) {
      PipeDream next = cur.flip(c);
      if (seen.insert(next.filling()).second) stack.push_back(next);
    }
    nodes.push_back(std::move(cur));
  }
  sort_canonical(nodes);
  return nodes;
}

std::vector<int> FlipGraph::sources() const {
  std::vector<bool> has_in(nodes.size(), false);
  for (auto [a, b] : arcs) has_in[b] = true;
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (!has_in[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> FlipGraph::sinks() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (auto [a, b] : arcs) has_out[a] = true;
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (!has_out[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::string FlipGraph::dot() const {
  std::ostringstream os;
  os << "digraph flips {\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    os << "  P" << i << " [label=\"" << nodes[i].filling() << "\"];\n";
  for (auto [a, b] : arcs) os << "  P" << a << " -> P" << b << ";\n";
  os << "}\n";
  return os.str();
}

FlipGraph flip_graph(const GeometryPtr& geo, const Permutation& omega, int cap) {
  FlipGraph g;
  g.nodes = enumerate_pipe_dreams(geo, omega, cap);
  std::map<std::string, int> index;
  for (size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i].filling()] = static_cast<int>(i);
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (int c : g.nodes[i].flippable_contacts())
      if (g.nodes[i].is_increasing(c))
        g.arcs.emplace(static_cast<int>(i), index.at(g.nodes[i].flip(c).filling()));
  return g;
}

}  // namespace pipedreams
