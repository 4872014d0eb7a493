#include "pipedreams/shape.hpp"

#include <algorithm>
#include <sstream>

#include "pipedreams/errors.hpp"

namespace pipedreams {

Point BoundaryPath::end() const {
  Point p = start;
  for (char d : steps) {
    switch (d) {
      case 'N': ++p.y; break;
      case 'S': --p.y; break;
      case 'E': ++p.x; break;
      case 'W': --p.x; break;
      default: throw Error("invalid step direction");
    }
  }
  return p;
}

int BoundaryPath::count(char d) const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), d));
}

std::string Shape::id() const {
  std::ostringstream os;
  os << 'n' << n << ':' << start << ":t" << t << ':' << end;
  return os.str();
}

namespace {

bool steps_over_se(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == 'S' || c == 'E'; });
}

int count_of(const std::string& s, char c) {
  return static_cast<int>(std::count(s.begin(), s.end(), c));
}

struct Columns {
  int x_end = 0;
  std::vector<int> lower, upper;
};

// Column profiles of the two boundary curves. Assumes the step strings are
// well formed and b >= 0.
Columns column_profiles(const Shape& s, int b) {
  Columns c;
  c.x_end = s.t + count_of(s.end, 'E');
  c.lower.assign(c.x_end, 0);
  c.upper.assign(c.x_end, 0);
  for (int x = 0; x < s.t; ++x) c.upper[x] = x + 1;  // NW stair
  int cx = s.t, cy = s.t;
  for (char d : s.end) {
    if (d == 'E') c.upper[cx++] = cy;
    else --cy;
  }
  cx = 0, cy = 0;
  for (char d : s.start) {
    if (d == 'E') c.lower[cx++] = cy;
    else --cy;
  }
  for (int k = 0; k < b; ++k) c.lower[cx + k] = cy + k;  // SE stair
  return c;
}

}  // namespace

ShapeDiagnostics validate(const Shape& shape) {
  ShapeDiagnostics d;
  auto fail = [&d](const std::string& why) {
    d.valid = false;
    d.first_violation = why;
    return d;
  };
  if (shape.n < 1) return fail("n must be at least 1");
  if (static_cast<int>(shape.start.size()) != shape.n || !steps_over_se(shape.start))
    return fail("start path must consist of exactly n steps over {S,E}");
  if (static_cast<int>(shape.end.size()) != shape.n || !steps_over_se(shape.end))
    return fail("end path must consist of exactly n steps over {S,E}");
  if (shape.t < 0) return fail("NW stair length t must be nonnegative");
  const int b = shape.t + count_of(shape.end, 'E') - count_of(shape.start, 'E');
  if (b < 0) return fail("SE stair length b = t + |end|_E - |start|_E must be nonnegative");
  if (shape.t == 0 && shape.start.front() == 'S' && shape.end.front() == 'S')
    return fail("end path must leave the start path at the NW corner");
  if (b == 0 && shape.start.back() == 'S' && shape.end.back() == 'S')
    return fail("end path must reach the SE corner without rejoining the start path");

  const Columns c = column_profiles(shape, b);
  for (int x = 0; x < c.x_end; ++x) {
    if (c.upper[x] <= c.lower[x]) {
      std::ostringstream os;
      os << "column " << x << " of the enclosed region is empty "
         << "(end path does not stay strictly north-east of start path)";
      return fail(os.str());
    }
    if (x > 0 && std::min(c.upper[x - 1], c.upper[x]) <= std::max(c.lower[x - 1], c.lower[x])) {
      std::ostringstream os;
      os << "columns " << x - 1 << " and " << x << " share no row (region disconnected)";
      return fail(os.str());
    }
  }

  d.valid = true;
  int forced = 0;
  for (int x = 0; x < c.x_end; ++x)
    for (int y = c.lower[x]; y < c.upper[x]; ++y)
      if (x - y == 0 || x - y == shape.n) ++forced;
  if (forced > 0) {
    std::ostringstream os;
    os << forced << " cell(s) lie on diagonals 0 or n and are forced to contacts";
    d.notes.push_back(os.str());
  }
  return d;
}

ShapeDiagnostics validate_boundary(const BoundaryPath& start_path, const BoundaryPath& nw_path,
                                   const BoundaryPath& end_path, const BoundaryPath& se_path) {
  ShapeDiagnostics d;
  auto fail = [&d](const std::string& why) {
    d.valid = false;
    d.first_violation = why;
    return d;
  };
  if (start_path.start != Point{0, 0}) return fail("start path must begin at (0,0)");
  if (start_path.steps.empty() || !steps_over_se(start_path.steps))
    return fail("start path must use only S and E steps");
  if (nw_path.start != Point{0, 0}) return fail("NW boundary must begin at (0,0)");
  if (nw_path.steps.size() % 2 != 0) return fail("NW boundary must be an alternating NE stair");
  const int t = static_cast<int>(nw_path.steps.size()) / 2;
  for (int k = 0; k < t; ++k)
    if (nw_path.steps[2 * k] != 'N' || nw_path.steps[2 * k + 1] != 'E')
      return fail("NW boundary must be an alternating NE stair");
  if (end_path.start != Point{t, t}) return fail("end path must begin where the NW stair ends");
  if (end_path.steps.size() != start_path.steps.size() || !steps_over_se(end_path.steps))
    return fail("end path must use only S and E steps, one per pipe");
  if (se_path.start != start_path.end())
    return fail("SE boundary must begin where the start path ends");
  if (se_path.steps.size() % 2 != 0) return fail("SE boundary must be an alternating EN stair");
  const int b = static_cast<int>(se_path.steps.size()) / 2;
  for (int k = 0; k < b; ++k)
    if (se_path.steps[2 * k] != 'E' || se_path.steps[2 * k + 1] != 'N')
      return fail("SE boundary must be an alternating EN stair");
  if (se_path.end() != end_path.end())
    return fail("SE boundary must end where the end path ends");

  Shape shape{static_cast<int>(start_path.steps.size()), start_path.steps, t, end_path.steps};
  ShapeDiagnostics inner = validate(shape);
  if (!inner.valid) return inner;
  // b is determined by the other three paths; mismatched input cannot reach
  // here because the endpoint check above would have failed.
  return inner;
}

ShapeGeometry::ShapeGeometry(const Shape& shape) : shape_(shape) {
  const ShapeDiagnostics d = validate(shape);
  if (!d.valid) throw InvalidShape(d.first_violation);
  b_ = shape.t + count_of(shape.end, 'E') - count_of(shape.start, 'E');
  const Columns c = column_profiles(shape, b_);
  x_end_ = c.x_end;
  lower_ = c.lower;
  upper_ = c.upper;
  for (int x = 0; x < x_end_; ++x)
    for (int y = lower_[x]; y < upper_[x]; ++y) {
      index_[{x, y}] = static_cast<int>(cells_.size());
      cells_.push_back({x, y});
      diag_.push_back(x - y);
    }
  for (int i = 0; i < static_cast<int>(cells_.size()); ++i)
    if (crossable(i)) {
      crossable_.push_back(i);
      word_.push_back(diag_[i]);
    }

  // Pipe p enters through step p of the start path: an S step is the west
  // edge of a cell (heading east), an E step the south edge (heading north).
  int cx = 0, cy = 0;
  for (char d : shape.start) {
    Portal p;
    if (d == 'S') {
      p = {cell_index({cx, cy - 1}), false};
      --cy;
    } else {
      p = {cell_index({cx, cy}), true};
      ++cx;
    }
    if (p.cell < 0) throw InternalInconsistency("start step borders no cell");
    entries_.push_back(p);
  }
  // Step j of the end path: an E step is the north edge of its cell (pipes
  // leave northward), an S step the east edge (pipes leave eastward).
  cx = shape.t, cy = shape.t;
  int step = 0;
  for (char d : shape.end) {
    ++step;
    Portal p;
    if (d == 'E') {
      p = {cell_index({cx, cy - 1}), true};
      ++cx;
    } else {
      p = {cell_index({cx - 1, cy - 1}), false};
      --cy;
    }
    if (p.cell < 0) throw InternalInconsistency("end step borders no cell");
    exits_.push_back(p);
    exit_steps_[{p.cell, p.north}] = step;
  }
}

int ShapeGeometry::cell_index(Point c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool ShapeGeometry::crossable(int index) const {
  return diag_[index] >= 1 && diag_[index] <= shape_.n - 1;
}

int ShapeGeometry::exit_step(int cell, bool north) const {
  auto it = exit_steps_.find({cell, north});
  return it == exit_steps_.end() ? 0 : it->second;
}

BoundaryPath ShapeGeometry::start_path() const { return {{0, 0}, shape_.start}; }

BoundaryPath ShapeGeometry::nw_path() const {
  std::string steps;
  for (int k = 0; k < shape_.t; ++k) steps += "NE";
  return {{0, 0}, steps};
}

BoundaryPath ShapeGeometry::end_path() const { return {{shape_.t, shape_.t}, shape_.end}; }

BoundaryPath ShapeGeometry::se_path() const {
  std::string steps;
  for (int k = 0; k < b_; ++k) steps += "EN";
  return {start_path().end(), steps};
}

GeometryPtr make_geometry(const Shape& shape) {
  return std::make_shared<const ShapeGeometry>(shape);
}

std::vector<Point> cells(const Shape& shape) { return ShapeGeometry(shape).cells(); }

std::vector<int> word(const Shape& shape) { return ShapeGeometry(shape).word(); }

bool is_sortable(const ShapeGeometry& geo, const Permutation& omega) {
  if (omega.size() != geo.n()) throw SizeMismatch("is_sortable: size mismatch");
  return bruhat_leq(omega, demazure_product(geo.word(), geo.n()));
}

bool is_complete(const ShapeGeometry& geo) {
  return is_sortable(geo, Permutation::longest(geo.n()));
}

bool is_sortable(const Shape& shape, const Permutation& omega) {
  return is_sortable(ShapeGeometry(shape), omega);
}

bool is_complete(const Shape& shape) { return is_complete(ShapeGeometry(shape)); }

std::vector<Shape> enumerate_shapes(int n, int max_t) {
  if (n < 1 || max_t < 0) throw Error("enumerate_shapes: n >= 1 and max_t >= 0 required");
  std::vector<std::string> step_strings;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::string s(n, 'S');
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s[i] = 'E';
    step_strings.push_back(std::move(s));
  }
  std::sort(step_strings.begin(), step_strings.end());
  std::vector<Shape> shapes;
  for (const auto& start : step_strings)
    for (const auto& end : step_strings)
      for (int t = 0; t <= max_t; ++t) {
        Shape s{n, start, t, end};
        if (validate(s).valid) shapes.push_back(std::move(s));
      }
  return shapes;
}

}  // namespace pipedreams
