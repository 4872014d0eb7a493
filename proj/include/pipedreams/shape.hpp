#ifndef PIPEDREAMS_SHAPE_HPP
#define PIPEDREAMS_SHAPE_HPP

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pipedreams/permutation.hpp"

namespace pipedreams {

struct Point {
  int x = 0;
  int y = 0;
  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

/// A grid path given by its starting point and a step string over {N,S,E,W}.
struct BoundaryPath {
  Point start;
  std::string steps;

  Point end() const;
  int count(char d) const;
};

/// An alternating shape: a start path of n S/E steps from (0,0), a NW stair
/// (NE)^t, an end path of n S/E steps from (t,t), and the SE stair joining
/// the two loose ends. The enclosed cells are derived.
struct Shape {
  int n = 0;
  std::string start;  // read NW -> SE
  int t = 0;
  std::string end;  // read NW -> SE

  bool operator==(const Shape&) const = default;
  auto operator<=>(const Shape&) const = default;
  std::string id() const;  // compact identifier, e.g. "n2:SS:t0:EE"
};

struct ShapeDiagnostics {
  bool valid = false;
  std::string first_violation;       // empty when valid
  std::vector<std::string> notes;    // informational, e.g. forced cells
};

ShapeDiagnostics validate(const Shape& shape);

/// Validation from four explicit boundary paths; catches malformed inputs the
/// Shape fields cannot express (a NW part that is not a stair, stray N steps
/// in the end path, mismatched corners).
ShapeDiagnostics validate_boundary(const BoundaryPath& start_path,
                                   const BoundaryPath& nw_path,
                                   const BoundaryPath& end_path,
                                   const BoundaryPath& se_path);

/// Derived view of a valid shape: cell set, per-cell diagonals, pipe entry
/// and exit portals. Construction throws InvalidShape on invalid input.
class ShapeGeometry {
 public:
  explicit ShapeGeometry(const Shape& shape);

  const Shape& shape() const { return shape_; }
  int n() const { return shape_.n; }
  int se_stair_len() const { return b_; }
  int x_end() const { return x_end_; }
  int lower(int x) const { return lower_[x]; }
  int upper(int x) const { return upper_[x]; }

  const std::vector<Point>& cells() const { return cells_; }  // x asc, then y asc
  int cell_index(Point c) const;                              // -1 when absent
  Point cell(int index) const { return cells_[index]; }
  int diag(int index) const { return diag_[index]; }
  bool crossable(int index) const;  // diagonal in [1, n-1]
  const std::vector<int>& crossable_cells() const { return crossable_; }

  struct Portal {
    int cell = -1;
    bool north = false;  // entry: heading north; exit: leaving northward
  };
  Portal entry(int pipe) const { return entries_[pipe - 1]; }
  Portal exit_portal(int end_step) const { return exits_[end_step - 1]; }
  /// End-path step through which a pipe leaving `cell` in the given direction
  /// exits, or 0 when that edge is not on the end path.
  int exit_step(int cell, bool north) const;

  /// One letter tau_{x-y} per crossable cell, in canonical sweep order
  /// (columns left to right, bottom to top within a column).
  const std::vector<int>& word() const { return word_; }

  BoundaryPath start_path() const;
  BoundaryPath nw_path() const;
  BoundaryPath end_path() const;
  BoundaryPath se_path() const;

 private:
  Shape shape_;
  int b_ = 0;
  int x_end_ = 0;
  std::vector<int> lower_, upper_;
  std::vector<Point> cells_;
  std::map<Point, int> index_;
  std::vector<int> diag_;
  std::vector<int> crossable_;
  std::vector<Portal> entries_, exits_;
  std::map<std::pair<int, bool>, int> exit_steps_;
  std::vector<int> word_;
};

using GeometryPtr = std::shared_ptr<const ShapeGeometry>;
GeometryPtr make_geometry(const Shape& shape);

std::vector<Point> cells(const Shape& shape);
std::vector<int> word(const Shape& shape);

bool is_sortable(const ShapeGeometry& geo, const Permutation& omega);
bool is_complete(const ShapeGeometry& geo);
bool is_sortable(const Shape& shape, const Permutation& omega);
bool is_complete(const Shape& shape);

/// Every valid shape with the given pipe count and NW stair length at most
/// max_t, each exactly once, in deterministic order.
std::vector<Shape> enumerate_shapes(int n, int max_t);

}  // namespace pipedreams

#endif
