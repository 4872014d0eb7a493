#ifndef PIPEDREAMS_PIPEDREAM_HPP
#define PIPEDREAMS_PIPEDREAM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pipedreams/shape.hpp"

namespace pipedreams {

enum class Tile : char { Contact = 'C', Cross = 'X' };

/// The axis-aligned rectangle spanned by a pipe's start and end coordinates;
/// it contains the pipe's entire trajectory.
struct Zone {
  int pipe = 0;
  Point sw, ne;
  bool contains_cell(Point c) const {
    return sw.x <= c.x && c.x + 1 <= ne.x && sw.y <= c.y && c.y + 1 <= ne.y;
  }
};

/// Directed graph on pipe indices 1..n. Arcs (a,b) come from contacts with
/// pipe a on the W->N strand and b on the S->E strand; the extended variant
/// adds an arc per noninversion of the exit permutation.
struct ContactGraph {
  int n = 0;
  bool extended = false;
  std::set<Pair> arcs;  // ordered pairs a -> b, multiplicity dropped

  /// reach[a-1] has bit (b-1) set when a directed path a -> b exists.
  std::vector<std::uint32_t> closure() const;
  bool is_acyclic() const;
  bool reaches(int a, int b) const;  // path of length >= 1
  std::vector<Permutation> topological_orders() const;  // lex order
  std::string dot(const std::set<Pair>* plain_arcs = nullptr) const;
};

/// A filling of a shape's cells by crosses and contacts, together with the
/// traced pipes and exit permutation. Immutable.
class PipeDream {
 public:
  /// `filling` holds one of 'X'/'C' per cell in canonical cell order.
  /// Throws InvalidFilling when some pipe leaves through a boundary edge
  /// that is not an end-path step.
  static PipeDream create(GeometryPtr geo, std::string filling);

  const ShapeGeometry& geo() const { return *geo_; }
  const GeometryPtr& geo_ptr() const { return geo_; }
  const std::string& filling() const { return filling_; }
  Tile tile(int cell) const { return static_cast<Tile>(filling_[cell]); }
  const Permutation& exit() const { return exit_; }

  struct Visit {
    int cell = -1;
    bool heading_north = false;  // entered from the south edge
  };
  const std::vector<std::vector<Visit>>& traces() const { return traces_; }
  int west_pipe(int cell) const { return west_[cell]; }    // 0 when unused
  int south_pipe(int cell) const { return south_[cell]; }  // 0 when unused
  int strand_count(int cell) const { return (west_[cell] != 0) + (south_[cell] != 0); }

  int crossing_count() const;  // cross tiles traversed by two pipes
  bool is_reduced() const;     // no pipe pair crosses twice
  PipeDream reduce() const;    // replace double crossings by contact pairs

  std::pair<Point, Point> start_end_coords(int pipe) const;
  std::vector<Zone> zones() const;
  Zone zone(int pipe) const;

  ContactGraph contact_graph(bool extended) const;
  bool is_acyclic() const;
  bool is_strongly_acyclic() const;

  /// Topological orders of the extended contact graph; equal to the
  /// topological orders of the plain graph lying below the exit permutation
  /// (both are computed and compared). Throws CyclicGraph.
  std::vector<Permutation> linear_extensions() const;

  /// Cells of the same-pipe-pair crossings, keyed by (min,max) pipe pair.
  std::vector<int> crossing_cells(int a, int b) const;

  std::vector<int> flippable_contacts() const;  // canonical order
  PipeDream flip(int cell) const;               // throws NotFlippable
  bool is_increasing(int cell) const;           // contact south-west of its crossing

  bool operator==(const PipeDream& other) const {
    return geo_->shape() == other.geo_->shape() && filling_ == other.filling_;
  }

 private:
  PipeDream() = default;
  GeometryPtr geo_;
  std::string filling_;
  Permutation exit_;
  std::vector<std::vector<Visit>> traces_;
  std::vector<int> west_, south_;
};

/// Enumeration cap: fillings are enumerated over 2^k crossable cells; shapes
/// with k above the cap are rejected with Error. cap < 0 reads the
/// PIPEDREAM_MAX_CELLS environment variable (default 12).
int enumeration_cap();

/// All valid fillings with contacts forced outside the crossable cells,
/// streamed in lexicographic filling order ('C' < 'X').
void for_each_dream(const GeometryPtr& geo, const std::function<void(const PipeDream&)>& fn,
                    int cap = -1);

/// Pi_F(omega): reduced pipe dreams with the given exit, canonical order.
std::vector<PipeDream> enumerate_pipe_dreams(const GeometryPtr& geo, const Permutation& omega,
                                             int cap = -1);
/// Sigma_F(omega): the strongly acyclic ones.
std::vector<PipeDream> strongly_acyclic_subset(const GeometryPtr& geo, const Permutation& omega,
                                               int cap = -1);
/// Pi_F(omega) computed by flip closure from an inserted seed; used as an
/// independent oracle against the filling enumeration.
std::vector<PipeDream> enumerate_by_flips(const GeometryPtr& geo, const Permutation& omega);

struct FlipGraph {
  std::vector<PipeDream> nodes;       // canonical order
  std::set<Pair> arcs;                // increasing flips, 0-based node indices
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
  std::string dot() const;
};
FlipGraph flip_graph(const GeometryPtr& geo, const Permutation& omega, int cap = -1);

/// 'X' cross, '%' contact, '·' outside the shape; rows north to south.
std::string ascii_render(const PipeDream& dream);
std::string svg_render(const PipeDream& dream);

}  // namespace pipedreams

#endif
