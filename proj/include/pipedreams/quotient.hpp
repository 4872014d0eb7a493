#ifndef PIPEDREAMS_QUOTIENT_HPP
#define PIPEDREAMS_QUOTIENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pipedreams/pipedream.hpp"

namespace pipedreams {

using json = nlohmann::ordered_json;

/// One cross/contact decision of the sweeping algorithm at a two-pipe cell.
struct SweepDecision {
  int cell = -1;
  int west = 0;   // pipe arriving horizontally
  int south = 0;  // pipe arriving vertically
  bool cross = false;
  bool last_point = false;  // cross forced because this is the last crossing point
};

/// Sweeping algorithm: fills cells from southwest to northeast, crossing two
/// pipes when the exit permutation reverses them and either pi reverses them
/// too or the cell is their last possible crossing point (Demazure test).
/// Throws NotSortable / NotBelow.
PipeDream sweep_insert(const GeometryPtr& geo, const Permutation& omega, const Permutation& pi,
                       std::vector<SweepDecision>* decisions = nullptr);

/// Insertion algorithm: routes one pipe at a time in the order given by pi;
/// each pipe completes the pending W->N turns inside its zone.
PipeDream pipe_insert(const GeometryPtr& geo, const Permutation& omega, const Permutation& pi);

/// The insertion map ins_{F,omega}: the unique strongly acyclic pipe dream
/// whose linear extensions contain pi. Computed by the sweeping algorithm.
PipeDream ins(const GeometryPtr& geo, const Permutation& omega, const Permutation& pi);

struct CongruenceClass {
  PipeDream dream;
  std::vector<Permutation> members;  // lin(dream), sorted
  Permutation min, max;
};

std::vector<CongruenceClass> congruence_classes(const GeometryPtr& geo, const Permutation& omega,
                                                int cap = -1);

struct CheckItem {
  std::string claim;
  bool pass = true;
  json witness;  // null when passing
};

struct VerificationReport {
  std::string shape_id;
  std::string omega;
  std::vector<CheckItem> checks;
  bool all_pass() const;
  json to_json() const;
};

/// Congruence criterion checks (classes are intervals with the inversion
/// characterization; projections order preserving; meets and joins
/// compatible) over supplied classes; the plain entry point computes them.
VerificationReport check_classes(const GeometryPtr& geo, const Permutation& omega,
                                 const std::vector<CongruenceClass>& classes);
VerificationReport check_congruence(const GeometryPtr& geo, const Permutation& omega);

/// Acyclic order on strongly acyclic pipe dreams with the same shape and
/// exit: P <= P' when every reversed pair of P stays reversed in P'.
/// Throws DifferentContext on mismatched shape or exit.
bool acyclic_leq(const PipeDream& lhs, const PipeDream& rhs);

/// All characterizations of Prop. 2.3, for the verification harness.
struct AcyclicLeqChecks {
  bool some_lin_pair;    // (1)
  bool min_leq;          // (2), minimal linear extensions
  bool max_leq;          // (2), maximal linear extensions
  bool no_conflict;      // (3)
  bool reversed_subset;  // (4)
  bool straight_subset;  // (5)
  bool agree() const;
};
AcyclicLeqChecks acyclic_leq_checks(const PipeDream& lhs, const PipeDream& rhs);

/// Pipe dreams covering `dream` in the acyclic order, realized through weak
/// order covers across classes.
std::vector<PipeDream> acyclic_covers(const PipeDream& dream);

PipeDream acyclic_meet(const PipeDream& lhs, const PipeDream& rhs);
PipeDream acyclic_join(const PipeDream& lhs, const PipeDream& rhs);

/// DOT Hasse diagram of the acyclic order; vertices carry the min and max
/// linear extensions of their class.
std::string lattice_dot(const GeometryPtr& geo, const Permutation& omega, int cap = -1);

/// Complete-shape theorem checks: noninversion paths in the plain contact
/// graph, acyclic => strongly acyclic, and the coordinate inequalities.
/// Throws NotComplete.
VerificationReport verify_complete_shape(const GeometryPtr& geo, int cap = -1);

struct AcyclicWitness {
  Shape shape;
  Permutation omega;
  std::string filling;
};

/// First reduced pipe dream that is acyclic but not strongly acyclic over all
/// shapes with 2 <= n <= nmax and t <= n, smallest cell counts first.
std::optional<AcyclicWitness> find_acyclic_not_strongly(int nmax, int cap = -1);

// JSON serialization of the core value types.
json shape_to_json(const Shape& shape);
Shape shape_from_json(const json& j);
json dream_to_json(const PipeDream& dream);
PipeDream dream_from_json(const json& j);
json permutation_to_json(const Permutation& w);
Permutation permutation_from_json(const json& j);

}  // namespace pipedreams

#endif
