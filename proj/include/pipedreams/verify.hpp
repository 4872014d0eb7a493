#ifndef PIPEDREAMS_VERIFY_HPP
#define PIPEDREAMS_VERIFY_HPP

#include <string>
#include <vector>

#include "pipedreams/quotient.hpp"

namespace pipedreams {

/// Exhaustive verification harness. Suites run over every valid shape with
/// pipe count up to `n` and NW stair length up to `max_t`, and every sortable
/// exit permutation on it:
///   partition   - linear extension classes partition [id, omega]
///   congruence  - interval classes, projections, meet/join compatibility
///   lattice     - acyclic order characterizations, covers, meet/join laws
///   insertion   - sweeping and pipe insertion agree, pi lies in lin(result)
///   flips       - filling vs flip-closure enumeration, unique source/sink
///   complete    - complete-shape theorems (non-complete shapes are skipped)
///   lemmas      - coordinate/zone/elbow/three-pipe lemmas (shapes <= 8 cells)
///   all         - everything above
struct SuiteOptions {
  int n = 4;
  int max_t = -1;  // defaults to n
  std::string suite = "all";
  int cell_cap = 20;      // skip shapes with more crossable cells
  int witness_cap = 3;    // witnesses kept per claim
};

struct ClaimSummary {
  std::string claim;
  long checked = 0;
  long failures = 0;
  std::vector<json> witnesses;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<ClaimSummary> claims;
  std::vector<std::string> notes;
  long shapes_seen = 0;
  long shapes_skipped = 0;
  bool all_pass() const;
  json to_json() const;
};

bool known_suite(const std::string& name);
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace pipedreams

#endif
