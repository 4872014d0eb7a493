// Dev scratch: validate sweep_insert + pipe_insert against enumeration.
#include <iostream>
#include "pipedreams/errors.hpp"
#include "pipedreams/quotient.hpp"
using namespace pipedreams;

int main() {
  long instances = 0, sweep_fail = 0, pipes_fail = 0, mismatch = 0, notin = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_shapes(n, n)) {
      auto geo = make_geometry(s);
      if (geo->crossable_cells().size() > 9) continue;
      std::map<Permutation, std::vector<PipeDream>> buckets;
      for_each_dream(geo, [&](const PipeDream& d) {
        if (d.is_reduced()) buckets[d.exit()].push_back(d);
      });
      for (auto& [omega, dreams] : buckets) {
        std::vector<PipeDream> sigma;
        for (auto& d : dreams) if (d.is_strongly_acyclic()) sigma.push_back(d);
        for (const auto& pi : interval(omega)) {
          ++instances;
          PipeDream const* got = nullptr;
          PipeDream swept = [&]() -> PipeDream {
            try { return sweep_insert(geo, omega, pi); }
            catch (const std::exception& e) { ++sweep_fail; std::cout << "SWEEP FAIL " << s.id() << " w=" << omega.str() << " pi=" << pi.str() << ": " << e.what() << "\n"; throw; }
          }();
          try {
            PipeDream routed = pipe_insert(geo, omega, pi);
            if (!(routed == swept)) { ++mismatch; if (mismatch < 5) std::cout << "MISMATCH " << s.id() << " w=" << omega.str() << " pi=" << pi.str() << "\n  sweep=" << swept.filling() << "\n  pipes=" << routed.filling() << "\n"; }
          } catch (const std::exception& e) {
            ++pipes_fail;
            if (pipes_fail < 5) std::cout << "PIPES FAIL " << s.id() << " w=" << omega.str() << " pi=" << pi.str() << ": " << e.what() << "\n";
          }
          // pi must be a linear extension of the image
          for (auto& d : sigma)
            if (d == swept) got = &d;
          if (!got) { ++notin; continue; }
          auto lin = got->linear_extensions();
          if (!std::binary_search(lin.begin(), lin.end(), pi)) ++notin;
        }
      }
    }
  std::cout << "instances=" << instances << " sweep_fail=" << sweep_fail
            << " pipes_fail=" << pipes_fail << " mismatch=" << mismatch << " notin=" << notin
            << "\n";
  return 0;
}
