#include <chrono>
#include <iostream>
#include "pipedreams/verify.hpp"
using namespace pipedreams;
int main(int argc, char** argv) {
  SuiteOptions opt;
  opt.n = argc > 1 ? std::atoi(argv[1]) : 3;
  opt.max_t = argc > 2 ? std::atoi(argv[2]) : -1;
  opt.suite = argc > 3 ? argv[3] : "all";
  auto t0 = std::chrono::steady_clock::now();
  auto report = run_suite(opt);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "pass=" << report.all_pass() << " shapes=" << report.shapes_seen
            << " skipped=" << report.shapes_skipped << " time=" << dt << "s\n";
  for (auto& c : report.claims) {
    std::cout << "  " << c.claim << ": checked=" << c.checked << " failures=" << c.failures << "\n";
    if (c.failures > 0 && !c.witnesses.empty())
      std::cout << "    witness: " << c.witnesses[0].dump() << "\n";
  }
  return report.all_pass() ? 0 : 1;
}
