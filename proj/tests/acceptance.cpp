#include <iostream>

#include "hooksph/spectrum.hpp"
#include "hooksph/verify.hpp"

int main() {
  using namespace hooksph;
  const VerifyCaps caps;
  const auto reports = run_suite(VerifySuite::kAll, caps);
  int failures = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << r.title << " ("
              << r.checked << " checks, " << r.failed << " failed)\n";
    if (r.counterexample) std::cout << "      counterexample: " << r.counterexample->dump() << "\n";
    if (r.id == "C7") {
      const auto norm = certified_normalization(r);
      std::cout << "      certified normalization: " << (norm ? to_string(*norm) : "none") << "\n";
    }
    failures += !r.passed();
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
