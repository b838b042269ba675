// Acceptance gate: runs the ten verification criteria at their contractual
// sweep sizes and wall-clock budgets, printing one verdict line per
// criterion.  Exit status 0 iff every criterion passes within budget.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fusionkit/verify.hpp"

int main() {
  using fusionkit::CheckResult;
  constexpr std::uint64_t kSeed = 20260816;

  struct Criterion {
    double budget_seconds;
    std::function<CheckResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, [] { return fusionkit::check_kac_symmetry(20); }},
      {1, [] { return fusionkit::check_weight_relation(10); }},
      {30, [] { return fusionkit::check_ring_consistency(6); }},
      {10, [] { return fusionkit::check_quantum_dims(8); }},
      {5, [] { return fusionkit::check_beta_saturation(8); }},
      {5, [] { return fusionkit::check_field_duality(6, 8); }},
      {10, [] { return fusionkit::check_density_modules(); }},
      {60, [] { return fusionkit::check_fuchsian(kSeed, 20, 10); }},
      {10, [] { return fusionkit::check_graded(); }},
      {10, [] { return fusionkit::check_mutations(kSeed); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const CheckResult r = criteria[k].run();
    const bool in_budget = r.seconds < criteria[k].budget_seconds;
    const bool ok = r.pass && in_budget;
    if (!ok) ++failed;
    std::printf("[%s] criterion-%zu %-22s (%.2fs <= %.0fs%s) %s\n",
                ok ? "PASS" : "FAIL", k + 1, r.id.c_str(), r.seconds,
                criteria[k].budget_seconds,
                in_budget ? "" : " EXCEEDED", r.detail.c_str());
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria FAILED\n", failed,
              criteria.size());
  return 1;
}
