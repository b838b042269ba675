#pragma once

// End-to-end verification suite shared by `fusionkit verify` and the
// acceptance binary.  Each check returns a pass/fail verdict with timing and
// a one-line detail; the ten checks cover:
//   1. exact Kac-table symmetry over the full grid
//   2. exact coset weight relation
//   3. fusion-ring consistency (direct vs tensor-quotient, all axioms,
//      lift independence)
//   4. quantum dimensions: closed form vs Perron–Frobenius, golden-ratio
//      index pin
//   5. β-sector dimension saturation
//   6. field/fusion adjacency duality and fusion-graph connectivity
//   7. density-module relations and primary covariance (exact)
//   8. Fuchsian transport: scalar closed form, contragredient duality,
//      monodromy
//   9. graded super-commutant lemmas (including Clifford algebras)
//  10. mutation sensitivity (corrupted data must be caught)

#include <cstdint>
#include <string>
#include <vector>

namespace fusionkit {

struct CheckResult {
  std::string id;      // short stable identifier, e.g. "kac-symmetry"
  std::string detail;  // one-line summary of what was swept
  bool pass = false;
  double seconds = 0;
};

struct VerifyOptions {
  int level_max = 8;        // cap for ring/dimension/field sweeps
  std::uint64_t seed = 20260816;  // RNG seed (FUSIONKIT_SEED overrides in CLI)
  int fuchsian_systems = 20;
  int scalar_systems = 10;
};

CheckResult check_kac_symmetry(int m_max = 20);
CheckResult check_weight_relation(int ell_max = 10);
CheckResult check_ring_consistency(int ell_max = 6);
CheckResult check_quantum_dims(int ell_max = 8);
CheckResult check_beta_saturation(int ell_max = 8);
CheckResult check_field_duality(int ell_dual_max = 6, int ell_conn_max = 8);
CheckResult check_density_modules();
CheckResult check_fuchsian(std::uint64_t seed, int n_systems = 20,
                           int n_scalar = 10);
CheckResult check_graded();
CheckResult check_mutations(std::uint64_t seed);

// The full suite in criterion order.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace fusionkit
