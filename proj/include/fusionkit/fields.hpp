#pragma once

// Constructibility of the charge-α and charge-β primary fields between NS
// classes, the induced adjacency graphs, and the abelian braiding data.
//
// The two charges are α = (1/2, 1/2) (needs ℓ ≥ 1) and β = (0, 1).  For a
// field with raw source (j, j') and raw target (i, i'):
//   * level-ℓ factor couples the unprimed spins, level-(ℓ+2) the primed ones;
//   * α: both factors use the spin-1/2 rule |i−j| = 1/2 with truncation
//     i + j + 1/2 ≤ level;
//   * β: unprimed spins must be equal (spin-0 charge at level ℓ), primed
//     spins use the spin-1 rule |i'−j'| ≤ 1, i'−j' ∈ ℤ, i'+j' ≥ 1 (the
//     Clebsch–Gordan floor, which only excludes i' = j' = 0) and truncation
//     i' + j' + 1 ≤ ℓ + 2.
// Each constructible field carries a parity σ ∈ {0, 1}:
//   α: equal shifts (i−j = i'−j') → σ = 0, opposite shifts → σ = 1;
//   β: j' = i' ± 1 → σ = 0, j' = i' → σ = 1.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fusionkit/kac.hpp"
#include "fusionkit/labels.hpp"
#include "fusionkit/rational.hpp"

namespace fusionkit {

enum class Charge { Alpha, Beta };

std::string to_string(Charge c);

// Parses "alpha" / "beta" (exact, lowercase).
Charge parse_charge(const std::string& text);

// The charge's own NS label: α = (1/2, 1/2), β = (0, 1).  α does not exist
// at ℓ = 0 (its level-ℓ spin would exceed ℓ/2): domain_error.
NSLabel charge_label(Charge c, Level level);

// Non-vanishing of the smeared intertwiner V_j ⊗ V_k → V_i at level ℓ for
// charge spins k ∈ {1/2, 1} (others: domain_error).  Requires i, j admissible.
bool su2_nonzero(Spin i, Spin j, Spin k, Level level);

// σ of the (target ← source) charge-c field on raw labels, or nullopt when
// the field is not constructible.
std::optional<int> field_sigma(const NSLabel& target, const NSLabel& source,
                               Charge c, Level level);

struct FieldSpec {
  NSLabel target;
  NSLabel source;
  Charge charge = Charge::Alpha;
  int sigma = 0;
};

// True when the raw-label field exists and its parity matches spec.sigma.
bool ns_constructible(const FieldSpec& spec, Level level);

// Canonical classes reachable from class x by a charge-c field, scanning
// both lifts of x (the result is a set of classes; multiplicity is the
// fusion ring's business).
std::set<NSLabel> adjacency_set(const NSLabel& x, Charge c, Level level);

// Abelian braiding phase λ = h(target) + h(source) − h(int_left) − h(int_right).
Rational braiding_phase(const NSLabel& target, const NSLabel& source,
                        const NSLabel& int_left, const NSLabel& int_right,
                        Level level);

// Classes that can appear between a charge-`right` field into `outer` and a
// charge-`left` field out of `inner`:
//   adjacency_set(outer, right) ∩ adjacency_set(inner, left).
// The (β, β) pair is unsupported (no finite closed form): domain_error.
std::set<NSLabel> braiding_support(Charge left, Charge right,
                                   const NSLabel& outer, const NSLabel& inner,
                                   Level level);

// Advisory comparison of σ against the parity of Δ mod 1 (0 when Δ ∈ ℤ,
// 1 when Δ ∈ ℤ + 1/2, indeterminate otherwise).  Reported, never asserted:
// Δ is generically not a half-integer.
struct SigmaDeltaReport {
  int agree = 0;
  int disagree = 0;
  int indeterminate = 0;
};

SigmaDeltaReport sigma_delta_survey(Charge c, Level level);

}  // namespace fusionkit
