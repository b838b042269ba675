#pragma once

// Exact conformal weights of the Neveu–Schwarz discrete series and the coset
// bookkeeping that ties them to the two SU(2) levels.
//
// All values are exact rationals:
//   h_su2(i, ℓ)        = (i² + i) / (ℓ + 2)
//   h_kac(p, q, m)     = ([(m+2)p − mq]² − 4) / (8 m (m+2))
// and the coset weight relation, checked verbatim by weight_relation_check:
//   h_su2(i, ℓ) = h_kac(2i+1, 2i'+1, ℓ+2) + h_su2(i', ℓ+2) − (i − i')²/2.

#include <vector>

#include "fusionkit/labels.hpp"
#include "fusionkit/rational.hpp"

namespace fusionkit {

// Weight of the level-ℓ spin-i module.  Requires 0 ≤ 2i ≤ ℓ.
Rational h_su2(Spin i, Level level);

// NS discrete-series weight at Kac position (p, q) in series m.
Rational h_kac(const KacLabel& k);

// Weight of the class of x in the series m = ℓ + 2 (class function: the
// Kac-table identification preserves it).
Rational h_ns(const NSLabel& x, Level level);

// Lexicographically smaller of x and its involution partner.
NSLabel canonicalize(const NSLabel& x, Level level);

// All canonical NS classes at level ℓ, sorted ascending, no duplicates.
// The identification is fixed-point free in the NS sector, so the count is
// exactly half the number of valid labels.
std::vector<NSLabel> enumerate_ns_basis(Level level);

// Exact check of the coset weight relation at (i, i', ℓ).
bool weight_relation_check(const NSLabel& x, Level level);

// Leading exponent Δ = h(charge) − h(source) + h(target) of a charge-`c`
// primary field mapping the source class into the target class.
Rational delta_ns(const NSLabel& target, const NSLabel& source,
                  const NSLabel& charge, Level level);

// Quadratic coefficient C = [(i−i')² − (j−j')² + (k−k')²]/2 attached to the
// triple (target, source, charge) = ((i,i'), (j,j'), (k,k')).
Rational c_coefficient(const NSLabel& target, const NSLabel& source,
                       const NSLabel& charge);

}  // namespace fusionkit
