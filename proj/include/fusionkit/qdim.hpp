#pragma once

// Quantum dimensions and subfactor indices for the NS classes, computed two
// independent ways:
//   closed form   qdim_su2(i, ℓ) = sin((2i+1)π/m) / sin(π/m),  m = ℓ+2,
//                 qdim_ns(i,i')  = qdim_su2(i, ℓ) · qdim_su2(i', ℓ+2)
//   spectral      Perron–Frobenius eigenvector of a generator's fusion
//                 matrix, normalized to 1 at the unit.
// The subfactor index of a class is the square of its quantum dimension.

#include <Eigen/Core>

#include "fusionkit/fusion.hpp"
#include "fusionkit/labels.hpp"

namespace fusionkit {

double qdim_su2(Spin i, Level level);

// Class function: both lifts of x give the same value.
double qdim_ns(const NSLabel& x, Level level);

struct PfResult {
  Eigen::VectorXd dims;  // unit-normalized Perron–Frobenius vector
  double eigenvalue = 0; // spectral radius of the generator's fusion matrix
  int iterations = 0;
};

// Power iteration on fusion_matrix(ring, generator): start from the all-ones
// vector, renormalize by the unit entry each step, stop when the max-norm
// update drops below 1e-13 (throws numeric_error after 1e5 iterations).
PfResult pf_dims(const NsRing& ring, int generator);

// qdim_ns(x)².
double subfactor_index(const NSLabel& x, Level level);

// Saturation of the β-sector dimension sum: for every class (i, j),
//   qdim_ns(β) · qdim_ns(i,j) = Σ_{k' ∈ ⟨1,j⟩_{ℓ+2}} qdim_ns(i, k'),
// within tol.  β is the class of (0, 1).
bool beta_saturation_check(Level level, double tol = 1e-8);

}  // namespace fusionkit
