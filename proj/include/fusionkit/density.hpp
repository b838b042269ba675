#pragma once

// Exact windowed models of the NS algebra acting on density modules
// F^σ_{λ,μ}.  The module has two sectors,
//   v_i  with  i ∈ σ/2 + ℤ,      w_j  with  j ∈ (1−σ)/2 + ℤ,
// truncated to |index| ≤ W, and mode actions
//   L_n v_i = −(i + μ + λn)          v_{i+n}
//   G_s v_i =                         w_{i+s}
//   L_n w_j = −(j + μ + (λ − 1/2)n)  w_{j+n}
//   G_s w_j = −(j + μ + (2λ − 1)s)   v_{j+s}
// with images outside the window dropped.  On interior basis vectors (those
// that cannot be pushed out of the window by the relation being tested) the
// NS relations hold exactly, with zero central term:
//   [L_m, L_n] = (m − n) L_{m+n}
//   [L_n, G_s] = (n/2 − s) G_{n+s}
//   [G_r, G_s]_+ = 2 L_{r+s}
// Everything is exact-rational; checks are equalities, not tolerances.

#include <Eigen/SparseCore>

#include <vector>

#include "fusionkit/rational.hpp"

namespace fusionkit {

using RatSparse = Eigen::SparseMatrix<Rational>;

struct DensityModule {
  int sigma = 0;      // 0 or 1
  Rational lambda;
  Rational mu;
  int window = 12;    // W

  // Doubled indices of the two sectors, ascending; basis order is the v
  // block followed by the w block.
  std::vector<int> v_idx;
  std::vector<int> w_idx;

  int dim() const { return static_cast<int>(v_idx.size() + w_idx.size()); }
  int v_pos(int twice_index) const;  // basis position, -1 outside the window
  int w_pos(int twice_index) const;
};

DensityModule build_module(int sigma, const Rational& lambda,
                           const Rational& mu, int window = 12);

enum class ModeKind { L, G };

// Matrix of L_n (twice_index = 2n, even) or G_s (twice_index = 2s, odd) on
// the windowed basis.
RatSparse build_mode(const DensityModule& mod, ModeKind kind, int twice_index);

// [L_m, L_n] = (m − n) L_{m+n}, checked on columns with |idx| + |m| + |n| ≤ W.
bool check_ll(const DensityModule& mod, int m, int n);

// [L_n, G_s] = (n/2 − s) G_{n+s};  twice_s is 2s (odd).
bool check_lg(const DensityModule& mod, int n, int twice_s);

// [G_r, G_s]_+ = 2 L_{r+s};  doubled half-integer arguments.
bool check_gg(const DensityModule& mod, int twice_r, int twice_s);

// The [L_m, L_n] check with caller-supplied matrices for L_m and L_n (the
// mutation canary feeds a corrupted operator through this).
bool ll_relation_holds(const DensityModule& mod, const RatSparse& Lm,
                       const RatSparse& Ln, int m, int n);

// Primary-field covariance: a weight-h primary φ with modes indexed like the
// v sector must satisfy, for every interior index m,
//   −(m + μ + λn)  =  −(m + n) − Δ + h(n + 1),   Δ = h + μ.
// True for all n ≠ 0 exactly when h = 1 − λ.
bool covariance_consistency(const DensityModule& mod, int n, const Rational& h);

}  // namespace fusionkit
