#pragma once

// Regular-singular transport for first-order Fuchsian systems
//   f'(z) = A(z) f(z),   A(z) = P/z + Q/(1 − z),
// whose only singularities sit at 0, 1 and ∞ (residues P, −Q, Q − P).
//
// Pipeline:
//   * Frobenius basis at 0:  F(z) = g(z) · V · diag(z^{a_j}) with g(0) = I,
//     exponents a = eig(P), recurrence  k·g_k − [P, g_k] = Q·Σ_{m<k} g_m,
//     valid for |z| ≤ 1/2 at series order 60.
//   * The substitution w = 1/z turns the system into the companion form
//     r'(w) = ((Q−P)/w + Q/(1−w)) r(w); its Frobenius basis at w = 0 gives
//     the ∞-normalized solutions R_m(z) on |z| ≥ 2.
//   * Adaptive continuation along a polyline connecting the two discs; the
//     canonical path {1/4, 1/4 − i, 4 − i, 4} passes below both singular
//     points.
//   * Transport matrix c from the fit F_j(z_end) = Σ_m c_{jm} R_m(z_end),
//     verified at an independent point of the final leg.
//   * Contragredient duality: the dual system (−Pᵀ, −Qᵀ), normalized with
//     the inverse-transpose spectral data, satisfies ĉ = (c⁻¹)ᵀ and the
//     pairing K(z)ᵀ F(z) ≡ I along the whole path.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "fusionkit/errors.hpp"

namespace fusionkit {

using Complex = std::complex<double>;

struct FuchsianSystem {
  Eigen::MatrixXcd P;
  Eigen::MatrixXcd Q;
  int series_order = 60;
  std::vector<Complex> path;  // empty → canonical_path()
  double ode_tol = 1e-12;
  double match_tol = 1e-8;

  int n() const { return static_cast<int>(P.rows()); }
};

// {1/4, 1/4 − i, 4 − i, 4}.
std::vector<Complex> canonical_path();

// Every path point must stay ≥ 0.05 away from the true singularities 0 and
// 1; interior waypoints (everything but the two anchors) must additionally
// keep ≥ 0.05 from the ray [0, ∞) where the solution branch cuts live.
void validate_path(const std::vector<Complex>& path);

struct SpectralData {
  Eigen::MatrixXcd vectors;    // columns are eigenvectors
  Eigen::VectorXcd exponents;  // matching eigenvalues
};

// Deterministic eigendecomposition (eigenvalues sorted by (Re, Im), each
// column phase-fixed and unit-norm).  Throws numeric_error when the
// eigenvector basis is ill-conditioned (near-defective matrix).
SpectralData eigen_spectral(const Eigen::MatrixXcd& M);

// Two exponents differ by a nonzero integer (within tol): the Frobenius
// recurrence k − ad_P would be singular.
bool is_resonant(const Eigen::VectorXcd& exponents, double tol = 1e-9);

struct FrobeniusBasis {
  SpectralData spec;
  std::vector<Eigen::MatrixXcd> g;  // g[0] = I
  double radius = 0.5;

  Eigen::MatrixXcd gauge_at(Complex z) const;  // Σ g_k z^k
  // Columns g(z)·z^{a_j}·v_j, principal logarithm (anchors keep Re z > 0).
  Eigen::MatrixXcd eval(Complex z) const;
};

// Frobenius basis at z = 0 of the system with residues (P at 0, −Q at 1).
// Optional prescribed spectral data replaces the internal eigendecomposition
// (used to tie the normalization of a dual system to its primal partner).
// Throws numeric_error on resonant exponents or a non-converging series.
FrobeniusBasis frobenius_basis(const Eigen::MatrixXcd& P,
                               const Eigen::MatrixXcd& Q, int series_order = 60,
                               std::optional<SpectralData> spec = std::nullopt);

// Analytic continuation of Y' = A(z)·Y along the system's path (adaptive
// Dormand–Prince 5(4), local tolerance ode_tol).  Returns Y at every
// waypoint; Y at path[0] is the supplied Y0.
std::vector<Eigen::MatrixXcd> continue_solution(const FuchsianSystem& sys,
                                                const Eigen::MatrixXcd& Y0);

struct Transport {
  Eigen::MatrixXcd c;      // F_j(z_end) = Σ_m c_{jm} R_m(z_end)
  double residual = 0;     // relative mismatch at an independent check point
  double condition = 0;    // condition number of c
};

// Requires non-resonant P and Q − P, |path front| ≤ 1/2 and |path back| ≥ 2.
// The fit is verified at the midpoint of the final leg; a residual above
// match_tol throws numeric_error.
Transport transport_matrix(const FuchsianSystem& sys,
                           std::optional<SpectralData> zero_side = std::nullopt,
                           std::optional<SpectralData> inf_side = std::nullopt);

struct DualityReport {
  Transport primal;
  Transport dual;
  double pairing_deviation = 0;  // max ‖K(z)ᵀF(z) − I‖ along the path
  double inverse_deviation = 0;  // ‖ĉ − (c⁻¹)ᵀ‖
  bool ok = false;
};

// Builds the dual system (−Pᵀ, −Qᵀ) with inverse-transpose spectral
// normalization, transports both, and checks ĉ = (c⁻¹)ᵀ together with the
// constancy of the canonical pairing.
DualityReport contragredient_check(const FuchsianSystem& sys,
                                   double pair_tol = 1e-8,
                                   double inverse_tol = 1e-6);

// Continues the 0-basis once around z = 0 (radius 1/4 octagon) and compares
// with the expected column scaling e^{2πi a_j}; returns the max deviation.
double monodromy_deviation(const FuchsianSystem& sys);

// Composite braiding μ_{(r,r'),(s,s')} = (c₁)_{rs} · ((c₂⁻¹)ᵀ)_{r's'} on
// lexicographic pair indices, i.e. the Kronecker product c₁ ⊗ (c₂⁻¹)ᵀ.
Eigen::MatrixXcd compose_ns_braiding(const Eigen::MatrixXcd& c1,
                                     const Eigen::MatrixXcd& c2);

// Entries uniform in the complex disc of radius 1/2, resampled until both
// P and Q − P are comfortably non-resonant and diagonalizable.
FuchsianSystem random_system(int n, std::mt19937_64& rng);

}  // namespace fusionkit
