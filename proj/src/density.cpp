#include "fusionkit/density.hpp"

#include <Eigen/SparseCore>

#include <cstdlib>
#include <vector>

namespace fusionkit {

namespace {

// Position of doubled index t in an ascending arithmetic sequence with step 2.
int sequence_pos(const std::vector<int>& seq, int t) {
  if (seq.empty() || t < seq.front() || t > seq.back()) return -1;
  if ((t - seq.front()) % 2 != 0) return -1;
  return (t - seq.front()) / 2;
}

}  // namespace

int DensityModule::v_pos(int twice_index) const {
  return sequence_pos(v_idx, twice_index);
}

int DensityModule::w_pos(int twice_index) const {
  int p = sequence_pos(w_idx, twice_index);
  return p < 0 ? -1 : p + static_cast<int>(v_idx.size());
}

DensityModule build_module(int sigma, const Rational& lambda,
                           const Rational& mu, int window) {
  if (sigma != 0 && sigma != 1)
    throw domain_error("build_module: sigma must be 0 or 1");
  if (window < 1) throw domain_error("build_module: window must be positive");
  DensityModule mod;
  mod.sigma = sigma;
  mod.lambda = lambda;
  mod.mu = mu;
  mod.window = window;
  // v sector: i ∈ σ/2 + ℤ, |i| ≤ W; w sector: j ∈ (1−σ)/2 + ℤ, |j| ≤ W.
  auto fill = [window](int parity) {
    std::vector<int> idx;
    int start = -2 * window;  // smallest doubled index ≥ −2W of this parity
    if ((start - parity) % 2 != 0) ++start;
    for (int t = start; t <= 2 * window; t += 2) idx.push_back(t);
    return idx;
  };
  mod.v_idx = fill(sigma % 2);
  mod.w_idx = fill((1 - sigma) % 2);
  return mod;
}

RatSparse build_mode(const DensityModule& mod, ModeKind kind, int twice_index) {
  const bool even = (twice_index % 2 == 0);
  if (kind == ModeKind::L && !even)
    throw domain_error("build_mode: L modes take integer indices");
  if (kind == ModeKind::G && even)
    throw domain_error("build_mode: G modes take half-integer indices");

  const int dim = mod.dim();
  std::vector<Eigen::Triplet<Rational>> entries;
  const Rational& lam = mod.lambda;
  const Rational& mu = mod.mu;

  if (kind == ModeKind::L) {
    const long n = twice_index / 2;
    // L_n v_i = −(i + μ + λn) v_{i+n}
    for (int t : mod.v_idx) {
      int dst = mod.v_pos(t + twice_index);
      if (dst < 0) continue;
      Rational coeff = -(rational(t, 2) + mu + lam * n);
      entries.emplace_back(dst, mod.v_pos(t), coeff);
    }
    // L_n w_j = −(j + μ + (λ − 1/2)n) w_{j+n}
    for (int t : mod.w_idx) {
      int dst = mod.w_pos(t + twice_index);
      if (dst < 0) continue;
      Rational coeff = -(rational(t, 2) + mu + (lam - rational(1, 2)) * n);
      entries.emplace_back(dst, mod.w_pos(t), coeff);
    }
  } else {
    // G_s v_i = w_{i+s}
    for (int t : mod.v_idx) {
      int dst = mod.w_pos(t + twice_index);
      if (dst < 0) continue;
      entries.emplace_back(dst, mod.v_pos(t), Rational(1));
    }
    // G_s w_j = −(j + μ + (2λ − 1)s) v_{j+s}
    for (int t : mod.w_idx) {
      int dst = mod.v_pos(t + twice_index);
      if (dst < 0) continue;
      Rational coeff =
          -(rational(t, 2) + mu + (2 * lam - 1) * rational(twice_index, 2));
      entries.emplace_back(dst, mod.w_pos(t), coeff);
    }
  }

  RatSparse M(dim, dim);
  M.setFromTriplets(entries.begin(), entries.end());
  return M;
}

namespace {

// Zero-check of `R` restricted to basis columns whose doubled index survives
// a two-step shift budget of `twice_margin` inside the window.
bool interior_columns_zero(const DensityModule& mod, const RatSparse& R,
                           int twice_margin) {
  const int bound = 2 * mod.window - twice_margin;
  auto column_zero = [&R](int col) {
    for (RatSparse::InnerIterator it(R, col); it; ++it)
      if (it.value() != 0) return false;
    return true;
  };
  for (std::size_t k = 0; k < mod.v_idx.size(); ++k)
    if (std::abs(mod.v_idx[k]) <= bound && !column_zero(static_cast<int>(k)))
      return false;
  for (std::size_t k = 0; k < mod.w_idx.size(); ++k)
    if (std::abs(mod.w_idx[k]) <= bound &&
        !column_zero(static_cast<int>(k + mod.v_idx.size())))
      return false;
  return true;
}

}  // namespace

bool ll_relation_holds(const DensityModule& mod, const RatSparse& Lm,
                       const RatSparse& Ln, int m, int n) {
  RatSparse rhs = build_mode(mod, ModeKind::L, 2 * (m + n));
  RatSparse residual = Lm * Ln - Ln * Lm - Rational(m - n) * rhs;
  return interior_columns_zero(mod, residual, 2 * (std::abs(m) + std::abs(n)));
}

bool check_ll(const DensityModule& mod, int m, int n) {
  return ll_relation_holds(mod, build_mode(mod, ModeKind::L, 2 * m),
                           build_mode(mod, ModeKind::L, 2 * n), m, n);
}

bool check_lg(const DensityModule& mod, int n, int twice_s) {
  RatSparse Ln = build_mode(mod, ModeKind::L, 2 * n);
  RatSparse Gs = build_mode(mod, ModeKind::G, twice_s);
  RatSparse rhs = build_mode(mod, ModeKind::G, 2 * n + twice_s);
  // (n/2 − s) with s = twice_s/2.
  Rational factor = rational(n, 2) - rational(twice_s, 2);
  RatSparse residual = Ln * Gs - Gs * Ln - factor * rhs;
  return interior_columns_zero(mod, residual,
                               2 * std::abs(n) + std::abs(twice_s));
}

bool check_gg(const DensityModule& mod, int twice_r, int twice_s) {
  RatSparse Gr = build_mode(mod, ModeKind::G, twice_r);
  RatSparse Gs = build_mode(mod, ModeKind::G, twice_s);
  RatSparse rhs = build_mode(mod, ModeKind::L, twice_r + twice_s);
  RatSparse residual = Gr * Gs + Gs * Gr - Rational(2) * rhs;
  return interior_columns_zero(mod, residual,
                               std::abs(twice_r) + std::abs(twice_s));
}

bool covariance_consistency(const DensityModule& mod, int n,
                            const Rational& h) {
  const Rational delta = h + mod.mu;
  const int twice_margin = 2 * std::abs(n);
  for (int t : mod.v_idx) {
    if (std::abs(t) > 2 * mod.window - twice_margin) continue;
    Rational m = rational(t, 2);
    Rational module_side = -(m + mod.mu + mod.lambda * n);
    Rational field_side = -(m + n) - delta + h * (n + 1);
    if (module_side != field_side) return false;
  }
  return true;
}

}  // namespace fusionkit
