#include "fusionkit/qdim.hpp"

#include <cmath>
#include <numbers>

namespace fusionkit {

double qdim_su2(Spin i, Level level) {
  if (level.ell < 0 || i.twice < 0 || i.twice > level.ell)
    throw domain_error("qdim_su2: spin not admissible at this level");
  const double pi_over_m = std::numbers::pi / level.m();
  return std::sin((i.twice + 1) * pi_over_m) / std::sin(pi_over_m);
}

double qdim_ns(const NSLabel& x, Level level) {
  require_ns_label(x, level, "qdim_ns");
  return qdim_su2(x.i, level) * qdim_su2(x.ip, Level(level.ell + 2));
}

PfResult pf_dims(const NsRing& ring, int generator) {
  if (generator < 0 || generator >= ring.size())
    throw domain_error("pf_dims: generator index out of range");
  const int n = ring.size();
  const int unit = ring.unit();
  Eigen::MatrixXd M = fusion_matrix(ring, generator).cast<double>();

  // The generator's fusion graph is bipartite whenever the generator is
  // purely parity-shifting (true for the spin-1/2 class at most levels), so
  // M has eigenvalue pairs ±λ and the bare iteration would oscillate.
  // Iterating on M + I keeps the eigenvectors, makes the top eigenvalue
  // strictly dominant, and stays within Perron–Frobenius territory.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  constexpr double kTol = 1e-13;
  constexpr int kMaxIter = 100000;
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    Eigen::VectorXd w = M * v + v;
    if (!(w(unit) > 0))
      throw numeric_error("pf_dims: unit entry vanished during iteration");
    w /= w(unit);
    double delta = (w - v).cwiseAbs().maxCoeff();
    v = w;
    if (delta < kTol) {
      PfResult result;
      result.dims = v;
      result.eigenvalue = (M * v)(unit);  // v is unit-normalized
      result.iterations = iter;
      return result;
    }
  }
  throw numeric_error("pf_dims: power iteration did not converge");
}

double subfactor_index(const NSLabel& x, Level level) {
  double d = qdim_ns(x, level);
  return d * d;
}

bool beta_saturation_check(Level level, double tol) {
  const NSLabel beta{Spin(0), Spin(2)};
  const double dim_beta = qdim_ns(beta, level);
  const Level shifted(level.ell + 2);
  for (const NSLabel& x : enumerate_ns_basis(level)) {
    double sum = 0;
    for (Spin kp : su2_interval(Spin(2), x.ip, shifted))
      sum += qdim_ns(NSLabel{x.i, kp}, level);
    double expected = dim_beta * qdim_ns(x, level);
    if (std::abs(sum - expected) > tol * std::max(1.0, std::abs(expected)))
      return false;
  }
  return true;
}

}  // namespace fusionkit
