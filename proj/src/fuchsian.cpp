#include "fusionkit/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fusionkit {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

std::vector<Complex> canonical_path() {
  return {Complex(0.25, 0.0), Complex(0.25, -1.0), Complex(4.0, -1.0),
          Complex(4.0, 0.0)};
}

namespace {

double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a) * std::conj(ab)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double ray_distance(Complex p) {  // distance to [0, ∞)
  return p.real() >= 0.0 ? std::abs(p.imag()) : std::abs(p);
}

}  // namespace

void validate_path(const std::vector<Complex>& path) {
  if (path.size() < 2)
    throw domain_error("validate_path: need at least two waypoints");
  constexpr double kClearance = 0.05;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (point_segment_distance(Complex(0, 0), path[k], path[k + 1]) <
            kClearance ||
        point_segment_distance(Complex(1, 0), path[k], path[k + 1]) <
            kClearance)
      throw domain_error(
          "validate_path: path passes within 0.05 of a singular point");
  }
  for (std::size_t k = 1; k + 1 < path.size(); ++k)
    if (ray_distance(path[k]) < kClearance)
      throw domain_error(
          "validate_path: interior waypoint too close to the branch-cut ray "
          "[0, inf)");
}

SpectralData eigen_spectral(const MatrixXcd& M) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw domain_error("eigen_spectral: matrix must be square and non-empty");
  Eigen::ComplexEigenSolver<MatrixXcd> solver(M);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eigen_spectral: eigensolver failed");

  const int n = static_cast<int>(M.rows());
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k;
  const VectorXcd& vals = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&vals](int a, int b) {
    if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
    return vals(a).imag() < vals(b).imag();
  });

  SpectralData out;
  out.exponents.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.exponents(k) = vals(order[k]);
    VectorXcd col = solver.eigenvectors().col(order[k]);
    // Deterministic phase: the first entry of largest modulus is made real
    // and positive, then the column is normalized.
    int pivot = 0;
    for (int r = 1; r < n; ++r)
      if (std::abs(col(r)) > std::abs(col(pivot))) pivot = r;
    const double mag = std::abs(col(pivot));
    if (mag == 0.0) throw numeric_error("eigen_spectral: zero eigenvector");
    col *= std::conj(col(pivot)) / mag;
    out.vectors.col(k) = col / col.norm();
  }

  Eigen::JacobiSVD<MatrixXcd> svd(out.vectors);
  const double smin = svd.singularValues()(n - 1);
  const double smax = svd.singularValues()(0);
  if (!(smin > 0) || smax / smin > 1e8)
    throw numeric_error(
        "eigen_spectral: eigenvector basis is ill-conditioned (matrix close "
        "to defective)");
  return out;
}

bool is_resonant(const VectorXcd& exponents, double tol) {
  const int n = static_cast<int>(exponents.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex d = exponents(i) - exponents(j);
      const double nearest = std::round(d.real());
      if (std::abs(d.imag()) <= tol && std::abs(d.real() - nearest) <= tol &&
          nearest != 0.0)
        return true;
    }
  return false;
}

MatrixXcd FrobeniusBasis::gauge_at(Complex z) const {
  MatrixXcd G = g.back();
  for (int k = static_cast<int>(g.size()) - 2; k >= 0; --k)
    G = (G * z + g[k]).eval();
  return G;
}

MatrixXcd FrobeniusBasis::eval(Complex z) const {
  if (std::abs(z) > radius + 1e-9)
    throw domain_error("FrobeniusBasis::eval: point outside certified radius");
  if (z == Complex(0, 0))
    throw domain_error("FrobeniusBasis::eval: singular point");
  MatrixXcd out = gauge_at(z) * spec.vectors;
  const Complex logz = std::log(z);
  for (int j = 0; j < out.cols(); ++j)
    out.col(j) *= std::exp(spec.exponents(j) * logz);
  return out;
}

FrobeniusBasis frobenius_basis(const MatrixXcd& P, const MatrixXcd& Q,
                               int series_order,
                               std::optional<SpectralData> spec) {
  if (P.rows() != P.cols() || Q.rows() != Q.cols() || P.rows() != Q.rows())
    throw domain_error("frobenius_basis: P and Q must be square, same size");
  if (series_order < 1)
    throw domain_error("frobenius_basis: series order must be positive");

  FrobeniusBasis basis;
  basis.spec = spec ? *spec : eigen_spectral(P);
  if (basis.spec.exponents.size() != P.rows() ||
      basis.spec.vectors.rows() != P.rows())
    throw domain_error("frobenius_basis: spectral data size mismatch");
  if (is_resonant(basis.spec.exponents))
    throw numeric_error(
        "frobenius_basis: exponents resonate (integer eigenvalue gap)");

  const int n = static_cast<int>(P.rows());
  const int nn = n * n;

  // k·g_k − [P, g_k] = Q·(g_0 + … + g_{k−1}), solved per order through the
  // vectorized operator k·I − I⊗P + Pᵀ⊗I (column-major vec).
  MatrixXcd ad = MatrixXcd::Zero(nn, nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        ad(r + j * n, i + j * n) -= P(r, i);  // −(I⊗P)
        ad(i + r * n, i + j * n) += P(j, r);  // +(Pᵀ⊗I)
      }

  basis.g.assign(series_order + 1, MatrixXcd::Zero(n, n));
  basis.g[0] = MatrixXcd::Identity(n, n);
  MatrixXcd running_sum = basis.g[0];
  for (int k = 1; k <= series_order; ++k) {
    MatrixXcd rhs_mat = Q * running_sum;
    Eigen::Map<VectorXcd> rhs(rhs_mat.data(), nn);
    MatrixXcd op = ad + static_cast<double>(k) * MatrixXcd::Identity(nn, nn);
    Eigen::FullPivLU<MatrixXcd> lu(op);
    if (!lu.isInvertible())
      throw numeric_error("frobenius_basis: singular recurrence at order " +
                          std::to_string(k));
    VectorXcd sol = lu.solve(rhs);
    basis.g[k] = Eigen::Map<MatrixXcd>(sol.data(), n, n);
    running_sum += basis.g[k];
  }

  const double tail = basis.g.back().cwiseAbs().maxCoeff() *
                      std::pow(basis.radius, series_order);
  if (tail > 1e-10)
    throw numeric_error(
        "frobenius_basis: series tail too large at the certified radius");
  return basis;
}

namespace {

// Dormand–Prince 5(4) step data.
struct Dopri5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
};

// Integrates Y' = A(z)·Y along the straight segment z0 → z1.
void integrate_segment(const MatrixXcd& P, const MatrixXcd& Q, Complex z0,
                       Complex z1, MatrixXcd& Y, double tol) {
  auto rhs = [&P, &Q](Complex z, const MatrixXcd& y) -> MatrixXcd {
    return (P / z + Q / (1.0 - z)) * y;
  };

  const double length = std::abs(z1 - z0);
  if (length == 0.0) return;
  const Complex dir = (z1 - z0) / length;

  double s = 0.0;
  double h = std::min(0.1, length);
  MatrixXcd k1 = dir * rhs(z0, Y);
  int steps = 0;
  while (true) {
    const double remaining = length - s;
    if (remaining <= 1e-14 * length) break;
    if (++steps > 2000000)
      throw numeric_error("continue_solution: step limit exceeded");
    bool final_step = false;
    if (h >= remaining) {
      h = remaining;
      final_step = true;
    }
    const Complex z = z0 + s * dir;
    using D = Dopri5;
    MatrixXcd k2 = dir * rhs(z + D::c2 * h * dir, Y + h * (D::a21 * k1));
    MatrixXcd k3 =
        dir * rhs(z + D::c3 * h * dir, Y + h * (D::a31 * k1 + D::a32 * k2));
    MatrixXcd k4 = dir * rhs(z + D::c4 * h * dir,
                             Y + h * (D::a41 * k1 + D::a42 * k2 + D::a43 * k3));
    MatrixXcd k5 =
        dir * rhs(z + D::c5 * h * dir, Y + h * (D::a51 * k1 + D::a52 * k2 +
                                                D::a53 * k3 + D::a54 * k4));
    MatrixXcd k6 =
        dir * rhs(z + h * dir, Y + h * (D::a61 * k1 + D::a62 * k2 +
                                        D::a63 * k3 + D::a64 * k4 +
                                        D::a65 * k5));
    MatrixXcd y_new = Y + h * (D::b1 * k1 + D::b3 * k3 + D::b4 * k4 +
                               D::b5 * k5 + D::b6 * k6);
    MatrixXcd k7 = dir * rhs(z + h * dir, y_new);
    MatrixXcd err_mat = h * (D::e1 * k1 + D::e3 * k3 + D::e4 * k4 +
                             D::e5 * k5 + D::e6 * k6 + D::e7 * k7);
    const double scale = std::max(1.0, Y.cwiseAbs().maxCoeff());
    const double err = err_mat.cwiseAbs().maxCoeff() / scale;

    if (err <= tol) {                 // accept (FSAL: k7 becomes next k1)
      s += h;
      Y.swap(y_new);
      k1.swap(k7);
      if (final_step) break;
    }
    const double safety =
        err > 0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
    h *= std::clamp(safety, 0.2, 5.0);
    if (h < 1e-13 * length)
      throw numeric_error("continue_solution: step size underflow");
  }
}

}  // namespace

std::vector<MatrixXcd> continue_solution(const FuchsianSystem& sys,
                                         const MatrixXcd& Y0) {
  std::vector<Complex> path = sys.path.empty() ? canonical_path() : sys.path;
  validate_path(path);
  if (Y0.rows() != sys.P.rows())
    throw domain_error("continue_solution: initial value has wrong size");

  std::vector<MatrixXcd> values;
  values.reserve(path.size());
  MatrixXcd Y = Y0;
  values.push_back(Y);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    integrate_segment(sys.P, sys.Q, path[k], path[k + 1], Y, sys.ode_tol);
    values.push_back(Y);
  }
  return values;
}

Transport transport_matrix(const FuchsianSystem& sys,
                           std::optional<SpectralData> zero_side,
                           std::optional<SpectralData> inf_side) {
  std::vector<Complex> path = sys.path.empty() ? canonical_path() : sys.path;
  validate_path(path);
  const Complex z_start = path.front();
  const Complex z_end = path.back();
  if (std::abs(z_start) > 0.5 + 1e-12)
    throw domain_error(
        "transport_matrix: path must start inside the 0-side series disc "
        "(|z| <= 1/2)");
  if (std::abs(z_end) < 2.0 - 1e-12)
    throw domain_error(
        "transport_matrix: path must end inside the inf-side series disc "
        "(|z| >= 2)");

  FrobeniusBasis zero_basis =
      frobenius_basis(sys.P, sys.Q, sys.series_order, zero_side);
  FrobeniusBasis inf_basis =
      frobenius_basis(sys.Q - sys.P, sys.Q, sys.series_order, inf_side);

  // Verify the fit at an independent point: the midpoint of the final leg,
  // which must also live in the ∞-side disc.
  const Complex z_mid = (path[path.size() - 2] + z_end) / 2.0;
  if (std::abs(z_mid) < 2.0 - 1e-12)
    throw domain_error(
        "transport_matrix: final leg must stay inside the inf-side disc");
  FuchsianSystem extended = sys;
  extended.path = path;
  extended.path.insert(extended.path.end() - 1, z_mid);

  std::vector<MatrixXcd> values =
      continue_solution(extended, zero_basis.eval(z_start));
  const MatrixXcd& phi_mid = values[values.size() - 2];
  const MatrixXcd& phi_end = values.back();

  const MatrixXcd r_end = inf_basis.eval(1.0 / z_end);
  const MatrixXcd r_mid = inf_basis.eval(1.0 / z_mid);

  Eigen::ColPivHouseholderQR<MatrixXcd> qr(r_end);
  if (!qr.isInvertible())
    throw numeric_error("transport_matrix: inf-side basis is singular at the "
                        "matching point");
  const MatrixXcd ct = qr.solve(phi_end);  // Φ(z) = R(z)·cᵀ

  Transport out;
  out.c = ct.transpose();
  const double scale = std::max(1.0, phi_mid.cwiseAbs().maxCoeff());
  out.residual = (phi_mid - r_mid * ct).cwiseAbs().maxCoeff() / scale;
  if (out.residual > sys.match_tol)
    throw numeric_error(
        "transport_matrix: fit residual exceeds match tolerance");

  Eigen::JacobiSVD<MatrixXcd> svd(out.c);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (!(smin > 0))
    throw numeric_error("transport_matrix: transport matrix is singular");
  out.condition = svd.singularValues()(0) / smin;
  return out;
}

DualityReport contragredient_check(const FuchsianSystem& sys, double pair_tol,
                                   double inverse_tol) {
  SpectralData zero_spec = eigen_spectral(sys.P);
  SpectralData inf_spec = eigen_spectral(sys.Q - sys.P);

  FuchsianSystem dual = sys;
  dual.P = -sys.P.transpose();
  dual.Q = -sys.Q.transpose();

  // The dual of an eigenbasis: V̂ = V^{-T} pairs column-for-column with V and
  // flips the exponents' sign, tying both normalizations together.
  auto dual_spec = [](const SpectralData& s) {
    SpectralData d;
    d.vectors = s.vectors.inverse().transpose();
    d.exponents = -s.exponents;
    return d;
  };
  SpectralData zero_spec_dual = dual_spec(zero_spec);
  SpectralData inf_spec_dual = dual_spec(inf_spec);

  DualityReport report;
  report.primal = transport_matrix(sys, zero_spec, inf_spec);
  report.dual = transport_matrix(dual, zero_spec_dual, inf_spec_dual);

  report.inverse_deviation =
      (report.dual.c - report.primal.c.inverse().transpose())
          .cwiseAbs()
          .maxCoeff();

  // The canonical pairing K(z)ᵀ F(z) equals I at the anchor by construction
  // and is a first integral of the pair of systems, so its drift measures
  // the total continuation error.
  std::vector<Complex> path = sys.path.empty() ? canonical_path() : sys.path;
  FrobeniusBasis primal_basis =
      frobenius_basis(sys.P, sys.Q, sys.series_order, zero_spec);
  FrobeniusBasis dual_basis =
      frobenius_basis(dual.P, dual.Q, sys.series_order, zero_spec_dual);
  FuchsianSystem on_path = sys;
  on_path.path = path;
  FuchsianSystem dual_on_path = dual;
  dual_on_path.path = path;
  std::vector<MatrixXcd> primal_values =
      continue_solution(on_path, primal_basis.eval(path.front()));
  std::vector<MatrixXcd> dual_values =
      continue_solution(dual_on_path, dual_basis.eval(path.front()));
  const int n = sys.n();
  report.pairing_deviation = 0;
  for (std::size_t k = 0; k < primal_values.size(); ++k) {
    double dev = (dual_values[k].transpose() * primal_values[k] -
                  MatrixXcd::Identity(n, n))
                     .cwiseAbs()
                     .maxCoeff();
    report.pairing_deviation = std::max(report.pairing_deviation, dev);
  }

  report.ok = report.pairing_deviation <= pair_tol &&
              report.inverse_deviation <= inverse_tol;
  return report;
}

double monodromy_deviation(const FuchsianSystem& sys) {
  FrobeniusBasis basis = frobenius_basis(sys.P, sys.Q, sys.series_order);
  const double r = 0.25;
  std::vector<Complex> loop;
  for (int k = 0; k <= 8; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / 8.0;
    loop.emplace_back(r * std::cos(theta), r * std::sin(theta));
  }
  FuchsianSystem on_loop = sys;
  on_loop.path = loop;
  MatrixXcd start = basis.eval(loop.front());
  MatrixXcd looped = continue_solution(on_loop, start).back();

  MatrixXcd expected = start;
  for (int j = 0; j < expected.cols(); ++j)
    expected.col(j) *= std::exp(Complex(0, 2.0 * std::numbers::pi) *
                                basis.spec.exponents(j));
  const double scale = std::max(1.0, expected.cwiseAbs().maxCoeff());
  return (looped - expected).cwiseAbs().maxCoeff() / scale;
}

MatrixXcd compose_ns_braiding(const MatrixXcd& c1, const MatrixXcd& c2) {
  if (c1.rows() != c1.cols() || c2.rows() != c2.cols())
    throw domain_error("compose_ns_braiding: transport matrices must be square");
  Eigen::FullPivLU<MatrixXcd> lu(c2);
  if (!lu.isInvertible())
    throw numeric_error("compose_ns_braiding: second factor is singular");
  const MatrixXcd c2it = lu.inverse().transpose();
  const int n1 = static_cast<int>(c1.rows());
  const int n2 = static_cast<int>(c2.rows());
  MatrixXcd mu(n1 * n2, n1 * n2);
  for (int r = 0; r < n1; ++r)
    for (int rp = 0; rp < n2; ++rp)
      for (int s = 0; s < n1; ++s)
        for (int sp = 0; sp < n2; ++sp)
          mu(r * n2 + rp, s * n2 + sp) = c1(r, s) * c2it(rp, sp);
  return mu;
}

FuchsianSystem random_system(int n, std::mt19937_64& rng) {
  if (n < 1) throw domain_error("random_system: size must be positive");
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto disc_entry = [&]() {
    const double radius = 0.5 * std::sqrt(u01(rng));
    const double theta = 2.0 * std::numbers::pi * u01(rng);
    return Complex(radius * std::cos(theta), radius * std::sin(theta));
  };
  constexpr double kMargin = 1e-3;  // keep exponent gaps off the integers
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FuchsianSystem sys;
    sys.P.resize(n, n);
    sys.Q.resize(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        sys.P(r, c) = disc_entry();
        sys.Q(r, c) = disc_entry();
      }
    try {
      SpectralData zero_spec = eigen_spectral(sys.P);
      SpectralData inf_spec = eigen_spectral(sys.Q - sys.P);
      if (!is_resonant(zero_spec.exponents, kMargin) &&
          !is_resonant(inf_spec.exponents, kMargin))
        return sys;
    } catch (const numeric_error&) {
      // near-defective sample: draw again
    }
  }
  throw numeric_error("random_system: failed to sample a non-resonant system");
}

}  // namespace fusionkit
