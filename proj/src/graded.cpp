#include "fusionkit/graded.hpp"

#include <bit>
#include <complex>

namespace fusionkit {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

constexpr double kRankTol = 1e-10;
const std::complex<double> kI{0.0, 1.0};

VectorXcd vec(const MatrixXcd& m) {
  return Eigen::Map<const VectorXcd>(m.data(), m.size());
}

MatrixXcd unvec(const VectorXcd& v, int d) {
  return Eigen::Map<const MatrixXcd>(v.data(), d, d);
}

// Two-pass modified Gram–Schmidt insertion; returns true when v carried a
// genuinely new direction (residual above the rank tolerance).
bool add_to_span(std::vector<VectorXcd>& ortho, VectorXcd v) {
  const double scale = v.norm();
  if (!(scale > kRankTol)) return false;
  v /= scale;
  for (int pass = 0; pass < 2; ++pass)
    for (const VectorXcd& q : ortho) v -= q.dot(v) * q;
  const double residual = v.norm();
  if (residual <= kRankTol) return false;
  ortho.push_back(v / residual);
  return true;
}

}  // namespace

MatrixXcd GradedSpace::p_even() const {
  return (MatrixXcd::Identity(dim(), dim()) + u) / 2.0;
}

MatrixXcd GradedSpace::p_odd() const {
  return (MatrixXcd::Identity(dim(), dim()) - u) / 2.0;
}

MatrixXcd GradedSpace::kappa() const { return p_even() + kI * p_odd(); }

GradedSpace graded_space(const MatrixXcd& u) {
  if (u.rows() != u.cols() || u.rows() == 0)
    throw domain_error("graded_space: grading must be square and non-empty");
  const int d = static_cast<int>(u.rows());
  if ((u - u.adjoint()).cwiseAbs().maxCoeff() > 1e-12 ||
      (u * u - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12)
    throw domain_error("graded_space: grading must be a self-adjoint unitary");
  return GradedSpace{u};
}

MatrixXcd even_part(const MatrixXcd& x, const GradedSpace& s) {
  return (x + s.u * x * s.u) / 2.0;
}

MatrixXcd odd_part(const MatrixXcd& x, const GradedSpace& s) {
  return (x - s.u * x * s.u) / 2.0;
}

MatrixXcd super_commutator(const MatrixXcd& x, const MatrixXcd& y,
                           const GradedSpace& s) {
  const MatrixXcd x0 = even_part(x, s), x1 = odd_part(x, s);
  const MatrixXcd y0 = even_part(y, s), y1 = odd_part(y, s);
  return x0 * y0 - y0 * x0 + x0 * y1 - y1 * x0 + x1 * y0 - y0 * x1 +
         x1 * y1 + y1 * x1;
}

bool span_contains(const MatrixSpan& a, const MatrixXcd& x, double tol) {
  VectorXcd v = vec(x);
  const double scale = std::max(1.0, v.norm());
  for (const MatrixXcd& b : a.basis) {
    VectorXcd q = vec(b);
    v -= q.dot(v) * q;
  }
  return v.norm() <= tol * scale;
}

bool spans_equal(const MatrixSpan& a, const MatrixSpan& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (const MatrixXcd& x : a.basis)
    if (!span_contains(b, x, tol)) return false;
  for (const MatrixXcd& x : b.basis)
    if (!span_contains(a, x, tol)) return false;
  return true;
}

MatrixSpan algebra_closure(const GradedSpace& s,
                           const std::vector<MatrixXcd>& generators) {
  const int d = s.dim();
  for (const MatrixXcd& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw domain_error("algebra_closure: generator size mismatch");
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    const double as_even = (g - even_part(g, s)).cwiseAbs().maxCoeff();
    const double as_odd = (g - odd_part(g, s)).cwiseAbs().maxCoeff();
    if (std::min(as_even, as_odd) > 1e-12 * scale)
      throw domain_error("algebra_closure: generators must be homogeneous");
  }

  std::vector<VectorXcd> ortho;
  std::vector<MatrixXcd> basis;
  auto insert = [&](const MatrixXcd& x) {
    if (add_to_span(ortho, vec(x))) {
      basis.push_back(unvec(ortho.back(), d));
      return true;
    }
    return false;
  };

  insert(MatrixXcd::Identity(d, d));
  for (const MatrixXcd& g : generators) insert(g);
  for (const MatrixXcd& g : generators) insert(g.adjoint());

  // Grow by pairwise products until the rank stabilizes.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = basis.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        if (insert(basis[i] * basis[j])) grew = true;
  }
  return MatrixSpan{std::move(basis)};
}

namespace {

// Orthonormal kernel basis of the stacked condition blocks.
MatrixSpan kernel_span(const std::vector<MatrixXcd>& blocks, int d) {
  const int nn = d * d;
  MatrixXcd stacked(static_cast<int>(blocks.size()) * nn, nn);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    stacked.middleRows(static_cast<int>(k) * nn, nn) = blocks[k];
  Eigen::JacobiSVD<MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = kRankTol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++rank;
  MatrixSpan out;
  for (int k = rank; k < nn; ++k)
    out.basis.push_back(unvec(svd.matrixV().col(k), d));
  return out;
}

MatrixXcd left_mult(const MatrixXcd& a) {  // vec(a·b) = (I⊗a)·vec(b)
  const int d = static_cast<int>(a.rows());
  MatrixXcd op = MatrixXcd::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) op.block(j * d, j * d, d, d) = a;
  return op;
}

MatrixXcd right_mult(const MatrixXcd& a) {  // vec(b·a) = (aᵀ⊗I)·vec(b)
  const int d = static_cast<int>(a.rows());
  MatrixXcd op = MatrixXcd::Zero(d * d, d * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      op.block(c * d, r * d, d, d) +=
          a(r, c) * MatrixXcd::Identity(d, d);
  return op;
}

// vec(u·b·w) = (wᵀ ⊗ u)·vec(b)
MatrixXcd sandwich(const MatrixXcd& u, const MatrixXcd& w) {
  const int d = static_cast<int>(u.rows());
  MatrixXcd op(d * d, d * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      op.block(r * d, c * d, d, d) = w(c, r) * u;
  return op;
}

}  // namespace

MatrixSpan commutant(const GradedSpace& s, const MatrixSpan& algebra) {
  const int d = s.dim();
  std::vector<MatrixXcd> blocks;
  for (const MatrixXcd& a : algebra.basis)
    blocks.push_back(left_mult(a) - right_mult(a));
  return kernel_span(blocks, d);
}

MatrixSpan supercommutant_direct(const GradedSpace& s,
                                 const MatrixSpan& algebra) {
  const int d = s.dim();
  std::vector<MatrixXcd> blocks;
  for (const MatrixXcd& x : algebra.basis) {
    // [a, b]_τ is linear in a, so conditions over the homogeneous parts of a
    // spanning set of the algebra characterize the super-commutant.
    const MatrixXcd a0 = even_part(x, s);
    const MatrixXcd a1 = odd_part(x, s);
    if (a0.cwiseAbs().maxCoeff() > 1e-13)
      blocks.push_back(left_mult(a0) - right_mult(a0));
    if (a1.cwiseAbs().maxCoeff() > 1e-13)
      // For odd a: [a, b]_τ = a·b − (u·b·u)·a.
      blocks.push_back(left_mult(a1) - sandwich(s.u, s.u * a1));
  }
  if (blocks.empty()) blocks.push_back(MatrixXcd::Zero(d * d, d * d));
  return kernel_span(blocks, d);
}

MatrixSpan supercommutant_twisted(const GradedSpace& s,
                                  const MatrixSpan& algebra) {
  const MatrixXcd kappa = s.kappa();
  const MatrixXcd kappa_star = kappa.adjoint();
  MatrixSpan out;
  for (const MatrixXcd& c : commutant(s, algebra).basis)
    out.basis.push_back(kappa * c * kappa_star);
  return out;
}

bool supercommutant_two_ways_agree(const GradedSpace& s,
                                   const MatrixSpan& algebra, double tol) {
  return spans_equal(supercommutant_direct(s, algebra),
                     supercommutant_twisted(s, algebra), tol);
}

bool double_supercommutant_check(const GradedSpace& s,
                                 const std::vector<MatrixXcd>& gens,
                                 double tol) {
  const MatrixSpan algebra = algebra_closure(s, gens);
  const MatrixSpan super = supercommutant_twisted(s, algebra);

  // The super-commutant is τ-invariant, so the homogeneous parts of its
  // basis generate it as a graded algebra.
  std::vector<MatrixXcd> super_gens;
  for (const MatrixXcd& b : super.basis) {
    const MatrixXcd b0 = even_part(b, s);
    const MatrixXcd b1 = odd_part(b, s);
    if (b0.cwiseAbs().maxCoeff() > 1e-12) super_gens.push_back(b0);
    if (b1.cwiseAbs().maxCoeff() > 1e-12) super_gens.push_back(b1);
  }
  const MatrixSpan super_algebra = algebra_closure(s, super_gens);
  if (!spans_equal(super_algebra, super, tol)) return false;  // sanity

  const MatrixSpan twice = supercommutant_twisted(s, super_algebra);
  return spans_equal(twice, algebra, tol);
}

bool klein_identities_check(const GradedSpace& s, double tol) {
  const int d = s.dim();
  const MatrixXcd kappa = s.kappa();
  const MatrixXcd kappa_star = kappa.adjoint();
  const MatrixXcd id = MatrixXcd::Identity(d, d);

  double worst = 0;
  auto track = [&worst](const MatrixXcd& m) {
    worst = std::max(worst, m.cwiseAbs().maxCoeff());
  };
  track(kappa * kappa - s.u);
  track(kappa * kappa_star - id);
  track(s.p_even() + s.p_odd() - id);
  track(s.p_even() * s.p_odd());

  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      MatrixXcd e = MatrixXcd::Zero(d, d);
      e(r, c) = 1.0;
      const MatrixXcd x0 = even_part(e, s);
      const MatrixXcd x1 = odd_part(e, s);
      track(s.u * x0 * s.u - x0);
      track(s.u * x1 * s.u + x1);
      track(kappa * x0 * kappa_star - x0);
      track(kappa * x1 * kappa_star + kI * s.u * x1);  // κx₁κ* = −i·u·x₁
    }
  return worst <= tol;
}

MatrixXcd fock_parity(int n_modes) {
  if (n_modes < 1 || n_modes > 12)
    throw domain_error("fock_parity: mode count out of range");
  const int d = 1 << n_modes;
  MatrixXcd u = MatrixXcd::Zero(d, d);
  for (int state = 0; state < d; ++state)
    u(state, state) = (std::popcount(static_cast<unsigned>(state)) % 2 == 0)
                          ? 1.0
                          : -1.0;
  return u;
}

MatrixXcd clifford_generator(int n_modes, const VectorXcd& f) {
  if (n_modes < 1 || n_modes > 12)
    throw domain_error("clifford_generator: mode count out of range");
  if (f.size() != n_modes)
    throw domain_error("clifford_generator: coefficient size mismatch");
  const int d = 1 << n_modes;
  MatrixXcd c = MatrixXcd::Zero(d, d);
  for (int state = 0; state < d; ++state)
    for (int k = 0; k < n_modes; ++k) {
      if (state & (1 << k)) continue;
      const unsigned below = static_cast<unsigned>(state) & ((1u << k) - 1u);
      const double sign = (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
      const int excited = state | (1 << k);
      c(excited, state) += sign * f(k);             // creation a_k†
      c(state, excited) += sign * std::conj(f(k));  // annihilation a_k
    }
  return c;
}

std::vector<std::string> graded_example_names() {
  return {"pauli",     "diagonal",  "full2",    "full4",
          "clifford1", "clifford2", "clifford3"};
}

GradedExample graded_example(const std::string& name) {
  auto unit = [](int r, int c, int d) {
    MatrixXcd e = MatrixXcd::Zero(d, d);
    e(r, c) = 1.0;
    return e;
  };
  MatrixXcd sigma_z(2, 2);
  sigma_z << 1, 0, 0, -1;

  if (name == "pauli") {
    MatrixXcd sigma_x(2, 2);
    sigma_x << 0, 1, 1, 0;
    return {name, graded_space(sigma_z), {sigma_x}};
  }
  if (name == "diagonal")
    return {name, graded_space(sigma_z), {unit(0, 0, 2), unit(1, 1, 2)}};
  if (name == "full2")
    return {name, graded_space(sigma_z), {unit(0, 1, 2), unit(1, 0, 2)}};
  if (name == "full4") {
    MatrixXcd u = MatrixXcd::Zero(4, 4);
    u.diagonal() << 1, 1, -1, -1;
    return {name, graded_space(u),
            {unit(0, 1, 4), unit(1, 2, 4), unit(2, 3, 4)}};
  }
  for (int n = 1; n <= 3; ++n)
    if (name == "clifford" + std::to_string(n)) {
      std::vector<MatrixXcd> gens;
      for (int k = 0; k < n; ++k) {
        VectorXcd f = VectorXcd::Zero(n);
        f(k) = 1.0;
        gens.push_back(clifford_generator(n, f));
      }
      return {name, graded_space(fock_parity(n)), gens};
    }
  throw domain_error("graded_example: unknown example '" + name +
                     "' (known: pauli, diagonal, full2, full4, clifford1, "
                     "clifford2, clifford3)");
}

}  // namespace fusionkit
