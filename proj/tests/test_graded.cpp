// Z2-graded commutant machinery: gradings, algebra closures, the two
// super-commutant constructions, Klein identities and the CAR examples.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <complex>

#include "fusionkit/graded.hpp"

using namespace fusionkit;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

const std::complex<double> kI{0.0, 1.0};

MatrixXcd sigma(char axis) {
  MatrixXcd m(2, 2);
  switch (axis) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

MatrixXcd unit(int r, int c, int d) {
  MatrixXcd e = MatrixXcd::Zero(d, d);
  e(r, c) = 1.0;
  return e;
}

MatrixSpan single(const MatrixXcd& m) { return MatrixSpan{{m / m.norm()}}; }

}  // namespace

TEST_CASE("grading validation and homogeneous parts") {
  CHECK_THROWS_AS(graded_space(MatrixXcd::Zero(2, 3)), domain_error);
  MatrixXcd not_unitary(2, 2);
  not_unitary << 1, 0, 0, 2;
  CHECK_THROWS_AS(graded_space(not_unitary), domain_error);
  MatrixXcd not_selfadjoint(2, 2);
  not_selfadjoint << 1, 1, 0, -1;  // squares to I but is not self-adjoint
  CHECK_THROWS_AS(graded_space(not_selfadjoint), domain_error);

  const GradedSpace s = graded_space(sigma('z'));
  CHECK((s.p_even() - unit(0, 0, 2)).norm() < 1e-14);
  CHECK((s.p_odd() - unit(1, 1, 2)).norm() < 1e-14);
  CHECK((s.kappa() * s.kappa() - s.u).norm() < 1e-14);

  const MatrixXcd x = unit(0, 1, 2);  // odd w.r.t. sigma_z
  CHECK(even_part(x, s).norm() < 1e-14);
  CHECK((odd_part(x, s) - x).norm() < 1e-14);
  CHECK((even_part(sigma('z'), s) - sigma('z')).norm() < 1e-14);
}

TEST_CASE("super-commutator: anticommutator on odd pairs") {
  const GradedSpace s = graded_space(sigma('z'));
  // sigma_x is odd: [x,x]_tau = {x,x} = 2 x^2 = 2 I.
  CHECK((super_commutator(sigma('x'), sigma('x'), s) -
         2.0 * MatrixXcd::Identity(2, 2))
            .norm() < 1e-14);
  // even-odd pairs fall back to the ordinary commutator.
  const MatrixXcd lhs = super_commutator(sigma('z'), sigma('x'), s);
  const MatrixXcd ord = sigma('z') * sigma('x') - sigma('x') * sigma('z');
  CHECK((lhs - ord).norm() < 1e-14);
}

TEST_CASE("span utilities") {
  const GradedSpace s = graded_space(sigma('z'));
  const MatrixSpan a = algebra_closure(s, {sigma('x')});
  CHECK(a.dim() == 2);
  CHECK(span_contains(a, sigma('x')));
  CHECK(span_contains(a, MatrixXcd::Identity(2, 2) + 3.0 * sigma('x')));
  CHECK_FALSE(span_contains(a, sigma('y')));
  CHECK_FALSE(spans_equal(single(sigma('x')), single(sigma('y'))));
  CHECK_FALSE(spans_equal(single(sigma('x')), a));  // dimension mismatch
  CHECK(spans_equal(a, a));
}

TEST_CASE("algebra closure rejects non-homogeneous generators") {
  const GradedSpace s = graded_space(sigma('z'));
  CHECK_THROWS_AS(
      algebra_closure(s, {MatrixXcd::Identity(2, 2) + unit(0, 1, 2)}),
      domain_error);
}

TEST_CASE("closure dimensions across the sample library") {
  // The clifford examples use the n real generators c(e_k) only, so they
  // close onto the complex Clifford algebra of dimension 2^n.
  const std::vector<std::pair<std::string, int>> expected = {
      {"pauli", 2},     {"diagonal", 2},  {"full2", 4},    {"full4", 16},
      {"clifford1", 2}, {"clifford2", 4}, {"clifford3", 8}};
  for (const auto& [name, dim] : expected) {
    const GradedExample ex = graded_example(name);
    CHECK(algebra_closure(ex.space, ex.generators).dim() == dim);
  }
  CHECK(graded_example_names().size() == expected.size());
  CHECK_THROWS_AS(graded_example("nope"), domain_error);
}

TEST_CASE("pauli super-commutant differs from the ordinary commutant") {
  const GradedExample ex = graded_example("pauli");
  const MatrixSpan algebra = algebra_closure(ex.space, ex.generators);
  const MatrixSpan super = supercommutant_direct(ex.space, algebra);
  const MatrixSpan ordinary = commutant(ex.space, algebra);
  // A = span{I, sigma_x}: its ordinary commutant is A itself, while the
  // super-commutant is the twist span{I, sigma_y}.
  CHECK(spans_equal(ordinary, algebra));
  CHECK(spans_equal(super, algebra_closure(ex.space, {sigma('y')})));
  CHECK_FALSE(spans_equal(super, ordinary));
  CHECK(spans_equal(super, supercommutant_twisted(ex.space, algebra)));
}

TEST_CASE("two routes, double commutant and Klein identities everywhere") {
  for (const std::string& name : graded_example_names()) {
    CAPTURE(name);
    const GradedExample ex = graded_example(name);
    const MatrixSpan algebra = algebra_closure(ex.space, ex.generators);
    CHECK(supercommutant_two_ways_agree(ex.space, algebra));
    CHECK(double_supercommutant_check(ex.space, ex.generators));
    CHECK(klein_identities_check(ex.space));
  }
}

TEST_CASE("super-commutant dimensions") {
  const std::vector<std::pair<std::string, int>> expected = {
      {"pauli", 2},    {"diagonal", 2},  {"full2", 1},
      {"full4", 1},    {"clifford2", 4}, {"clifford3", 8}};
  for (const auto& [name, dim] : expected) {
    CAPTURE(name);
    const GradedExample ex = graded_example(name);
    const MatrixSpan algebra = algebra_closure(ex.space, ex.generators);
    CHECK(supercommutant_direct(ex.space, algebra).dim() == dim);
  }
}

TEST_CASE("canonical anticommutation relations on Fock space") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const int d = 1 << n;
    const MatrixXcd u = fock_parity(n);
    REQUIRE(u.rows() == d);
    for (int state = 0; state < d; ++state)
      CHECK(u(state, state).real() ==
            (std::popcount(static_cast<unsigned>(state)) % 2 == 0 ? 1.0
                                                                  : -1.0));
    std::vector<MatrixXcd> c(n);
    for (int k = 0; k < n; ++k) {
      VectorXcd f = VectorXcd::Zero(n);
      f(k) = 1.0;
      c[k] = clifford_generator(n, f);
      CHECK((c[k] - c[k].adjoint()).norm() < 1e-14);
      CHECK((u * c[k] * u + c[k]).norm() < 1e-14);  // generators are odd
    }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const MatrixXcd anti = c[j] * c[k] + c[k] * c[j];
        const MatrixXcd want =
            (j == k) ? MatrixXcd(2.0 * MatrixXcd::Identity(d, d))
                     : MatrixXcd(MatrixXcd::Zero(d, d));
        CHECK((anti - want).norm() < 1e-13);
      }
  }
  // {c(f), c(g)} = 2 Re<f, g> also for complex coefficient vectors.
  VectorXcd f(2), g(2);
  f << 1.0, kI;
  g << kI, 2.0;
  const MatrixXcd cf = clifford_generator(2, f);
  const MatrixXcd cg = clifford_generator(2, g);
  const double re = (f.adjoint() * g)(0).real();  // = Re(i - 2i) = 0
  CHECK((cf * cg + cg * cf - 2.0 * re * MatrixXcd::Identity(4, 4)).norm() <
        1e-13);
  CHECK_THROWS_AS(clifford_generator(0, VectorXcd::Zero(0)), domain_error);
  CHECK_THROWS_AS(clifford_generator(2, VectorXcd::Zero(3)), domain_error);
}
