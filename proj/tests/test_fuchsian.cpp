// Fuchsian transport: Frobenius bases, analytic continuation, the scalar
// closed-form oracle, contragredient duality, monodromy and composition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fusionkit/fuchsian.hpp"
#include "fusionkit/json_io.hpp"

using namespace fusionkit;
using Eigen::MatrixXcd;

TEST_CASE("path validation") {
  CHECK_NOTHROW(validate_path(canonical_path()));
  // A straight shot from 1/4 to 4 crosses the singularity at 1.
  CHECK_THROWS_AS(validate_path({Complex(0.25, 0), Complex(4, 0)}),
                  domain_error);
  // Interior waypoints may not sit on the branch-cut ray [0, inf), even
  // when every segment stays clear of the singular points.
  CHECK_THROWS_AS(
      validate_path({Complex(0.25, 0), Complex(0.25, -1), Complex(3, -1),
                     Complex(3, 0), Complex(4, 0)}),
      domain_error);
  // Passing within 0.05 of a singular point is rejected.
  CHECK_THROWS_AS(validate_path({Complex(0.25, 0), Complex(1.01, -0.01),
                                 Complex(4, -1), Complex(4, 0)}),
                  domain_error);
  CHECK_THROWS_AS(validate_path({Complex(0.25, 0)}), domain_error);
}

TEST_CASE("deterministic spectral data and resonance detection") {
  MatrixXcd m(2, 2);
  m << Complex(0.3, 0), Complex(0.1, 0), Complex(0, 0), Complex(-0.2, 0);
  const SpectralData s = eigen_spectral(m);
  CHECK(s.exponents(0).real() == doctest::Approx(-0.2));
  CHECK(s.exponents(1).real() == doctest::Approx(0.3));
  // Columns are unit norm with a positive-real pivot.
  for (int j = 0; j < 2; ++j)
    CHECK(s.vectors.col(j).norm() == doctest::Approx(1.0));
  CHECK((m * s.vectors - s.vectors * s.exponents.asDiagonal()).norm() <
        1e-12);

  Eigen::VectorXcd e(2);
  e << Complex(0.25, 0), Complex(1.25, 0);
  CHECK(is_resonant(e));  // differ by the nonzero integer 1
  e << Complex(0.25, 0), Complex(0.25, 0);
  CHECK_FALSE(is_resonant(e));  // equal exponents are not resonant
  e << Complex(0.25, 0), Complex(0.85, 0);
  CHECK_FALSE(is_resonant(e));
  MatrixXcd res(2, 2);
  res << 0, 0, 0, 1;  // exponents {0, 1}
  CHECK_THROWS_AS(frobenius_basis(res, MatrixXcd::Zero(2, 2)), numeric_error);
}

TEST_CASE("Frobenius series reproduces the scalar hypergeometric gauge") {
  // Scalar system f' = (a/z + b/(1-z)) f with f = z^a (1-z)^{-b}:
  // the gauge g(z) = (1-z)^{-b} has Taylor coefficients binom(-b, k)(-1)^k.
  MatrixXcd p(1, 1), q(1, 1);
  const Complex a{0.31, -0.12}, b{-0.27, 0.08};
  p << a;
  q << b;
  const FrobeniusBasis basis = frobenius_basis(p, q, 40);
  const Complex z{0.2, 0.1};
  const Complex gauge = basis.gauge_at(z)(0, 0);
  const Complex expected = std::exp(-b * std::log(1.0 - z));
  CHECK(std::abs(gauge - expected) < 1e-12);
  // eval() multiplies in z^a (vectors are trivially 1 for a 1x1 system).
  const Complex full = basis.eval(z)(0, 0);
  CHECK(std::abs(full - std::exp(a * std::log(z)) * expected) < 1e-12);
}

TEST_CASE("scalar transport equals the closed form exp(-i pi b)") {
  std::mt19937_64 rng(12345);
  for (int k = 0; k < 6; ++k) {
    const FuchsianSystem sys = random_system(1, rng);
    const Transport t = transport_matrix(sys);
    const Complex expected =
        std::exp(Complex(0, -std::numbers::pi) * sys.Q(0, 0));
    CHECK(std::abs(t.c(0, 0) - expected) < 1e-9);
    CHECK(t.residual < 1e-8);
  }
}

TEST_CASE("contragredient duality on random systems") {
  std::mt19937_64 rng(777);
  for (int n : {2, 3, 2}) {
    const FuchsianSystem sys = random_system(n, rng);
    const DualityReport rep = contragredient_check(sys);
    CHECK(rep.ok);
    CHECK(rep.pairing_deviation < 1e-8);
    CHECK(rep.inverse_deviation < 1e-6);
    CHECK(rep.primal.residual < 1e-8);
    CHECK(rep.dual.residual < 1e-8);
  }
}

TEST_CASE("monodromy around the origin matches the exponents") {
  std::mt19937_64 rng(2024);
  for (int n : {2, 3}) {
    const FuchsianSystem sys = random_system(n, rng);
    CHECK(monodromy_deviation(sys) < 1e-6);
  }
}

TEST_CASE("braiding composition is the Kronecker product") {
  MatrixXcd c1(2, 2), c2(2, 2);
  c1 << Complex(1, 0), Complex(0, 1), Complex(2, -1), Complex(0.5, 0);
  c2 << Complex(0.8, 0.1), Complex(0, 0.4), Complex(-0.3, 0), Complex(1, 1);
  const MatrixXcd mu = compose_ns_braiding(c1, c2);
  REQUIRE(mu.rows() == 4);
  const MatrixXcd c2it = c2.inverse().transpose();
  for (int r = 0; r < 2; ++r)
    for (int rp = 0; rp < 2; ++rp)
      for (int s = 0; s < 2; ++s)
        for (int sp = 0; sp < 2; ++sp)
          CHECK(std::abs(mu(r * 2 + rp, s * 2 + sp) -
                         c1(r, s) * c2it(rp, sp)) < 1e-12);
  MatrixXcd singular = MatrixXcd::Zero(2, 2);
  CHECK_THROWS_AS(compose_ns_braiding(c1, singular), numeric_error);
}

TEST_CASE("system JSON round trip") {
  std::mt19937_64 rng(99);
  FuchsianSystem sys = random_system(2, rng);
  sys.path = canonical_path();
  const auto j = system_to_json(sys);
  const FuchsianSystem back = system_from_json(j);
  CHECK((back.P - sys.P).cwiseAbs().maxCoeff() == 0);
  CHECK((back.Q - sys.Q).cwiseAbs().maxCoeff() == 0);
  CHECK(back.series_order == sys.series_order);
  REQUIRE(back.path.size() == sys.path.size());
  for (std::size_t k = 0; k < sys.path.size(); ++k)
    CHECK(back.path[k] == sys.path[k]);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::object()), domain_error);
}
