// Windowed density modules: exact NS bracket relations with zero central
// term, and the primary-covariance characterization h = 1 - lambda.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionkit/density.hpp"

using namespace fusionkit;

TEST_CASE("module shape and indexing") {
  const DensityModule m0 = build_module(0, rational(1, 3), rational(1, 7));
  // sigma = 0: v indices are integers (25 of them in |i| <= 12), w indices
  // half-integers (24 in |j| <= 23/2).
  CHECK(m0.v_idx.size() == 25);
  CHECK(m0.w_idx.size() == 24);
  CHECK(m0.dim() == 49);
  CHECK(m0.v_pos(0) == 12);
  CHECK(m0.v_pos(-24) == 0);
  CHECK(m0.v_pos(1) == -1);   // wrong parity for this sector
  CHECK(m0.w_pos(1) >= 0);
  CHECK(m0.w_pos(25) == -1);  // outside the window

  const DensityModule m1 = build_module(1, rational(0), rational(0));
  CHECK(m1.v_idx.size() == 24);
  CHECK(m1.w_idx.size() == 25);
  CHECK_THROWS_AS(build_module(2, rational(0), rational(0)), domain_error);
}

TEST_CASE("mode matrices respect sector parity") {
  const DensityModule mod = build_module(0, rational(1, 2), rational(1, 5));
  CHECK(build_mode(mod, ModeKind::L, 2).rows() == mod.dim());
  CHECK_THROWS_AS(build_mode(mod, ModeKind::L, 1), domain_error);
  CHECK_THROWS_AS(build_mode(mod, ModeKind::G, 2), domain_error);
}

TEST_CASE("NS relations hold exactly on the 9-point grid") {
  const Rational lambdas[] = {rational(0), rational(1, 2), rational(1)};
  const Rational mus[] = {rational(-1, 3), rational(1, 7), rational(3, 4)};
  for (const Rational& lam : lambdas)
    for (const Rational& mu : mus)
      for (int sigma : {0, 1}) {
        const DensityModule mod = build_module(sigma, lam, mu);
        CHECK(check_ll(mod, 1, -1));
        CHECK(check_ll(mod, 2, -2));
        CHECK(check_ll(mod, 2, 1));
        CHECK(check_ll(mod, 0, 3));
        CHECK(check_lg(mod, 1, 1));
        CHECK(check_lg(mod, 2, -1));
        CHECK(check_lg(mod, -1, 3));
        CHECK(check_lg(mod, 0, 1));
        CHECK(check_gg(mod, 1, -1));
        CHECK(check_gg(mod, 1, 1));
        CHECK(check_gg(mod, 3, -1));
        CHECK(check_gg(mod, 3, 3));
      }
}

TEST_CASE("a generic non-grid module also satisfies the relations") {
  const DensityModule mod = build_module(1, rational(-2, 5), rational(5, 2));
  CHECK(check_ll(mod, 3, -2));
  CHECK(check_lg(mod, 2, -3));
  CHECK(check_gg(mod, -3, 1));
}

TEST_CASE("corrupted mode operator is caught") {
  const DensityModule mod = build_module(0, rational(1, 3), rational(1, 7));
  const RatSparse l_plus = build_mode(mod, ModeKind::L, 2);
  const RatSparse l_minus = build_mode(mod, ModeKind::L, -2);
  CHECK(ll_relation_holds(mod, l_plus, l_minus, 1, -1));
  RatSparse bad = l_plus;
  bad.coeffRef(mod.v_pos(2), mod.v_pos(0)) =
      bad.coeff(mod.v_pos(2), mod.v_pos(0)) * 2;
  CHECK_FALSE(ll_relation_holds(mod, bad, l_minus, 1, -1));
}

TEST_CASE("primary covariance characterizes h = 1 - lambda") {
  const Rational lambdas[] = {rational(0), rational(1, 2), rational(1),
                              rational(-2, 5)};
  for (const Rational& lam : lambdas) {
    const DensityModule mod = build_module(0, lam, rational(1, 7));
    const Rational h = 1 - lam;
    for (int n = -2; n <= 2; ++n) CHECK(covariance_consistency(mod, n, h));
    CHECK_FALSE(covariance_consistency(mod, 1, h + rational(1, 7)));
    CHECK_FALSE(covariance_consistency(mod, -1, h - rational(3, 2)));
    // n = 0 places no constraint on h (delta = h + mu holds identically).
    CHECK(covariance_consistency(mod, 0, h + rational(1, 7)));
  }
}
