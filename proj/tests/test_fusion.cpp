// Fusion rings: truncated intervals, the two independent constructions,
// ring axioms, lift independence, and frozen product tables.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionkit/fusion.hpp"
#include "fusionkit/qdim.hpp"

using namespace fusionkit;

namespace {

long product_coeff(const NsRing& ring, const NSLabel& a, const NSLabel& b,
                   const NSLabel& c) {
  return ring.coeff(ring.index_of(a), ring.index_of(b), ring.index_of(c));
}

}  // namespace

TEST_CASE("truncated Clebsch-Gordan intervals") {
  // <1/2, 1/2> at level 1 keeps only spin 0 (truncation kills spin 1).
  auto v = su2_interval(Spin{1}, Spin{1}, Level{1});
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Spin{0});
  // At level 2 both survive.
  v = su2_interval(Spin{1}, Spin{1}, Level{2});
  REQUIRE(v.size() == 2);
  CHECK(v[0] == Spin{0});
  CHECK(v[1] == Spin{2});
  // <1, 1> at level 4 = {0, 1, 2}.
  v = su2_interval(Spin{2}, Spin{2}, Level{4});
  REQUIRE(v.size() == 3);
  CHECK(v[2] == Spin{4});
  CHECK_THROWS_AS(su2_interval(Spin{3}, Spin{0}, Level{2}), domain_error);
}

TEST_CASE("level-1 ring is the golden (Lee-Yang-type) ring") {
  const NsRing ring = build_ns_ring(Level{1});
  REQUIRE(ring.size() == 2);
  const NSLabel unit{Spin{0}, Spin{0}};
  const NSLabel eps{Spin{0}, Spin{2}};
  CHECK(ring.basis[0] == unit);
  CHECK(ring.basis[1] == eps);
  // eps x eps = unit + eps.
  CHECK(product_coeff(ring, eps, eps, unit) == 1);
  CHECK(product_coeff(ring, eps, eps, eps) == 1);
  const IntMatrix m = fusion_matrix(ring, 1);
  CHECK(m(0, 0) == 0);
  CHECK(m(1, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 1) == 1);
}

TEST_CASE("level-2 ring: frozen product table with a multiplicity 2") {
  const NsRing ring = build_ns_ring(Level{2});
  REQUIRE(ring.size() == 4);
  const NSLabel unit{Spin{0}, Spin{0}};
  const NSLabel beta{Spin{0}, Spin{2}};
  const NSLabel two{Spin{0}, Spin{4}};   // the class (0, 2)
  const NSLabel alpha{Spin{1}, Spin{1}};
  CHECK(ring.basis == std::vector<NSLabel>{unit, beta, two, alpha});
  // alpha x alpha = unit + 2 beta + (0,2): the first multiplicity > 1.
  CHECK(product_coeff(ring, alpha, alpha, unit) == 1);
  CHECK(product_coeff(ring, alpha, alpha, beta) == 2);
  CHECK(product_coeff(ring, alpha, alpha, two) == 1);
  CHECK(product_coeff(ring, alpha, alpha, alpha) == 0);
  // beta x beta = unit + beta + (0,2).
  CHECK(product_coeff(ring, beta, beta, unit) == 1);
  CHECK(product_coeff(ring, beta, beta, beta) == 1);
  CHECK(product_coeff(ring, beta, beta, two) == 1);
  // beta x alpha = 2 alpha;  beta x (0,2) = beta.
  CHECK(product_coeff(ring, beta, alpha, alpha) == 2);
  CHECK(product_coeff(ring, beta, two, beta) == 1);
  CHECK(product_coeff(ring, beta, two, two) == 0);
}

TEST_CASE("vacuum fuses trivially") {
  for (int ell = 0; ell <= 4; ++ell) {
    const Level lvl{ell};
    const NsRing ring = build_ns_ring(lvl);
    for (const NSLabel& x : ring.basis) {
      const auto prod = ns_product(NSLabel{Spin{0}, Spin{0}}, x, lvl);
      REQUIRE(prod.size() == 1);
      CHECK(prod.begin()->first == x);
      CHECK(prod.begin()->second == 1);
    }
  }
}

TEST_CASE("direct and tensor-quotient constructions agree") {
  for (int ell = 0; ell <= 6; ++ell) {
    const Level lvl{ell};
    const NsRing direct = build_ns_ring(lvl);
    const NsRing quot = quotient_ring(
        tensor_ring(build_su2_ring(lvl), build_su2_ring(Level{ell + 2})), lvl);
    CHECK(direct.basis == quot.basis);
    CHECK(direct.N == quot.N);
  }
}

TEST_CASE("ring axioms hold exhaustively") {
  for (int ell = 0; ell <= 6; ++ell) {
    const NsRing ring = build_ns_ring(Level{ell});
    CHECK(verify_unit(ring));
    CHECK(verify_commutativity(ring));
    CHECK(verify_associativity(ring));
    CHECK(verify_frobenius(ring));
  }
  // The SU(2) building blocks pass as well.
  for (int ell = 0; ell <= 8; ++ell)
    CHECK(verify_ring_axioms(build_su2_ring(Level{ell})));
}

TEST_CASE("structure constants do not depend on the lifts") {
  for (int ell = 0; ell <= 6; ++ell) CHECK(verify_lift_independence(Level{ell}));
  // Spot check: fusing through flipped lifts gives the same class multiset.
  const Level l2{2};
  const NSLabel alpha{Spin{1}, Spin{1}};
  const auto ref = ns_product(alpha, alpha, l2);
  CHECK(ns_product(alpha, alpha, l2, true, false) == ref);
  CHECK(ns_product(alpha, alpha, l2, true, true) == ref);
}

TEST_CASE("corrupted structure constants break an axiom") {
  NsRing bad = build_ns_ring(Level{1});
  bad.N[{1, 1, 0}] += 1;  // eps x eps now hits the vacuum twice
  CHECK(verify_unit(bad));
  CHECK_FALSE(verify_frobenius(bad));
  CHECK_FALSE(verify_ring_axioms(bad));
}

TEST_CASE("weak generator connectivity") {
  // alpha generates at every level; at level 2 the beta graph splits off
  // the alpha class.
  for (int ell = 1; ell <= 6; ++ell) {
    const Level lvl{ell};
    const NsRing ring = build_ns_ring(lvl);
    const int a = ring.index_of(canonicalize(NSLabel{Spin{1}, Spin{1}}, lvl));
    CHECK(weak_generator_check(ring, a));
  }
  const NsRing r2 = build_ns_ring(Level{2});
  CHECK_FALSE(weak_generator_check(r2, r2.index_of(NSLabel{Spin{0}, Spin{2}})));
  const NsRing r1 = build_ns_ring(Level{1});
  CHECK(weak_generator_check(r1, r1.index_of(NSLabel{Spin{0}, Spin{2}})));
}
