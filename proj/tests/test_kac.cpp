// Exact Kac-table weights, class bookkeeping and the coset weight relation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionkit/kac.hpp"
#include "fusionkit/labels.hpp"

using namespace fusionkit;

TEST_CASE("spin and label parsing") {
  CHECK(parse_spin_token("3") == Spin{3});       // doubled-integer convention
  CHECK(parse_spin_token("3/2") == Spin{3});     // literal fraction
  CHECK(parse_spin_token("2/1") == Spin{4});
  CHECK(parse_ns_label("0,2") == NSLabel{Spin{0}, Spin{2}});
  CHECK(parse_ns_label("1/2,1/2") == NSLabel{Spin{1}, Spin{1}});
  CHECK_THROWS_AS(parse_spin_token("x"), domain_error);
  CHECK_THROWS_AS(parse_spin_token("1/3"), domain_error);
  CHECK_THROWS_AS(parse_spin_token("-1"), domain_error);
  CHECK_THROWS_AS(parse_ns_label("1"), domain_error);
  CHECK_THROWS_AS(parse_ns_label("1,2,3"), domain_error);
  CHECK(to_string(NSLabel{Spin{0}, Spin{2}}) == "(0,1)");
  CHECK(to_string(NSLabel{Spin{1}, Spin{3}}) == "(1/2,3/2)");
}

TEST_CASE("label validity and involution") {
  const Level l1{1};
  CHECK(ns_label_valid(NSLabel{Spin{0}, Spin{2}}, l1));
  CHECK_FALSE(ns_label_valid(NSLabel{Spin{0}, Spin{1}}, l1));  // i - i' not in Z
  CHECK_FALSE(ns_label_valid(NSLabel{Spin{2}, Spin{2}}, l1));  // i too large
  CHECK(ns_involution(NSLabel{Spin{0}, Spin{0}}, l1) ==
        NSLabel{Spin{1}, Spin{3}});
  CHECK(canonicalize(NSLabel{Spin{1}, Spin{3}}, l1) ==
        NSLabel{Spin{0}, Spin{0}});
  // The involution is fixed-point free in the NS sector.
  for (int ell = 0; ell <= 8; ++ell)
    for (int t = 0; t <= ell; ++t)
      for (int tp = t % 2; tp <= ell + 2; tp += 2) {
        const NSLabel x{Spin{t}, Spin{tp}};
        CHECK(ns_involution(x, Level{ell}) != x);
      }
}

TEST_CASE("exact weights: frozen values") {
  // Level 1 (m = 3): classes (0,0) and (0,1) with h in {0, 1/10}.
  CHECK(h_kac({1, 1, 3}) == rational(0));
  CHECK(h_kac({1, 3, 3}) == rational(1, 10));
  CHECK(h_ns(NSLabel{Spin{0}, Spin{2}}, Level{1}) == rational(1, 10));
  // Level 2 (m = 4): weights {0, 1/6, 1, 1/16}.
  CHECK(h_ns(NSLabel{Spin{0}, Spin{0}}, Level{2}) == rational(0));
  CHECK(h_ns(NSLabel{Spin{0}, Spin{2}}, Level{2}) == rational(1, 6));
  CHECK(h_ns(NSLabel{Spin{0}, Spin{4}}, Level{2}) == rational(1));
  CHECK(h_ns(NSLabel{Spin{1}, Spin{1}}, Level{2}) == rational(1, 16));
  // SU(2) weights.
  CHECK(h_su2(Spin{1}, Level{1}) == rational(1, 4));
  CHECK(h_su2(Spin{2}, Level{2}) == rational(1, 2));
  CHECK_THROWS_AS(h_su2(Spin{3}, Level{2}), domain_error);
  CHECK_THROWS_AS(h_kac(KacLabel{0, 1, 3}), domain_error);
}

TEST_CASE("Kac symmetry is exact on the full grid") {
  for (int m = 3; m <= 20; ++m)
    for (int p = 1; p <= m - 1; ++p)
      for (int q = 1; q <= m + 1; ++q)
        CHECK(h_kac({p, q, m}) == h_kac({m - p, m + 2 - q, m}));
}

TEST_CASE("weights are class functions") {
  for (int ell = 0; ell <= 8; ++ell) {
    const Level lvl{ell};
    for (int t = 0; t <= ell; ++t)
      for (int tp = t % 2; tp <= ell + 2; tp += 2) {
        const NSLabel x{Spin{t}, Spin{tp}};
        CHECK(h_ns(x, lvl) == h_ns(ns_involution(x, lvl), lvl));
      }
  }
}

TEST_CASE("canonical class enumeration: frozen counts") {
  const int expected[] = {1, 2, 4, 6, 9, 12, 16, 20, 25};
  for (int ell = 0; ell <= 8; ++ell) {
    const auto basis = enumerate_ns_basis(Level{ell});
    CHECK(static_cast<int>(basis.size()) == expected[ell]);
    // Sorted, unit first, all canonical.
    CHECK(basis.front() == NSLabel{Spin{0}, Spin{0}});
    for (std::size_t k = 0; k < basis.size(); ++k) {
      CHECK(canonicalize(basis[k], Level{ell}) == basis[k]);
      if (k > 0) CHECK(basis[k - 1] < basis[k]);
    }
  }
}

TEST_CASE("coset weight relation holds exactly up to level 10") {
  for (int ell = 0; ell <= 10; ++ell)
    for (int t = 0; t <= ell; ++t)
      for (int tp = t % 2; tp <= ell + 2; tp += 2)
        CHECK(weight_relation_check(NSLabel{Spin{t}, Spin{tp}}, Level{ell}));
}

TEST_CASE("leading exponent and quadratic coefficient") {
  const Level l1{1};
  const NSLabel unit{Spin{0}, Spin{0}};
  const NSLabel eps{Spin{0}, Spin{2}};
  // delta = h(charge) - h(source) + h(target) = 1/10 - 0 + 1/10.
  CHECK(delta_ns(eps, unit, eps, l1) == rational(1, 5));
  // C = [(i-i')^2 - (j-j')^2 + (k-k')^2] / 2 on doubled differences /2.
  const NSLabel alpha{Spin{1}, Spin{1}};
  CHECK(c_coefficient(alpha, unit, eps) == rational(1, 2));
  CHECK(c_coefficient(unit, unit, unit) == rational(0));
}
