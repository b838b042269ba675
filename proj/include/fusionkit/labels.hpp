#pragma once

// Label types for the level-ℓ SU(2) category and the Neveu–Schwarz discrete
// series built on it.
//
// Conventions used throughout the library:
//  * Spins are stored doubled (Spin{1} is spin 1/2), so every quantity stays
//    an exact integer.  Admissible spins at level ℓ are 0, 1/2, …, ℓ/2.
//  * An NS label is a pair (i, i') with i a level-ℓ spin, i' a level-(ℓ+2)
//    spin and i − i' an integer.  Its Kac pair in the series m = ℓ + 2 is
//    (p, q) = (2i + 1, 2i' + 1), which automatically satisfies p ≡ q (mod 2).
//  * The Kac-table identification (p, q) ~ (m − p, m + 2 − q) becomes the
//    involution (i, i') ↦ (ℓ/2 − i, (ℓ+2)/2 − i'); a label is "canonical"
//    when it is lexicographically ≤ its image (ordering by (2i, 2i')).

#include <compare>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"

namespace fusionkit {

// Non-negative spin in half-integer steps, stored as twice its value.
struct Spin {
  int twice = 0;

  constexpr Spin() = default;
  constexpr explicit Spin(int twice_spin) : twice(twice_spin) {}

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr auto operator<=>(const Spin&) const = default;
};

// Renders "0", "1/2", "3/2", ...
std::string to_string(Spin s);

// Coupling level.  m = ℓ + 2 tags the series the NS weights live in.
struct Level {
  int ell = 0;

  constexpr Level() = default;
  constexpr explicit Level(int l) : ell(l) {}

  constexpr int m() const { return ell + 2; }
  constexpr auto operator<=>(const Level&) const = default;
};

// Position (p, q) in the series-m Kac table: 1 ≤ p ≤ m−1, 1 ≤ q ≤ m+1.
// Labels with p ≡ q (mod 2) belong to the Neveu–Schwarz sector.
struct KacLabel {
  int p = 1;
  int q = 1;
  int m = 2;

  constexpr auto operator<=>(const KacLabel&) const = default;
};

bool kac_valid(const KacLabel& k);
inline bool kac_is_ns(const KacLabel& k) { return (k.p - k.q) % 2 == 0; }

// NS label (i, i'); `i` couples at level ℓ, `ip` at level ℓ + 2.
struct NSLabel {
  Spin i;
  Spin ip;

  constexpr NSLabel() = default;
  constexpr NSLabel(Spin level_spin, Spin shifted_spin)
      : i(level_spin), ip(shifted_spin) {}

  constexpr auto operator<=>(const NSLabel&) const = default;
};

// True when 0 ≤ 2i ≤ ℓ, 0 ≤ 2i' ≤ ℓ+2 and i − i' is an integer.
bool ns_label_valid(const NSLabel& x, Level level);

// Throws domain_error with a readable message when the label is invalid.
void require_ns_label(const NSLabel& x, Level level, const char* where);

KacLabel to_kac(const NSLabel& x, Level level);
NSLabel from_kac(const KacLabel& k);

// Kac-table identification partner (ℓ/2 − i, (ℓ+2)/2 − i').
NSLabel ns_involution(const NSLabel& x, Level level);

// Renders "(0,1/2)"-style.
std::string to_string(const NSLabel& x);

// Parses one spin token.  A plain integer is a doubled spin ("3" is spin
// 3/2); a fraction is a literal spin value ("3/2" is spin 3/2, "2/1" spin 2).
Spin parse_spin_token(const std::string& token);

// Parses "2i,2i'" (doubled integers) or fraction forms like "1/2,1/2".
NSLabel parse_ns_label(const std::string& text);

}  // namespace fusionkit
