#pragma once

// Fusion rings with exact integer structure constants.
//
// Three concrete rings share one container:
//   R_ℓ  — level-ℓ SU(2): basis 0, 1/2, …, ℓ/2, product ⟨a,b⟩_ℓ
//   R_ℓ ⊗ R_{ℓ+2} — componentwise product on spin pairs
//   T_m  — NS quotient: canonical classes at level ℓ (m = ℓ+2); structure
//          constants obtained either directly (fuse lifts componentwise and
//          canonicalize) or by pushing the tensor ring through the quotient.
//
// Structure constants are kept sparsely as (a, b, c) → N_{ab}^c with indices
// into the sorted basis; multiplicities greater than one are legal (they
// first appear at ℓ = 2).  verify_* functions perform exhaustive axiom
// checks; fusion_matrix builds (M_x)_{kj} = N_{xj}^k for spectral work.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "fusionkit/kac.hpp"
#include "fusionkit/labels.hpp"

namespace fusionkit {

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

template <class Label>
struct FusionRing {
  Level level;                          // ℓ context of the basis labels
  std::vector<Label> basis;             // sorted ascending; unit first
  std::map<std::array<int, 3>, long> N; // (a, b, c) → N_{ab}^c, zeros omitted

  int size() const { return static_cast<int>(basis.size()); }
  int unit() const { return 0; }

  long coeff(int a, int b, int c) const {
    auto it = N.find({a, b, c});
    return it == N.end() ? 0 : it->second;
  }

  void add(int a, int b, int c, long mult) {
    if (mult != 0) N[{a, b, c}] += mult;
  }

  // Index of a basis label; -1 when absent.
  int index_of(const Label& x) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), x);
    if (it == basis.end() || *it != x) return -1;
    return static_cast<int>(it - basis.begin());
  }
};

using Su2Ring = FusionRing<Spin>;
using SpinPair = std::pair<Spin, Spin>;
using PairRing = FusionRing<SpinPair>;
using NsRing = FusionRing<NSLabel>;

// Truncated Clebsch–Gordan interval ⟨a,b⟩_ℓ = {c : |a−b| ≤ c ≤ a+b, step 1,
// a+b+c ≤ ℓ}.  Requires both spins admissible at level ℓ.
std::vector<Spin> su2_interval(Spin a, Spin b, Level level);

// Level-ℓ SU(2) fusion ring on basis {0, 1/2, …, ℓ/2}.
Su2Ring build_su2_ring(Level level);

// Componentwise product ring on pairs (level-ℓ spin, level-(ℓ+2) spin).
// Basis: all pairs, lexicographically sorted (no NS parity filter).
PairRing tensor_ring(const Su2Ring& a, const Su2Ring& b);

// NS ring assembled directly: canonical classes, products fused lift-wise
// through su2_interval at the two levels and pushed through canonicalize.
NsRing build_ns_ring(Level level);

// NS ring assembled independently by restricting the tensor ring to NS pairs
// and summing structure constants over identification orbits.
NsRing quotient_ring(const PairRing& t, Level level);

// (M_x)_{kj} = N_{xj}^k.
template <class Label>
IntMatrix fusion_matrix(const FusionRing<Label>& ring, int x) {
  const int n = ring.size();
  IntMatrix M = IntMatrix::Zero(n, n);
  for (const auto& [key, mult] : ring.N)
    if (key[0] == x) M(key[2], key[1]) += mult;
  return M;
}

// Associativity in matrix form: M_a·M_b = Σ_e N_{ab}^e M_e for all a, b.
template <class Label>
bool verify_associativity(const FusionRing<Label>& ring) {
  const int n = ring.size();
  std::vector<IntMatrix> M(n);
  for (int x = 0; x < n; ++x) M[x] = fusion_matrix(ring, x);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      IntMatrix lhs = M[a] * M[b];
      IntMatrix rhs = IntMatrix::Zero(n, n);
      for (int e = 0; e < n; ++e) {
        long nab = ring.coeff(a, b, e);
        if (nab != 0) rhs.noalias() += nab * M[e];
      }
      if (lhs != rhs) return false;
    }
  return true;
}

template <class Label>
bool verify_commutativity(const FusionRing<Label>& ring) {
  const int n = ring.size();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ring.coeff(a, b, c) != ring.coeff(b, a, c)) return false;
  return true;
}

template <class Label>
bool verify_unit(const FusionRing<Label>& ring) {
  const int n = ring.size();
  const int u = ring.unit();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (ring.coeff(u, a, c) != (a == c ? 1 : 0)) return false;
  return true;
}

// Self-dual basis (N_{ab}^1 = δ_ab) plus Frobenius reciprocity with b* = b:
// N_{bc}^a = N_{ba}^c.
template <class Label>
bool verify_frobenius(const FusionRing<Label>& ring) {
  const int n = ring.size();
  const int u = ring.unit();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ring.coeff(a, b, u) != (a == b ? 1 : 0)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ring.coeff(b, c, a) != ring.coeff(b, a, c)) return false;
  return true;
}

// All four ring axioms at once.
template <class Label>
bool verify_ring_axioms(const FusionRing<Label>& ring) {
  return verify_unit(ring) && verify_commutativity(ring) &&
         verify_associativity(ring) && verify_frobenius(ring);
}

// Connectivity of the fusion graph of x: vertices = basis, undirected edge
// (j, k) whenever N_{xj}^k ≥ 1.  True when one component covers the basis.
template <class Label>
bool weak_generator_check(const FusionRing<Label>& ring, int x) {
  const int n = ring.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [key, mult] : ring.N)
    if (key[0] == x && mult > 0) {
      adj[key[1]].push_back(key[2]);
      adj[key[2]].push_back(key[1]);
    }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// The NS structure constants must not depend on which lift of each factor is
// fused; true when all four lift choices agree for every class pair.
bool verify_lift_independence(Level level);

// Multiset of canonical classes (with multiplicity) in the product [a]⊠[b],
// fused through the given lifts (flip_a / flip_b pick the involution image).
std::map<NSLabel, long> ns_product(const NSLabel& a, const NSLabel& b,
                                   Level level, bool flip_a = false,
                                   bool flip_b = false);

}  // namespace fusionkit
