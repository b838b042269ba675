#include "fusionkit/fusion.hpp"

#include <sstream>

namespace fusionkit {

std::vector<Spin> su2_interval(Spin a, Spin b, Level level) {
  if (level.ell < 0 || a.twice < 0 || a.twice > level.ell || b.twice < 0 ||
      b.twice > level.ell) {
    std::ostringstream msg;
    msg << "su2_interval: spins (" << to_string(a) << ", " << to_string(b)
        << ") not admissible at level " << level.ell;
    throw domain_error(msg.str());
  }
  std::vector<Spin> out;
  for (int tc = std::abs(a.twice - b.twice); tc <= a.twice + b.twice; tc += 2)
    if (a.twice + b.twice + tc <= 2 * level.ell) out.push_back(Spin(tc));
  return out;
}

Su2Ring build_su2_ring(Level level) {
  if (level.ell < 0) throw domain_error("build_su2_ring: negative level");
  Su2Ring ring;
  ring.level = level;
  for (int t = 0; t <= level.ell; ++t) ring.basis.emplace_back(t);
  const int n = ring.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (Spin c : su2_interval(ring.basis[a], ring.basis[b], level))
        ring.add(a, b, c.twice, 1);  // index of spin c is its doubled value
  return ring;
}

PairRing tensor_ring(const Su2Ring& a, const Su2Ring& b) {
  PairRing ring;
  ring.level = a.level;
  for (Spin sa : a.basis)
    for (Spin sb : b.basis) ring.basis.emplace_back(sa, sb);
  // Lexicographic double loop: basis is already sorted.
  auto pair_index = [&](int ia, int ib) {
    return ia * b.size() + ib;
  };
  for (const auto& [ka, na] : a.N)
    for (const auto& [kb, nb] : b.N)
      ring.add(pair_index(ka[0], kb[0]), pair_index(ka[1], kb[1]),
               pair_index(ka[2], kb[2]), na * nb);
  return ring;
}

std::map<NSLabel, long> ns_product(const NSLabel& a, const NSLabel& b,
                                   Level level, bool flip_a, bool flip_b) {
  require_ns_label(a, level, "ns_product");
  require_ns_label(b, level, "ns_product");
  NSLabel la = flip_a ? ns_involution(a, level) : a;
  NSLabel lb = flip_b ? ns_involution(b, level) : b;
  Level shifted(level.ell + 2);
  std::map<NSLabel, long> out;
  for (Spin k : su2_interval(la.i, lb.i, level))
    for (Spin kp : su2_interval(la.ip, lb.ip, shifted))
      out[canonicalize(NSLabel{k, kp}, level)] += 1;
  return out;
}

NsRing build_ns_ring(Level level) {
  NsRing ring;
  ring.level = level;
  ring.basis = enumerate_ns_basis(level);
  const int n = ring.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [c, mult] : ns_product(ring.basis[a], ring.basis[b], level))
        ring.add(a, b, ring.index_of(c), mult);
  return ring;
}

NsRing quotient_ring(const PairRing& t, Level level) {
  NsRing ring;
  ring.level = level;
  ring.basis = enumerate_ns_basis(level);

  // Map every NS pair in the tensor basis to its class index; non-NS pairs
  // and non-canonical lifts of the two factor slots are skipped below.
  const int tn = t.size();
  std::vector<int> class_of(tn, -1), is_canonical(tn, 0);
  for (int idx = 0; idx < tn; ++idx) {
    NSLabel x{t.basis[idx].first, t.basis[idx].second};
    if (!ns_label_valid(x, level)) continue;
    NSLabel canon = canonicalize(x, level);
    class_of[idx] = ring.index_of(canon);
    is_canonical[idx] = (canon == x);
  }

  // N_{[a][b]}^{[C]} = Σ_{c ∈ orbit(C)} N_{ãb̃}^c with canonical lifts ã, b̃.
  for (const auto& [key, mult] : t.N) {
    if (class_of[key[0]] < 0 || class_of[key[1]] < 0) continue;
    if (!is_canonical[key[0]] || !is_canonical[key[1]]) continue;
    ring.add(class_of[key[0]], class_of[key[1]], class_of[key[2]], mult);
  }
  return ring;
}

bool verify_lift_independence(Level level) {
  auto basis = enumerate_ns_basis(level);
  for (const NSLabel& a : basis)
    for (const NSLabel& b : basis) {
      auto reference = ns_product(a, b, level, false, false);
      for (int flips = 1; flips < 4; ++flips)
        if (ns_product(a, b, level, flips & 1, flips & 2) != reference)
          return false;
    }
  return true;
}

}  // namespace fusionkit
