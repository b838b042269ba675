#include "fusionkit/kac.hpp"

#include <sstream>

namespace fusionkit {

Rational h_su2(Spin i, Level level) {
  if (level.ell < 0 || i.twice < 0 || i.twice > level.ell) {
    std::ostringstream msg;
    msg << "h_su2: spin " << to_string(i) << " not admissible at level "
        << level.ell;
    throw domain_error(msg.str());
  }
  // (i² + i)/(ℓ+2) with i = twice/2.
  long t = i.twice;
  return rational(t * (t + 2), 4L * level.m());
}

Rational h_kac(const KacLabel& k) {
  if (!kac_valid(k)) {
    std::ostringstream msg;
    msg << "h_kac: invalid Kac label (p=" << k.p << ", q=" << k.q
        << ", m=" << k.m << ")";
    throw domain_error(msg.str());
  }
  mpz_class t = mpz_class(k.m + 2) * k.p - mpz_class(k.m) * k.q;
  Rational h(t * t - 4, mpz_class(8) * k.m * (k.m + 2));
  h.canonicalize();
  return h;
}

Rational h_ns(const NSLabel& x, Level level) {
  require_ns_label(x, level, "h_ns");
  return h_kac(to_kac(x, level));
}

NSLabel canonicalize(const NSLabel& x, Level level) {
  NSLabel partner = ns_involution(x, level);
  return x <= partner ? x : partner;
}

std::vector<NSLabel> enumerate_ns_basis(Level level) {
  if (level.ell < 0) throw domain_error("enumerate_ns_basis: negative level");
  std::vector<NSLabel> out;
  for (int t = 0; t <= level.ell; ++t)
    for (int tp = t % 2; tp <= level.ell + 2; tp += 2) {
      NSLabel x{Spin(t), Spin(tp)};
      if (x <= ns_involution(x, level)) out.push_back(x);
    }
  return out;  // loop order is lexicographic, so already sorted
}

bool weight_relation_check(const NSLabel& x, Level level) {
  require_ns_label(x, level, "weight_relation_check");
  Rational lhs = h_su2(x.i, level);
  long d = x.i.twice - x.ip.twice;
  Rational rhs = h_kac(to_kac(x, level)) + h_su2(x.ip, Level(level.ell + 2)) -
                 rational(d * d, 8);
  return lhs == rhs;
}

Rational delta_ns(const NSLabel& target, const NSLabel& source,
                  const NSLabel& charge, Level level) {
  return h_ns(charge, level) - h_ns(source, level) + h_ns(target, level);
}

Rational c_coefficient(const NSLabel& target, const NSLabel& source,
                       const NSLabel& charge) {
  auto sq_diff = [](const NSLabel& x) {
    long d = x.i.twice - x.ip.twice;
    return d * d;
  };
  return rational(sq_diff(target) - sq_diff(source) + sq_diff(charge), 8);
}

}  // namespace fusionkit
