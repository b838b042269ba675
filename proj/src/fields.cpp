#include "fusionkit/fields.hpp"

#include <array>
#include <cstdlib>

namespace fusionkit {

std::string to_string(Charge c) {
  return c == Charge::Alpha ? "alpha" : "beta";
}

Charge parse_charge(const std::string& text) {
  if (text == "alpha") return Charge::Alpha;
  if (text == "beta") return Charge::Beta;
  throw domain_error("parse_charge: expected 'alpha' or 'beta', got '" + text +
                     "'");
}

NSLabel charge_label(Charge c, Level level) {
  if (level.ell < 0) throw domain_error("charge_label: negative level");
  if (c == Charge::Alpha) {
    if (level.ell < 1)
      throw domain_error("charge_label: alpha = (1/2,1/2) needs level >= 1");
    return NSLabel{Spin(1), Spin(1)};
  }
  return NSLabel{Spin(0), Spin(2)};
}

bool su2_nonzero(Spin i, Spin j, Spin k, Level level) {
  if (level.ell < 0 || i.twice < 0 || i.twice > level.ell || j.twice < 0 ||
      j.twice > level.ell)
    throw domain_error("su2_nonzero: spins not admissible at this level");
  const int ti = i.twice, tj = j.twice;
  switch (k.twice) {
    case 1:  // spin 1/2: nearest neighbours with truncation i+j+1/2 ≤ ℓ
      return std::abs(ti - tj) == 1 && ti + tj + 1 <= 2 * level.ell;
    case 2:  // spin 1: |i−j| ≤ 1 integer step, CG floor i+j ≥ 1, truncation
      return std::abs(ti - tj) <= 2 && (ti - tj) % 2 == 0 && ti + tj >= 2 &&
             ti + tj + 2 <= 2 * level.ell;
    default:
      throw domain_error("su2_nonzero: charge spin must be 1/2 or 1");
  }
}

std::optional<int> field_sigma(const NSLabel& target, const NSLabel& source,
                               Charge c, Level level) {
  require_ns_label(target, level, "field_sigma");
  require_ns_label(source, level, "field_sigma");
  const Level shifted(level.ell + 2);
  if (c == Charge::Alpha) {
    charge_label(Charge::Alpha, level);  // validates ℓ ≥ 1
    if (!su2_nonzero(target.i, source.i, Spin(1), level)) return std::nullopt;
    if (!su2_nonzero(target.ip, source.ip, Spin(1), shifted))
      return std::nullopt;
    const int di = target.i.twice - source.i.twice;    // ±1
    const int dp = target.ip.twice - source.ip.twice;  // ±1
    return di == dp ? 0 : 1;
  }
  // β: trivial charge spin at level ℓ forces equal unprimed spins.
  if (target.i != source.i) return std::nullopt;
  if (!su2_nonzero(target.ip, source.ip, Spin(2), shifted)) return std::nullopt;
  return target.ip == source.ip ? 1 : 0;
}

bool ns_constructible(const FieldSpec& spec, Level level) {
  if (spec.sigma != 0 && spec.sigma != 1)
    throw domain_error("ns_constructible: sigma must be 0 or 1");
  auto sigma = field_sigma(spec.target, spec.source, spec.charge, level);
  return sigma.has_value() && *sigma == spec.sigma;
}

std::set<NSLabel> adjacency_set(const NSLabel& x, Charge c, Level level) {
  require_ns_label(x, level, "adjacency_set");
  charge_label(c, level);  // validates the charge at this level
  std::set<NSLabel> out;
  const NSLabel canon = canonicalize(x, level);
  for (const NSLabel& lift : {canon, ns_involution(canon, level)}) {
    // Candidate shifts: α moves both spins by ±1/2, β moves only the primed
    // spin by 0 or ±1.
    std::vector<std::pair<int, int>> shifts;
    if (c == Charge::Alpha)
      shifts = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    else
      shifts = {{0, -2}, {0, 0}, {0, 2}};
    for (auto [di, dp] : shifts) {
      NSLabel target{Spin(lift.i.twice + di), Spin(lift.ip.twice + dp)};
      if (!ns_label_valid(target, level)) continue;
      if (field_sigma(target, lift, c, level).has_value())
        out.insert(canonicalize(target, level));
    }
  }
  return out;
}

Rational braiding_phase(const NSLabel& target, const NSLabel& source,
                        const NSLabel& int_left, const NSLabel& int_right,
                        Level level) {
  return h_ns(target, level) + h_ns(source, level) - h_ns(int_left, level) -
         h_ns(int_right, level);
}

std::set<NSLabel> braiding_support(Charge left, Charge right,
                                   const NSLabel& outer, const NSLabel& inner,
                                   Level level) {
  if (left == Charge::Beta && right == Charge::Beta)
    throw domain_error(
        "braiding_support: the (beta, beta) charge pair is unsupported");
  std::set<NSLabel> a = adjacency_set(outer, right, level);
  std::set<NSLabel> b = adjacency_set(inner, left, level);
  std::set<NSLabel> out;
  for (const NSLabel& x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

SigmaDeltaReport sigma_delta_survey(Charge c, Level level) {
  SigmaDeltaReport report;
  const NSLabel charge = charge_label(c, level);
  for (const NSLabel& cls : enumerate_ns_basis(level)) {
    for (const NSLabel& source : {cls, ns_involution(cls, level)}) {
      std::vector<std::pair<int, int>> shifts;
      if (c == Charge::Alpha)
        shifts = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
      else
        shifts = {{0, -2}, {0, 0}, {0, 2}};
      for (auto [di, dp] : shifts) {
        NSLabel target{Spin(source.i.twice + di), Spin(source.ip.twice + dp)};
        if (!ns_label_valid(target, level)) continue;
        auto sigma = field_sigma(target, source, c, level);
        if (!sigma) continue;
        Rational delta = delta_ns(target, source, charge, level);
        Rational twice_delta = delta * 2;
        if (!is_integer(twice_delta)) {
          ++report.indeterminate;
          continue;
        }
        int parity = is_integer(delta) ? 0 : 1;
        if (parity == *sigma)
          ++report.agree;
        else
          ++report.disagree;
      }
    }
  }
  return report;
}

}  // namespace fusionkit
