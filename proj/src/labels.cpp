#include "fusionkit/labels.hpp"

#include <charconv>
#include <sstream>

namespace fusionkit {

std::string to_string(Spin s) {
  if (s.twice % 2 == 0) return std::to_string(s.twice / 2);
  return std::to_string(s.twice) + "/2";
}

bool kac_valid(const KacLabel& k) {
  return k.m >= 2 && k.p >= 1 && k.p <= k.m - 1 && k.q >= 1 && k.q <= k.m + 1;
}

bool ns_label_valid(const NSLabel& x, Level level) {
  if (level.ell < 0) return false;
  if (x.i.twice < 0 || x.i.twice > level.ell) return false;
  if (x.ip.twice < 0 || x.ip.twice > level.ell + 2) return false;
  return (x.i.twice - x.ip.twice) % 2 == 0;  // i − i' ∈ ℤ
}

void require_ns_label(const NSLabel& x, Level level, const char* where) {
  if (!ns_label_valid(x, level)) {
    std::ostringstream msg;
    msg << where << ": invalid NS label " << to_string(x) << " at level "
        << level.ell;
    throw domain_error(msg.str());
  }
}

KacLabel to_kac(const NSLabel& x, Level level) {
  return KacLabel{x.i.twice + 1, x.ip.twice + 1, level.m()};
}

NSLabel from_kac(const KacLabel& k) {
  if (!kac_valid(k) || !kac_is_ns(k))
    throw domain_error("from_kac: not a valid NS Kac label");
  return NSLabel{Spin(k.p - 1), Spin(k.q - 1)};
}

NSLabel ns_involution(const NSLabel& x, Level level) {
  require_ns_label(x, level, "ns_involution");
  return NSLabel{Spin(level.ell - x.i.twice), Spin(level.ell + 2 - x.ip.twice)};
}

std::string to_string(const NSLabel& x) {
  return "(" + to_string(x.i) + "," + to_string(x.ip) + ")";
}

namespace {

int parse_int(const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw domain_error("parse_spin_token: not an integer: '" + text + "'");
  return value;
}

}  // namespace

Spin parse_spin_token(const std::string& token) {
  auto slash = token.find('/');
  int twice = 0;
  if (slash == std::string::npos) {
    twice = parse_int(token);  // doubled-integer convention
  } else {
    int num = parse_int(token.substr(0, slash));
    int den = parse_int(token.substr(slash + 1));
    if (den == 1)
      twice = 2 * num;
    else if (den == 2)
      twice = num;
    else
      throw domain_error("parse_spin_token: spin denominator must be 1 or 2: '" +
                         token + "'");
  }
  if (twice < 0)
    throw domain_error("parse_spin_token: spins are non-negative: '" + token +
                       "'");
  return Spin(twice);
}

NSLabel parse_ns_label(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw domain_error(
        "parse_ns_label: expected two comma-separated spins, got '" + text +
        "'");
  return NSLabel{parse_spin_token(text.substr(0, comma)),
                 parse_spin_token(text.substr(comma + 1))};
}

}  // namespace fusionkit
