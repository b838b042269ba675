#pragma once

// Error taxonomy shared by the whole library.
//
//  * domain_error  — the caller handed us something outside the mathematical
//    domain (invalid label, malformed system file, unsupported charge pair).
//    The CLI maps these to exit code 2.
//  * numeric_error — the input was legal but a computation failed to meet its
//    accuracy contract (power iteration stalled, resonant exponents, series
//    tail too large, transport residual above tolerance).  CLI exit code 1.

#include <stdexcept>

namespace fusionkit {

class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fusionkit
