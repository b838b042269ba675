#pragma once

// JSON round-tripping for the NS fusion ring and the Fuchsian system /
// transport results.
//
// Ring schema:
//   { "level": ℓ,
//     "basis": [[2i, 2i'], …],              // canonical classes, sorted
//     "N": [[a, b, c, mult], …] }           // sparse, lexicographic, mult>0
//
// System schema (complex numbers are [re, im] pairs):
//   { "n": size,
//     "P": [[[re,im], …], …], "Q": [[[re,im], …], …],
//     "series_order": 60?, "path": [[re,im], …]? }

#include <json.hpp>  // vendored nlohmann/json single header

#include "fusionkit/fuchsian.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {

nlohmann::json ring_to_json(const NsRing& ring);
NsRing ring_from_json(const nlohmann::json& j);

FuchsianSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const FuchsianSystem& sys);

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

}  // namespace fusionkit
