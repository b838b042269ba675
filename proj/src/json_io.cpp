#include "fusionkit/json_io.hpp"

#include "fusionkit/errors.hpp"

namespace fusionkit {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw domain_error("json: complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw domain_error("json: matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw domain_error("json: matrix rows must be non-empty");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(j.size()),
                     static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw domain_error("json: matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(j[r][c]);
  }
  return m;
}

json ring_to_json(const NsRing& ring) {
  json j;
  j["level"] = ring.level.ell;
  json basis = json::array();
  for (const NSLabel& x : ring.basis)
    basis.push_back(json::array({x.i.twice, x.ip.twice}));
  j["basis"] = std::move(basis);
  json entries = json::array();  // std::map keys are already lexicographic
  for (const auto& [key, mult] : ring.N)
    if (mult > 0)
      entries.push_back(json::array({key[0], key[1], key[2], mult}));
  j["N"] = std::move(entries);
  return j;
}

NsRing ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("basis") ||
      !j.contains("N"))
    throw domain_error("json: ring needs fields level, basis, N");
  if (!j["level"].is_number_integer())
    throw domain_error("json: ring level must be an integer");

  NsRing ring;
  ring.level = Level{j["level"].get<int>()};
  if (ring.level.ell < 0) throw domain_error("json: ring level must be ≥ 0");

  if (!j["basis"].is_array() || j["basis"].empty())
    throw domain_error("json: ring basis must be a non-empty array");
  for (const json& e : j["basis"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw domain_error("json: basis entries must be [2i, 2i'] pairs");
    NSLabel x{Spin{e[0].get<int>()}, Spin{e[1].get<int>()}};
    if (!ns_label_valid(x, ring.level))
      throw domain_error("json: basis label invalid at this level: " +
                         to_string(x));
    ring.basis.push_back(x);
  }
  for (std::size_t k = 1; k < ring.basis.size(); ++k)
    if (!(ring.basis[k - 1] < ring.basis[k]))
      throw domain_error("json: ring basis must be strictly ascending");
  if (ring.basis.front() != NSLabel{Spin{0}, Spin{0}})
    throw domain_error("json: ring basis must start with the unit (0, 0)");

  if (!j["N"].is_array())
    throw domain_error("json: ring N must be an array");
  for (const json& e : j["N"]) {
    if (!e.is_array() || e.size() != 4)
      throw domain_error("json: N entries must be [a, b, c, mult]");
    for (const json& v : e)
      if (!v.is_number_integer())
        throw domain_error("json: N entries must be integers");
    const int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
    const long mult = e[3].get<long>();
    if (a < 0 || b < 0 || c < 0 || a >= ring.size() || b >= ring.size() ||
        c >= ring.size())
      throw domain_error("json: N index out of basis range");
    if (mult <= 0)
      throw domain_error("json: N multiplicities must be positive");
    if (ring.N.count({a, b, c}))
      throw domain_error("json: duplicate N entry");
    ring.N[{a, b, c}] = mult;
  }
  return ring;
}

json system_to_json(const FuchsianSystem& sys) {
  json j;
  j["n"] = sys.n();
  j["P"] = matrix_to_json(sys.P);
  j["Q"] = matrix_to_json(sys.Q);
  j["series_order"] = sys.series_order;
  if (!sys.path.empty()) {
    json path = json::array();
    for (Complex z : sys.path) path.push_back(complex_to_json(z));
    j["path"] = std::move(path);
  }
  return j;
}

FuchsianSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("P") ||
      !j.contains("Q"))
    throw domain_error("json: system needs fields n, P, Q");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw domain_error("json: system size n must be a positive integer");

  FuchsianSystem sys;
  const int n = j["n"].get<int>();
  sys.P = matrix_from_json(j["P"]);
  sys.Q = matrix_from_json(j["Q"]);
  if (sys.P.rows() != n || sys.P.cols() != n || sys.Q.rows() != n ||
      sys.Q.cols() != n)
    throw domain_error("json: P and Q must be n×n");

  if (j.contains("series_order")) {
    if (!j["series_order"].is_number_integer() ||
        j["series_order"].get<int>() < 1)
      throw domain_error("json: series_order must be a positive integer");
    sys.series_order = j["series_order"].get<int>();
  }
  if (j.contains("path")) {
    if (!j["path"].is_array() || j["path"].size() < 2)
      throw domain_error("json: path must list at least two points");
    for (const json& p : j["path"]) sys.path.push_back(complex_from_json(p));
  }
  return sys;
}

}  // namespace fusionkit
