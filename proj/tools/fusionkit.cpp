// fusionkit — command-line front end.
//
// Subcommands: kac, fuse, qdim, index, fields, graph, braid, graded, verify.
// Exit codes: 0 success, 1 invariant/numeric failure, 2 usage or domain error.
// Spins on the command line are doubled integers ("0,2" is the class (0,1));
// fraction forms like "1/2,1/2" are also accepted.  Floating-point output is
// fixed at 10 significant digits; all orderings are deterministic.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "fusionkit/density.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/fields.hpp"
#include "fusionkit/fuchsian.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/graded.hpp"
#include "fusionkit/json_io.hpp"
#include "fusionkit/kac.hpp"
#include "fusionkit/qdim.hpp"
#include "fusionkit/verify.hpp"

namespace fk = fusionkit;
using nlohmann::json;

namespace {

std::string f10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string f2e(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string fc10(fk::Complex z) {
  const std::string re = f10(z.real());
  const std::string im = f10(std::abs(z.imag()));
  return re + (z.imag() < 0 ? " - " : " + ") + im + "i";
}

// All valid NS labels at this level, lexicographic.
std::vector<fk::NSLabel> all_labels(fk::Level lvl) {
  std::vector<fk::NSLabel> out;
  for (int t = 0; t <= lvl.ell; ++t)
    for (int tp = t % 2; tp <= lvl.ell + 2; tp += 2)
      out.push_back({fk::Spin{t}, fk::Spin{tp}});
  return out;
}

// The spectral generator: the α class when it exists, else the unit.
int generator_index(const fk::NsRing& ring, fk::Level lvl) {
  if (lvl.ell < 1) return ring.unit();
  return ring.index_of(
      fk::canonicalize(fk::charge_label(fk::Charge::Alpha, lvl), lvl));
}

int run_kac(int m_opt, int level_opt, const std::string& format) {
  if ((m_opt < 0) == (level_opt < 0))
    throw fk::domain_error("kac: provide exactly one of --m or --level");
  const int m = m_opt >= 0 ? m_opt : level_opt + 2;
  if (m < 2) throw fk::domain_error("kac: the series label m must be >= 2");
  const fk::Level lvl{m - 2};
  const std::vector<fk::NSLabel> labels = all_labels(lvl);
  const std::vector<fk::NSLabel> classes = fk::enumerate_ns_basis(lvl);

  if (format == "json") {
    json j;
    j["m"] = m;
    j["level"] = lvl.ell;
    j["classes"] = classes.size();
    json rows = json::array();
    for (const fk::NSLabel& x : labels) {
      const fk::KacLabel k = fk::to_kac(x, lvl);
      const fk::NSLabel cls = fk::canonicalize(x, lvl);
      json row;
      row["p"] = k.p;
      row["q"] = k.q;
      row["label"] = {x.i.twice, x.ip.twice};
      row["h"] = fk::to_string(fk::h_ns(x, lvl));
      row["class"] = {cls.i.twice, cls.ip.twice};
      row["canonical"] = (cls == x);
      rows.push_back(std::move(row));
    }
    j["labels"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "p,q,twice_i,twice_ip,h,class_twice_i,class_twice_ip,"
                 "canonical\n";
    for (const fk::NSLabel& x : labels) {
      const fk::KacLabel k = fk::to_kac(x, lvl);
      const fk::NSLabel cls = fk::canonicalize(x, lvl);
      std::cout << k.p << "," << k.q << "," << x.i.twice << "," << x.ip.twice
                << "," << fk::to_string(fk::h_ns(x, lvl)) << "," << cls.i.twice
                << "," << cls.ip.twice << "," << (cls == x ? 1 : 0) << "\n";
    }
    return 0;
  }
  std::cout << "NS Kac table, m = " << m << " (level " << lvl.ell << "): "
            << labels.size() << " labels, " << classes.size() << " classes\n";
  std::cout << "   p   q  label       h           class\n";
  for (const fk::NSLabel& x : labels) {
    const fk::KacLabel k = fk::to_kac(x, lvl);
    const fk::NSLabel cls = fk::canonicalize(x, lvl);
    std::printf("  %2d  %2d  %-10s  %-10s  %s%s\n", k.p, k.q,
                fk::to_string(x).c_str(),
                fk::to_string(fk::h_ns(x, lvl)).c_str(),
                fk::to_string(cls).c_str(), cls == x ? " *" : "");
  }
  std::cout << "(* marks the canonical representative of each class)\n";
  return 0;
}

int run_fuse(int level, const std::string& a_text, const std::string& b_text) {
  const fk::Level lvl{level};
  const fk::NSLabel a_raw = fk::parse_ns_label(a_text);
  const fk::NSLabel b_raw = fk::parse_ns_label(b_text);
  fk::require_ns_label(a_raw, lvl, "fuse --a");
  fk::require_ns_label(b_raw, lvl, "fuse --b");
  const fk::NSLabel a = fk::canonicalize(a_raw, lvl);
  const fk::NSLabel b = fk::canonicalize(b_raw, lvl);
  if (a != a_raw)
    std::cout << "note: " << fk::to_string(a_raw) << " ~ " << fk::to_string(a)
              << "\n";
  if (b != b_raw)
    std::cout << "note: " << fk::to_string(b_raw) << " ~ " << fk::to_string(b)
              << "\n";
  std::cout << fk::to_string(a) << " x " << fk::to_string(b) << " at level "
            << level << ":\n";
  for (const auto& [cls, mult] : fk::ns_product(a, b, lvl))
    std::cout << "  " << mult << " x " << fk::to_string(cls) << "\n";
  return 0;
}

int run_qdim(int level, const std::string& mode) {
  const fk::Level lvl{level};
  const fk::NsRing ring = fk::build_ns_ring(lvl);
  std::cout << "level " << level << ", " << ring.size() << " classes\n";
  if (mode == "closed") {
    for (const fk::NSLabel& x : ring.basis)
      std::cout << "  " << fk::to_string(x)
                << ": closed=" << f10(fk::qdim_ns(x, lvl)) << "\n";
    return 0;
  }
  const int gen = generator_index(ring, lvl);
  const fk::PfResult pf = fk::pf_dims(ring, gen);
  if (mode == "pf") {
    for (int k = 0; k < ring.size(); ++k)
      std::cout << "  " << fk::to_string(ring.basis[k])
                << ": pf=" << f10(pf.dims(k)) << "\n";
  } else {
    for (int k = 0; k < ring.size(); ++k) {
      const double closed = fk::qdim_ns(ring.basis[k], lvl);
      std::cout << "  " << fk::to_string(ring.basis[k])
                << ": closed=" << f10(closed) << " pf=" << f10(pf.dims(k))
                << " diff=" << f2e(std::abs(closed - pf.dims(k))) << "\n";
    }
  }
  std::cout << "spectral radius of M_" << fk::to_string(ring.basis[gen])
            << " = " << f10(pf.eigenvalue) << " (" << pf.iterations
            << " iterations)\n";
  return 0;
}

int run_index(int level, const std::string& label_text) {
  const fk::Level lvl{level};
  const fk::NSLabel x = fk::parse_ns_label(label_text);
  fk::require_ns_label(x, lvl, "index --label");
  std::cout << "index " << fk::to_string(fk::canonicalize(x, lvl))
            << " at level " << level << " = "
            << f10(fk::subfactor_index(x, lvl)) << "\n";
  return 0;
}

int run_fields(int level, const std::string& charge_text) {
  const fk::Level lvl{level};
  const fk::Charge c = fk::parse_charge(charge_text);
  const fk::NSLabel q = fk::charge_label(c, lvl);
  std::cout << "charge " << fk::to_string(c) << " = " << fk::to_string(q)
            << " at level " << level << "\n";
  std::cout << "constructible fields (target <- source):\n";
  const std::vector<fk::NSLabel> labels = all_labels(lvl);
  long count = 0;
  for (const fk::NSLabel& target : labels)
    for (const fk::NSLabel& source : labels)
      if (auto sigma = fk::field_sigma(target, source, c, lvl)) {
        ++count;
        std::cout << "  " << fk::to_string(target) << " <- "
                  << fk::to_string(source) << "  sigma=" << *sigma
                  << "  delta="
                  << fk::to_string(fk::delta_ns(target, source, q, lvl))
                  << "\n";
      }
  std::cout << count << " fields\n";
  std::cout << "class adjacency:\n";
  for (const fk::NSLabel& x : fk::enumerate_ns_basis(lvl)) {
    std::cout << "  " << fk::to_string(x) << " ->";
    for (const fk::NSLabel& y : fk::adjacency_set(x, c, lvl))
      std::cout << " " << fk::to_string(y);
    std::cout << "\n";
  }
  const fk::SigmaDeltaReport r = fk::sigma_delta_survey(c, lvl);
  std::cout << "sigma vs delta parity (advisory): " << r.agree << " agree, "
            << r.disagree << " disagree, " << r.indeterminate
            << " indeterminate\n";
  return 0;
}

int run_graph(int level, const std::string& charge_text, bool check_connected) {
  const fk::Level lvl{level};
  const fk::Charge c = fk::parse_charge(charge_text);
  const fk::NsRing ring = fk::build_ns_ring(lvl);
  const int cls = ring.index_of(fk::canonicalize(fk::charge_label(c, lvl), lvl));
  std::cout << "fusion graph of " << fk::to_string(ring.basis[cls])
            << " (charge " << fk::to_string(c) << ") at level " << level
            << ":\n";
  for (int x = 0; x < ring.size(); ++x) {
    std::cout << "  " << fk::to_string(ring.basis[x]) << " ->";
    for (int k = 0; k < ring.size(); ++k)
      if (ring.coeff(cls, x, k) >= 1)
        std::cout << " " << fk::to_string(ring.basis[k]);
    std::cout << "\n";
  }
  const bool connected = fk::weak_generator_check(ring, cls);
  std::cout << "connected: " << (connected ? "yes" : "no") << "\n";
  if (check_connected && !connected) return 1;
  return 0;
}

int run_braid(const std::string& file, const std::string& check) {
  std::ifstream in(file);
  if (!in) throw fk::domain_error("braid: cannot open '" + file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw fk::domain_error("braid: invalid JSON in '" + file + "': " +
                           e.what());
  }
  const fk::FuchsianSystem sys = fk::system_from_json(j);
  if (check == "transport") {
    const fk::Transport t = fk::transport_matrix(sys);
    std::cout << "transport matrix c (" << sys.n() << " x " << sys.n()
              << "):\n";
    for (int r = 0; r < sys.n(); ++r) {
      std::cout << " ";
      for (int s = 0; s < sys.n(); ++s) std::cout << "  " << fc10(t.c(r, s));
      std::cout << "\n";
    }
    std::cout << "fit residual = " << f2e(t.residual) << "\n";
    std::cout << "condition number = " << f10(t.condition) << "\n";
    return 0;
  }
  const fk::DualityReport rep = fk::contragredient_check(sys);
  std::cout << "pairing deviation          = " << f2e(rep.pairing_deviation)
            << " (tol 1e-08)\n";
  std::cout << "inverse-transpose deviation = " << f2e(rep.inverse_deviation)
            << " (tol 1e-06)\n";
  std::cout << "duality: " << (rep.ok ? "ok" : "FAILED") << "\n";
  return rep.ok ? 0 : 1;
}

int run_graded(const std::string& name) {
  const fk::GradedExample ex = fk::graded_example(name);
  const fk::MatrixSpan alg = fk::algebra_closure(ex.space, ex.generators);
  const fk::MatrixSpan comm = fk::commutant(ex.space, alg);
  const fk::MatrixSpan direct = fk::supercommutant_direct(ex.space, alg);
  const fk::MatrixSpan twisted = fk::supercommutant_twisted(ex.space, alg);
  const bool agree = fk::spans_equal(direct, twisted);
  const bool dbl = fk::double_supercommutant_check(ex.space, ex.generators);
  const bool klein = fk::klein_identities_check(ex.space);
  std::cout << "example " << ex.name << ": space dim " << ex.space.dim()
            << ", " << ex.generators.size() << " generators\n";
  std::cout << "  algebra dim           = " << alg.dim() << "\n";
  std::cout << "  commutant dim         = " << comm.dim() << "\n";
  std::cout << "  supercommutant dim    = " << direct.dim() << " (direct), "
            << twisted.dim() << " (twisted)\n";
  std::cout << "  two routes agree      : " << (agree ? "yes" : "NO") << "\n";
  std::cout << "  double supercommutant : " << (dbl ? "yes" : "NO") << "\n";
  std::cout << "  klein identities      : " << (klein ? "yes" : "NO") << "\n";
  return (agree && dbl && klein) ? 0 : 1;
}

int run_verify(int level_max) {
  fk::VerifyOptions opt;
  opt.level_max = level_max;
  if (const char* env = std::getenv("FUSIONKIT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw fk::domain_error("FUSIONKIT_SEED must be an unsigned integer");
    opt.seed = v;
  }
  const std::vector<fk::CheckResult> results = fk::run_verification(opt);
  json failed = json::array();
  for (const fk::CheckResult& r : results) {
    std::printf("[%s] %-22s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL",
                r.id.c_str(), r.seconds, r.detail.c_str());
    if (!r.pass) failed.push_back(r.id);
  }
  if (!failed.empty()) {
    json j;
    j["failed"] = failed;
    std::cerr << j.dump() << "\n";
    std::cout << failed.size() << " of " << results.size()
              << " checks FAILED\n";
    return 1;
  }
  std::cout << "all " << results.size() << " checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fusion rings, quantum dimensions and subfactor indices of the "
      "Neveu-Schwarz discrete series"};
  app.require_subcommand(1);
  int exit_code = 0;

  // kac
  auto* kac = app.add_subcommand("kac", "Print the NS Kac table");
  int kac_m = -1, kac_level = -1;
  std::string kac_format = "table";
  auto* kac_m_opt = kac->add_option("--m", kac_m, "series label m (= level+2)");
  auto* kac_l_opt = kac->add_option("--level", kac_level, "coupling level");
  kac_m_opt->excludes(kac_l_opt);
  kac->add_option("--format", kac_format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  kac->callback([&] { exit_code = run_kac(kac_m, kac_level, kac_format); });

  // fuse
  auto* fuse = app.add_subcommand("fuse", "Fuse two NS classes");
  int fuse_level = 0;
  std::string fuse_a, fuse_b;
  fuse->add_option("--level", fuse_level, "coupling level")->required();
  fuse->add_option("--a", fuse_a, "first label, doubled spins \"2i,2i'\"")
      ->required();
  fuse->add_option("--b", fuse_b, "second label")->required();
  fuse->callback([&] { exit_code = run_fuse(fuse_level, fuse_a, fuse_b); });

  // qdim
  auto* qdim = app.add_subcommand("qdim", "Quantum dimensions of all classes");
  int qdim_level = 0;
  std::string qdim_mode = "both";
  qdim->add_option("--level", qdim_level, "coupling level")->required();
  qdim->add_option("--mode", qdim_mode, "computation route")
      ->check(CLI::IsMember({"closed", "pf", "both"}))
      ->capture_default_str();
  qdim->callback([&] { exit_code = run_qdim(qdim_level, qdim_mode); });

  // index
  auto* index = app.add_subcommand("index", "Subfactor index of one class");
  int index_level = 0;
  std::string index_label;
  index->add_option("--level", index_level, "coupling level")->required();
  index->add_option("--label", index_label, "class label \"2i,2i'\"")
      ->required();
  index->callback([&] { exit_code = run_index(index_level, index_label); });

  // fields
  auto* fields =
      app.add_subcommand("fields", "Constructible primary fields of a charge");
  int fields_level = 0;
  std::string fields_charge;
  fields->add_option("--level", fields_level, "coupling level")->required();
  fields->add_option("--charge", fields_charge, "field charge")
      ->check(CLI::IsMember({"alpha", "beta"}))
      ->required();
  fields->callback(
      [&] { exit_code = run_fields(fields_level, fields_charge); });

  // graph
  auto* graph = app.add_subcommand("graph", "Fusion graph of a charge class");
  int graph_level = 0;
  std::string graph_charge;
  bool graph_check = false;
  graph->add_option("--level", graph_level, "coupling level")->required();
  graph->add_option("--charge", graph_charge, "field charge")
      ->check(CLI::IsMember({"alpha", "beta"}))
      ->required();
  graph->add_flag("--check-connected", graph_check,
                  "exit 1 when the graph is disconnected");
  graph->callback(
      [&] { exit_code = run_graph(graph_level, graph_charge, graph_check); });

  // braid
  auto* braid =
      app.add_subcommand("braid", "Transport/duality of a Fuchsian system");
  std::string braid_file, braid_check;
  braid->add_option("--system", braid_file, "JSON system file")->required();
  braid->add_option("--check", braid_check, "what to compute")
      ->check(CLI::IsMember({"transport", "duality"}))
      ->required();
  braid->callback([&] { exit_code = run_braid(braid_file, braid_check); });

  // graded
  auto* graded =
      app.add_subcommand("graded", "Super-commutant lemmas on an example");
  std::string graded_name;
  graded->add_option("--example", graded_name,
                     "example name (see `graded --example help`)")
      ->required();
  graded->callback([&] {
    if (graded_name == "help" || graded_name == "list") {
      for (const std::string& n : fk::graded_example_names())
        std::cout << n << "\n";
      exit_code = 0;
    } else {
      exit_code = run_graded(graded_name);
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
  int verify_level_max = 8;
  verify->add_option("--level-max", verify_level_max, "sweep cap")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  verify->callback([&] { exit_code = run_verify(verify_level_max); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help/version → 0, any usage problem → 2
  } catch (const fk::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fk::numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
