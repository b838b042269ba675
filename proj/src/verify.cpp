#include "fusionkit/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "fusionkit/density.hpp"
#include "fusionkit/fields.hpp"
#include "fusionkit/fuchsian.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/graded.hpp"
#include "fusionkit/kac.hpp"
#include "fusionkit/qdim.hpp"

namespace fusionkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

}  // namespace

CheckResult check_kac_symmetry(int m_max) {
  const auto t0 = Clock::now();
  long checked = 0;
  bool pass = true;
  std::string why;
  for (int m = 3; m <= m_max && pass; ++m)
    for (int p = 1; p <= m - 1 && pass; ++p)
      for (int q = 1; q <= m + 1; ++q) {
        if (h_kac({p, q, m}) != h_kac({m - p, m + 2 - q, m})) {
          pass = false;
          why = " FIRST FAILURE at (p=" + std::to_string(p) +
                ", q=" + std::to_string(q) + ", m=" + std::to_string(m) + ")";
          break;
        }
        ++checked;
      }
  return {"kac-symmetry",
          "h(p,q) = h(m-p, m+2-q) exactly at " + std::to_string(checked) +
              " grid positions, 3 <= m <= " + std::to_string(m_max) + why,
          pass, seconds_since(t0)};
}

CheckResult check_weight_relation(int ell_max) {
  const auto t0 = Clock::now();
  long checked = 0;
  bool pass = true;
  std::string why;
  for (int ell = 0; ell <= ell_max && pass; ++ell) {
    const Level lvl{ell};
    for (int t = 0; t <= ell && pass; ++t)
      for (int tp = t % 2; tp <= ell + 2; tp += 2) {
        const NSLabel x{Spin{t}, Spin{tp}};
        if (!weight_relation_check(x, lvl)) {
          pass = false;
          why = " FIRST FAILURE at " + to_string(x) +
                ", level " + std::to_string(ell);
          break;
        }
        ++checked;
      }
  }
  return {"weight-relation",
          "coset relation exact on " + std::to_string(checked) +
              " labels, levels 0.." + std::to_string(ell_max) + why,
          pass, seconds_since(t0)};
}

CheckResult check_ring_consistency(int ell_max) {
  const auto t0 = Clock::now();
  // Class counts frozen from the fixed-point-free involution count
  // (#labels / 2), levels 0..8.
  static constexpr int kExpectedSize[] = {1, 2, 4, 6, 9, 12, 16, 20, 25};
  bool pass = true;
  std::string why;
  int levels_done = 0;
  for (int ell = 0; ell <= ell_max; ++ell) {
    const Level lvl{ell};
    const NsRing direct = build_ns_ring(lvl);
    const NsRing quot = quotient_ring(
        tensor_ring(build_su2_ring(lvl), build_su2_ring(Level{ell + 2})), lvl);
    const char* bad = nullptr;
    if (direct.basis != quot.basis || direct.N != quot.N)
      bad = "direct and tensor-quotient constructions disagree";
    else if (ell < 9 && direct.size() != kExpectedSize[ell])
      bad = "class count differs from frozen involution count";
    else if (direct.basis != enumerate_ns_basis(lvl))
      bad = "ring basis differs from enumerated canonical classes";
    else if (!verify_ring_axioms(direct))
      bad = "ring axioms (unit/commutative/associative/Frobenius) failed";
    else if (!verify_lift_independence(lvl))
      bad = "structure constants depend on the lift choice";
    if (bad) {
      pass = false;
      why = std::string(" FIRST FAILURE: ") + bad + " at level " +
            std::to_string(ell);
      break;
    }
    ++levels_done;
  }
  return {"ring-consistency",
          "two constructions + axioms + lift independence at levels 0.." +
              std::to_string(levels_done - 1) + why,
          pass, seconds_since(t0)};
}

CheckResult check_quantum_dims(int ell_max) {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string why;
  double worst = 0;
  long checked = 0;
  for (int ell = 1; ell <= ell_max && pass; ++ell) {
    const Level lvl{ell};
    const NsRing ring = build_ns_ring(lvl);
    const NSLabel gen_class = canonicalize(charge_label(Charge::Alpha, lvl), lvl);
    const int gen = ring.index_of(gen_class);
    const PfResult pf = pf_dims(ring, gen);
    for (int k = 0; k < ring.size(); ++k) {
      const double dev = std::abs(pf.dims(k) - qdim_ns(ring.basis[k], lvl));
      worst = std::max(worst, dev);
      ++checked;
      if (dev > 1e-8) {
        pass = false;
        why = " FIRST FAILURE at " + to_string(ring.basis[k]) + ", level " +
              std::to_string(ell);
        break;
      }
    }
    const double edev = std::abs(pf.eigenvalue - qdim_ns(gen_class, lvl));
    worst = std::max(worst, edev);
    if (pass && edev > 1e-8) {
      pass = false;
      why = " FIRST FAILURE: spectral radius vs generator qdim, level " +
            std::to_string(ell);
    }
  }
  // Golden-ratio pin: the index of the nontrivial level-1 class is
  // φ² = (3 + √5)/2.
  const double golden_sq = (3.0 + std::sqrt(5.0)) / 2.0;
  const double pin =
      std::abs(subfactor_index(NSLabel{Spin{0}, Spin{2}}, Level{1}) - golden_sq);
  worst = std::max(worst, pin);
  if (pass && pin > 1e-12) {
    pass = false;
    why = " FIRST FAILURE: golden-ratio index pin off by " + fmt(pin);
  }
  return {"quantum-dims",
          "closed form vs Perron-Frobenius on " + std::to_string(checked) +
              " classes (levels 1.." + std::to_string(ell_max) +
              "), golden pin; worst dev " + fmt(worst) + why,
          pass, seconds_since(t0)};
}

CheckResult check_beta_saturation(int ell_max) {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string why;
  for (int ell = 0; ell <= ell_max; ++ell)
    if (!beta_saturation_check(Level{ell}, 1e-8)) {
      pass = false;
      why = " FIRST FAILURE at level " + std::to_string(ell);
      break;
    }
  return {"beta-saturation",
          "dimension sum saturates (tol 1e-8) at levels 0.." +
              std::to_string(ell_max) + why,
          pass, seconds_since(t0)};
}

CheckResult check_field_duality(int ell_dual_max, int ell_conn_max) {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string why;
  long checked = 0;
  SigmaDeltaReport survey_total;

  for (int ell = 0; ell <= ell_dual_max && pass; ++ell) {
    const Level lvl{ell};
    const NsRing ring = build_ns_ring(lvl);
    for (Charge c : {Charge::Alpha, Charge::Beta}) {
      if (c == Charge::Alpha && ell == 0) continue;
      const int cls = ring.index_of(canonicalize(charge_label(c, lvl), lvl));
      for (int x = 0; x < ring.size() && pass; ++x) {
        std::set<NSLabel> support;
        for (int k = 0; k < ring.size(); ++k)
          if (ring.coeff(cls, x, k) >= 1) support.insert(ring.basis[k]);
        if (support != adjacency_set(ring.basis[x], c, lvl)) {
          pass = false;
          why = " FIRST FAILURE: field adjacency vs fusion support for " +
                to_string(c) + " at " + to_string(ring.basis[x]) + ", level " +
                std::to_string(ell);
        }
        ++checked;
      }
      const SigmaDeltaReport r = sigma_delta_survey(c, lvl);
      survey_total.agree += r.agree;
      survey_total.disagree += r.disagree;
      survey_total.indeterminate += r.indeterminate;
    }
  }

  // Connectivity: the α graph is connected at every level; the β graph is
  // connected only at levels 0 and 1 (β preserves the level-ℓ spin, and the
  // identification mixes the spin components only there).
  for (int ell = 1; ell <= ell_conn_max && pass; ++ell) {
    const Level lvl{ell};
    const NsRing ring = build_ns_ring(lvl);
    const int a = ring.index_of(canonicalize(charge_label(Charge::Alpha, lvl), lvl));
    const int b = ring.index_of(canonicalize(charge_label(Charge::Beta, lvl), lvl));
    if (!weak_generator_check(ring, a)) {
      pass = false;
      why = " FIRST FAILURE: alpha graph disconnected at level " +
            std::to_string(ell);
      break;
    }
    if (weak_generator_check(ring, b) != (ell <= 1)) {
      pass = false;
      why = " FIRST FAILURE: beta graph connectivity at level " +
            std::to_string(ell);
      break;
    }
  }

  std::ostringstream d;
  d << "adjacency = fusion support on " << checked
    << " (class, charge) pairs; connectivity pattern matches; sigma-vs-delta "
       "advisory: "
    << survey_total.agree << " agree / " << survey_total.disagree
    << " disagree / " << survey_total.indeterminate << " indeterminate" << why;
  return {"field-duality", d.str(), pass, seconds_since(t0)};
}

CheckResult check_density_modules() {
  const auto t0 = Clock::now();
  // 9-point (λ, μ) grid spanning the degenerate weights h = 1 − λ ∈ {1, ½, 0},
  // each point in both σ sectors, plus one generic non-grid pair.
  struct Params {
    int sigma;
    Rational lambda, mu;
  };
  std::vector<Params> params;
  const Rational lambdas[] = {rational(0), rational(1, 2), rational(1)};
  const Rational mus[] = {rational(-1, 3), rational(1, 7), rational(3, 4)};
  for (const Rational& lam : lambdas)
    for (const Rational& mu : mus)
      for (int sigma : {0, 1}) params.push_back({sigma, lam, mu});
  params.push_back({0, rational(-2, 5), rational(5, 2)});
  const int ll_pairs[][2] = {{1, -1}, {2, -2}, {2, 1}, {3, -1}, {0, 2}};
  const int lg_pairs[][2] = {{1, 1}, {2, -1}, {-1, 3}, {0, 1}, {1, -3}};
  const int gg_pairs[][2] = {{1, -1}, {1, 1}, {3, -1}, {-3, 1}, {3, 3}};

  bool pass = true;
  std::string why;
  long checked = 0;
  for (const Params& p : params) {
    const DensityModule mod = build_module(p.sigma, p.lambda, p.mu);
    for (auto [m, n] : ll_pairs)
      if (++checked; pass && !check_ll(mod, m, n)) {
        pass = false;
        why = " FIRST FAILURE: [L,L] at sigma=" + std::to_string(p.sigma);
      }
    for (auto [n, ts] : lg_pairs)
      if (++checked; pass && !check_lg(mod, n, ts)) {
        pass = false;
        why = " FIRST FAILURE: [L,G] at sigma=" + std::to_string(p.sigma);
      }
    for (auto [tr, ts] : gg_pairs)
      if (++checked; pass && !check_gg(mod, tr, ts)) {
        pass = false;
        why = " FIRST FAILURE: {G,G} at sigma=" + std::to_string(p.sigma);
      }
    const Rational h = 1 - p.lambda;
    for (int n = -2; n <= 2; ++n)
      if (++checked; pass && !covariance_consistency(mod, n, h)) {
        pass = false;
        why = " FIRST FAILURE: covariance with h = 1 - lambda, n=" +
              std::to_string(n);
      }
    if (++checked; pass && covariance_consistency(mod, 1, h + rational(1, 7))) {
      pass = false;
      why = " FIRST FAILURE: covariance accepted a wrong weight";
    }
    if (!pass) break;
  }
  return {"density-modules",
          "NS bracket relations + primary covariance exact on " +
              std::to_string(checked) + " cases over " +
              std::to_string(params.size()) + " windowed modules" + why,
          pass, seconds_since(t0)};
}

CheckResult check_fuchsian(std::uint64_t seed, int n_systems, int n_scalar) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  bool pass = true;
  std::string why;
  double worst_scalar = 0, worst_mono = 0;

  for (int k = 0; k < n_scalar && pass; ++k) {
    const FuchsianSystem sys = random_system(1, rng);
    const Transport t = transport_matrix(sys);
    const Complex b = sys.Q(0, 0);
    const Complex expected = std::exp(Complex(0, -std::numbers::pi) * b);
    const double dev = std::abs(t.c(0, 0) - expected);
    worst_scalar = std::max(worst_scalar, dev);
    if (dev > 1e-9) {
      pass = false;
      why = " FIRST FAILURE: scalar transport vs exp(-i pi b), dev " + fmt(dev);
    }
  }

  for (int k = 0; k < n_systems && pass; ++k) {
    const int n = 2 + (k % 2);
    const FuchsianSystem sys = random_system(n, rng);
    const DualityReport rep = contragredient_check(sys);
    if (!rep.ok) {
      pass = false;
      why = " FIRST FAILURE: duality (pairing " + fmt(rep.pairing_deviation) +
            ", inverse " + fmt(rep.inverse_deviation) + ") on system " +
            std::to_string(k);
      break;
    }
    const double mono = monodromy_deviation(sys);
    worst_mono = std::max(worst_mono, mono);
    if (mono > 1e-6) {
      pass = false;
      why = " FIRST FAILURE: monodromy deviation " + fmt(mono) + " on system " +
            std::to_string(k);
    }
  }

  std::ostringstream d;
  d << n_scalar << " scalar closed forms (worst " << fmt(worst_scalar) << "), "
    << n_systems << " random systems: duality + monodromy (worst "
    << fmt(worst_mono) << ")" << why;
  return {"fuchsian-transport", d.str(), pass, seconds_since(t0)};
}

CheckResult check_graded() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string why;
  long checked = 0;

  for (const std::string& name : graded_example_names()) {
    const GradedExample ex = graded_example(name);
    const MatrixSpan alg = algebra_closure(ex.space, ex.generators);
    const char* bad = nullptr;
    if (!supercommutant_two_ways_agree(ex.space, alg))
      bad = "direct and Klein-twisted super-commutants disagree";
    else if (!double_supercommutant_check(ex.space, ex.generators))
      bad = "double super-commutant is not the original algebra";
    else if (!klein_identities_check(ex.space))
      bad = "Klein operator identities failed";
    checked += 3;
    if (bad) {
      pass = false;
      why = std::string(" FIRST FAILURE: ") + bad + " for example " + name;
      break;
    }
  }

  if (pass) {
    // Frozen oracle: for the Pauli example (u = sigma_z, algebra generated by
    // sigma_x) the super-commutant is span{I, sigma_y}, while the ordinary
    // commutant is span{I, sigma_x} — the grading must make a difference.
    const GradedExample ex = graded_example("pauli");
    const MatrixSpan alg = algebra_closure(ex.space, ex.generators);
    const MatrixSpan super = supercommutant_direct(ex.space, alg);
    Eigen::MatrixXcd sy(2, 2);
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    MatrixSpan expected;
    expected.basis.push_back(inv_sqrt2 * Eigen::MatrixXcd::Identity(2, 2));
    expected.basis.push_back(inv_sqrt2 * sy);
    checked += 2;
    if (!spans_equal(super, expected)) {
      pass = false;
      why = " FIRST FAILURE: Pauli super-commutant is not span{I, sigma_y}";
    } else if (spans_equal(commutant(ex.space, alg), super, 1e-8)) {
      pass = false;
      why = " FIRST FAILURE: super-commutant collapsed to the ordinary one";
    }
  }

  if (pass) {
    // Canonical anticommutation relations on the Fock space.
    for (int n = 2; n <= 3 && pass; ++n) {
      std::vector<Eigen::MatrixXcd> c;
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd f = Eigen::VectorXcd::Zero(n);
        f(k) = 1.0;
        c.push_back(clifford_generator(n, f));
      }
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
      for (int j = 0; j < n && pass; ++j)
        for (int k = 0; k < n; ++k) {
          const double dev = (c[j] * c[k] + c[k] * c[j] -
                              (j == k ? 2.0 : 0.0) * id)
                                 .cwiseAbs()
                                 .maxCoeff();
          ++checked;
          if (dev > 1e-12) {
            pass = false;
            why = " FIRST FAILURE: CAR {c_j, c_k} = 2 delta_jk on " +
                  std::to_string(n) + " modes";
            break;
          }
        }
    }
  }

  return {"graded-supercommutant",
          std::to_string(checked) + " checks over examples {" +
              [] {
                std::string s;
                for (const std::string& n : graded_example_names())
                  s += (s.empty() ? "" : ", ") + n;
                return s;
              }() +
              "} + Pauli oracle + CAR" + why,
          pass, seconds_since(t0)};
}

CheckResult check_mutations(std::uint64_t seed) {
  const auto t0 = Clock::now();
  int caught = 0, total = 0;
  std::string why;

  // 1. Ring axiom canary: bumping N_{εε}^1 at level 1 must break Frobenius
  //    self-duality.
  {
    ++total;
    NsRing bad = build_ns_ring(Level{1});
    bad.N[{1, 1, 0}] += 1;
    if (!verify_ring_axioms(bad))
      ++caught;
    else
      why += " [ring-axioms missed]";
  }

  // 2. Ring cross-check canary: bumping N_{εε}^ε at level 1 passes all
  //    axioms (it is the based ring Z[x]/(x² = 1 + 2x)) but must disagree
  //    with the independent tensor-quotient construction.
  {
    ++total;
    NsRing bad = build_ns_ring(Level{1});
    bad.N[{1, 1, 1}] += 1;
    if (!verify_ring_axioms(bad)) {
      why += " [ring-crosscheck canary unexpectedly failed axioms]";
    } else {
      const NsRing quot = quotient_ring(
          tensor_ring(build_su2_ring(Level{1}), build_su2_ring(Level{3})),
          Level{1});
      if (bad.N != quot.N)
        ++caught;
      else
        why += " [ring-crosscheck missed]";
    }
  }

  // 3. Transport canary: scaling one entry of the transport matrix must
  //    break the contragredient inverse-transpose relation.
  {
    ++total;
    std::mt19937_64 rng(seed);
    const FuchsianSystem sys = random_system(2, rng);
    const DualityReport rep = contragredient_check(sys);
    Eigen::MatrixXcd c_bad = rep.primal.c;
    c_bad(0, 0) *= 1.01;
    const double dev =
        (rep.dual.c - c_bad.inverse().transpose()).cwiseAbs().maxCoeff();
    if (rep.ok && dev > 1e-6)
      ++caught;
    else
      why += " [transport missed]";
  }

  // 4. Density bracket canary: doubling one matrix entry of L_1 must break
  //    [L_1, L_{-1}] = 2 L_0 on the interior window.
  {
    ++total;
    const DensityModule mod = build_module(0, rational(1, 3), rational(1, 7));
    const RatSparse l_plus = build_mode(mod, ModeKind::L, 2);
    const RatSparse l_minus = build_mode(mod, ModeKind::L, -2);
    RatSparse bad = l_plus;
    bad.coeffRef(mod.v_pos(2), mod.v_pos(0)) =
        bad.coeff(mod.v_pos(2), mod.v_pos(0)) * 2;
    if (ll_relation_holds(mod, l_plus, l_minus, 1, -1) &&
        !ll_relation_holds(mod, bad, l_minus, 1, -1))
      ++caught;
    else
      why += " [density missed]";
  }

  // 5. Covariance canary: a wrong primary weight must be rejected.
  {
    ++total;
    const DensityModule mod = build_module(0, rational(1, 3), rational(1, 7));
    const Rational h = 1 - rational(1, 3);
    if (covariance_consistency(mod, 1, h) &&
        !covariance_consistency(mod, 1, h + rational(1, 7)))
      ++caught;
    else
      why += " [covariance missed]";
  }

  // 6. Graded oracle canary: the Pauli super-commutant must not match the
  //    deliberately wrong span {I, sigma_x}.
  {
    ++total;
    const GradedExample ex = graded_example("pauli");
    const MatrixSpan super =
        supercommutant_direct(ex.space, algebra_closure(ex.space, ex.generators));
    Eigen::MatrixXcd sx(2, 2);
    sx << 0, 1, 1, 0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    MatrixSpan wrong;
    wrong.basis.push_back(inv_sqrt2 * Eigen::MatrixXcd::Identity(2, 2));
    wrong.basis.push_back(inv_sqrt2 * sx);
    if (!spans_equal(super, wrong))
      ++caught;
    else
      why += " [graded missed]";
  }

  return {"mutation-sensitivity",
          std::to_string(caught) + "/" + std::to_string(total) +
              " deliberate corruptions detected" + why,
          caught == total, seconds_since(t0)};
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(check_kac_symmetry(20));
  out.push_back(check_weight_relation(10));
  out.push_back(check_ring_consistency(std::min(opt.level_max, 6)));
  out.push_back(check_quantum_dims(opt.level_max));
  out.push_back(check_beta_saturation(opt.level_max));
  out.push_back(check_field_duality(std::min(opt.level_max, 6), opt.level_max));
  out.push_back(check_density_modules());
  out.push_back(check_fuchsian(opt.seed, opt.fuchsian_systems,
                               opt.scalar_systems));
  out.push_back(check_graded());
  out.push_back(check_mutations(opt.seed));
  return out;
}

}  // namespace fusionkit
