// cgeo: complexity-geometry toolbox.
//
// Subcommands: compile, verify, bounds, geodesic, trotter-order.
// Exit codes: 0 success, 1 input error, 2 infeasible budget,
// 3 invariant violation.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cgeo/bounds.hpp"
#include "cgeo/compile.hpp"
#include "cgeo/linalg.hpp"
#include "cgeo/path.hpp"
#include "cgeo/rng.hpp"
#include "cgeo/serialize.hpp"

namespace {

using cgeo::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 3;

cgeo::PenaltySchedule load_schedule(const std::string& spec) {
  // Inline JSON is allowed in place of a file name.
  if (!spec.empty() && spec.front() == '{') {
    return cgeo::schedule_from_json(Json::parse(spec));
  }
  return cgeo::schedule_from_json(cgeo::read_json_file(spec));
}

void emit(const std::string& out_file, const std::string& content) {
  if (out_file.empty()) {
    std::cout << content << '\n';
  } else {
    cgeo::write_file_atomic(out_file, content + "\n");
  }
}

// One named inequality family checked over many trials.
struct CheckStats {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_slack = -1e300;  // max of (lhs - rhs); <= 0 means satisfied
  Json witness;

  void record(double lhs, double rhs, const Json& instance) {
    ++trials;
    const double slack = lhs - rhs;
    if (slack > worst_slack) {
      worst_slack = slack;
      witness = instance;
    }
    if (lhs > rhs) ++failures;
  }
};

int run_verify(int n, int trials, std::uint64_t seed, bool corrupt,
               const std::string& out_file) {
  cgeo::Rng rng(seed);
  std::vector<CheckStats> checks;
  const double dim_root = std::pow(2.0, 0.5 * n);

  CheckStats sandwich_lo{"fbar_le_killing"};
  CheckStats sandwich_hi{"killing_le_half_pi_fbar"};
  CheckStats norm_order_lo{"fbar_le_op"};
  CheckStats norm_order_hi{"op_le_root_dim_fbar"};
  CheckStats ham_bound{"op_le_abs_coeff_sum_le_root_count_fbar"};
  CheckStats bi_invariance{"distance_bi_invariance"};
  CheckStats composition{"product_error_subadditive"};
  CheckStats small_angle{"killing_equals_t_fbar_small_t"};
  CheckStats pauli_product{"pauli_product_matches_dense"};
  CheckStats synthesis{"monomial_synthesis_exact"};
  CheckStats state_vs_op{"state_error_le_op_distance"};
  CheckStats arc_chord{"u1_chord_is_2_sin_half_t"};

  // Negative control: shrink one inequality's right side so it must fail.
  const double corrupt_scale = corrupt ? 1e-6 : 1.0;

  for (int t = 0; t < trials; ++t) {
    const cgeo::DenseMatrix u1 = cgeo::random_unitary(rng, n);
    const cgeo::DenseMatrix u2 = cgeo::random_unitary(rng, n);
    const Json inst{{"trial", t}, {"seed", seed}, {"n_qubits", n}};

    const double fbar = cgeo::fbar_distance(u1, u2);
    const double killing = cgeo::killing_distance(u1, u2);
    const double op = cgeo::op_distance(u1, u2);
    sandwich_lo.record(fbar, killing + 1e-9, inst);
    sandwich_hi.record(killing, corrupt_scale * (M_PI_2 * fbar + 1e-9), inst);
    norm_order_lo.record(fbar, op + 1e-9, inst);
    norm_order_hi.record(op, dim_root * fbar + 1e-9, inst);

    const cgeo::Hamiltonian h = cgeo::random_unit_hamiltonian(rng, n);
    const cgeo::DenseMatrix hd = cgeo::dense(h);
    double abs_sum = 0.0;
    for (const auto& [p, c] : h.terms) abs_sum += std::abs(c);
    const double count_root = std::sqrt(static_cast<double>(h.terms.size()));
    ham_bound.record(cgeo::norm_op(hd), abs_sum + 1e-9, inst);
    ham_bound.record(abs_sum, count_root * h.norm_fbar() + 1e-9, inst);

    const cgeo::DenseMatrix ul = cgeo::random_unitary(rng, n);
    const cgeo::DenseMatrix ur = cgeo::random_unitary(rng, n);
    bi_invariance.record(
        std::abs(cgeo::killing_distance(ul * u1 * ur, ul * u2 * ur) - killing),
        1e-8, inst);
    bi_invariance.record(
        std::abs(cgeo::fbar_distance(ul * u1 * ur, ul * u2 * ur) - fbar), 1e-8,
        inst);
    bi_invariance.record(
        std::abs(cgeo::op_distance(ul * u1 * ur, ul * u2 * ur) - op), 1e-8,
        inst);

    composition.record(cgeo::op_distance(u1 * ul, u2 * ur),
                       op + cgeo::op_distance(ul, ur) + 1e-9, inst);
    composition.record(cgeo::fbar_distance(u1 * ul, u2 * ur),
                       fbar + cgeo::fbar_distance(ul, ur) + 1e-9, inst);

    const double tiny = rng.next_uniform(0.01, 0.5);
    const cgeo::DenseMatrix id =
        cgeo::DenseMatrix::Identity(hd.rows(), hd.cols());
    small_angle.record(
        std::abs(cgeo::killing_distance(id, cgeo::expm_hermitian(hd, tiny)) -
                 tiny * h.norm_fbar()),
        1e-8, inst);

    // Pauli algebra against dense arithmetic, exact.
    const auto paulis = cgeo::enumerate_paulis(n);
    const auto pick = [&] {
      return paulis[rng.next_u64() % paulis.size()];
    };
    const cgeo::PauliString a = pick();
    const cgeo::PauliString b = pick();
    const cgeo::PhasedPauli ab = cgeo::multiply(a, b);
    pauli_product.record((cgeo::dense(a) * cgeo::dense(b) -
                          ab.phase() * cgeo::dense(ab.pauli))
                             .cwiseAbs()
                             .maxCoeff(),
                         1e-12,
                         Json{{"a", a.str()}, {"b", b.str()}, {"trial", t}});

    if (n >= 2) {
      cgeo::PauliString m = pick();
      if (m.is_identity()) m = m.with_letter(0, 1);
      const double angle = rng.next_uniform(-M_PI, M_PI);
      const cgeo::Circuit circ = cgeo::synthesize_monomial(m, angle);
      synthesis.record(
          cgeo::op_distance(cgeo::circuit_to_dense(circ),
                            cgeo::expm_hermitian(cgeo::dense(m), angle)),
          1e-9, Json{{"pauli", m.str()}, {"angle", angle}, {"trial", t}});
    }

    const cgeo::StateVector psi = cgeo::random_state(rng, n);
    state_vs_op.record(cgeo::state_error(u1, u2, psi), op + 1e-9, inst);
  }

  for (int i = 0; i < 100; ++i) {
    const double t = M_PI * (i + 1) / 100.0;
    cgeo::DenseMatrix one = cgeo::DenseMatrix::Identity(2, 2);
    const cgeo::DenseMatrix rot =
        std::polar(1.0, t) * cgeo::DenseMatrix::Identity(2, 2);
    arc_chord.record(std::abs(cgeo::fbar_distance(one, rot) -
                              2.0 * std::sin(0.5 * t)),
                     1e-12, Json{{"t", t}});
  }

  checks = {sandwich_lo, sandwich_hi, norm_order_lo, norm_order_hi,
            ham_bound,   bi_invariance, composition, small_angle,
            pauli_product, synthesis,   state_vs_op, arc_chord};

  Json report = Json::array();
  bool all_ok = true;
  for (const CheckStats& c : checks) {
    const bool ok = c.failures == 0;
    all_ok = all_ok && ok;
    Json row{{"check", c.name},
             {"trials", c.trials},
             {"failures", c.failures},
             {"worst_slack", c.worst_slack},
             {"pass", ok}};
    if (!ok) row["witness"] = c.witness;
    report.push_back(row);
  }
  emit(out_file, Json{{"n_qubits", n},
                      {"trials", trials},
                      {"seed", seed},
                      {"checks", report},
                      {"pass", all_ok}}
                     .dump(2));
  return all_ok ? kExitOk : kExitViolation;
}

int run_compile(const std::string& path_file, const std::string& schedule_spec,
                double error, const std::string& error_kind, bool naive,
                const std::string& out_file, const std::string& report_file) {
  const cgeo::Path path = cgeo::normalize(
      cgeo::path_from_json(cgeo::read_json_file(path_file)));
  const cgeo::PenaltySchedule schedule = load_schedule(schedule_spec);
  cgeo::CompileBudget budget;
  budget.target_error = error;
  budget.error_norm = error_kind == "op" ? cgeo::ErrorNorm::kOp
                                         : cgeo::ErrorNorm::kKilling;
  budget.greedy_order = !naive;
  const auto [circuit, report] = cgeo::compile(path, schedule, budget);
  emit(out_file, cgeo::to_json(circuit).dump(2));
  emit(report_file, cgeo::to_json(report).dump(2));
  return kExitOk;
}

int run_bounds(const std::vector<std::string>& schedule_specs, double length,
               double error, const std::string& error_kind,
               const std::string& format, const std::string& out_file) {
  std::string csv = cgeo::bounds_csv_header();
  Json rows = Json::array();
  for (const std::string& spec : schedule_specs) {
    cgeo::BoundQuery q{load_schedule(spec), length, error};
    const cgeo::GateBound b = error_kind == "op" ? cgeo::gate_bound_op(q)
                                                 : cgeo::gate_bound_killing(q);
    const std::string name = cgeo::to_json(q.schedule)["kind"].get<std::string>();
    csv += "\n" + cgeo::bounds_csv_row(name, q, error_kind, b);
    rows.push_back(cgeo::bounds_json_row(name, q, error_kind, b));
  }
  emit(out_file, format == "csv" ? csv : rows.dump(2));
  return kExitOk;
}

int run_geodesic(const std::string& path_file, const std::string& schedule_spec,
                 int n, std::uint64_t seed, double total_time, double dt,
                 const std::string& out_file, const std::string& report_file) {
  const cgeo::PenaltySchedule schedule = load_schedule(schedule_spec);
  cgeo::Hamiltonian h0(schedule.n_qubits());
  if (!path_file.empty()) {
    const cgeo::Path p = cgeo::normalize(
        cgeo::path_from_json(cgeo::read_json_file(path_file)));
    if (p.segments.empty()) {
      throw std::invalid_argument("path has no segments");
    }
    h0 = p.segments.front().h;
  } else {
    cgeo::Rng rng(seed);
    h0 = cgeo::random_unit_hamiltonian(rng, n > 0 ? n : schedule.n_qubits());
  }
  cgeo::GeodesicStats stats;
  const cgeo::Path geo =
      cgeo::integrate_geodesic(h0, schedule, total_time, dt, &stats);
  emit(out_file, cgeo::to_json(geo).dump(2));
  emit(report_file, cgeo::to_json(stats).dump(2));
  return kExitOk;
}

int run_trotter_order(int n, int trials, int term_count, std::uint64_t seed,
                      double delta, const std::string& format,
                      const std::string& out_file) {
  cgeo::Rng rng(seed);
  const auto paulis = cgeo::enumerate_paulis(n);
  Json rows = Json::array();
  std::string csv =
      "trial,greedy_leading_sq,naive_leading_sq,pair_bound,"
      "greedy_measured,naive_measured";
  for (int t = 0; t < trials; ++t) {
    cgeo::Hamiltonian h(n);
    while (static_cast<int>(h.terms.size()) < term_count) {
      const cgeo::PauliString p = paulis[rng.next_u64() % paulis.size()];
      if (p.is_identity() || h.terms.count(p)) continue;
      h.add(p, rng.next_normal());
    }
    h *= 1.0 / h.norm_fbar();

    const cgeo::OrderedTerms greedy = cgeo::trotter_order_greedy(h);
    const cgeo::OrderedTerms naive = cgeo::trotter_order_naive(h);
    const double pair_bound = cgeo::pairwise_sq_bound(h);

    const auto measure = [&](const cgeo::OrderedTerms& order) {
      cgeo::DenseMatrix u =
          cgeo::DenseMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
      for (const auto& [p, c] : order.terms) {
        u = (cgeo::expm_hermitian(cgeo::dense(p) * c, delta) * u).eval();
      }
      return cgeo::fbar_distance(u,
                                 cgeo::expm_hermitian(cgeo::dense(h), delta));
    };
    const double greedy_measured = measure(greedy);
    const double naive_measured = measure(naive);

    rows.push_back(Json{{"trial", t},
                        {"greedy_leading_sq", greedy.leading_error_fbar_sq},
                        {"naive_leading_sq", naive.leading_error_fbar_sq},
                        {"pair_bound", pair_bound},
                        {"greedy_measured", greedy_measured},
                        {"naive_measured", naive_measured}});
    csv += "\n" + std::to_string(t) + "," +
           std::to_string(greedy.leading_error_fbar_sq) + "," +
           std::to_string(naive.leading_error_fbar_sq) + "," +
           std::to_string(pair_bound) + "," + std::to_string(greedy_measured) +
           "," + std::to_string(naive_measured);
  }
  emit(out_file, format == "csv" ? csv : rows.dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complexity-geometry distances, geodesics and circuit lowering"};
  app.require_subcommand(1);

  std::string path_file, schedule_spec, out_file, report_file;
  std::string error_kind = "killing", format = "json";
  std::vector<std::string> schedule_specs;
  double error = 0.1, delta = 1e-3, length = 1.0, total_time = 1.0;
  int n = 3, trials = 200, term_count = 50;
  std::uint64_t seed = 1;
  bool naive = false, corrupt = false;

  CLI::App* c_compile = app.add_subcommand("compile", "lower a path to gates");
  c_compile->add_option("--path", path_file, "path JSON file")->required();
  c_compile->add_option("--schedule", schedule_spec,
                        "schedule JSON file or inline JSON")->required();
  c_compile->add_option("--error", error, "target error")->required();
  c_compile->add_option("--error-kind", error_kind, "killing|op")
      ->check(CLI::IsMember({"killing", "op"}));
  c_compile->add_flag("--naive-order", naive, "disable greedy Trotter order");
  c_compile->add_option("--out", out_file, "circuit JSON output");
  c_compile->add_option("--report", report_file, "report JSON output");

  CLI::App* c_verify = app.add_subcommand("verify", "run invariant suites");
  c_verify->add_option("--n", n, "qubit count");
  c_verify->add_option("--trials", trials, "trials per suite");
  c_verify->add_option("--seed", seed, "PRNG seed");
  c_verify->add_option("--out", out_file, "report JSON output");
  c_verify->add_flag("--corrupt", corrupt, "negative control: bias one check")
      ->group("");  // hidden

  CLI::App* c_bounds = app.add_subcommand("bounds", "evaluate gate bounds");
  c_bounds->add_option("--schedule", schedule_specs,
                       "schedule JSON files or inline JSON (repeatable)")
      ->required();
  c_bounds->add_option("--length", length, "complexity length L");
  c_bounds->add_option("--error", error, "target error");
  c_bounds->add_option("--error-kind", error_kind, "killing|op")
      ->check(CLI::IsMember({"killing", "op"}));
  c_bounds->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_bounds->add_option("--out", out_file, "output file");

  CLI::App* c_geo = app.add_subcommand("geodesic", "integrate a geodesic");
  c_geo->add_option("--schedule", schedule_spec,
                    "schedule JSON file or inline JSON")->required();
  c_geo->add_option("--path", path_file,
                    "seed path; first segment is the initial Hamiltonian");
  c_geo->add_option("--n", n, "qubit count for a random start");
  c_geo->add_option("--seed", seed, "PRNG seed for a random start");
  c_geo->add_option("--time", total_time, "integration time");
  c_geo->add_option("--delta", delta, "integrator step");
  c_geo->add_option("--out", out_file, "path JSON output");
  c_geo->add_option("--report", report_file, "drift statistics output");

  CLI::App* c_trotter =
      app.add_subcommand("trotter-order", "greedy vs naive ordering trials");
  c_trotter->add_option("--n", n, "qubit count");
  c_trotter->add_option("--trials", trials, "trial count");
  c_trotter->add_option("--terms", term_count, "terms per Hamiltonian");
  c_trotter->add_option("--seed", seed, "PRNG seed");
  c_trotter->add_option("--delta", delta, "Trotter step duration");
  c_trotter->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_trotter->add_option("--out", out_file, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_compile->parsed()) {
      return run_compile(path_file, schedule_spec, error, error_kind, naive,
                         out_file, report_file);
    }
    if (c_verify->parsed()) {
      return run_verify(n, trials, seed, corrupt, out_file);
    }
    if (c_bounds->parsed()) {
      return run_bounds(schedule_specs, length, error, error_kind, format,
                        out_file);
    }
    if (c_geo->parsed()) {
      return run_geodesic(path_file, schedule_spec, n, seed, total_time, delta,
                          out_file, report_file);
    }
    if (c_trotter->parsed()) {
      return run_trotter_order(n, trials, term_count, seed, delta, format,
                               out_file);
    }
  } catch (const cgeo::InfeasibleBudget& e) {
    std::cerr << "infeasible budget: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
