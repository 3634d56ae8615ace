// Command-line driver: exact constant-kernel profiles, kernel and inverse
// verification, the perturbed fixed-point solve, diagnostics and epsilon
// sweeps. All numeric output is written with 17 significant digits so that
// identical configurations produce byte-identical files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "coag/diagnostics.hpp"
#include "coag/linop.hpp"
#include "coag/norms.hpp"
#include "coag/operators.hpp"
#include "coag/solver.hpp"
#include "coag/special.hpp"

using nlohmann::json;
using namespace coag;

namespace {

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");
  return j;
}

SolverConfig solver_config_from(const json& j, int grid_nodes_override) {
  SolverConfig cfg;
  cfg.rho = j.value("rho", cfg.rho);
  cfg.alpha = j.value("alpha", cfg.alpha);
  cfg.epsilon = j.value("epsilon", cfg.epsilon);
  cfg.theta = j.value("theta", cfg.theta);
  cfg.mu = j.value("mu", cfg.mu);
  cfg.damping = j.value("damping", cfg.damping);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.max_iter = j.value("max_iter", cfg.max_iter);
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    cfg.q_min = g.value("q_min", cfg.q_min);
    cfg.q_max = g.value("q_max", cfg.q_max);
    cfg.q_nodes = g.value("nodes", cfg.q_nodes);
  }
  if (j.contains("kernel_grid")) {
    const json& g = j.at("kernel_grid");
    cfg.k_min = g.value("x_min", cfg.k_min);
    cfg.k_max = g.value("x_max", cfg.k_max);
    cfg.k_nodes = g.value("nodes", cfg.k_nodes);
  }
  if (grid_nodes_override > 0) cfg.q_nodes = grid_nodes_override;
  cfg.validate();
  return cfg;
}

void write_text(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << body;
}

void write_json(const std::filesystem::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

std::string profile_csv(const LaplaceProfile& F) {
  std::string s = "q,F,F_d1,F_d2,Q\n";
  for (std::size_t i = 0; i < F.grid.size(); ++i) {
    s += fmt17(F.grid.nodes[i]) + "," + fmt17(F.value[i]) + "," +
         fmt17(F.d1[i]) + "," + fmt17(F.d2[i]) + "," +
         fmt17(F.value_at_zero - F.value[i]) + "\n";
  }
  return s;
}

json config_echo(const SolverConfig& cfg) {
  return json{{"rho", cfg.rho},
              {"alpha", cfg.alpha},
              {"epsilon", cfg.epsilon},
              {"theta", cfg.theta},
              {"mu", cfg.mu},
              {"damping", cfg.damping},
              {"tol", cfg.tol},
              {"max_iter", cfg.max_iter},
              {"grid", {{"q_min", cfg.q_min}, {"q_max", cfg.q_max}, {"nodes", cfg.q_nodes}}},
              {"kernel_grid",
               {{"x_min", cfg.k_min}, {"x_max", cfg.k_max}, {"nodes", cfg.k_nodes}}}};
}

// ---------------------------------------------------------------- exact

int cmd_exact(const json& cfg_json, const std::string& out_dir,
              int grid_nodes) {
  const double rho = cfg_json.value("rho", 0.7);
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("rho out of (0,1)");
  ExactProfileParams params(rho);

  const int qn = grid_nodes > 0 ? grid_nodes : 600;
  const QuadratureGrid qg = make_log_grid(1e-8, 1e6, qn, rho - 1.0, 1.0 + rho);
  const LaplaceProfile fbar = make_fbar_profile(rho, qg);

  std::string laplace = "q,Fbar,Fbar_d1,Fbar_d2,Qbar\n";
  for (std::size_t i = 0; i < qg.size(); ++i) {
    const double q = qg.nodes[i];
    laplace += fmt17(q) + "," + fmt17(fbar.value[i]) + "," +
               fmt17(fbar.d1[i]) + "," + fmt17(fbar.d2[i]) + "," +
               fmt17(rho - fbar.value[i]) + "\n";
  }

  const QuadratureGrid xg = make_log_grid(1e-6, 1e4, 400, rho - 1.0, 1.0 + rho);
  std::string physical = "x,fbar\n";
  for (std::size_t i = 0; i < xg.size(); ++i) {
    physical += fmt17(xg.nodes[i]) + "," +
                fmt17(eval_fbar(xg.nodes[i], params)) + "\n";
  }

  json moments_table = json::array();
  for (double c : {-0.45, -0.25, 0.0, 0.25, 0.45}) {
    const double gamma = c * rho;
    moments_table.push_back(
        {{"gamma", gamma}, {"value", exact_moment(gamma, params)}});
  }
  json summary{{"rho", rho},
               {"m0", exact_moment(0.0, params)},
               {"moments", moments_table},
               {"small_x_coefficient", rho / gamma_fn(rho)},
               {"tail_coefficient", rho * rho / gamma_fn(1.0 - rho)}};

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text(dir / "exact_laplace.csv", laplace);
  write_text(dir / "exact_profile.csv", physical);
  write_json(dir / "exact_summary.json", summary);
  std::printf("exact: wrote exact_laplace.csv, exact_profile.csv, "
              "exact_summary.json (rho=%g)\n", rho);
  return 0;
}

// --------------------------------------------------------- verify-kernel

int cmd_verify_kernel(const json& cfg_json, const std::string& out_dir,
                      double alpha, bool strict) {
  (void)cfg_json;
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha out of (0,1)");
  const KernelSpec spec = KernelSpec::power_law(alpha);

  const double dev_gate = strict ? 5e-10 : 1e-9;
  const double res_gate = strict ? 5e-4 : 1e-3;

  // jump function: boundary-value route against the closed form
  double plemelj_dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double s = 1e-2 * std::pow(1e4, i / 49.0);
    const double closed = std::sin(M_PI * alpha) / M_PI *
                          (std::pow(s, alpha) - std::pow(s, -alpha)) /
                          (s - 1.0);
    plemelj_dev = std::max(plemelj_dev, std::fabs(phi_plemelj(s, spec) - closed));
  }

  const KernelQuadrature kq = make_kernel_quadrature(spec, 1e-12, 1e4, 400);
  json table = json::array();
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double x = 0.1 * std::pow(100.0, i / 4.0);
      const double y = 0.1 * std::pow(100.0, j / 4.0);
      const double res = verify_laplace_identity(x, y, spec, kq);
      worst = std::max(worst, std::fabs(res));
      table.push_back({{"x", x},
                       {"y", y},
                       {"target", spec.eval_W(x, y) / (x + y)},
                       {"residual", res}});
    }
  }

  const KernelQuadrature kb = make_kernel_quadrature(spec, 1e-10, 1e6, 320);
  const KernelQuadrature kb2 = make_kernel_quadrature(spec, 1e-10, 1e6, 640);
  json probes = json::array();
  bool probes_ok = true;
  const double sets[2][4] = {{0.0, 1.0, 0.0, 1.0}, {0.25, 1.0, 0.25, 1.0}};
  for (const auto& s : sets) {
    const double v1 = ker_integral_bounds_probe(spec, kb, s[0], s[1], s[2], s[3]);
    const double v2 = ker_integral_bounds_probe(spec, kb2, s[0], s[1], s[2], s[3]);
    const double drift = std::fabs(v2 / v1 - 1.0);
    probes_ok = probes_ok && std::isfinite(v1) && drift < 0.01;
    probes.push_back({{"a1", s[0]}, {"b1", s[1]}, {"a2", s[2]}, {"b2", s[3]},
                      {"value", v1}, {"refined_drift", drift}});
  }

  const bool pass = plemelj_dev < dev_gate && worst < res_gate && probes_ok;
  json report{{"alpha", alpha},
              {"plemelj_max_deviation", plemelj_dev},
              {"identity_max_residual", worst},
              {"identity_table", table},
              {"bounds_probes", probes},
              {"strict", strict},
              {"pass", pass}};
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_json(dir / "verify_kernel.json", report);
  std::printf("verify-kernel: alpha=%g plemelj_dev=%.3e identity_residual=%.3e %s\n",
              alpha, plemelj_dev, worst, pass ? "PASS" : "FAIL");
  if (!pass) throw VerificationError("kernel verification failed");
  return 0;
}

// -------------------------------------------------------- verify-inverse

int cmd_verify_inverse(const json& cfg_json, const std::string& out_dir,
                       unsigned seed, bool strict) {
  const double rho = cfg_json.value("rho", 0.7);
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("rho out of (0,1)");
  const double mu = 0.5 * std::min(rho, 1.0 - rho);
  const double chi = 0.5 * rho;
  const double gate = strict ? 5e-6 : 1e-5;

  const QuadratureGrid g = make_log_grid(1e-8, 1e10, 775, rho - 1.0, 1.0 + rho);
  ExactProfileParams p(rho);

  auto bump = make_profile(
      rho, g,
      [](double q) { return std::exp(-q) - 2 * std::exp(-2 * q) + std::exp(-3 * q); },
      [](double q) { return -std::exp(-q) + 4 * std::exp(-2 * q) - 3 * std::exp(-3 * q); },
      [](double q) { return std::exp(-q) - 8 * std::exp(-2 * q) + 9 * std::exp(-3 * q); },
      0.0, 2.0, 12.0);
  auto alg = make_profile(
      rho, g,
      [&](double q) {
        const double u = 1.0 - std::exp(-q);
        return u * u * eval_Fbar(q, p) / rho;
      },
      [&](double q) {
        const double e = std::exp(-q), u = 1.0 - e;
        return 2 * u * e * eval_Fbar(q, p) / rho +
               u * u * eval_Fbar_deriv(q, 1, p) / rho;
      },
      [&](double q) {
        const double e = std::exp(-q), u = 1.0 - e;
        return 2 * e * (e - u) * eval_Fbar(q, p) / rho +
               4 * u * e * eval_Fbar_deriv(q, 1, p) / rho +
               u * u * eval_Fbar_deriv(q, 2, p) / rho;
      },
      0.0, 2.0, rho);
  auto expo = make_profile(
      rho, g, [](double q) { return std::exp(-q); },
      [](double q) { return -std::exp(-q); },
      [](double q) { return std::exp(-q); }, 1.0, 1.0, 14.0);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  const double ca = coef(rng), cb = coef(rng);
  auto mix = profile_lincomb(ca, bump, cb, alg);

  const LaplaceProfile profiles[4] = {bump, alg, expo, mix};
  const char* names[4] = {"bump", "algebraic", "exponential", "seeded_mix"};

  json rows = json::array();
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const LaplaceProfile& G = profiles[i];
    auto diff_sup = [](const LaplaceProfile& A, const LaplaceProfile& B) {
      double s = std::fabs(A.value_at_zero - B.value_at_zero);
      for (std::size_t k = 0; k < A.value.size(); ++k)
        s = std::max(s, std::fabs(A.value[k] - B.value[k]));
      return s;
    };
    const double e_inv_ll = diff_sup(apply_LLinv(apply_LL(G), mu, chi), G);
    const double e_ll_inv = diff_sup(apply_LL(apply_LLinv(G, mu, chi)), G);
    worst = std::max({worst, e_inv_ll, e_ll_inv});
    rows.push_back({{"profile", names[i]},
                    {"inv_after_ll", e_inv_ll},
                    {"ll_after_inv", e_ll_inv}});
  }

  // boundary value of the inverse
  const LaplaceProfile inv = apply_LLinv(expo, mu, chi);
  const double boundary_err = std::fabs(inv.value_at_zero + 1.0 / rho);

  const bool pass = worst < gate && boundary_err < 1e-10;
  json report{{"rho", rho},       {"mu", mu},
              {"chi", chi},       {"seed", seed},
              {"round_trips", rows}, {"max_error", worst},
              {"boundary_value_error", boundary_err},
              {"strict", strict}, {"pass", pass}};
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_json(dir / "verify_inverse.json", report);
  std::printf("verify-inverse: rho=%g max_roundtrip=%.3e boundary=%.3e %s\n",
              rho, worst, boundary_err, pass ? "PASS" : "FAIL");
  if (!pass) throw VerificationError("inverse verification failed");
  return 0;
}

// ----------------------------------------------------------------- solve

json report_json(const SolverConfig& cfg, const SolverReport& rep) {
  return json{{"config", config_echo(cfg)},
              {"iterations", rep.iterations},
              {"damping_used", rep.damping_used},
              {"iterate_norms", rep.iterate_norms},
              {"contraction_ratios", rep.contraction_ratios},
              {"residual_selfsim", rep.residual_selfsim},
              {"residual_qode", rep.residual_qode},
              {"kappa", rep.kappa},
              {"F0", rep.F0},
              {"norm_distance", rep.norm_distance},
              {"converged", rep.converged}};
}

int cmd_solve(const json& cfg_json, const std::string& out_dir,
              int grid_nodes) {
  const SolverConfig cfg = solver_config_from(cfg_json, grid_nodes);
  const auto [F, rep] = solve_profile(cfg);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text(dir / "profile.csv", profile_csv(F));
  write_json(dir / "solve_report.json", report_json(cfg, rep));
  std::printf("solve: eps=%g iters=%d converged=%d residual_qode=%.3e "
              "kappa=%.6f\n", cfg.epsilon, rep.iterations, (int)rep.converged,
              rep.residual_qode, rep.kappa);
  return 0;
}

// -------------------------------------------------------------- diagnose

LaplaceProfile read_profile_csv(const std::string& path, double rho) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open profile " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("q,F,F_d1,F_d2", 0) != 0)
    throw ConfigError("profile csv: unexpected header");
  std::vector<double> q, F, d1, d2;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double a, b, c, d, e;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &a, &b, &c, &d, &e) < 4)
      throw ConfigError("profile csv: bad row");
    q.push_back(a);
    F.push_back(b);
    d1.push_back(c);
    d2.push_back(d);
  }
  if (q.size() < 16) throw ConfigError("profile csv: too few rows");

  LaplaceProfile P;
  P.grid = make_log_grid(q.front(), q.back(), static_cast<int>(q.size()),
                         rho - 1.0, 1.0 + rho);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (std::fabs(P.grid.nodes[i] / q[i] - 1.0) > 1e-9)
      throw ConfigError("profile csv: nodes are not log-uniform");
    P.grid.nodes[i] = q[i];
  }
  P.value = F;
  P.d1 = d1;
  P.d2 = d2;
  P.rho = rho;
  // F(0) from the head model F(0)-F(q) = c q^rho pinned on the first nodes
  const double c_head = (F[0] - F[4]) / (std::pow(q[4], rho) - std::pow(q[0], rho));
  P.value_at_zero = F[0] + c_head * std::pow(q[0], rho);
  P.head_exponent = rho;
  P.tail_exponent = rho;
  fit_endpoint_models(P, true);
  return P;
}

int cmd_diagnose(const json& cfg_json, const std::string& profile_path,
                 const std::string& out_dir) {
  const double rho = cfg_json.value("rho", 0.7);
  const double alpha = cfg_json.value("alpha", 1.0 / 3.0);
  const double epsilon = cfg_json.value("epsilon", 0.0);
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("rho out of (0,1)");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha out of (0,1)");

  const LaplaceProfile F = read_profile_csv(profile_path, rho);
  const KernelSpec spec = KernelSpec::power_law(alpha);

  json mtable = json::array();
  for (double c : {-0.45, -0.25, 0.0, 0.25, 0.45}) {
    const double gamma = c * rho;
    mtable.push_back({{"gamma", gamma},
                      {"value", moments(F, gamma)},
                      {"extension", gamma < 0.0}});
  }
  const BoundaryLayerPrediction bl = boundary_layer_report(F, spec, epsilon);
  json report{{"rho", rho},
              {"alpha", alpha},
              {"epsilon", epsilon},
              {"F0", F.value_at_zero},
              {"kappa", kappa(F)},
              {"moments", mtable},
              {"tail_normalization", tail_normalization_check(F)},
              {"boundary_layer",
               {{"m0", bl.m0},
                {"m_alpha", bl.m_alpha},
                {"exponent", bl.exponent},
                {"layer_scale", bl.layer_scale},
                {"has_layer", bl.has_layer}}}};
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_json(dir / "diagnostics.json", report);
  std::printf("diagnose: kappa=%.6f m0=%.6f tail_fit=%.6f\n", kappa(F), bl.m0,
              tail_normalization_check(F));
  return 0;
}

// ----------------------------------------------------------------- sweep

int cmd_sweep(const json& cfg_json, const std::string& out_dir,
              int grid_nodes) {
  std::vector<double> epsilons = {0.05, 0.02, 0.01};
  if (cfg_json.contains("epsilons"))
    epsilons = cfg_json.at("epsilons").get<std::vector<double>>();
  if (epsilons.size() < 2) throw ConfigError("sweep needs >= 2 epsilons");
  for (std::size_t i = 1; i < epsilons.size(); ++i)
    if (!(epsilons[i] < epsilons[i - 1]))
      throw ConfigError("epsilons must be strictly decreasing");

  json rows = json::array();
  std::string csv =
      "epsilon,iterations,damping_used,converged,residual_selfsim,"
      "residual_qode,kappa,norm_distance,sup_diff,tail_fit\n";
  std::vector<double> nds, sups, kappas;
  for (double eps : epsilons) {
    json row_cfg = cfg_json;
    row_cfg["epsilon"] = eps;
    const SolverConfig cfg = solver_config_from(row_cfg, grid_nodes);
    const auto [F, rep] = solve_profile(cfg);
    ExactProfileParams p(cfg.rho);
    double sup = 0.0;
    for (std::size_t i = 0; i < F.grid.size(); ++i)
      sup = std::max(sup,
                     std::fabs(F.value[i] - eval_Fbar(F.grid.nodes[i], p)));
    const double tail_fit = tail_normalization_check(F);
    nds.push_back(rep.norm_distance);
    sups.push_back(sup);
    kappas.push_back(std::fabs(rep.kappa));
    rows.push_back({{"epsilon", eps},
                    {"iterations", rep.iterations},
                    {"damping_used", rep.damping_used},
                    {"converged", rep.converged},
                    {"residual_selfsim", rep.residual_selfsim},
                    {"residual_qode", rep.residual_qode},
                    {"kappa", rep.kappa},
                    {"norm_distance", rep.norm_distance},
                    {"sup_diff", sup},
                    {"tail_fit", tail_fit}});
    csv += fmt17(eps) + "," + std::to_string(rep.iterations) + "," +
           fmt17(rep.damping_used) + "," + (rep.converged ? "1" : "0") + "," +
           fmt17(rep.residual_selfsim) + "," + fmt17(rep.residual_qode) + "," +
           fmt17(rep.kappa) + "," + fmt17(rep.norm_distance) + "," +
           fmt17(sup) + "," + fmt17(tail_fit) + "\n";
  }

  bool monotone = true;
  for (std::size_t i = 1; i < nds.size(); ++i) {
    monotone = monotone && nds[i] < nds[i - 1] && sups[i] < sups[i - 1] &&
               kappas[i] < kappas[i - 1];
  }
  json report{{"epsilons", epsilons}, {"rows", rows}, {"trend_monotone", monotone}};
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text(dir / "sweep.csv", csv);
  write_json(dir / "sweep_report.json", report);
  std::printf("sweep: %zu runs, trend %s\n", epsilons.size(),
              monotone ? "monotone" : "VIOLATED");
  if (!monotone)
    throw VerificationError("sweep trend not monotone along the ladder");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fat-tailed self-similar coagulation profiles in Laplace variables"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path, out_dir = ".", profile_path;
  int grid_nodes = 0;
  unsigned seed = 1;
  bool strict = false;
  double rho_flag = -1.0, alpha_flag = -1.0, epsilon_flag = -1.0;

  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--grid-nodes", grid_nodes, "override Laplace grid nodes");
  app.add_option("--seed", seed, "seed for property sampling");
  app.add_flag("--strict", strict, "halve verification thresholds");

  auto* exact = app.add_subcommand("exact", "exact constant-kernel objects");
  exact->add_option("--rho", rho_flag, "tail exponent in (0,1)");

  auto* vkernel = app.add_subcommand("verify-kernel",
                                     "kernel representation identities");
  vkernel->add_option("--alpha", alpha_flag, "singularity exponent in (0,1)");

  auto* vinverse = app.add_subcommand("verify-inverse",
                                      "linearised-operator round trips");
  vinverse->add_option("--rho", rho_flag, "tail exponent in (0,1)");

  auto* solve = app.add_subcommand("solve", "perturbed fixed-point solve");
  solve->add_option("--epsilon", epsilon_flag, "perturbation strength");

  auto* diagnose = app.add_subcommand("diagnose", "profile diagnostics");
  diagnose->add_option("--profile", profile_path, "profile.csv path")
      ->required();

  auto* sweep = app.add_subcommand("sweep", "epsilon ladder");

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = load_config(config_path);
    if (exact->count("--rho") || vinverse->count("--rho")) cfg["rho"] = rho_flag;
    if (vkernel->count("--alpha")) cfg["alpha"] = alpha_flag;
    if (solve->count("--epsilon")) cfg["epsilon"] = epsilon_flag;
    if (!cfg.contains("seed")) cfg["seed"] = seed;

    if (exact->parsed()) return cmd_exact(cfg, out_dir, grid_nodes);
    if (vkernel->parsed())
      return cmd_verify_kernel(cfg, out_dir, cfg.value("alpha", 1.0 / 3.0),
                               strict);
    if (vinverse->parsed())
      return cmd_verify_inverse(cfg, out_dir, cfg.value("seed", seed), strict);
    if (solve->parsed()) return cmd_solve(cfg, out_dir, grid_nodes);
    if (diagnose->parsed()) return cmd_diagnose(cfg, profile_path, out_dir);
    if (sweep->parsed()) return cmd_sweep(cfg, out_dir, grid_nodes);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: config: %s\n", e.what());
    return 2;
  } catch (const NonContractionError& e) {
    std::fprintf(stderr, "error: non-contraction: %s\n", e.what());
    return 3;
  } catch (const VerificationError& e) {
    std::fprintf(stderr, "error: verification: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
