#include "coag/solver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "coag/linop.hpp"
#include "coag/norms.hpp"
#include "coag/operators.hpp"

namespace coag {

void SolverConfig::validate() {
  if (!(rho > 0.5 && rho < 1.0)) throw ConfigError("rho out of (1/2,1)");
  if (!(alpha > 0.0 && alpha < 0.5)) throw ConfigError("alpha out of (0,1/2)");
  if (!(alpha < rho)) throw ConfigError("alpha must be < rho");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw ConfigError("epsilon out of [0,1]");
  const double theta_lo = std::max(alpha, 1.0 - rho);
  if (theta < 0.0) theta = 0.5 * (theta_lo + 0.5);
  if (!(theta > theta_lo && theta < 0.5))
    throw ConfigError("theta out of (max(alpha,1-rho), 1/2)");
  const double mu_star = std::min(rho, 1.0 - rho);
  if (mu < 0.0) mu = 0.5 * mu_star;
  if (!(mu > 0.0 && mu < mu_star))
    throw ConfigError("mu out of (0, min(rho,1-rho))");
  if (!(damping > 0.0 && damping <= 1.0))
    throw ConfigError("damping out of (0,1]");
  if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (!(q_min > 0.0 && q_max > q_min)) throw ConfigError("bad q grid range");
  if (q_nodes < 64) throw ConfigError("q_nodes must be >= 64");
  if (!(k_min > 0.0 && k_max > k_min)) throw ConfigError("bad kernel grid range");
  if (k_nodes < 32) throw ConfigError("k_nodes must be >= 32");
}

namespace {

struct PicardAttempt {
  LaplaceProfile M;
  std::vector<double> steps;
  std::vector<double> ratios;
  bool step_converged = false;
  bool expanding = false;
  double last_ratio = 0.0;
};

// Damped Picard iteration at a fixed damping; aborts early when the
// iterate distances grow for four successive steps or blow up.
PicardAttempt run_picard(const SolverConfig& cfg, const LaplaceProfile& fbar,
                         const KernelQuadrature& kq, double damping,
                         double step_tol) {
  PicardAttempt at;
  at.M = make_zero_profile(cfg.rho, fbar.grid);
  int growth_run = 0;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const LaplaceProfile F = profile_lincomb(1.0, fbar, 1.0, at.M);
    LaplaceProfile H = op_B2(at.M, at.M);
    if (cfg.epsilon != 0.0)
      H = profile_lincomb(1.0, H, cfg.epsilon, op_BW(F, F, kq));
    const LaplaceProfile M_star = apply_LLinv(H, cfg.mu, cfg.theta);
    LaplaceProfile M_next =
        profile_lincomb(1.0 - damping, at.M, damping, M_star);
    // refit endpoint models from the fresh data; the min-rule of the
    // lincomb would otherwise pin the exponents to early-iterate fits
    fit_endpoint_models(M_next, true);

    const LaplaceProfile dM = profile_lincomb(1.0, M_next, -1.0, at.M);
    const double step = full_norm(dM, 2, 0.0, cfg.theta);
    at.steps.push_back(step);
    if (at.steps.size() >= 2) {
      const double prev = at.steps[at.steps.size() - 2];
      if (prev > 0.0) {
        const double ratio = step / prev;
        at.ratios.push_back(ratio);
        at.last_ratio = ratio;
        growth_run = (ratio >= 1.0) ? growth_run + 1 : 0;
        if (growth_run >= 4 || !std::isfinite(step) || step > 1e5) {
          at.expanding = true;
          return at;
        }
      }
    }
    at.M = M_next;
    if (step < step_tol) {
      at.step_converged = true;
      return at;
    }
  }
  return at;
}

}  // namespace

std::pair<LaplaceProfile, SolverReport> solve_profile(const SolverConfig& cfg_in) {
  SolverConfig cfg = cfg_in;
  cfg.validate();

  const QuadratureGrid q_grid =
      make_log_grid(cfg.q_min, cfg.q_max, cfg.q_nodes, cfg.rho - 1.0, 1.0 + cfg.rho);
  const KernelSpec spec = KernelSpec::power_law(cfg.alpha);
  const KernelQuadrature kq =
      make_kernel_quadrature(spec, cfg.k_min, cfg.k_max, cfg.k_nodes);
  const LaplaceProfile fbar = make_fbar_profile(cfg.rho, q_grid);

  const double step_tol = std::min(cfg.tol * 1e-2, 1e-9);

  // near the contraction threshold the linearised Picard map acquires an
  // eigenvalue below -1; halving the damping restores |1-d+d*lambda| < 1
  PicardAttempt attempt;
  double damping_used = cfg.damping;
  bool found = false;
  for (int k = 0; k < 3 && !found; ++k) {
    damping_used = cfg.damping / (1 << k);
    attempt = run_picard(cfg, fbar, kq, damping_used, step_tol);
    found = attempt.step_converged;
  }
  if (!found)
    throw NonContractionError(
        "solve_profile: iterates do not contract (observed ratio " +
            std::to_string(attempt.last_ratio) + " at damping " +
            std::to_string(damping_used) + ")",
        attempt.last_ratio);

  SolverReport rep;
  rep.iterate_norms = attempt.steps;
  rep.contraction_ratios = attempt.ratios;
  rep.iterations = static_cast<int>(attempt.steps.size());
  rep.damping_used = damping_used;

  LaplaceProfile F = profile_lincomb(1.0, fbar, 1.0, attempt.M);
  fit_endpoint_models(F, true);
  rep.residual_selfsim =
      selfsim_residual_sup(F, cfg.epsilon, cfg.epsilon != 0.0 ? &kq : nullptr);
  rep.residual_qode = residual_Qode(F, kq, cfg.epsilon);
  rep.F0 = F.value_at_zero;
  rep.kappa = 2.0 * (F.value_at_zero - cfg.rho);
  rep.norm_distance = full_norm(attempt.M, 2, cfg.mu, cfg.theta);

  bool tail_ratios_ok = true;
  const std::size_t nr = rep.contraction_ratios.size();
  for (std::size_t i = nr - std::min<std::size_t>(nr, 3); i < nr; ++i)
    if (rep.contraction_ratios[i] >= 1.0) tail_ratios_ok = false;
  rep.converged = (rep.residual_selfsim < cfg.tol) && tail_ratios_ok;
  return {F, rep};
}

double residual_Qode(const LaplaceProfile& F, const KernelQuadrature& kq,
                     double eps) {
  const double rho = F.rho;
  const double F0 = F.value_at_zero;
  double sup = 0.0;
  for (std::size_t i = 0; i < F.grid.size(); ++i) {
    const double q = F.grid.nodes[i];
    const double Q = F0 - F.value[i];
    const double Qp = -F.d1[i];
    double res = -q * Qp + rho * Q - Q * Q;
    if (eps != 0.0) res -= eps * op_P(F, kq, q);
    sup = std::max(sup, std::fabs(res));
  }
  return sup;
}

LaplaceProfile rescale_profile(const LaplaceProfile& F, double a) {
  if (!(a > 0.0)) throw std::domain_error("rescale_profile: a must be > 0");
  if (a == 1.0) return F;
  LaplaceProfile out = F;
  const std::size_t n = F.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ProfilePoint p = profile_eval(F, F.grid.nodes[i] / a);
    out.value[i] = p.value;
    out.d1[i] = p.d1 / a;
    out.d2[i] = p.d2 / (a * a);
  }
  out.value_at_zero = F.value_at_zero;
  fit_endpoint_models(out, true);
  return out;
}

}  // namespace coag
