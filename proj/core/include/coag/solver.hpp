#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coag/kernels.hpp"
#include "coag/profile.hpp"

namespace coag {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct NonContractionError : std::runtime_error {
  double ratio;
  NonContractionError(const std::string& what, double ratio_)
      : std::runtime_error(what), ratio(ratio_) {}
};

/// Configuration of the Laplace-variable fixed-point solve. Defaults that
/// depend on (rho, alpha) are resolved by validate():
///   theta = midpoint of (max(alpha, 1-rho), 1/2), mu = min(rho,1-rho)/2.
struct SolverConfig {
  double rho = 0.7;
  double alpha = 1.0 / 3.0;
  double epsilon = 0.0;
  double theta = -1.0;
  double mu = -1.0;
  double damping = 0.7;
  double tol = 1e-5;   // residual tolerance for the converged flag
  int max_iter = 200;
  double q_min = 1e-8, q_max = 1e6;
  int q_nodes = 600;
  double k_min = 1e-10, k_max = 1e6;
  int k_nodes = 320;

  /// Throws ConfigError on violated parameter ranges; fills defaulted
  /// theta/mu.
  void validate();
};

struct SolverReport {
  std::vector<double> iterate_norms;       // |M_{n+1}-M_n|_{2,0,theta}
  std::vector<double> contraction_ratios;  // successive quotients
  double residual_selfsim = 0.0;
  double residual_qode = 0.0;
  double kappa = 0.0;          // 2 (F(0) - rho)
  double norm_distance = 0.0;  // |F - Fbar|_{2,mu,theta}
  double F0 = 0.0;
  double damping_used = 0.0;  // after any fallback halving
  int iterations = 0;
  bool converged = false;
};

/// Fixed-point computation of the perturbed profile in Laplace variables:
/// iterate M <- (1-d) M + d LL^-1[ B2(M,M) + eps B_W(Fbar+M, Fbar+M) ]
/// from M = 0; F = Fbar + M. Throws NonContractionError when the iterate
/// distances grow for three successive steps.
std::pair<LaplaceProfile, SolverReport> solve_profile(const SolverConfig& cfg);

/// Independent check of the desingularised equation: sup over the grid of
/// |-q Q'(q) + rho Q(q) - Q(q)^2 - eps P(q)| with Q = F(0) - F and P from
/// the representation-kernel functional (never used inside the iteration).
double residual_Qode(const LaplaceProfile& F, const KernelQuadrature& kq,
                     double eps);

/// F_a(q) = F(q/a), the transform of a f(a x).
LaplaceProfile rescale_profile(const LaplaceProfile& F, double a);

}  // namespace coag
