#pragma once

#include <stdexcept>

namespace coag {

/// Euler Gamma function via a fixed Lanczos rational approximation (g = 7,
/// 9 coefficients), reflection formula for z < 1/2. Relative accuracy is
/// better than 1e-13 on the range used here.
double gamma_fn(double z);

/// log Gamma for z > 0.
double log_gamma(double z);

/// Lower incomplete gamma  γ(a,x) = ∫_0^x t^{a-1} e^{-t} dt  for a > 0, x >= 0.
double lower_inc_gamma(double a, double x);

/// Upper incomplete gamma  Γ(a,x) = ∫_x^∞ t^{a-1} e^{-t} dt  for x > 0 and
/// a > -2 (a not required positive; negative a is reached by recurrence).
double upper_inc_gamma(double a, double x);

/// Parameters of the explicit constant-kernel profile family.
///
/// rho is the tail exponent of the profile, f(x) ~ rho^2/Gamma(1-rho) x^{-1-rho}.
/// crossover_x separates the convergent small-x series from the large-x
/// asymptotic expansion; the default equates the two truncation-error
/// estimates (cancellation limit of the series in extended precision vs.
/// the optimally truncated asymptotic remainder ~ e^{-x}).
struct ExactProfileParams {
  double rho;
  double series_tol = 1e-6;
  double crossover_x = 20.0;

  ExactProfileParams(double rho_, double series_tol_ = 1e-6,
                     double crossover_x_ = 20.0);
};

/// Laplace transform of the constant-kernel profile, Fbar(q) = rho/(1+q^rho).
double eval_Fbar(double q, const ExactProfileParams& p);

/// First or second analytic derivative of Fbar; q > 0 (singular at q = 0).
double eval_Fbar_deriv(double q, int order, const ExactProfileParams& p);

/// Desingularised transform Qbar(q) = rho q^rho/(1+q^rho) = rho - Fbar(q).
double eval_Qbar(double q, const ExactProfileParams& p);

/// Physical-space profile fbar(x) = rho x^{rho-1} E_{rho,rho}(-x^rho),
/// evaluated by the power series below crossover_x and by the algebraic
/// asymptotic expansion above it. Throws if neither expansion reaches the
/// configured tolerance at x.
double eval_fbar(double x, const ExactProfileParams& p);

/// Closed-form moment m_gamma = rho Γ(1-γ/ρ) Γ(1+γ/ρ) / Γ(1-γ) of fbar,
/// valid for gamma in (-rho, rho).
double exact_moment(double gamma, const ExactProfileParams& p);

}  // namespace coag
