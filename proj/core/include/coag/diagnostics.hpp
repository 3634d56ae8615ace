#pragma once

#include "coag/kernels.hpp"
#include "coag/profile.hpp"

namespace coag {

/// Moment of order gamma in (-rho, rho) read off the Laplace side:
///   m_gamma = -(1/Γ(1-gamma)) ∫_0^∞ ξ^-gamma F'(ξ) dξ.
double moments(const LaplaceProfile& F, double gamma);

/// β_W(x, f) = ∫ W(x,z) f(z) dz for a physical-space density.
double beta_W(double x, const GriddedFunction& f, const KernelSpec& spec);

/// Φ(x, f) = eps ∫_x^∞ β_W(y,f)/y e^{-y} dy.
double phi_big(double x, const GriddedFunction& f, const KernelSpec& spec,
               double epsilon);

/// κ = 2 (F(0) - rho), the zeroth-moment deviation from the unperturbed
/// profile.
double kappa(const LaplaceProfile& F);

/// Fits the constant in -F'(q) ~ c q^{rho-1} over the smallest grid decade;
/// the target for a tail-normalised profile is rho^2. Throws when the fit
/// varies by more than 10% across the decade.
double tail_normalization_check(const LaplaceProfile& F);

/// Small-x prediction assembled from the profile's moments:
///   f(x) ~ C x^{2 m0 - 1 - rho} exp(-(eps/alpha) m_alpha x^-alpha),
/// valid on the scale x ~ eps^{1/alpha}; the multiplicative constant is
/// left unfitted.
struct BoundaryLayerPrediction {
  double m0 = 0.0;
  double m_alpha = 0.0;
  double exponent = 0.0;     // 2 m0 - 1 - rho
  double layer_scale = 0.0;  // eps^{1/alpha}
  double epsilon = 0.0;
  double alpha = 0.0;
  bool has_layer = false;

  double predict(double x) const;
};

BoundaryLayerPrediction boundary_layer_report(const LaplaceProfile& F,
                                              const KernelSpec& spec,
                                              double epsilon);

}  // namespace coag
