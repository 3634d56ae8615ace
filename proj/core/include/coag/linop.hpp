#pragma once

#include "coag/profile.hpp"

namespace coag {

/// Linearised coagulation operator about the constant-kernel profile:
///   LL(G) = G - A(G) - B2(Fbar, G) - B2(G, Fbar).
LaplaceProfile apply_LL(const LaplaceProfile& G);

/// Closed-form inverse: with A(q) = (2q^rho+1)/(1+q^rho)^2 and
/// B(q) = q^rho/(1+q^rho)^2,
///   LL^-1(H)(q) = -(H(0)/rho) A(q)
///     + B(q) ∫_0^q [ (1+r^rho)^2 r^-rho H'(r) - r^{rho-1} H(r)
///                    + (2r^rho+1) r^{-1-rho} (H(0)-H(r)) ] dr.
/// Derivatives are taken analytically from this form. The head of the
/// integrand is completed in closed form from the model
/// H(0)-H(r) ~ c r^sigma, which must satisfy sigma > rho (the inverse is
/// only bounded on the mu-regularised class); violation throws.
LaplaceProfile apply_LLinv(const LaplaceProfile& H, double mu, double chi);

}  // namespace coag
