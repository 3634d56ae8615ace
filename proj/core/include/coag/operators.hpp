#pragma once

#include "coag/kernels.hpp"
#include "coag/profile.hpp"

namespace coag {

/// Laplace-side regularising operator
///   A(G)(q) = -(1-rho) ∫_q^∞ (r-q) G'(r)/r dr,
/// the Fubini reduction of the double integral -∫_q^∞∫_p^∞ (1-rho)/r G'(r).
/// Derivatives come from the defining integrand: A'' (q) = -(1-rho) G'(q)/q.
LaplaceProfile op_A(const LaplaceProfile& G);

/// Constant-kernel bilinear form
///   B2(G,H)(q) = -2 ∫_q^∞ (r-q)/r G'(r) (H(0)-H(r)) dr,
/// with B2''(q) = -2 G'(q)(H(0)-H(q))/q.
LaplaceProfile op_B2(const LaplaceProfile& G, const LaplaceProfile& H);

/// Kernel of the perturbation form:
///   N[G,H](r) = (1/r) ∬ Ker(ξ,η) [ G''(r+ξ)(H(η)-H(η+r))
///                                 + G'(r+ξ)(H'(η)-H'(η+r)) ] dξ dη,
/// the δ-line of Ker integrated analytically as a 1-D term.
double op_N(const LaplaceProfile& G, const LaplaceProfile& H,
            const KernelQuadrature& kq, double r);

/// B_W(G,H)(q) = ∫_q^∞ (r-q) N[G,H](r) dr with B_W'' = N[G,H].
LaplaceProfile op_BW(const LaplaceProfile& G, const LaplaceProfile& H,
                     const KernelQuadrature& kq);

/// Laplace-side perturbation functional via the representation kernel:
///   P(q) = ∬ Ker(ξ,η) [F'(ξ+q)-F'(ξ)] [F(η)-F(η+q)] dξ dη.
double op_P(const LaplaceProfile& F, const KernelQuadrature& kq, double q);

/// Resampled shift, shift(G,tau)(q) = G(q+tau).
LaplaceProfile shift(const LaplaceProfile& G, double tau);

/// G - shift(G,1), the transform-side difference operator.
LaplaceProfile one_minus_zeta(const LaplaceProfile& G);

/// F - A(F) - B2(F,F) - eps*B_W(F,F) on F's grid. kq may be null when
/// eps == 0.
LaplaceProfile selfsim_residual_profile(const LaplaceProfile& F, double eps,
                                        const KernelQuadrature* kq);

/// Sup over the grid of |selfsim_residual_profile|.
double selfsim_residual_sup(const LaplaceProfile& F, double eps,
                            const KernelQuadrature* kq);

}  // namespace coag
