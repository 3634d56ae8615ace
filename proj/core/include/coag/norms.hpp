#pragma once

#include "coag/profile.hpp"

namespace coag {

/// Parameters of the weighted sup-(semi)norms on Laplace-side functions:
///   |G|_{k,mu,chi} = sup_q (1+q)^{chi+mu+rho} q^{k-rho-mu} |d^k G(q)|.
/// k = 0 with mu = -rho is the plain weighted sup norm (1+q)^chi |G|.
struct NormSpec {
  int k = 0;
  double mu = 0.0;
  double chi = 0.0;
  double rho = 0.0;
};

/// Piecewise power weight: q^a for q <= 1, q^-b for q >= 1.
double weight_omega(double a, double b, double q);

/// Grid sup of the weighted k-th derivative, with endpoint probes through
/// the profile's declared power-law models so a sup attained outside the
/// grid is not silently truncated. Throws if the requested derivative is
/// not carried.
double seminorm(const LaplaceProfile& G, const NormSpec& spec);

/// |G|_{0,-rho,chi} + sum of the order-1..k seminorms.
double full_norm(const LaplaceProfile& G, int k, double mu, double chi);

}  // namespace coag
