#pragma once

#include <vector>

#include "coag/grids.hpp"

namespace coag {

/// A Laplace-side function F(q) carried on a log grid together with its
/// first two derivatives, the value at q = 0 and power-law endpoint models:
///   F(0) - F(q) ~ head_coeff * q^head_exponent   as q -> 0,
///   F(q)        ~ tail_coeff * q^-tail_exponent  as q -> infinity.
/// The endpoint models extend every evaluation and integral beyond the grid.
struct LaplaceProfile {
  QuadratureGrid grid;
  std::vector<double> value;
  std::vector<double> d1;
  std::vector<double> d2;
  double value_at_zero = 0.0;
  double rho = 0.0;
  double head_exponent = 1.0;
  double head_coeff = 0.0;
  double tail_exponent = 1.0;
  double tail_coeff = 0.0;
};

struct ProfilePoint {
  double value;
  double d1;
  double d2;
};

/// Evaluate F, F', F'' at arbitrary q >= 0. Inside the grid this uses
/// Hermite interpolation (value from value/d1, d1 from d1/d2) and a cubic
/// fit for d2; outside it uses the declared power-law endpoint models.
ProfilePoint profile_eval(const LaplaceProfile& p, double q);

double profile_value(const LaplaceProfile& p, double q);

/// Constant-kernel transform Fbar on a grid, all fields from closed forms.
LaplaceProfile make_fbar_profile(double rho, const QuadratureGrid& q_grid);

/// The zero profile (value, derivatives and head/tail coefficients all 0).
LaplaceProfile make_zero_profile(double rho, const QuadratureGrid& q_grid);

/// Build a profile from closed-form callables for value, d1, d2.
/// value_at_zero is evaluated separately; endpoint coefficients are fitted.
template <class F0, class F1, class F2>
LaplaceProfile make_profile(double rho, const QuadratureGrid& q_grid, F0&& f0,
                            F1&& f1, F2&& f2, double value_at_zero,
                            double head_exponent, double tail_exponent);

/// a*P + b*Q on the common grid of P (Q must share it).
LaplaceProfile profile_lincomb(double a, const LaplaceProfile& P, double b,
                               const LaplaceProfile& Q);

LaplaceProfile profile_scale(double a, const LaplaceProfile& P);

/// Refit head/tail coefficients (and optionally the exponents) from the
/// stored node data. Exponents are refit only when fit_exponents is true.
void fit_endpoint_models(LaplaceProfile& p, bool fit_exponents);

/// Smoke check: d1 within tol of the centered finite difference of value on
/// interior nodes (relative to the local derivative scale).
bool profile_consistent(const LaplaceProfile& p, double tol = 1e-4);

template <class F0, class F1, class F2>
LaplaceProfile make_profile(double rho, const QuadratureGrid& q_grid, F0&& f0,
                            F1&& f1, F2&& f2, double value_at_zero,
                            double head_exponent, double tail_exponent) {
  LaplaceProfile p;
  p.grid = q_grid;
  const std::size_t n = q_grid.nodes.size();
  p.value.resize(n);
  p.d1.resize(n);
  p.d2.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = q_grid.nodes[i];
    p.value[i] = f0(q);
    p.d1[i] = f1(q);
    p.d2[i] = f2(q);
  }
  p.value_at_zero = value_at_zero;
  p.rho = rho;
  p.head_exponent = head_exponent;
  p.tail_exponent = tail_exponent;
  fit_endpoint_models(p, false);
  return p;
}

}  // namespace coag
