#include "coag/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coag/special.hpp"

namespace coag {

namespace {

// Quintic Hermite on one cell from endpoint (value, d1, d2) triples; the
// interpolant and both derivatives reproduce the endpoint data exactly.
ProfilePoint quintic_hermite(double x, double x0, double x1, double f0,
                             double g0, double s0, double f1, double g1,
                             double s1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;

  const double H0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
  const double H1 = t - 6 * t3 + 8 * t4 - 3 * t5;
  const double H2 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
  const double H3 = 10 * t3 - 15 * t4 + 6 * t5;
  const double H4 = -4 * t3 + 7 * t4 - 3 * t5;
  const double H5 = 0.5 * t3 - t4 + 0.5 * t5;

  const double dH0 = -30 * t2 + 60 * t3 - 30 * t4;
  const double dH1 = 1 - 18 * t2 + 32 * t3 - 15 * t4;
  const double dH2 = t - 4.5 * t2 + 6 * t3 - 2.5 * t4;
  const double dH3 = 30 * t2 - 60 * t3 + 30 * t4;
  const double dH4 = -12 * t2 + 28 * t3 - 15 * t4;
  const double dH5 = 1.5 * t2 - 4 * t3 + 2.5 * t4;

  const double d2H0 = -60 * t + 180 * t2 - 120 * t3;
  const double d2H1 = -36 * t + 96 * t2 - 60 * t3;
  const double d2H2 = 1 - 9 * t + 18 * t2 - 10 * t3;
  const double d2H3 = 60 * t - 180 * t2 + 120 * t3;
  const double d2H4 = -24 * t + 84 * t2 - 60 * t3;
  const double d2H5 = 3 * t - 12 * t2 + 10 * t3;

  ProfilePoint out;
  out.value = H0 * f0 + H1 * h * g0 + H2 * h * h * s0 + H3 * f1 +
              H4 * h * g1 + H5 * h * h * s1;
  out.d1 = (dH0 * f0 + dH3 * f1) / h + dH1 * g0 + dH2 * h * s0 + dH4 * g1 +
           dH5 * h * s1;
  out.d2 = (d2H0 * f0 + d2H3 * f1) / (h * h) + (d2H1 * g0 + d2H4 * g1) / h +
           d2H2 * s0 + d2H5 * s1;
  return out;
}

}  // namespace

ProfilePoint profile_eval(const LaplaceProfile& p, double q) {
  const auto& nodes = p.grid.nodes;
  const std::size_t n = nodes.size();
  if (q < 0.0) throw std::domain_error("profile_eval: q must be >= 0");
  if (q == 0.0)
    return {p.value_at_zero, -std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};

  if (q < p.grid.x_min) {
    const double s = p.head_exponent, c = p.head_coeff;
    return {p.value_at_zero - c * std::pow(q, s),
            -c * s * std::pow(q, s - 1.0),
            -c * s * (s - 1.0) * std::pow(q, s - 2.0)};
  }
  if (q > p.grid.x_max) {
    const double t = p.tail_exponent, c = p.tail_coeff;
    return {c * std::pow(q, -t), -c * t * std::pow(q, -t - 1.0),
            c * t * (t + 1.0) * std::pow(q, -t - 2.0)};
  }

  const double u = std::log(q);
  const double u0 = std::log(p.grid.x_min);
  double t = (u - u0) / p.grid.log_step;
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(std::floor(t));
  if (k < 0) k = 0;
  if (k > static_cast<std::ptrdiff_t>(n) - 2) k = static_cast<std::ptrdiff_t>(n) - 2;

  return quintic_hermite(q, nodes[k], nodes[k + 1], p.value[k], p.d1[k],
                         p.d2[k], p.value[k + 1], p.d1[k + 1], p.d2[k + 1]);
}

double profile_value(const LaplaceProfile& p, double q) {
  return profile_eval(p, q).value;
}

LaplaceProfile make_fbar_profile(double rho, const QuadratureGrid& q_grid) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("make_fbar_profile: rho out of (0,1)");
  ExactProfileParams params(rho);
  LaplaceProfile p = make_profile(
      rho, q_grid, [&](double q) { return eval_Fbar(q, params); },
      [&](double q) { return eval_Fbar_deriv(q, 1, params); },
      [&](double q) { return eval_Fbar_deriv(q, 2, params); }, rho, rho, rho);
  // Fbar(q) = rho - rho q^rho + O(q^{2rho}) and Fbar(q) = rho q^-rho + O(q^-2rho)
  p.head_coeff = rho;
  p.tail_coeff = rho;
  return p;
}

LaplaceProfile make_zero_profile(double rho, const QuadratureGrid& q_grid) {
  LaplaceProfile p;
  p.grid = q_grid;
  const std::size_t n = q_grid.size();
  p.value.assign(n, 0.0);
  p.d1.assign(n, 0.0);
  p.d2.assign(n, 0.0);
  p.value_at_zero = 0.0;
  p.rho = rho;
  // neutral under the min-combination rule of profile_lincomb
  p.head_exponent = 4.0;
  p.head_coeff = 0.0;
  p.tail_exponent = 12.0;
  p.tail_coeff = 0.0;
  return p;
}

LaplaceProfile profile_lincomb(double a, const LaplaceProfile& P, double b,
                               const LaplaceProfile& Q) {
  if (P.grid.nodes.size() != Q.grid.nodes.size() ||
      P.grid.x_min != Q.grid.x_min || P.grid.x_max != Q.grid.x_max)
    throw std::invalid_argument("profile_lincomb: grids differ");
  LaplaceProfile out = P;
  const std::size_t n = P.value.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.value[i] = a * P.value[i] + b * Q.value[i];
    out.d1[i] = a * P.d1[i] + b * Q.d1[i];
    out.d2[i] = a * P.d2[i] + b * Q.d2[i];
  }
  out.value_at_zero = a * P.value_at_zero + b * Q.value_at_zero;
  out.rho = P.rho;
  // exact for mixtures; refitting exponents here would make downstream
  // tail completions nonlinear in the operands
  out.head_exponent = std::min(P.head_exponent, Q.head_exponent);
  out.tail_exponent = std::min(P.tail_exponent, Q.tail_exponent);
  fit_endpoint_models(out, false);
  return out;
}

LaplaceProfile profile_scale(double a, const LaplaceProfile& P) {
  LaplaceProfile out = P;
  for (auto& v : out.value) v *= a;
  for (auto& v : out.d1) v *= a;
  for (auto& v : out.d2) v *= a;
  out.value_at_zero *= a;
  out.head_coeff *= a;
  out.tail_coeff *= a;
  return out;
}

void fit_endpoint_models(LaplaceProfile& p, bool fit_exponents) {
  const std::size_t n = p.grid.size();
  if (n < 8) return;

  // head: F(0) - F(q) ~ c q^sigma, fitted on the first nodes
  const double q0 = p.grid.nodes[0];
  const double q3 = p.grid.nodes[3];
  const double d0 = p.value_at_zero - p.value[0];
  const double d3 = p.value_at_zero - p.value[3];
  if (fit_exponents && d0 != 0.0 && d3 != 0.0 && d0 * d3 > 0.0) {
    double sigma = std::log(d3 / d0) / std::log(q3 / q0);
    sigma = std::clamp(sigma, 0.05, 4.0);
    p.head_exponent = sigma;
  }
  p.head_coeff = (d0 != 0.0) ? d0 * std::pow(q0, -p.head_exponent) : 0.0;

  // tail: F(q) ~ c q^-tau on the last decade
  const std::size_t iN = n - 1;
  const std::size_t iM = n - 1 - std::min<std::size_t>(n / 8, 40);
  const double vN = p.value[iN];
  const double vM = p.value[iM];
  if (fit_exponents && vN != 0.0 && vM != 0.0 && vN * vM > 0.0) {
    double tau = -std::log(vN / vM) / std::log(p.grid.nodes[iN] / p.grid.nodes[iM]);
    tau = std::clamp(tau, 0.05, 6.0);
    p.tail_exponent = tau;
  }
  p.tail_coeff =
      (vN != 0.0) ? vN * std::pow(p.grid.x_max, p.tail_exponent) : 0.0;
}

bool profile_consistent(const LaplaceProfile& p, double tol) {
  const std::size_t n = p.grid.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max(scale, std::fabs(p.d1[i]) * p.grid.nodes[i]);
  if (scale == 0.0) return true;
  // the centered difference itself has an O(h^2) bias on a log grid, so
  // the window is tol plus a few times h^2 of the local magnitude
  const double h2 = p.grid.log_step * p.grid.log_step;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double fd = (p.value[i + 1] - p.value[i - 1]) /
                      (p.grid.nodes[i + 1] - p.grid.nodes[i - 1]);
    const double err = std::fabs(fd - p.d1[i]) * p.grid.nodes[i];
    const double local = std::max(std::fabs(p.d1[i]) * p.grid.nodes[i],
                                  1e-3 * scale);
    if (err > (tol + 5.0 * h2) * local) return false;
  }
  return true;
}

}  // namespace coag
