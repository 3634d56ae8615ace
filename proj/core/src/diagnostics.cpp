#include "coag/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "coag/special.hpp"

namespace coag {

double moments(const LaplaceProfile& F, double gamma) {
  const double rho = F.rho;
  if (!(gamma > -rho && gamma < rho))
    throw std::domain_error("moments: gamma out of (-rho, rho)");
  const auto& grid = F.grid;
  const std::size_t n = grid.size();

  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = std::pow(grid.nodes[i], -gamma) * F.d1[i] * grid.nodes[i];
  double integral = quad::em_trapezoid(g, grid.log_step);

  // endpoint pieces by parts: the boundary terms are exact in the stored
  // values, only the gamma-damped remainders use the power models
  {
    const double s = F.head_exponent;
    const double d0 = F.value.front() - F.value_at_zero;  // = -hc x_min^s
    if (d0 != 0.0 && !(s - gamma > 0.0))
      throw std::runtime_error("moments: divergent at q = 0");
    integral += std::pow(grid.x_min, -gamma) * d0;
    if (gamma != 0.0 && d0 != 0.0)
      integral += gamma * d0 * std::pow(grid.x_min, -gamma) / (s - gamma);
  }
  {
    const double t = F.tail_exponent;
    const double limit = (t == 0.0) ? F.tail_coeff : 0.0;
    const double ftilde = F.value.back() - limit;
    if (ftilde != 0.0 && !(t + gamma > 0.0))
      throw std::runtime_error("moments: divergent at q = infinity");
    integral += -std::pow(grid.x_max, -gamma) * ftilde;
    if (gamma != 0.0 && ftilde != 0.0)
      integral += gamma * ftilde * std::pow(grid.x_max, -gamma) / (gamma + t);
  }
  return -integral / gamma_fn(1.0 - gamma);
}

double beta_W(double x, const GriddedFunction& f, const KernelSpec& spec) {
  if (!(x > 0.0)) throw std::domain_error("beta_W: x must be > 0");
  const auto& grid = f.grid;
  const std::size_t n = grid.size();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = grid.nodes[i];
    g[i] = spec.eval_W(x, z) * f.values[i] * z;
  }
  double total = quad::em_trapezoid(g, grid.log_step);

  // endpoint models: W(x,z) ~ C_W (x/z)^α as z -> 0, ~ C_W (z/x)^α as z -> ∞
  const double a = grid.head_exponent;  // f ~ c z^a near zero
  const double alpha = spec.alpha;
  const double ch = f.head_coeff
                        ? *f.head_coeff
                        : f.values.front() * std::pow(grid.x_min, -a);
  if (ch != 0.0) {
    if (!(a - alpha > -1.0))
      throw std::runtime_error("beta_W: divergent head");
    total += spec.C_W * std::pow(x, alpha) * ch *
             std::pow(grid.x_min, a - alpha + 1.0) / (a - alpha + 1.0);
  }
  const double b = grid.tail_exponent;  // f ~ c z^-b near infinity
  const double ct = f.tail_coeff ? *f.tail_coeff
                                 : f.values.back() * std::pow(grid.x_max, b);
  if (ct != 0.0) {
    if (!(b - alpha > 1.0)) throw std::runtime_error("beta_W: divergent tail");
    total += spec.C_W * std::pow(x, -alpha) * ct *
             std::pow(grid.x_max, 1.0 + alpha - b) / (b - alpha - 1.0);
  }
  return total;
}

double phi_big(double x, const GriddedFunction& f, const KernelSpec& spec,
               double epsilon) {
  if (!(x > 0.0)) throw std::domain_error("phi_big: x must be > 0");
  if (epsilon == 0.0) return 0.0;
  // integrate β_W(y)/y e^{-y} on a log grid from x out to where e^{-y}
  // has died
  const double y_max = std::max(x * 1.0001, x + 80.0);
  const int n = 800;
  const double u0 = std::log(x);
  const double h = (std::log(y_max) - u0) / (n - 1);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    const double y = std::exp(u0 + i * h);
    g[i] = beta_W(y, f, spec) * std::exp(-y);  // 1/y cancels the Jacobian
  }
  return epsilon * quad::em_trapezoid(g, h);
}

double kappa(const LaplaceProfile& F) {
  return 2.0 * (F.value_at_zero - F.rho);
}

double tail_normalization_check(const LaplaceProfile& F) {
  const auto& grid = F.grid;
  const double q_hi = grid.x_min * 10.0;
  std::vector<double> fits;
  for (std::size_t i = 0; i < grid.size() && grid.nodes[i] <= q_hi; ++i)
    fits.push_back(std::pow(grid.nodes[i], 1.0 - F.rho) * (-F.d1[i]));
  if (fits.size() < 3)
    throw std::runtime_error("tail_normalization_check: decade underresolved");
  double lo = fits[0], hi = fits[0], sum = 0.0;
  for (double v : fits) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  const double mean = sum / fits.size();
  if (mean == 0.0 || (hi - lo) / std::fabs(mean) > 0.10)
    throw std::runtime_error(
        "tail_normalization_check: unstable fit across the smallest decade");
  return mean;
}

double BoundaryLayerPrediction::predict(double x) const {
  double v = std::pow(x, exponent);
  if (has_layer)
    v *= std::exp(-(epsilon / alpha) * m_alpha * std::pow(x, -alpha));
  return v;
}

BoundaryLayerPrediction boundary_layer_report(const LaplaceProfile& F,
                                              const KernelSpec& spec,
                                              double epsilon) {
  BoundaryLayerPrediction out;
  out.m0 = moments(F, 0.0);
  out.m_alpha = moments(F, spec.alpha);
  out.exponent = 2.0 * out.m0 - 1.0 - F.rho;
  out.epsilon = epsilon;
  out.alpha = spec.alpha;
  out.has_layer = epsilon > 0.0;
  out.layer_scale = out.has_layer ? std::pow(epsilon, 1.0 / spec.alpha) : 0.0;
  return out;
}

}  // namespace coag
