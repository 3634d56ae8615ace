#include "coag/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace coag {

namespace {

constexpr double kPi = 3.14159265358979323846;

double power_ker_regular(double xi, double eta, double alpha) {
  // (sin πα / π) (2 sinh(α log(ξ/η))) / (ξ - η); stable through the diagonal
  const double pref = std::sin(kPi * alpha) / kPi;
  const double diff = xi - eta;
  if (diff == 0.0) return pref * 2.0 * alpha / xi;
  return pref * 2.0 * std::sinh(alpha * std::log(xi / eta)) / diff;
}

}  // namespace

KernelSpec KernelSpec::power_law(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("KernelSpec::power_law: alpha out of (0,1)");
  KernelSpec s;
  s.alpha = alpha;
  s.C_W = 1.0;
  s.W_minus_one = 2.0 * std::cos(kPi * alpha);
  s.delta_coeff = s.W_minus_one;
  s.eval_W = [alpha](double x, double y) {
    return std::pow(x / y, alpha) + std::pow(y / x, alpha);
  };
  s.analytic_W = [alpha](std::complex<double> z) {
    const std::complex<double> za = std::pow(z, alpha);
    return za + 1.0 / za;
  };
  s.ker_regular_fn = [alpha](double xi, double eta) {
    return power_ker_regular(xi, eta, alpha);
  };
  return s;
}

double phi_plemelj(double s, const KernelSpec& spec) {
  if (!(s > 0.0)) throw std::domain_error("phi_plemelj: s must be > 0");

  // boundary value of W on the upper edge of the cut at -s, by Richardson
  // extrapolation in the offset nu (W_- is its conjugate)
  auto upper_boundary = [&](double ss) {
    const double nu0 = 1e-4 * ss;
    std::complex<double> f[4];
    for (int k = 0; k < 4; ++k) {
      const double nu = nu0 / (1 << k);
      f[k] = spec.analytic_W(std::complex<double>(-ss, nu));
    }
    // Neville elimination of the O(nu), O(nu^2), O(nu^3) terms
    for (int lev = 1; lev < 4; ++lev) {
      const double fac = std::pow(2.0, lev);
      for (int k = 3; k >= lev; --k) f[k] = (fac * f[k] - f[k - 1]) / (fac - 1.0);
    }
    return f[3];
  };

  auto jump_at = [&](double ss) { return -upper_boundary(ss).imag() / kPi; };

  if (std::fabs(s - 1.0) < 1e-6) {
    // removable point: jump(1) = 0, so φ(1) = -jump'(1); central differences
    // at two step sizes with one Richardson step
    const double d = 2e-3;
    const double g1 = (jump_at(s + d) - jump_at(s - d)) / (2.0 * d);
    const double g2 = (jump_at(s + d / 2) - jump_at(s - d / 2)) / d;
    return -(4.0 * g2 - g1) / 3.0;
  }
  return jump_at(s) / (1.0 - s);
}

double ker_regular(double xi, double eta, const KernelSpec& spec) {
  if (!(xi > 0.0 && eta > 0.0))
    throw std::domain_error("ker_regular: arguments must be > 0");
  if (spec.ker_regular_fn) return spec.ker_regular_fn(xi, eta);
  // generic route through the jump function: Ker~(ξ,η) = φ(η/ξ)/ξ
  return phi_plemelj(eta / xi, spec) / xi;
}

KernelQuadrature make_kernel_quadrature(const KernelSpec& spec, double x_min,
                                        double x_max, int n) {
  KernelQuadrature kq;
  kq.grid = make_log_grid(x_min, x_max, n, -spec.alpha, 1.0 - spec.alpha);
  kq.delta_coeff = spec.delta_coeff;
  kq.alpha = spec.alpha;
  kq.kw.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double xi = kq.grid.nodes[i];
    const double wi = kq.grid.weights[i];
    for (int j = 0; j < n; ++j) {
      kq.kw[static_cast<std::size_t>(i) * n + j] =
          wi * kq.grid.weights[j] * ker_regular(xi, kq.grid.nodes[j], spec);
    }
  }
  return kq;
}

double verify_laplace_identity(double x, double y, const KernelSpec& spec,
                               const KernelQuadrature& kq) {
  if (!(x > 0.0 && y > 0.0))
    throw std::domain_error("verify_laplace_identity: x,y must be > 0");
  const std::size_t n = kq.size();
  std::vector<double> ex(n), ey(n);
  for (std::size_t i = 0; i < n; ++i) {
    ex[i] = std::exp(-kq.grid.nodes[i] * x);
    ey[i] = std::exp(-kq.grid.nodes[i] * y);
  }
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ex[i] == 0.0) continue;
    double row = 0.0;
    const double* krow = &kq.kw[i * n];
    for (std::size_t j = 0; j < n; ++j) row += krow[j] * ey[j];
    quad += ex[i] * row;
  }
  const double rhs = quad + kq.delta_coeff / (x + y);
  const double lhs = spec.eval_W(x, y) / (x + y);
  return rhs - lhs;
}

double ker_integral_bounds_probe(const KernelSpec& spec,
                                 const KernelQuadrature& kq, double a1,
                                 double b1, double a2, double b2) {
  const double alpha = spec.alpha;
  if (!(a1 + a2 < 1.0) || !(a1 + b1 > alpha) || !(a2 + b2 > alpha) ||
      !(a1 + b1 + a2 + b2 > 1.0) || a1 < 0.0 || a2 < 0.0 ||
      !(a1 < 1.0 - alpha) || !(a2 < 1.0 - alpha) || !(b1 > 0.0) ||
      !(b2 > 0.0))
    throw std::domain_error(
        "ker_integral_bounds_probe: exponents violate the hypotheses");
  const std::size_t n = kq.size();
  std::vector<double> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = kq.grid.nodes[i];
    u[i] = std::pow(t, -a1) * std::pow(t + 1.0, -b1);
    v[i] = std::pow(t, -a2) * std::pow(t + 1.0, -b2);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    const double* krow = &kq.kw[i * n];
    for (std::size_t j = 0; j < n; ++j) row += std::fabs(krow[j]) * v[j];
    total += u[i] * row;
  }
  // δ-line collapses to a single integral
  double dline = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = kq.grid.nodes[i];
    dline += kq.grid.weights[i] * std::pow(t, -a1 - a2) *
             std::pow(t + 1.0, -b1 - b2);
  }
  return total + std::fabs(kq.delta_coeff) * dline;
}

}  // namespace coag
