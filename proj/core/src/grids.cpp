#include "coag/grids.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coag/profile.hpp"
#include "coag/special.hpp"

namespace coag {

namespace quad {

namespace {

// One-sided / central finite differences on uniform data, O(h^4) for the
// first derivative and O(h^2) for the third; enough for the h^2/12 and
// h^4/720 Euler-Maclaurin boundary terms.
double d1_forward(std::span<const double> g, std::size_t i, double h) {
  return (-25.0 * g[i] + 48.0 * g[i + 1] - 36.0 * g[i + 2] +
          16.0 * g[i + 3] - 3.0 * g[i + 4]) /
         (12.0 * h);
}

double d1_backward(std::span<const double> g, std::size_t i, double h) {
  return (25.0 * g[i] - 48.0 * g[i - 1] + 36.0 * g[i - 2] -
          16.0 * g[i - 3] + 3.0 * g[i - 4]) /
         (12.0 * h);
}

double d1_central(std::span<const double> g, std::size_t i, double h) {
  return (g[i - 2] - 8.0 * g[i - 1] + 8.0 * g[i + 1] - g[i + 2]) / (12.0 * h);
}

double d3_forward(std::span<const double> g, std::size_t i, double h) {
  return (-5.0 * g[i] + 18.0 * g[i + 1] - 24.0 * g[i + 2] +
          14.0 * g[i + 3] - 3.0 * g[i + 4]) /
         (2.0 * h * h * h);
}

double d3_backward(std::span<const double> g, std::size_t i, double h) {
  return (5.0 * g[i] - 18.0 * g[i - 1] + 24.0 * g[i - 2] -
          14.0 * g[i - 3] + 3.0 * g[i - 4]) /
         (2.0 * h * h * h);
}

double d3_central(std::span<const double> g, std::size_t i, double h) {
  return (-g[i - 2] + 2.0 * g[i - 1] - 2.0 * g[i + 1] + g[i + 2]) /
         (2.0 * h * h * h);
}

double deriv1(std::span<const double> g, std::size_t i, double h) {
  const std::size_t n = g.size();
  if (i >= 2 && i + 2 < n) return d1_central(g, i, h);
  if (i + 4 < n) return d1_forward(g, i, h);
  return d1_backward(g, i, h);
}

double deriv3(std::span<const double> g, std::size_t i, double h) {
  const std::size_t n = g.size();
  if (i >= 2 && i + 2 < n) return d3_central(g, i, h);
  if (i + 4 < n) return d3_forward(g, i, h);
  return d3_backward(g, i, h);
}

}  // namespace

double em_trapezoid(std::span<const double> g, double h) {
  const std::size_t n = g.size();
  if (n < 2) return 0.0;
  double t = 0.5 * (g[0] + g[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) t += g[i];
  t *= h;
  if (n < 6) return t;
  const double c2 = h * h / 12.0;
  const double c4 = h * h * h * h / 720.0;
  t -= c2 * (d1_backward(g, n - 1, h) - d1_forward(g, 0, h));
  t += c4 * (d3_backward(g, n - 1, h) - d3_forward(g, 0, h));
  return t;
}

std::vector<double> em_prefix(std::span<const double> g, double h) {
  const std::size_t n = g.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  double run = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    run += 0.5 * h * (g[i - 1] + g[i]);
    out[i] = run;
  }
  if (n < 6) return out;
  const double c2 = h * h / 12.0;
  const double c4 = h * h * h * h / 720.0;
  const double d1_0 = d1_forward(g, 0, h);
  const double d3_0 = d3_forward(g, 0, h);
  for (std::size_t i = 1; i < n; ++i) {
    out[i] += -c2 * (deriv1(g, i, h) - d1_0) + c4 * (deriv3(g, i, h) - d3_0);
  }
  return out;
}

std::vector<double> em_suffix(std::span<const double> g, double h) {
  const std::size_t n = g.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  double run = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) {
    run += 0.5 * h * (g[i] + g[i + 1]);
    out[i] = run;
  }
  if (n < 6) return out;
  const double c2 = h * h / 12.0;
  const double c4 = h * h * h * h / 720.0;
  const double d1_e = d1_backward(g, n - 1, h);
  const double d3_e = d3_backward(g, n - 1, h);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] += -c2 * (d1_e - deriv1(g, i, h)) + c4 * (d3_e - deriv3(g, i, h));
  }
  return out;
}

}  // namespace quad

QuadratureGrid make_log_grid(double x_min, double x_max, int n,
                             double head_exponent, double tail_exponent) {
  if (!(x_min > 0.0 && x_max > x_min))
    throw std::invalid_argument("make_log_grid: need 0 < x_min < x_max");
  if (n < 8) throw std::invalid_argument("make_log_grid: need n >= 8");
  QuadratureGrid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.head_exponent = head_exponent;
  g.tail_exponent = tail_exponent;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double u0 = std::log(x_min);
  const double h = (std::log(x_max) - u0) / (n - 1);
  g.log_step = h;
  for (int i = 0; i < n; ++i) g.nodes[i] = std::exp(u0 + i * h);
  g.nodes[0] = x_min;
  g.nodes[n - 1] = x_max;
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
    g.weights[i] = w * g.nodes[i];
  }
  return g;
}

namespace {

double head_coefficient(const GriddedFunction& f) {
  if (f.head_coeff) return *f.head_coeff;
  return f.values.front() * std::pow(f.grid.x_min, -f.grid.head_exponent);
}

double tail_coefficient(const GriddedFunction& f) {
  if (f.tail_coeff) return *f.tail_coeff;
  if (!(f.grid.tail_exponent < std::numeric_limits<double>::infinity()))
    return 0.0;
  return f.values.back() * std::pow(f.grid.x_max, f.grid.tail_exponent);
}

// Closed-form ∫ of c r^a against the supported weights over [lo, hi], q the
// weight offset. a is the declared head exponent.
double head_power_piece(double c, double a, double lo, double hi, double q,
                        TailWeight w) {
  auto pow_int = [](double x, double p) {
    return p == 0.0 ? std::log(x) : std::pow(x, p) / p;
  };
  switch (w) {
    case TailWeight::One:
      return c * (pow_int(hi, a + 1.0) - pow_int(lo, a + 1.0));
    case TailWeight::OneOverR:
      return c * (pow_int(hi, a) - pow_int(lo, a));
    case TailWeight::RminusQ:
      return c * ((pow_int(hi, a + 2.0) - pow_int(lo, a + 2.0)) -
                  q * (pow_int(hi, a + 1.0) - pow_int(lo, a + 1.0)));
    case TailWeight::RminusQOverR:
      return c * ((pow_int(hi, a + 1.0) - pow_int(lo, a + 1.0)) -
                  q * (pow_int(hi, a) - pow_int(lo, a)));
  }
  return 0.0;
}

// ∫_{X}^∞ of c r^{-b} against the weight; throws if the declared decay is
// too weak for the requested weight.
double tail_power_piece(double c, double b, double X, double q, TailWeight w) {
  if (c == 0.0) return 0.0;
  if (!(b < std::numeric_limits<double>::infinity())) return 0.0;
  switch (w) {
    case TailWeight::One:
      if (b <= 1.0) throw std::runtime_error("integrate: divergent tail (need tail_exponent > 1)");
      return c * std::pow(X, 1.0 - b) / (b - 1.0);
    case TailWeight::OneOverR:
      if (b <= 0.0) throw std::runtime_error("integrate: divergent tail");
      return c * std::pow(X, -b) / b;
    case TailWeight::RminusQ:
      if (b <= 2.0) throw std::runtime_error("integrate_from: divergent tail (need tail_exponent > 2)");
      return c * (std::pow(X, 2.0 - b) / (b - 2.0) -
                  q * std::pow(X, 1.0 - b) / (b - 1.0));
    case TailWeight::RminusQOverR:
      if (b <= 1.0) throw std::runtime_error("integrate_from: divergent tail");
      return c * (std::pow(X, 1.0 - b) / (b - 1.0) -
                  q * std::pow(X, -b) / b);
  }
  return 0.0;
}

double apply_weight(double r, double q, TailWeight w) {
  switch (w) {
    case TailWeight::One: return 1.0;
    case TailWeight::OneOverR: return 1.0 / r;
    case TailWeight::RminusQ: return r - q;
    case TailWeight::RminusQOverR: return (r - q) / r;
  }
  return 0.0;
}

// Cubic Lagrange interpolation of gridded values in log-x.
double interp_values(const GriddedFunction& f, double x) {
  const auto& nodes = f.grid.nodes;
  const std::size_t n = nodes.size();
  const double u = std::log(x);
  const double u0 = std::log(f.grid.x_min);
  const double h = f.grid.log_step;
  double t = (u - u0) / h;
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(std::floor(t)) - 1;
  if (k < 0) k = 0;
  if (k > static_cast<std::ptrdiff_t>(n) - 4) k = static_cast<std::ptrdiff_t>(n) - 4;
  const double s = t - k;  // position relative to the 4-point stencil
  const double l0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  const double l1 = s * (s - 2.0) * (s - 3.0) / 2.0;
  const double l2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
  const double l3 = s * (s - 1.0) * (s - 2.0) / 6.0;
  return l0 * f.values[k] + l1 * f.values[k + 1] + l2 * f.values[k + 2] +
         l3 * f.values[k + 3];
}

}  // namespace

double integrate(const GriddedFunction& f) {
  const std::size_t n = f.grid.size();
  if (n != f.values.size())
    throw std::invalid_argument("integrate: values/grid size mismatch");
  const double a = f.grid.head_exponent;
  const double ch = head_coefficient(f);
  if (ch != 0.0 && a <= -1.0)
    throw std::runtime_error("integrate: divergent head (need head_exponent > -1)");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = f.values[i] * f.grid.nodes[i];
  double total = quad::em_trapezoid(g, f.grid.log_step);
  if (ch != 0.0)
    total += head_power_piece(ch, a, 0.0, f.grid.x_min, 0.0, TailWeight::One);
  total += tail_power_piece(tail_coefficient(f), f.grid.tail_exponent,
                            f.grid.x_max, 0.0, TailWeight::One);
  return total;
}

double integrate_from(const GriddedFunction& f, double q, TailWeight w) {
  const auto& nodes = f.grid.nodes;
  const std::size_t n = nodes.size();
  if (q < 0.0) throw std::invalid_argument("integrate_from: q must be >= 0");
  if (q > f.grid.x_max)
    throw std::runtime_error("integrate_from: q beyond grid coverage");

  double total = tail_power_piece(tail_coefficient(f), f.grid.tail_exponent,
                                  f.grid.x_max, q, w);

  if (q <= f.grid.x_min) {
    // head-model piece over [q, x_min], then the whole grid
    const double ch = head_coefficient(f);
    if (ch != 0.0) {
      const double a = f.grid.head_exponent;
      const double needed = (w == TailWeight::OneOverR ||
                             w == TailWeight::RminusQOverR)
                                ? a
                                : a + 1.0;
      if (q == 0.0 && needed <= 0.0 && w != TailWeight::RminusQ)
        throw std::runtime_error("integrate_from: divergent head for this weight");
      total += head_power_piece(ch, a, std::max(q, 1e-300), f.grid.x_min, q, w);
    }
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
      g[i] = apply_weight(nodes[i], q, w) * f.values[i] * nodes[i];
    total += quad::em_trapezoid(g, f.grid.log_step);
    return total;
  }

  // locate the cell containing q
  std::size_t k = 0;
  {
    const double t = (std::log(q) - std::log(f.grid.x_min)) / f.grid.log_step;
    k = static_cast<std::size_t>(std::max(0.0, std::floor(t)));
    if (k >= n - 1) k = n - 2;
    while (k > 0 && nodes[k] > q) --k;
    while (k + 1 < n - 1 && nodes[k + 1] < q) ++k;
  }

  // partial cell [q, nodes[k+1]] by 5-point Gauss-Legendre
  {
    static const double gl_x[5] = {-0.9061798459386640, -0.5384693101056831,
                                   0.0, 0.5384693101056831,
                                   0.9061798459386640};
    static const double gl_w[5] = {0.2369268850561891, 0.4786286704993665,
                                   0.5688888888888889, 0.4786286704993665,
                                   0.2369268850561891};
    const double lo = q, hi = nodes[k + 1];
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    if (half > 0.0) {
      double part = 0.0;
      for (int j = 0; j < 5; ++j) {
        const double r = mid + half * gl_x[j];
        part += gl_w[j] * apply_weight(r, q, w) * interp_values(f, r);
      }
      total += half * part;
    }
  }

  // full cells from k+1 to the end
  const std::size_t m = n - (k + 1);
  if (m >= 2) {
    std::vector<double> g(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double r = nodes[k + 1 + i];
      g[i] = apply_weight(r, q, w) * f.values[k + 1 + i] * r;
    }
    total += quad::em_trapezoid(g, f.grid.log_step);
  }
  return total;
}

LaplaceProfile laplace_of_density(const GriddedFunction& f,
                                  const QuadratureGrid& q_grid) {
  const std::size_t n = f.grid.size();
  const double a = f.grid.head_exponent;
  const double b = f.grid.tail_exponent;
  const double ch = head_coefficient(f);
  const double ct = tail_coefficient(f);
  if (ch != 0.0 && a <= -1.0)
    throw std::runtime_error("laplace_of_density: divergent head");
  if (ct != 0.0 && b <= 1.0)
    throw std::runtime_error("laplace_of_density: divergent tail");

  LaplaceProfile out;
  out.grid = q_grid;
  const std::size_t m = q_grid.size();
  out.value.assign(m, 0.0);
  out.d1.assign(m, 0.0);
  out.d2.assign(m, 0.0);

  const double x0 = f.grid.x_min;
  const double xN = f.grid.x_max;
  const bool finite_tail = b < std::numeric_limits<double>::infinity();

  std::vector<double> g0(n), g1(n), g2(n);
  for (std::size_t j = 0; j < m; ++j) {
    const double q = q_grid.nodes[j];
    for (std::size_t i = 0; i < n; ++i) {
      const double x = f.grid.nodes[i];
      const double e = std::exp(-q * x) * f.values[i] * x;  // log Jacobian
      g0[i] = e;
      g1[i] = e * x;
      g2[i] = e * x * x;
    }
    double v = quad::em_trapezoid(g0, f.grid.log_step);
    double w1 = quad::em_trapezoid(g1, f.grid.log_step);
    double w2 = quad::em_trapezoid(g2, f.grid.log_step);
    if (ch != 0.0) {
      const double s = q * x0;
      v += ch * lower_inc_gamma(a + 1.0, s) / std::pow(q, a + 1.0);
      w1 += ch * lower_inc_gamma(a + 2.0, s) / std::pow(q, a + 2.0);
      w2 += ch * lower_inc_gamma(a + 3.0, s) / std::pow(q, a + 3.0);
    }
    if (ct != 0.0 && finite_tail) {
      const double s = q * xN;
      if (s < 600.0) {  // otherwise the completion underflows to zero
        v += ct * std::pow(q, b - 1.0) * upper_inc_gamma(1.0 - b, s);
        w1 += ct * std::pow(q, b - 2.0) * upper_inc_gamma(2.0 - b, s);
        w2 += ct * std::pow(q, b - 3.0) * upper_inc_gamma(3.0 - b, s);
      }
    }
    out.value[j] = v;
    out.d1[j] = -w1;
    out.d2[j] = w2;
  }

  out.value_at_zero = integrate(f);

  const double rho = a + 1.0;
  out.rho = rho;
  if (rho > 0.0 && rho < 1.0 && ct != 0.0 && finite_tail && b == 1.0 + rho) {
    out.head_exponent = rho;
    out.head_coeff = ct * gamma_fn(1.0 - rho) / rho;
    out.tail_exponent = rho;
    out.tail_coeff = ch * gamma_fn(rho);
  } else {
    fit_endpoint_models(out, true);
  }
  return out;
}

}  // namespace coag
