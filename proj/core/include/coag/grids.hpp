#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace coag {

struct LaplaceProfile;

/// Log-spaced quadrature nodes on [x_min, x_max] with declared power-law
/// behaviour of the integrands at the endpoints: integrand ~ c x^head_exponent
/// near 0 and ~ c x^{-tail_exponent} near infinity. The declared exponents
/// drive the closed-form completion of integrals beyond the grid range.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;  // trapezoid-in-log, includes the Jacobian x
  double x_min = 0.0;
  double x_max = 0.0;
  double log_step = 0.0;
  double head_exponent = 0.0;
  double tail_exponent = 0.0;

  std::size_t size() const { return nodes.size(); }
};

QuadratureGrid make_log_grid(double x_min, double x_max, int n,
                             double head_exponent, double tail_exponent);

/// Function values on a grid. head_coeff/tail_coeff, when present, pin the
/// analytic completion; otherwise the coefficient is taken from the boundary
/// node via the declared exponent.
struct GriddedFunction {
  QuadratureGrid grid;
  std::vector<double> values;
  std::optional<double> head_coeff;
  std::optional<double> tail_coeff;
};

/// Full integral over (0, infinity): grid quadrature plus closed-form
/// power-law completion of both tails. Throws on divergent declarations
/// (head_exponent <= -1 or tail_exponent <= 1 with nonzero data).
double integrate(const GriddedFunction& f);

enum class TailWeight { One, RminusQ, RminusQOverR, OneOverR };

/// ∫_q^∞ w(r,q) f(r) dr with w one of {1, (r-q), (r-q)/r, 1/r} and analytic
/// tail completion. Requires q <= x_max (coverage error otherwise).
double integrate_from(const GriddedFunction& f, double q, TailWeight w);

/// Laplace transform of a density carried on a physical-space grid:
///   F(q) = ∫ f(x) e^{-qx} dx,  F' and F'' by quadrature against -x e^{-qx}
/// and x^2 e^{-qx}, with incomplete-gamma completions of both tails.
/// The density class is declared by the grid exponents (head rho-1, tail
/// 1+rho); F(0) re-uses the plain integrate() path.
LaplaceProfile laplace_of_density(const GriddedFunction& f,
                                  const QuadratureGrid& q_grid);

namespace quad {

/// Trapezoid rule on a uniform grid with Euler-Maclaurin endpoint
/// corrections through h^4 (derivatives by one-sided finite differences),
/// leaving an O(h^6) truncation error for smooth data.
double em_trapezoid(std::span<const double> g, double h);

/// Running integrals I_k = ∫_{u_0}^{u_k} with the same corrections.
std::vector<double> em_prefix(std::span<const double> g, double h);

/// Suffix integrals S_k = ∫_{u_k}^{u_end}.
std::vector<double> em_suffix(std::span<const double> g, double h);

}  // namespace quad

}  // namespace coag
