#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "coag/grids.hpp"

namespace coag {

/// A homogeneity-zero symmetric perturbation kernel W together with the
/// data of its Laplace representation
///   W(x,y)/(x+y) = ∬ Ker(ξ,η) e^{-ξx-ηy} dξ dη,
///   Ker = Ker~ (continuous) + W(-1) δ(ξ-η).
/// The shipped concrete family is W(x,y) = (x/y)^α + (y/x)^α; the Plemelj
/// jump-function path is written against the analytic evaluator so other
/// analytic kernels can plug in.
struct KernelSpec {
  double alpha = 0.0;
  double C_W = 1.0;          // W(ξ,1) ~ C_W ξ^-α as ξ -> 0
  double W_minus_one = 0.0;  // boundary value at -1; δ-line coefficient
  double delta_coeff = 0.0;  // equal to W_minus_one

  /// W(x,y) for positive arguments.
  std::function<double(double, double)> eval_W;
  /// Analytic extension z -> W(z,1) on the cut plane (principal branch).
  std::function<std::complex<double>(std::complex<double>)> analytic_W;
  /// Continuous kernel part, closed form when available.
  std::function<double(double, double)> ker_regular_fn;

  static KernelSpec power_law(double alpha);
};

/// Jump function via the Sokhotski-Plemelj boundary values of analytic_W,
///   φ(s) = [W_-(-s) - W_+(-s)] / (2πi (1-s)),
/// the boundary values taken as Richardson-extrapolated limits off the cut.
double phi_plemelj(double s, const KernelSpec& spec);

/// Continuous kernel part Ker~(ξ,η); for the power family
///   (sin πα / π) ((ξ/η)^α - (η/ξ)^α) / (ξ - η),
/// with the removable diagonal limit 2α sin(πα)/(π ξ).
double ker_regular(double xi, double eta, const KernelSpec& spec);

/// Precomputed kernel quadrature: log nodes (shared by both axes), plain
/// trapezoid weights, and the weighted matrix kw[i*n+j] = w_i w_j Ker~(ξ_i,η_j).
struct KernelQuadrature {
  QuadratureGrid grid;
  std::vector<double> kw;
  double delta_coeff = 0.0;
  double alpha = 0.0;

  std::size_t size() const { return grid.size(); }
};

KernelQuadrature make_kernel_quadrature(const KernelSpec& spec,
                                        double x_min = 1e-10,
                                        double x_max = 1e6, int n = 320);

/// RHS - LHS of the Laplace representation identity at (x,y):
///   ∬ Ker~ e^{-ξx-ηy} + W(-1)/(x+y)  -  W(x,y)/(x+y).
double verify_laplace_identity(double x, double y, const KernelSpec& spec,
                               const KernelQuadrature& kq);

/// ∬ |Ker| ξ^{-a1} (ξ+1)^{-b1} η^{-a2} (η+1)^{-b2}; the hypotheses
/// a1+a2 < 1, ak+bk > α, a1+b1+a2+b2 > 1, ak in [0,1-α) are enforced.
double ker_integral_bounds_probe(const KernelSpec& spec,
                                 const KernelQuadrature& kq, double a1,
                                 double b1, double a2, double b2);

}  // namespace coag
