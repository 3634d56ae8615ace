#include <doctest.h>

#include <cmath>
#include <random>

#include "coag/norms.hpp"
#include "coag/operators.hpp"
#include "coag/special.hpp"

using namespace coag;

namespace {

QuadratureGrid grid_n(int n) { return make_log_grid(1e-8, 1e6, n, -0.3, 1.7); }

LaplaceProfile const_profile(double c, double rho, const QuadratureGrid& g) {
  LaplaceProfile p = make_zero_profile(rho, g);
  for (auto& v : p.value) v = c;
  p.value_at_zero = c;
  p.tail_exponent = 0.0;  // constant continuation beyond the grid
  p.tail_coeff = c;
  return p;
}

LaplaceProfile exp_mix(const QuadratureGrid& g, double rho, double a, double b,
                       double c) {
  // a e^{-q} + b e^{-2q} + c e^{-3q}
  return make_profile(
      rho, g,
      [=](double q) {
        return a * std::exp(-q) + b * std::exp(-2 * q) + c * std::exp(-3 * q);
      },
      [=](double q) {
        return -a * std::exp(-q) - 2 * b * std::exp(-2 * q) -
               3 * c * std::exp(-3 * q);
      },
      [=](double q) {
        return a * std::exp(-q) + 4 * b * std::exp(-2 * q) +
               9 * c * std::exp(-3 * q);
      },
      a + b + c, 1.0, 10.0);
}

double sup_abs(const LaplaceProfile& p) {
  double s = std::fabs(p.value_at_zero);
  for (double v : p.value) s = std::max(s, std::fabs(v));
  return s;
}

}  // namespace

TEST_CASE("op_A on constants and the explicit profile") {
  const auto g = grid_n(600);
  const LaplaceProfile c = const_profile(0.4, 0.7, g);
  CHECK(sup_abs(op_A(c)) < 1e-14);

  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  const LaplaceProfile A = op_A(fbar);
  // A''(1) = -(1-rho) Fbar'(1)/1 = 0.3 * 0.1225
  double at1 = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (std::fabs(g.nodes[i] - 1.0) < 1e-9) at1 = A.d2[i];
  // node may not hit 1.0 exactly; evaluate through the interpolant
  const double d2_at_1 = profile_eval(A, 1.0).d2;
  CHECK(d2_at_1 == doctest::Approx(0.03675).epsilon(1e-6));
  (void)at1;
}

TEST_CASE("linearity and bilinearity") {
  const auto g = grid_n(400);
  const LaplaceProfile G = exp_mix(g, 0.7, 1.0, -1.5, 0.5);
  const LaplaceProfile H = exp_mix(g, 0.7, 0.3, 0.4, -0.7);

  const LaplaceProfile lhsA = op_A(profile_lincomb(2.0, G, -3.0, H));
  const LaplaceProfile rhsA =
      profile_lincomb(2.0, op_A(G), -3.0, op_A(H));
  CHECK(sup_abs(profile_lincomb(1.0, lhsA, -1.0, rhsA)) < 1e-10);

  const LaplaceProfile K = exp_mix(g, 0.7, 0.8, -0.9, 0.1);
  const LaplaceProfile lhsB = op_B2(profile_lincomb(2.0, G, 1.0, K), H);
  const LaplaceProfile rhsB =
      profile_lincomb(2.0, op_B2(G, H), 1.0, op_B2(K, H));
  CHECK(sup_abs(profile_lincomb(1.0, lhsB, -1.0, rhsB)) < 1e-10);

  const LaplaceProfile lhsB2 = op_B2(H, profile_lincomb(2.0, G, 1.0, K));
  const LaplaceProfile rhsB2 =
      profile_lincomb(2.0, op_B2(H, G), 1.0, op_B2(H, K));
  CHECK(sup_abs(profile_lincomb(1.0, lhsB2, -1.0, rhsB2)) < 1e-10);
}

TEST_CASE("B2 vanishes on constant second arguments") {
  const auto g = grid_n(400);
  const LaplaceProfile G = exp_mix(g, 0.7, 1.0, -0.5, 0.25);
  const LaplaceProfile c = const_profile(0.9, 0.7, g);
  CHECK(sup_abs(op_B2(G, c)) < 1e-14);
}

TEST_CASE("the explicit profile solves the eps=0 equation") {
  // residual sup decreasing under grid refinement until the completion
  // floor (~1e-9, set by the finite grid range) takes over
  auto res_at = [](int n) {
    const LaplaceProfile fbar = make_fbar_profile(0.7, grid_n(n));
    return selfsim_residual_sup(fbar, 0.0, nullptr);
  };
  const double r100 = res_at(100), r150 = res_at(150), r200 = res_at(200);
  const double res_fine = res_at(600);
  CHECK(res_fine < 1e-5);
  CHECK(r150 < r100);
  CHECK(r200 < r150);
  CHECK(res_fine < r200);

  // other tail exponents
  for (double rho : {0.55, 0.8}) {
    const LaplaceProfile fbar = make_fbar_profile(rho, grid_n(600));
    CHECK(selfsim_residual_sup(fbar, 0.0, nullptr) < 1e-5);
  }
}

TEST_CASE("scale equivariance of the eps=0 equation") {
  const auto g = grid_n(600);
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  // Fbar(q/a) on the same grid is again a solution
  LaplaceProfile scaled = make_profile(
      0.7, g, [&](double q) { return profile_eval(fbar, q / 2.0).value; },
      [&](double q) { return profile_eval(fbar, q / 2.0).d1 / 2.0; },
      [&](double q) { return profile_eval(fbar, q / 2.0).d2 / 4.0; }, 0.7,
      0.7, 0.7);
  CHECK(selfsim_residual_sup(scaled, 0.0, nullptr) < 1e-5);
}

TEST_CASE("shift operators") {
  const auto g = grid_n(500);
  const LaplaceProfile G = exp_mix(g, 0.7, 1.0, -0.4, 0.15);

  // shift(G, 0) is the identity
  const LaplaceProfile s0 = shift(G, 0.0);
  CHECK(sup_abs(profile_lincomb(1.0, s0, -1.0, G)) == 0.0);

  // shift composition
  const LaplaceProfile s11 = shift(shift(G, 1.0), 1.0);
  const LaplaceProfile s2 = shift(G, 2.0);
  CHECK(sup_abs(profile_lincomb(1.0, s11, -1.0, s2)) < 1e-10);

  // norm contraction under the shift
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  CHECK(full_norm(shift(fbar, 1.0), 2, 0.1, 0.35) <=
        full_norm(fbar, 2, 0.1, 0.35) * (1 + 1e-9));
}

TEST_CASE("perturbation kernel N and B_W") {
  const auto g = grid_n(400);
  const KernelSpec spec = KernelSpec::power_law(1.0 / 3.0);
  const KernelQuadrature kq = make_kernel_quadrature(spec, 1e-10, 1e6, 240);
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);

  // constant second argument kills both N pieces
  const LaplaceProfile c = const_profile(0.5, 0.7, g);
  CHECK(op_N(fbar, c, kq, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sup_abs(op_BW(fbar, c, kq)) < 1e-12);

  // small-r growth bound: r^{2-rho-mu} |N| bounded on (0, 1]
  const double mu = 0.15;
  double worst_small = 0.0;
  for (double r = 1e-6; r <= 1.0; r *= 3.0) {
    worst_small = std::max(worst_small, std::pow(r, 2.0 - 0.7 - mu) *
                                            std::fabs(op_N(fbar, fbar, kq, r)));
  }
  CHECK(std::isfinite(worst_small));
  CHECK(worst_small < 10.0);

  // large-r decay: r^{2+theta-alpha} |N| bounded on [1, 100]
  const double theta = 0.4;
  double worst_large = 0.0;
  for (double r = 1.0; r <= 100.0; r *= 2.0) {
    worst_large =
        std::max(worst_large, std::pow(r, 2.0 + theta - 1.0 / 3.0) *
                                  std::fabs(op_N(fbar, fbar, kq, r)));
  }
  CHECK(std::isfinite(worst_large));
  CHECK(worst_large < 10.0);

  // B_W norm control and the difference regularisation
  const LaplaceProfile BW = op_BW(fbar, fbar, kq);
  const double n_loss = full_norm(BW, 2, mu, theta - 1.0 / 3.0);
  CHECK(std::isfinite(n_loss));
  const LaplaceProfile BWdiff = one_minus_zeta(BW);
  const double n_diff = full_norm(BWdiff, 2, mu, theta);
  CHECK(std::isfinite(n_diff));
}

TEST_CASE("P functional: monotone, zero at zero, physical-space oracle") {
  const double rho = 0.7, alpha = 1.0 / 3.0;
  const auto g = grid_n(500);
  const KernelSpec spec = KernelSpec::power_law(alpha);
  const KernelQuadrature kq = make_kernel_quadrature(spec, 1e-10, 1e6, 300);
  const LaplaceProfile fbar = make_fbar_profile(rho, g);

  CHECK(op_P(fbar, kq, 0.0) == 0.0);
  double prev = 0.0;
  for (double q : {0.1, 1.0, 10.0}) {
    const double p = op_P(fbar, kq, q);
    CHECK(p > prev);
    prev = p;
  }

  // physical-space oracle, separable for the power family:
  //   P(q) = ∫ x^a f (1-e^{-qx}) dx · ∫ x^-a f (1-e^{-qx}) dx
  ExactProfileParams params(rho);
  const QuadratureGrid xg = make_log_grid(1e-7, 1e5, 900, rho - 1.0, 1.0 + rho);
  auto half_moment = [&](double a, double q) {
    GriddedFunction f;
    f.grid = xg;
    f.grid.head_exponent = rho - 1.0 + a;
    f.grid.tail_exponent = 1.0 + rho - a;
    f.values.resize(xg.size());
    for (std::size_t i = 0; i < xg.size(); ++i) {
      const double x = xg.nodes[i];
      f.values[i] =
          std::pow(x, a) * eval_fbar(x, params) * (1.0 - std::exp(-q * x));
    }
    // the 1-e^{-qx} factor upgrades the head power by one
    f.grid.head_exponent = rho + a;
    f.head_coeff.reset();
    return integrate(f);
  };
  const double q = 1.0;
  const double oracle = half_moment(alpha, q) * half_moment(-alpha, q);
  CHECK(op_P(fbar, kq, q) == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("empirical continuity constants are refinement stable") {
  auto fitted = [](int n) {
    const auto g = grid_n(n);
    const LaplaceProfile fbar = make_fbar_profile(0.7, g);
    const LaplaceProfile probes[2] = {fbar, shift(fbar, 1.0)};
    double cA = 0.0, cB = 0.0;
    for (const auto& G : probes) {
      cA = std::max(cA, full_norm(op_A(G), 2, 0.1, 0.35) /
                            full_norm(G, 1, 0.1, 0.35));
      cB = std::max(cB, full_norm(op_B2(G, fbar), 2, 0.1, 0.35) /
                            (full_norm(G, 1, 0.0, 0.35) *
                             full_norm(fbar, 1, 0.0, 0.35)));
    }
    return std::pair{cA, cB};
  };
  const auto [cA1, cB1] = fitted(300);
  const auto [cA2, cB2] = fitted(600);
  CHECK(std::isfinite(cA2));
  CHECK(std::isfinite(cB2));
  CHECK(std::fabs(cA2 / cA1 - 1.0) < 0.05);
  CHECK(std::fabs(cB2 / cB1 - 1.0) < 0.05);
}

TEST_CASE("operator outputs pass the derivative smoke check") {
  const auto g = grid_n(500);
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  CHECK(profile_consistent(fbar));
  CHECK(profile_consistent(op_A(fbar)));
  CHECK(profile_consistent(op_B2(fbar, fbar)));

  // negative control: corrupted derivatives are caught
  LaplaceProfile broken = fbar;
  for (auto& v : broken.d1) v = -v;
  CHECK_FALSE(profile_consistent(broken));
}

TEST_CASE("rescaled profiles keep the residual") {
  const auto g = grid_n(600);
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  // baseline quadrature noise of the eps=0 identity
  const double base = selfsim_residual_sup(fbar, 0.0, nullptr);
  LaplaceProfile scaled = make_profile(
      0.7, g, [&](double q) { return profile_eval(fbar, q / 2.0).value; },
      [&](double q) { return profile_eval(fbar, q / 2.0).d1 / 2.0; },
      [&](double q) { return profile_eval(fbar, q / 2.0).d2 / 4.0; }, 0.7,
      0.7, 0.7);
  CHECK(selfsim_residual_sup(scaled, 0.0, nullptr) < 2.0 * base + 1e-6);
}
