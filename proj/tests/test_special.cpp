#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coag/grids.hpp"
#include "coag/profile.hpp"
#include "coag/special.hpp"

using namespace coag;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma function reference values") {
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-13));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  // cross-check against the library implementation on a sweep
  for (double z = 0.05; z < 10.0; z += 0.173) {
    CHECK(gamma_fn(z) == doctest::Approx(std::tgamma(z)).epsilon(5e-13));
  }
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("incomplete gamma against quadrature") {
  // γ(a,x) + Γ(a,x) = Γ(a)
  for (double a : {0.3, 0.7, 1.2, 2.5}) {
    for (double x : {0.01, 0.5, 1.0, 3.0, 20.0}) {
      const double total = lower_inc_gamma(a, x) + upper_inc_gamma(a, x);
      CHECK(total == doctest::Approx(gamma_fn(a)).epsilon(1e-12));
    }
  }
  // negative parameter by recurrence: Γ(a,x) = (Γ(a+1,x) - x^a e^{-x})/a
  for (double a : {-0.7, -0.3}) {
    for (double x : {0.2, 1.0, 5.0}) {
      const double lhs = upper_inc_gamma(a, x);
      const double rhs =
          (upper_inc_gamma(a + 1.0, x) - std::pow(x, a) * std::exp(-x)) / a;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("Fbar and Qbar closed forms") {
  ExactProfileParams p7(0.7);
  ExactProfileParams p5(0.5);
  CHECK(eval_Fbar(0.0, p7) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(eval_Fbar(1.0, p7) == doctest::Approx(0.35).epsilon(1e-15));
  CHECK(eval_Fbar(1.0, p5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eval_Qbar(0.0, p7) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(eval_Qbar(1.0, p7) == doctest::Approx(0.35).epsilon(1e-15));

  // Qbar + Fbar = rho on a grid
  for (double q = 1e-6; q < 1e6; q *= 7.3) {
    CHECK(eval_Qbar(q, p7) + eval_Fbar(q, p7) ==
          doctest::Approx(0.7).epsilon(1e-14));
  }

  // Fbar strictly decreasing, Qbar strictly increasing, both bounded by rho
  double prev_f = eval_Fbar(0.0, p7), prev_q = -1.0;
  for (double q = 1e-6; q < 1e6; q *= 3.1) {
    const double f = eval_Fbar(q, p7), qq = eval_Qbar(q, p7);
    CHECK(f < prev_f);
    CHECK(qq > prev_q);
    CHECK(f <= 0.7);
    CHECK(qq <= 0.7);
    prev_f = f;
    prev_q = qq;
  }
}

TEST_CASE("Fbar derivatives") {
  ExactProfileParams p5(0.5);
  CHECK(eval_Fbar_deriv(1.0, 1, p5) == doctest::Approx(-0.0625).epsilon(1e-14));

  // second derivative against a central finite difference of Fbar'
  ExactProfileParams p7(0.7);
  for (double q : {0.3, 1.0, 4.7}) {
    const double h = 1e-5 * q;
    const double fd =
        (eval_Fbar_deriv(q + h, 1, p7) - eval_Fbar_deriv(q - h, 1, p7)) /
        (2.0 * h);
    CHECK(eval_Fbar_deriv(q, 2, p7) == doctest::Approx(fd).epsilon(1e-7));
  }

  // q^{1-rho} (-Fbar') -> rho^2 as q -> 0
  {
    ExactProfileParams p8(0.8);
    const double q = 1e-8;
    const double lim = std::pow(q, 1.0 - 0.8) * (-eval_Fbar_deriv(q, 1, p8));
    CHECK(std::fabs(lim - 0.64) < 1e-6);
  }
  // exact deviation law: rho^2/(1+q^rho)^2 = rho^2 (1 - 2 q^rho + O(q^2rho))
  {
    const double q = 1e-8, rho = 0.7;
    const double lim = std::pow(q, 1.0 - rho) * (-eval_Fbar_deriv(q, 1, p7));
    const double qr = std::pow(q, rho);
    CHECK(lim == doctest::Approx(rho * rho / ((1 + qr) * (1 + qr))).epsilon(1e-13));
  }

  CHECK_THROWS_AS(eval_Fbar_deriv(0.0, 1, p7), std::domain_error);
}

TEST_CASE("Qbar satisfies the desingularised identity exactly") {
  ExactProfileParams p(0.7);
  for (double q = 1e-8; q < 1e6; q *= 2.9) {
    const double Q = eval_Qbar(q, p);
    const double Qp = -eval_Fbar_deriv(q, 1, p);
    CHECK(std::fabs(-q * Qp + 0.7 * Q - Q * Q) < 1e-12);
  }
}

TEST_CASE("fbar series and asymptotics") {
  ExactProfileParams p(0.7);

  // tail normalisation x^{1+rho} fbar(x) -> rho^2/Γ(1-rho); the second
  // expansion term decays like x^-rho, so the limit tightens with x
  {
    const double target = 0.49 / gamma_fn(0.3);
    const double dev4 =
        std::fabs(std::pow(1e4, 1.7) * eval_fbar(1e4, p) / target - 1.0);
    const double dev5 =
        std::fabs(std::pow(1e5, 1.7) * eval_fbar(1e5, p) / target - 1.0);
    CHECK(dev4 < 5e-3);
    CHECK(dev5 < 1e-3);
    CHECK(dev5 < dev4);
  }

  // small-x leading coefficient: x^{1-rho} fbar(x) -> rho/Γ(rho),
  // distinctly not rho^2/Γ(2-rho)
  {
    const double x = 1e-11;
    const double lim = std::pow(x, 0.3) * eval_fbar(x, p);
    const double series_coeff = 0.7 / gamma_fn(0.7);
    const double alt_coeff = 0.49 / gamma_fn(1.3);
    CHECK(std::fabs(lim / series_coeff - 1.0) < 1e-7);
    CHECK(std::fabs(lim / alt_coeff - 1.0) > 1e-2);
  }

  // positivity across the crossover
  for (double x = 1e-6; x < 1e4; x *= 1.9) {
    CHECK(eval_fbar(x, p) > 0.0);
  }

  // continuity across the crossover point
  {
    ExactProfileParams lo(0.7, 1e-6, 1e9);   // force the series
    ExactProfileParams hi(0.7, 1e-4, 1e-9);  // force the asymptotics
    for (double x : {18.0, 20.0, 23.0}) {
      CHECK(eval_fbar(x, lo) == doctest::Approx(eval_fbar(x, hi)).epsilon(3e-6));
    }
  }
}

TEST_CASE("exact moments against the Laplace-side quadrature oracle") {
  ExactProfileParams p7(0.7);
  CHECK(exact_moment(0.0, p7) == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(exact_moment(0.35, p7) == doctest::Approx(0.794).epsilon(1e-3));
  ExactProfileParams p5(0.5);
  CHECK(exact_moment(0.25, p5) == doctest::Approx(0.641).epsilon(1e-3));

  // oracle: m_gamma = rho^2/Γ(1-gamma) ∫ ξ^{rho-1-gamma}/(1+ξ^rho)^2 dξ
  auto oracle = [](double gamma, double rho) {
    const QuadratureGrid g = make_log_grid(1e-14, 1e14, 2600,
                                           rho - 1.0 - gamma,
                                           rho + 1.0 + gamma);
    GriddedFunction f;
    f.grid = g;
    f.values.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double xi = g.nodes[i];
      const double den = 1.0 + std::pow(xi, rho);
      f.values[i] = std::pow(xi, rho - 1.0 - gamma) / (den * den);
    }
    return rho * rho / gamma_fn(1.0 - gamma) * integrate(f);
  };
  for (double c : {-0.3, 0.0, 0.3}) {
    const double gamma = c * 0.7;
    CHECK(exact_moment(gamma, p7) ==
          doctest::Approx(oracle(gamma, 0.7)).epsilon(1e-8));
  }
  CHECK(exact_moment(0.35, p7) == doctest::Approx(oracle(0.35, 0.7)).epsilon(1e-8));
  CHECK(exact_moment(0.25, p5) == doctest::Approx(oracle(0.25, 0.5)).epsilon(1e-8));

  CHECK_THROWS_AS(exact_moment(0.7, p7), std::domain_error);
  CHECK_THROWS_AS(exact_moment(-0.9, p7), std::domain_error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ExactProfileParams(1.2), std::domain_error);
  CHECK_THROWS_AS(ExactProfileParams(0.0), std::domain_error);
  CHECK_THROWS_AS(ExactProfileParams(0.7, -1.0), std::domain_error);
}
