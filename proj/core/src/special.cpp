#include "coag/special.hpp"

#include <cmath>
#include <limits>

namespace coag {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double z) {
  // valid for z >= 0.5
  z -= 1.0;
  double x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

bool is_nonpositive_integer(double z) {
  return z <= 0.0 && z == std::floor(z);
}

// Series for the regularised lower incomplete gamma:
//   γ(a,x) = x^a e^{-x} Σ_{n>=0} x^n / (a (a+1) ... (a+n))
// Converges for all x >= 0; used for x < a+1 and for small x in general.
double gamma_series(double a, double x) {
  if (x == 0.0) return 0.0;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 500; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
  }
  return sum * std::exp(a * std::log(x) - x);
}

// Modified Lentz continued fraction for Γ(a,x), reliable for x >= 1, x > a.
double upper_gamma_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(a * std::log(x) - x) * h;
}

}  // namespace

double gamma_fn(double z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("gamma_fn: pole at nonpositive integer");
  if (z < 0.5) return kPi / (std::sin(kPi * z) * gamma_fn(1.0 - z));
  return lanczos_gamma(z);
}

double log_gamma(double z) {
  if (z <= 0.0) throw std::domain_error("log_gamma: requires z > 0");
  if (z < 0.5) return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
  return std::log(lanczos_gamma(z));
}

double lower_inc_gamma(double a, double x) {
  if (a <= 0.0) throw std::domain_error("lower_inc_gamma: requires a > 0");
  if (x < 0.0) throw std::domain_error("lower_inc_gamma: requires x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_series(a, x);
  return gamma_fn(a) - upper_gamma_cf(a, x);
}

double upper_inc_gamma(double a, double x) {
  if (x <= 0.0) throw std::domain_error("upper_inc_gamma: requires x > 0");
  if (a > 0.0) {
    if (x >= a + 1.0) return upper_gamma_cf(a, x);
    return gamma_fn(a) - gamma_series(a, x);
  }
  if (is_nonpositive_integer(a))
    throw std::domain_error("upper_inc_gamma: integer a <= 0 not supported");
  // Γ(a,x) = (Γ(a+1,x) - x^a e^{-x}) / a, applied until the parameter is positive.
  if (a > -1.0) {
    return (upper_inc_gamma(a + 1.0, x) - std::exp(a * std::log(x) - x)) / a;
  }
  if (a > -2.0) {
    return (upper_inc_gamma(a + 1.0, x) - std::exp(a * std::log(x) - x)) / a;
  }
  throw std::domain_error("upper_inc_gamma: a <= -2 not supported");
}

ExactProfileParams::ExactProfileParams(double rho_, double series_tol_,
                                       double crossover_x_)
    : rho(rho_), series_tol(series_tol_), crossover_x(crossover_x_) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("ExactProfileParams: rho out of (0,1)");
  if (!(series_tol > 0.0))
    throw std::domain_error("ExactProfileParams: series_tol must be > 0");
  if (!(crossover_x > 0.0))
    throw std::domain_error("ExactProfileParams: crossover_x must be > 0");
}

double eval_Fbar(double q, const ExactProfileParams& p) {
  if (q < 0.0) throw std::domain_error("eval_Fbar: requires q >= 0");
  if (q == 0.0) return p.rho;
  return p.rho / (1.0 + std::pow(q, p.rho));
}

double eval_Fbar_deriv(double q, int order, const ExactProfileParams& p) {
  if (!(q > 0.0))
    throw std::domain_error("eval_Fbar_deriv: requires q > 0 (singular at 0)");
  const double rho = p.rho;
  const double qr = std::pow(q, rho);
  const double den = 1.0 + qr;
  if (order == 1) {
    return -rho * rho * std::pow(q, rho - 1.0) / (den * den);
  }
  if (order == 2) {
    return rho * rho * std::pow(q, rho - 2.0) *
           ((1.0 - rho) + (1.0 + rho) * qr) / (den * den * den);
  }
  throw std::domain_error("eval_Fbar_deriv: order must be 1 or 2");
}

double eval_Qbar(double q, const ExactProfileParams& p) {
  if (q < 0.0) throw std::domain_error("eval_Qbar: requires q >= 0");
  return p.rho - eval_Fbar(q, p);
}

namespace {

struct FbarEval {
  double value;
  double rel_error;  // estimated
};

// Small-x series  fbar(x) = rho Σ_{n>=1} (-1)^{n+1} x^{n rho - 1} / Γ(n rho),
// accumulated in extended precision; the error estimate combines the
// alternating remainder with the cancellation floor.
FbarEval fbar_series(double x, double rho) {
  const long double lx = std::log((long double)x);
  long double sum = 0.0L;
  long double max_term = 0.0L;
  long double term_mag = 0.0L;
  int n = 1;
  for (; n < 400; ++n) {
    term_mag = std::exp((n * (long double)rho - 1.0L) * lx -
                        lgammal(n * (long double)rho));
    const long double term = (n % 2 == 1) ? term_mag : -term_mag;
    sum += term;
    if (term_mag > max_term) max_term = term_mag;
    // stop once terms are decreasing and negligible
    if (n > 2 && term_mag < std::fabs((double)sum) * 1e-19 &&
        n * rho > x)
      break;
  }
  const double value = rho * (double)sum;
  const long double eps = 1.1e-19L;  // 80-bit mantissa
  double rel =
      (double)(max_term * eps / std::max(std::fabs(sum), (long double)1e-300));
  return {value, rel};
}

// Large-x expansion  fbar(x) = (rho/pi) Σ_{j>=1} (-1)^{j+1} sin(pi j rho)
// Γ(1+j rho) x^{-j rho - 1}, truncated at the smallest term.
FbarEval fbar_asymptotic(double x, double rho) {
  const double lx = std::log(x);
  double sum = 0.0;
  double prev_mag = std::numeric_limits<double>::max();
  double dropped = 0.0;
  for (int j = 1; j < 200; ++j) {
    const double mag =
        std::exp(log_gamma(1.0 + j * rho) - (j * rho + 1.0) * lx);
    if (mag >= prev_mag) {  // divergence point of the asymptotic series
      dropped = mag;
      break;
    }
    const double s = std::sin(kPi * j * rho);
    sum += (j % 2 == 1 ? 1.0 : -1.0) * s * mag;
    prev_mag = mag;
    dropped = mag;
  }
  const double value = rho / kPi * sum;
  double rel = dropped / std::max(std::fabs(sum), 1e-300);
  return {value, rel};
}

}  // namespace

double eval_fbar(double x, const ExactProfileParams& p) {
  if (!(x > 0.0)) throw std::domain_error("eval_fbar: requires x > 0");
  FbarEval primary, secondary;
  if (x <= p.crossover_x) {
    primary = fbar_series(x, p.rho);
    if (primary.rel_error <= p.series_tol) return primary.value;
    secondary = fbar_asymptotic(x, p.rho);
  } else {
    primary = fbar_asymptotic(x, p.rho);
    if (primary.rel_error <= p.series_tol) return primary.value;
    secondary = fbar_series(x, p.rho);
  }
  if (secondary.rel_error <= p.series_tol) return secondary.value;
  throw std::runtime_error(
      "eval_fbar: neither series nor asymptotic expansion reaches the "
      "requested tolerance at this x");
}

double exact_moment(double gamma, const ExactProfileParams& p) {
  const double rho = p.rho;
  if (!(gamma > -rho && gamma < rho))
    throw std::domain_error("exact_moment: gamma out of (-rho, rho)");
  return rho * gamma_fn(1.0 - gamma / rho) * gamma_fn(1.0 + gamma / rho) /
         gamma_fn(1.0 - gamma);
}

}  // namespace coag
