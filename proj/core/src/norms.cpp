#include "coag/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace coag {

double weight_omega(double a, double b, double q) {
  if (!(q > 0.0)) throw std::domain_error("weight_omega: q must be > 0");
  return q <= 1.0 ? std::pow(q, a) : std::pow(q, -b);
}

namespace {

double weighted_term(const NormSpec& s, double q, double dk) {
  return std::pow(1.0 + q, s.chi + s.mu + s.rho) *
         std::pow(q, s.k - s.rho - s.mu) * std::fabs(dk);
}

double derivative_at(const LaplaceProfile& G, int k, std::size_t i) {
  switch (k) {
    case 0: return G.value[i];
    case 1: return G.d1[i];
    default: return G.d2[i];
  }
}

double derivative_of(const ProfilePoint& p, int k) {
  switch (k) {
    case 0: return p.value;
    case 1: return p.d1;
    default: return p.d2;
  }
}

}  // namespace

double seminorm(const LaplaceProfile& G, const NormSpec& spec) {
  if (spec.k < 0 || spec.k > 2)
    throw std::domain_error("seminorm: k must be in {0,1,2}");
  if (spec.k >= 1 && G.d1.size() != G.value.size())
    throw std::runtime_error("seminorm: derivative of order 1 not carried");
  if (spec.k == 2 && G.d2.size() != G.value.size())
    throw std::runtime_error("seminorm: derivative of order 2 not carried");

  double sup = 0.0;
  const std::size_t n = G.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double t =
        weighted_term(spec, G.grid.nodes[i], derivative_at(G, spec.k, i));
    if (t > sup) sup = t;
  }
  // probe the declared asymptotic models beyond the grid
  for (int j = 1; j <= 3; ++j) {
    const double ql = G.grid.x_min * std::pow(10.0, -j);
    const double qh = G.grid.x_max * std::pow(10.0, j);
    const double tl = weighted_term(spec, ql, derivative_of(profile_eval(G, ql), spec.k));
    const double th = weighted_term(spec, qh, derivative_of(profile_eval(G, qh), spec.k));
    if (tl > sup) sup = tl;
    if (th > sup) sup = th;
  }
  return sup;
}

double full_norm(const LaplaceProfile& G, int k, double mu, double chi) {
  if (k < 0 || k > 2) throw std::domain_error("full_norm: k must be in {0,1,2}");
  NormSpec base{0, -G.rho, chi, G.rho};
  double total = seminorm(G, base);
  for (int ell = 1; ell <= k; ++ell) {
    total += seminorm(G, NormSpec{ell, mu, chi, G.rho});
  }
  return total;
}

}  // namespace coag
