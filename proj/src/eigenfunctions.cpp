#include "dkpo/eigenfunctions.hpp"

#include <cmath>

#include "dkpo/laguerre.hpp"
#include "dkpo/quadrature.hpp"

namespace dkpo {

double alpha_for(int i, double delta) {
  double a;
  switch (i) {
    case 0: a = std::sqrt(1.0 + delta * delta); break;
    case 1: a = 1.0 + delta; break;
    case 2: a = 1.0 - delta; break;
    default: throw domain_error("spin index must be 0, 1 or 2", i);
  }
  if (!(a > 0.0))
    throw domain_error("component frequency is not positive at this delta", a);
  return a;
}

std::complex<double> eigenfunction(const RadialState& state, double xi, double theta) {
  state.validate();
  if (xi < 0.0) throw domain_error("xi must be >= 0", xi);
  const double la = std::abs(static_cast<double>(state.l));
  const double u = state.alpha * xi * xi;
  const double radial = state.norm * std::pow(u, 0.5 * la) * std::exp(-0.5 * u) *
                        laguerre(state.n, la, u);
  return std::polar(1.0, state.l * theta) * radial;
}

double pdf(const RadialState& state, double xi, PdfMode mode) {
  state.validate();
  if (xi < 0.0) throw domain_error("xi must be >= 0", xi);
  const double la = std::abs(static_cast<double>(state.l));
  const double u = state.alpha * xi * xi;
  const double envelope = state.norm * state.norm * std::pow(u, la) * std::exp(-u);
  if (mode == PdfMode::SquaredModulus) {
    const double lag = laguerre(state.n, la, u);
    return envelope * lag * lag;
  }
  return envelope * laguerre(state.n, 2.0 * la, u);
}

RadialState normalize(const RadialState& state) {
  state.validate();
  RadialState bare = state;
  bare.norm = 1.0;

  const double la = std::abs(static_cast<double>(state.l));
  // Turning point ~ sqrt((4n+2|l|)/alpha); +40 pushes the Gaussian tail
  // below 1e-14 of the integral.
  const double xi_max = std::sqrt((la + 4.0 * state.n + 40.0) / state.alpha);
  const double two_pi = 2.0 * std::acos(-1.0);

  auto integrand = [&bare, two_pi](double xi) {
    return pdf(bare, xi, PdfMode::SquaredModulus) * two_pi * xi;
  };
  QuadOptions opt;
  opt.abs_tol = 1e-10;
  opt.rel_tol = 1e-12;
  const double total = integrate_or_throw(integrand, 0.0, xi_max, opt);
  if (!(total > 0.0))
    throw numerical_error("normalization integral is not positive", total);

  RadialState out = state;
  out.norm = 1.0 / std::sqrt(total);
  return out;
}

}  // namespace dkpo
