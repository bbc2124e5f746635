#include "dkpo/euler_maclaurin.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dkpo/bernoulli.hpp"
#include "dkpo/errors.hpp"

namespace dkpo {

std::vector<double> derivative_weights(double x0, const std::vector<double>& nodes, int m) {
  const int n = static_cast<int>(nodes.size()) - 1;
  if (n < m) throw domain_error("derivative_weights: need at least m+1 nodes", n);

  // Fornberg's recursion; c[j][k] = weight of node j for the k-th derivative.
  std::vector<std::vector<double>> c(nodes.size(), std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }

  std::vector<double> w(nodes.size());
  for (size_t j = 0; j < nodes.size(); ++j) w[j] = c[j][m];
  return w;
}

double one_sided_derivative(const std::function<double(double)>& f, int m,
                            const EmOptions& opt) {
  const int stencil = m + 7;  // order ~ 7 in h
  double h = opt.derivative_h0;
  double best = std::numeric_limits<double>::quiet_NaN();
  double best_diff = std::numeric_limits<double>::infinity();
  double prev = std::numeric_limits<double>::quiet_NaN();

  for (int level = 0; level < opt.derivative_levels; ++level, h *= 0.5) {
    std::vector<double> nodes(stencil);
    for (int j = 0; j < stencil; ++j) nodes[j] = j * h;
    const std::vector<double> w = derivative_weights(0.0, nodes, m);
    double d = 0.0;
    for (int j = 0; j < stencil; ++j) d += w[j] * f(nodes[j]);
    if (level > 0) {
      const double diff = std::abs(d - prev);
      if (diff < best_diff) {
        best_diff = diff;
        best = d;
      }
    }
    prev = d;
  }

  if (!(best_diff <= opt.derivative_tol * std::max(1.0, std::abs(best))))
    throw numerical_error("derivative estimate for order " + std::to_string(m) +
                              " did not stabilize",
                          best_diff);
  return best;
}

EulerMaclaurinResult euler_maclaurin_parts(const std::function<double(double)>& f,
                                           int p_max, const EmOptions& opt) {
  if (p_max < 0) throw domain_error("p_max must be >= 0", p_max);

  EulerMaclaurinResult r;
  r.half_f0 = 0.5 * f(0.0);

  const QuadResult integral = integrate_semi_infinite(f, opt.quad, opt.tail_decades);
  if (!integral.converged)
    throw numerical_error("Euler-Maclaurin integral did not converge",
                          integral.error_estimate);
  r.integral = integral.value;

  double fact = 1.0;  // (2p)!
  for (int p = 1; p <= p_max; ++p) {
    fact *= (2.0 * p - 1.0) * (2.0 * p);
    const double b2p = bernoulli(2 * p).to_double();
    const double deriv = one_sided_derivative(f, 2 * p - 1, opt);
    r.correction += b2p / fact * deriv;
  }

  r.value = r.half_f0 + r.integral - r.correction;
  return r;
}

double euler_maclaurin(const std::function<double(double)>& f, int p_max,
                       const EmOptions& opt) {
  return euler_maclaurin_parts(f, p_max, opt).value;
}

}  // namespace dkpo
