#ifndef DKPO_EULER_MACLAURIN_HPP
#define DKPO_EULER_MACLAURIN_HPP

#include <functional>
#include <vector>

#include "dkpo/quadrature.hpp"

namespace dkpo {

struct EmOptions {
  QuadOptions quad = {1e-10, 1e-12, 20000};
  double derivative_h0 = 0.8;    // largest step of the refinement ladder
  int derivative_levels = 6;     // h0, h0/2, ..., h0/2^(levels-1)
  // Required stability of the f^(m)(0) estimates. One-sided stencils for
  // m = 5 bottom out near 1e-4 in double, and the Bernoulli weights damp
  // the corrections by ~1e-5, so this is plenty for the summation itself.
  double derivative_tol = 1e-3;
  int tail_decades = 10;         // passed to integrate_semi_infinite
};

struct EulerMaclaurinResult {
  double value = 0.0;
  double half_f0 = 0.0;
  double integral = 0.0;
  double correction = 0.0;  // sum over p of B_2p/(2p)! f^(2p-1)(0)
};

/// sum_{n>=0} f(n) ~ 1/2 f(0) + int_0^inf f(x) dx
///                   - sum_{p=1}^{p_max} B_2p/(2p)! f^(2p-1)(0).
/// f must be smooth at 0 and integrable on [0, inf). Odd derivatives at 0
/// are estimated with one-sided high-order finite differences; throws
/// numerical_error if they fail to stabilize.
EulerMaclaurinResult euler_maclaurin_parts(const std::function<double(double)>& f,
                                           int p_max, const EmOptions& opt = {});

double euler_maclaurin(const std::function<double(double)>& f, int p_max,
                       const EmOptions& opt = {});

/// Weights of the m-th derivative at x0 for the given nodes (Fornberg's
/// recursion). Exposed for tests.
std::vector<double> derivative_weights(double x0, const std::vector<double>& nodes, int m);

/// One-sided estimate of f^(m)(0) for f defined on x >= 0 only, with
/// step-halving stability selection.
double one_sided_derivative(const std::function<double(double)>& f, int m,
                            const EmOptions& opt = {});

}  // namespace dkpo

#endif
