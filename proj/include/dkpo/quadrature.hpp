#ifndef DKPO_QUADRATURE_HPP
#define DKPO_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace dkpo {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_intervals = 20000;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Worst-error interval is
/// bisected first; splitting order is deterministic.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opt = {});

/// Same, throwing numerical_error when the requested tolerance is not met.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const QuadOptions& opt = {});

/// Integral over [0, inf) via the map x = t/(1-t). `decades` pre-splits the
/// mapped domain at x = 1, 10, ..., 10^decades so the adaptive pass finds
/// mass that sits far from the origin.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadOptions& opt = {}, int decades = 10);

}  // namespace dkpo

#endif
