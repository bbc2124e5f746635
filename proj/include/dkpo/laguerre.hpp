#ifndef DKPO_LAGUERRE_HPP
#define DKPO_LAGUERRE_HPP

namespace dkpo {

/// Associated Laguerre polynomial L_n^{(k)}(x) by the three-term upward
/// recurrence in n, stable for x >= 0, k >= 0. The order k may be any
/// non-negative real.
double laguerre(int n, double k, double x);

}  // namespace dkpo

#endif
