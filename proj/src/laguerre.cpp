#include "dkpo/laguerre.hpp"

#include "dkpo/errors.hpp"

namespace dkpo {

double laguerre(int n, double k, double x) {
  if (n < 0) throw domain_error("Laguerre degree must be >= 0", n);
  if (k < 0.0) throw domain_error("Laguerre order must be >= 0", k);
  if (x < 0.0) throw domain_error("Laguerre argument must be >= 0", x);

  if (n == 0) return 1.0;
  double lm1 = 1.0;             // L_0
  double lcur = 1.0 + k - x;    // L_1
  for (int m = 2; m <= n; ++m) {
    const double lnext = ((2.0 * m - 1.0 + k - x) * lcur - (m - 1.0 + k) * lm1) / m;
    lm1 = lcur;
    lcur = lnext;
  }
  return lcur;
}

}  // namespace dkpo
