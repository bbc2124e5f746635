#include "dkpo/bernoulli.hpp"

#include <numeric>
#include <vector>

#include "dkpo/errors.hpp"

namespace dkpo {

namespace {

Rational reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Rational{g ? num / g : num, g ? den / g : den};
}

Rational add(const Rational& x, const Rational& y) {
  return reduced(x.num * y.den + y.num * x.den, x.den * y.den);
}

Rational mul_int(const Rational& x, std::int64_t c) { return reduced(x.num * c, x.den); }

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw domain_error("Bernoulli index must be >= 0", n);
  if (n > 20)
    throw domain_error("Bernoulli numbers supported in exact int64 arithmetic up to n = 20",
                       n);
  // sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1, B_0 = 1.
  std::vector<Rational> b(static_cast<size_t>(n) + 1);
  b[0] = Rational{1, 1};
  for (int m = 1; m <= n; ++m) {
    Rational acc{0, 1};
    for (int k = 0; k < m; ++k) acc = add(acc, mul_int(b[k], binom(m + 1, k)));
    acc = reduced(-acc.num, acc.den * (m + 1));
    b[m] = acc;
  }
  return b[n];
}

}  // namespace dkpo
