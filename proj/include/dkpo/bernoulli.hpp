#ifndef DKPO_BERNOULLI_HPP
#define DKPO_BERNOULLI_HPP

#include <cstdint>

namespace dkpo {

/// Exact rational, normalized (gcd reduced, positive denominator).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// n-th Bernoulli number B_n (B_1 = -1/2 convention), exact for n <= 20.
Rational bernoulli(int n);

}  // namespace dkpo

#endif
