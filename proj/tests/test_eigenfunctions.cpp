#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dkpo/eigenfunctions.hpp"
#include "dkpo/laguerre.hpp"
#include "dkpo/quadrature.hpp"
#include "oracle_laguerre.hpp"

using namespace dkpo;
using doctest::Approx;

TEST_CASE("Laguerre base cases and pinned values") {
  for (const double k : {0.0, 2.0, 7.5})
    for (const double x : {0.0, 1.0, 33.0}) CHECK(laguerre(0, k, x) == 1.0);

  CHECK(laguerre(1, 2.0, 1.0) == Approx(2.0).epsilon(1e-15));  // 1 + k - x
  // L_3^{(1)}(2.5) = -53/48
  CHECK(laguerre(3, 1.0, 2.5) == Approx(-53.0 / 48.0).epsilon(1e-14));
  CHECK(laguerre(3, 1.0, 2.5) ==
        Approx(dkpo_test::laguerre_coefficient_sum(3, 1, 2.5)).epsilon(1e-14));

  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), domain_error);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), domain_error);
  CHECK_THROWS_AS(laguerre(2, 0.0, -1.0), domain_error);
}

TEST_CASE("recurrence agrees with the coefficient-sum oracle") {
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= 10; ++k)
      for (int j = 0; j < 100; ++j) {
        const double x = 50.0 * j / 99.0;
        const double ref = dkpo_test::laguerre_coefficient_sum(n, k, x);
        const double got = laguerre(n, k, x);
        worst = std::max(worst, std::abs(got - ref) / std::max(1.0, std::abs(ref)));
      }
  CHECK(worst <= 1e-10);
}

TEST_CASE("weighted orthogonality by quadrature") {
  // int_0^inf x^k e^-x Lhat_n Lhat_m dx = delta_nm with unit-normalized
  // polynomials Lhat = L / sqrt(Gamma(n+k+1)/n!).
  QuadOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-13;
  for (const int k : {0, 1, 3}) {
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m) {
        const double nn = std::sqrt(std::tgamma(n + k + 1.0) / std::tgamma(n + 1.0));
        const double nm = std::sqrt(std::tgamma(m + k + 1.0) / std::tgamma(m + 1.0));
        auto f = [&](double x) {
          return std::pow(x, k) * std::exp(-x) * laguerre(n, k, x) * laguerre(m, k, x) /
                 (nn * nm);
        };
        const double val = integrate_or_throw(f, 0.0, 150.0, opt);
        if (n == m)
          CHECK(val == Approx(1.0).epsilon(1e-8));
        else
          CHECK(std::abs(val) <= 1e-8);
      }
  }
}

TEST_CASE("eigenfunction shape") {
  RadialState ground{1.0, 0, 0, 0, 1.0};
  // Gaussian ground state peaks at the origin.
  CHECK(std::abs(eigenfunction(ground, 0.0, 0.0)) >
        std::abs(eigenfunction(ground, 0.5, 0.0)));
  CHECK(std::abs(eigenfunction(ground, 0.5, 0.0)) >
        std::abs(eigenfunction(ground, 1.5, 0.0)));

  // centrifugal factor kills the origin for l != 0
  RadialState rot{1.0, 0, 2, 1, 1.0};
  CHECK(std::abs(eigenfunction(rot, 0.0, 0.3)) == 0.0);

  // |psi| does not depend on theta; the phase does
  RadialState st{1.5, 1, 3, 1, 1.0};
  const auto a = eigenfunction(st, 0.7, 0.0);
  const auto b = eigenfunction(st, 0.7, 2.1);
  CHECK(std::abs(a) == Approx(std::abs(b)).epsilon(1e-14));
  CHECK(std::arg(b) - std::arg(a) != 0.0);
}

TEST_CASE("pdf modes") {
  // n = 0: L_0 of any order is 1, so the modes coincide for any norm.
  for (const double norm : {1.0, 0.37}) {
    RadialState st{1.25, 0, 2, 0, norm};
    for (const double xi : {0.0, 0.4, 1.7})
      CHECK(pdf(st, xi, PdfMode::SquaredModulus) ==
            Approx(pdf(st, xi, PdfMode::Compact)).epsilon(1e-14));
  }

  // pinned values at n=1, l=1, alpha=3/2, xi=1
  RadialState st{1.5, 1, 1, 1, 1.0};
  CHECK(pdf(st, 1.0, PdfMode::SquaredModulus) ==
        Approx(0.08367381005566118585).epsilon(1e-13));
  CHECK(pdf(st, 1.0, PdfMode::Compact) ==
        Approx(0.50204286033396711510).epsilon(1e-13));

  // squared modulus is non-negative; the compact form dips negative for n>=1
  bool compact_negative = false;
  for (int j = 0; j <= 300; ++j) {
    const double xi = 3.0 * j / 300.0;
    CHECK(pdf(st, xi, PdfMode::SquaredModulus) >= 0.0);
    compact_negative |= (pdf(st, xi, PdfMode::Compact) < 0.0);
  }
  CHECK(compact_negative);
}

TEST_CASE("pdf peak of the nodeless states sits at xi^2 = |l|/alpha") {
  for (const double alpha : {0.5, 1.5, std::sqrt(5.0) / 2.0})
    for (const int l : {1, 2, 5}) {
      RadialState st{alpha, 0, l, 0, 1.0};
      const double xi_peak = std::sqrt(l / alpha);
      const double p = pdf(st, xi_peak);
      CHECK(p > pdf(st, xi_peak * 1.02));
      CHECK(p > pdf(st, xi_peak * 0.98));
    }
}

TEST_CASE("splitting orders the density peaks") {
  // delta = 0.5: alpha_2 < alpha_0 < alpha_1, so the s=-1 density peaks
  // farthest out.
  const double x1 = std::sqrt(1.0 / alpha_for(1, 0.5));
  const double x0 = std::sqrt(1.0 / alpha_for(0, 0.5));
  const double x2 = std::sqrt(1.0 / alpha_for(2, 0.5));
  CHECK(x2 > x0);
  CHECK(x0 > x1);
}

TEST_CASE("normalization") {
  // analytic norm for the Gaussian ground state
  const auto g = normalize(RadialState{1.0, 0, 0, 0, 1.0});
  CHECK(g.norm == Approx(1.0 / std::sqrt(std::acos(-1.0))).epsilon(1e-8));
  CHECK(g.norm == Approx(0.56418958354775628695).epsilon(1e-8));

  // pinned analytic value for n=2, l=1, alpha = sqrt(5)/2
  const auto s = normalize(RadialState{std::sqrt(5.0) / 2.0, 2, 1, 0, 1.0});
  CHECK(s.norm == Approx(0.34442283688734913756).epsilon(1e-8));

  // idempotence is exact: the integral is always taken over the bare state
  const auto twice = normalize(s);
  CHECK(twice.norm == s.norm);

  // analytic cross-check: norm = sqrt(alpha n!/(pi (n+|l|)!))
  const double pi = std::acos(-1.0);
  for (const double alpha : {0.5, 1.5})
    for (const int n : {0, 1, 3})
      for (const int l : {0, 2}) {
        const auto st = normalize(RadialState{alpha, n, l, 1, 1.0});
        const double expect = std::sqrt(alpha * std::tgamma(n + 1.0) /
                                        (pi * std::tgamma(n + l + 1.0)));
        CHECK(st.norm == Approx(expect).epsilon(1e-8));
      }

  // normalized states integrate to one
  const auto st = normalize(RadialState{1.5, 4, 3, 1, 1.0});
  const double xi_max = std::sqrt((3 + 4 * 4 + 40.0) / st.alpha);
  auto f = [&](double xi) { return pdf(st, xi) * 2.0 * pi * xi; };
  CHECK(integrate_or_throw(f, 0.0, xi_max) == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("alpha_for") {
  CHECK(alpha_for(0, 0.5) == Approx(std::sqrt(1.25)).epsilon(1e-15));
  CHECK(alpha_for(1, 0.5) == 1.5);
  CHECK(alpha_for(2, 0.5) == 0.5);
  CHECK(alpha_for(1, -0.5) == 0.5);  // field reversal swaps the two
  CHECK_THROWS_AS(alpha_for(2, 1.5), domain_error);
  CHECK_THROWS_AS(alpha_for(5, 0.0), domain_error);
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(normalize(RadialState{-1.0, 0, 0, 0, 1.0}), domain_error);
  CHECK_THROWS_AS(pdf(RadialState{1.0, -1, 0, 0, 1.0}, 0.5), domain_error);
  CHECK_THROWS_AS(eigenfunction(RadialState{1.0, 0, 0, 0, 1.0}, -0.5, 0.0), domain_error);
}
