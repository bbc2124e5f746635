#ifndef DKPO_EIGENFUNCTIONS_HPP
#define DKPO_EIGENFUNCTIONS_HPP

#include <complex>

#include "dkpo/config.hpp"

namespace dkpo {

/// A labeled radial eigenstate of the splitting family. alpha is the
/// dimensionless frequency m*omega_i*a^2/hbar of the component; norm
/// defaults to 1 (the bare closed form) until normalize() is applied.
struct RadialState {
  double alpha = 1.0;
  int n = 0;
  int l = 0;
  int spin_index = 0;  // i in {0,1,2}
  double norm = 1.0;

  void validate() const {
    if (!(alpha > 0.0)) throw domain_error("alpha must be positive", alpha);
    if (n < 0) throw domain_error("radial quantum number must be >= 0", n);
    if (spin_index < 0 || spin_index > 2)
      throw domain_error("spin index must be 0, 1 or 2", spin_index);
  }
};

/// alpha_i for the analysis conventions m*omega*a^2/hbar = 1 and a given
/// field ratio: alpha_0 = sqrt(1+delta^2), alpha_1 = 1+delta, alpha_2 = 1-delta
/// (delta signed). Throws domain_error when the requested alpha is <= 0.
double alpha_for(int i, double delta);

/// psi(xi, theta) = norm * (alpha xi^2)^{|l|/2} e^{i l theta}
///                  * e^{-alpha xi^2 / 2} * L_n^{|l|}(alpha xi^2)
std::complex<double> eigenfunction(const RadialState& state, double xi, double theta);

enum class PdfMode {
  SquaredModulus,  // |psi|^2: ... [L_n^{|l|}]^2
  Compact          // doubled-order variant: ... L_n^{2|l|}, sign-indefinite for n >= 1
};

/// Radial probability density rho(xi). Both modes carry the state's norm^2
/// so they coincide at n = 0 regardless of normalization; with the default
/// norm = 1 the Compact mode is the bare closed form.
double pdf(const RadialState& state, double xi, PdfMode mode = PdfMode::SquaredModulus);

/// Fix norm so that  int_0^inf |psi|^2 2 pi xi dxi = 1  by adaptive
/// quadrature on [0, xi_max], xi_max = sqrt((|l| + 4n + 40)/alpha).
/// Idempotent. Throws numerical_error if the quadrature does not converge.
RadialState normalize(const RadialState& state);

}  // namespace dkpo

#endif
