#ifndef DKPO_CONFIG_HPP
#define DKPO_CONFIG_HPP

#include <cmath>

#include "dkpo/errors.hpp"

namespace dkpo {

/// Oscillator parameters in natural units: energies are measured in units
/// of the rest energy mc^2 and the field strength enters only through the
/// dimensionless ratio delta = omega_tilde/omega. omega_tilde is always
/// derived, never set independently, so (omega, omega_tilde, delta) stay
/// consistent.
struct OscillatorConfig {
  double mass_energy = 1.0;  // mc^2, in whatever energy unit the caller uses
  double hbar_omega = 1.0;   // hbar*omega in units of mc^2, > 0
  double delta = 0.0;        // omega_tilde/omega, signed; sign(delta) = sign(qB)

  double omega_tilde() const { return delta * hbar_omega; }  // hbar*omega_tilde / mc^2
  /// sign of the field; delta == 0 is treated as the +0 limit.
  int field_sign() const { return delta < 0.0 ? -1 : 1; }

  void validate() const {
    if (!(hbar_omega > 0.0))
      throw domain_error("oscillator frequency must be positive", hbar_omega);
    if (!std::isfinite(delta)) throw domain_error("delta must be finite", delta);
    if (!(mass_energy > 0.0)) throw domain_error("mass energy must be positive", mass_energy);
  }
};

enum class FrequencyUnit { OfOmega, AbsoluteEnergy };

/// The split (omega_0, omega_1, omega_2) = (sqrt(w^2+wt^2), w+wt, w-wt)
/// attached to spin projections (0, +1, -1).
struct SplitFrequencies {
  double omega0, omega1, omega2;
  FrequencyUnit unit = FrequencyUnit::AbsoluteEnergy;

  double operator[](int i) const {
    switch (i) {
      case 0: return omega0;
      case 1: return omega1;
      case 2: return omega2;
    }
    throw domain_error("frequency index must be 0, 1 or 2", i);
  }
};

/// (n, l, s_i) with the fixed map s_0 = 0, s_1 = +1, s_2 = -1.
struct QuantumNumbers {
  int n = 0;
  int l = 0;
  int spin_index = 0;  // i in {0,1,2}

  static int spin_of(int i) {
    switch (i) {
      case 0: return 0;
      case 1: return 1;
      case 2: return -1;
    }
    throw domain_error("spin index must be 0, 1 or 2", i);
  }
  int spin() const { return spin_of(spin_index); }
};

}  // namespace dkpo

#endif
