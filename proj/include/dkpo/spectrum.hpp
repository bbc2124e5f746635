#ifndef DKPO_SPECTRUM_HPP
#define DKPO_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "dkpo/config.hpp"

namespace dkpo {

enum class Branch { Plus, Minus };

/// Angular coupling convention for the scalar-sector spectrum. AbsL keeps
/// the |l| factor of the closed-form level formula; Signed uses l*omega_tilde as
/// the -2 m omega_tilde L_z operator form suggests. The two differ only
/// for l < 0 with delta != 0.
enum class LzCoupling { AbsL, Signed };

struct EnergyLevel {
  double value = 0.0;  // in units of mc^2
  Branch branch = Branch::Plus;
  QuantumNumbers qn;
  int frequency_used = 0;  // which omega_i entered the formula
};

SplitFrequencies split_frequencies(const OscillatorConfig& cfg);

/// Scalar-sector level. Throws domain_error carrying the radicand when the
/// square root argument goes negative.
EnergyLevel scalar_energy(const OscillatorConfig& cfg, int n, int l, Branch branch,
                          LzCoupling lz = LzCoupling::AbsL);

/// The b component of the vector sector: scalar formula with omega -> -omega
/// (omega_0 untouched, it depends on omega^2 only).
EnergyLevel scalar_b_component_energy(const OscillatorConfig& cfg, int n, int l,
                                      Branch branch, LzCoupling lz = LzCoupling::AbsL);

/// Vector-sector level for component i in {1,2}. The spin projection that
/// enters the level structure follows the field direction: it is
/// s_i * sign(delta), so that reversing the field exchanges the roles of
/// the two components while the closed forms stay unchanged for
/// delta >= 0.
EnergyLevel vector_energy(const OscillatorConfig& cfg, int n, int l, int i, Branch branch);

/// Dimensionless energies of the splitting family under the fixed analysis
/// conventions omega = 2|omega_tilde|, m omega a^2/hbar = 1, hbar omega = mc^2.
/// i = 0 is the scalar slot (alpha_0 = sqrt(5)/2), i = 1,2 the vector slots
/// (alpha = 1 +- 1/2 depending on sign_field). Positive branch only.
double dimensionless_energy(int n, int l, int i, int sign_field);

/// Slope of the constant-energy lines l = l(n), l >= 0. Infinite for the
/// s = +1 component.
struct Slope {
  bool infinite = false;
  double value = 0.0;  // meaningless when infinite
  static Slope inf() { return {true, 0.0}; }
  static Slope finite(double v) { return {false, v}; }
};

Slope degeneracy_slope(int i, const OscillatorConfig& cfg);

enum class SpecialCase {
  D1Zero,              // d_1 = 0: both phi components scalar-like at omega_0
  D2Zero,              // d_2 = 0: same mapping
  D1EqICD2,            // d_1 = +i d_2: phi_1 = 0, phi_2 at omega_2, S_z = -1
  D1EqMinusICD2,       // d_1 = -i d_2: phi_2 = 0, phi_1 at omega_1, S_z = +1
  OmegaTildeEqOmega,   // delta = +1: phi_1 at 2 omega, phi_2 free
  OmegaTildeEqMinusOmega  // delta = -1: mirror image
};

const char* special_case_name(SpecialCase c);

struct CaseSummary {
  SpecialCase kind;
  double effective_frequency;        // hbar*omega_eff in units of mc^2
  std::vector<int> surviving;        // component indices that keep oscillating
  std::optional<int> spin;           // S_z of the surviving oscillator, if definite
  bool oscillation_cancelled;        // some component became a free particle
  std::optional<int> free_component; // which one, when cancelled
  std::string description;
};

/// Map a wavefunction/field constraint onto its reduced problem. Throws
/// invalid_case_error when the constraint needs a specific delta that cfg
/// does not satisfy (e.g. OmegaTildeEqOmega needs delta = 1).
CaseSummary classify_special_case(const OscillatorConfig& cfg, SpecialCase constraint);

/// eps = (E^2 - m^2 c^4) / (2 m c^2), the non-relativistic limit. Returned
/// in the same energy unit as cfg.mass_energy.
double nonrelativistic_energy(const EnergyLevel& level, const OscillatorConfig& cfg);

}  // namespace dkpo

#endif
