#ifndef DKPO_THERMODYNAMICS_HPP
#define DKPO_THERMODYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "dkpo/errors.hpp"

namespace dkpo {

/// Canonical-ensemble parameters of the vectorial sector. The oscillator
/// scale is pinned to hbar*omega/mc^2 = 1/2, so alpha_i = (1 + s_i delta)/2
/// and the level values reduce to
///   y_1(n)^2 = 2(1+delta) n + 2 + delta
///   y_2(k)^2 = 2(1-delta) k + delta,   k = n_2 + |l_2|.
struct ThermoConfig {
  double gamma = 1.0;  // mc^2 / (k_B T), > 0
  double delta = 0.0;  // omega_tilde/omega, >= 0; closed form needs < 1

  void validate() const {
    if (!(gamma > 0.0)) throw domain_error("gamma must be positive", gamma);
    if (!(delta >= 0.0)) throw domain_error("delta must be >= 0 in the thermodynamic sector", delta);
  }
  void validate_closed_form() const {
    validate();
    if (delta >= 1.0)
      throw divergence_error("closed-form partition function diverges for delta >= 1 "
                             "(pole of order 2 in (1-delta))", 2);
  }
};

enum class ThermoMethod { ExactSum, ClosedForm, Asymptotic };

const char* thermo_method_name(ThermoMethod m);

/// One evaluated thermodynamic state. Energies are reported both in mc^2
/// and in k_B T; entropy and heat capacity in k_B.
struct ThermoPoint {
  double gamma = 0.0, delta = 0.0;
  double Z = 0.0, lnZ = 0.0;
  double U_mc2 = 0.0, U_over_kT = 0.0;
  double F_mc2 = 0.0, F_over_kT = 0.0;
  double S_over_kB = 0.0, C_over_kB = 0.0;
  ThermoMethod method = ThermoMethod::ClosedForm;
};

/// Asymptotic point with the per-component (phi_1, phi_2) additive split.
struct AsymptoticThermo {
  ThermoPoint total;
  double U_over_kT_part[2] = {0, 0};
  double F_over_kT_part[2] = {0, 0};
  double S_over_kB_part[2] = {0, 0};
  double C_over_kB_part[2] = {0, 0};
};

/// Level values y_i = E/mc^2 of the two components.
double level_value_1(std::int64_t n, double delta);
double level_value_2(std::int64_t k, double delta);

struct SumControl {
  double term_rel_cutoff = 1e-14;   // term < cutoff * partial sum
  double tail_rel_bound = 1e-12;    // integral tail majorant < bound * partial sum
  std::int64_t hard_cap = 100000000;
};

struct PartitionSums {
  double z1 = 0.0, z2 = 0.0, z = 0.0;
  std::int64_t terms1 = 0, terms2 = 0;
  double tail_bound1 = 0.0, tail_bound2 = 0.0;  // absolute bounds on dropped tails
};

/// Z_1 = 2 sum_n n exp(-gamma y_1(n)),  Z_2 = 2 sum_n (n+1) exp(-gamma y_2(n)),
/// Z = Z_1 Z_2. Degeneracies: Omega_1 = 2n (only |l_1| <= n_1 contributes,
/// so the n = 0 level carries zero weight) and Omega_2 = 2(k+1) (all pairs
/// with n_2 + |l_2| = k share one level). Truncation is adaptive: summation
/// continues past the summand's maximum until both the term and an exact
/// integral tail majorant are negligible.
PartitionSums exact_partition_sum(const ThermoConfig& cfg, const SumControl& ctl = {});

/// The two bracketed factors of the high-temperature closed form, kept in
/// their original term grouping.
double closed_form_z1(const ThermoConfig& cfg);
double closed_form_z2(const ThermoConfig& cfg);
double closed_form_z(const ThermoConfig& cfg);
double closed_form_ln_z(const ThermoConfig& cfg);  // overflow-safe log space

/// U, F, S, C from lnZ by central differences with one Richardson level;
/// derivative noise (non-monotone refinement) is reported as
/// numerical_error. method must be ExactSum or ClosedForm.
ThermoPoint potentials(const ThermoConfig& cfg, ThermoMethod method);

/// High-temperature limits (gamma << 1), additive across components.
AsymptoticThermo asymptotic_potentials(const ThermoConfig& cfg);

struct ScanRow {
  double delta = 0.0;
  bool divergent = false;
  int divergent_component = 0;  // 2 at the delta -> 1 pole
  ThermoPoint point;            // valid only when !divergent
};

/// Closed-form potentials over a delta grid; points with delta >= 1 are
/// flagged divergent and never evaluated. Output sorted by delta.
std::vector<ScanRow> scan_delta(double gamma, std::vector<double> deltas);

}  // namespace dkpo

#endif
